"""
Trace-Depending Polynomials
Builds Tr_b(X) and general a + tr(h(X)) polynomials as sparse supports over
GF(q^{2n}), enumerates their roots and records Property (A).
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Union

import galois
import numpy as np
from joblib import Parallel, delayed

from config import Config
from exceptions import CapExceededError, DomainError
from models.finite_field import FieldCtx, field_new
from models.qadic import b_of_t, q_to_prime_power, support_of_trb, trb_degree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BthKind:
    q: int
    n: int
    t: int
    b: int


@dataclass(frozen=True)
class GeneralKind:
    q: int
    n: int
    a: int
    h: Dict[int, int]


def evaluate_sparse(ctx: FieldCtx, support: Dict[int, galois.FieldArray],
                    logs: np.ndarray) -> galois.FieldArray:
    """Values of a sparse polynomial at the nonzero points g^logs"""
    N = ctx.mult_order
    logs = np.asarray(logs, dtype=np.int64)
    values = ctx.GF.Zeros(logs.shape)
    for exponent, coeff in support.items():
        if exponent == 0:
            values = values + coeff
        else:
            values = values + coeff * ctx.power_table[(exponent % N) * logs % N]
    return values


@dataclass
class TraceDepPoly:
    ctx: FieldCtx
    support: Dict[int, galois.FieldArray]
    kind: Union[BthKind, GeneralKind]
    roots: Optional[galois.FieldArray] = None
    root_logs: Optional[np.ndarray] = None
    property_a: Optional[bool] = None
    zero_is_root: bool = False
    warnings: List[str] = field(default_factory=list)

    @property
    def degree(self) -> int:
        return max(self.support)

    @property
    def q(self) -> int:
        return self.kind.q

    @property
    def n(self) -> int:
        return self.kind.n

    @property
    def root_count(self) -> int:
        if self.roots is None:
            raise DomainError("roots have not been enumerated")
        return len(self.roots)

    def evaluate(self, x: galois.FieldArray) -> galois.FieldArray:
        """Evaluate at arbitrary points of the ambient field"""
        x = self.ctx.GF(x)
        values = self.ctx.GF.Zeros(x.shape)
        for exponent, coeff in self.support.items():
            values = values + coeff * x ** exponent
        return values

    def dense_coefficients(self) -> galois.FieldArray:
        """a_0, ..., a_deg in ascending order"""
        coeffs = self.ctx.GF.Zeros(self.degree + 1)
        for exponent, coeff in self.support.items():
            coeffs[exponent] = coeff
        return coeffs

    def exponents(self) -> List[int]:
        return sorted(self.support)

    def describe(self) -> str:
        if isinstance(self.kind, BthKind):
            return f"Tr_{self.kind.b} over GF({self.q}^{2 * self.n})"
        terms = ' + '.join(f"g^{c}*X^{e}" for e, c in sorted(self.kind.h.items()))
        return f"{self.kind.a} + tr({terms}) over GF({self.q}^{2 * self.n})"

    def to_json(self) -> Dict[str, Any]:
        exponents = self.exponents()
        logs = self.ctx.GF([int(self.support[e]) for e in exponents]).log()
        return {
            'p': self.ctx.p,
            'm_degree': self.ctx.m,
            'degree': self.degree,
            'support': [[e, log] for e, log in zip(exponents, logs.tolist())],
        }


def build_trb(q: int, n: int, t: int, cap: Optional[int] = None) -> TraceDepPoly:
    """The b-th trace-depending polynomial for b = 1 + q^t"""
    p, e = q_to_prime_power(q)
    support = support_of_trb(q, n, t)
    ctx = field_new(p, e * 2 * n, cap)
    one = ctx.GF(1)
    poly = TraceDepPoly(
        ctx=ctx,
        support={exponent: one for exponent in sorted(support)},
        kind=BthKind(q=q, n=n, t=t, b=b_of_t(q, t)),
    )
    if poly.degree != trb_degree(q, n, t):
        raise DomainError(f"support maximum {poly.degree} differs from the predicted degree")
    return poly


def dense_reduction(q: int, n: int, t: int) -> Dict[int, int]:
    """Independent oracle: reduce 1 + tr(X^b) modulo X^{q^{2n}-1} - 1 term by term"""
    p, _ = q_to_prime_power(q)
    N = q ** (2 * n) - 1
    b = b_of_t(q, t)
    terms = 2 * n if t < n else n
    counts = {0: 1}
    for j in range(terms):
        exponent = b * q ** j % N
        counts[exponent] = (counts.get(exponent, 0) + 1) % p
    return {e: c for e, c in counts.items() if c}


def la2_root_count(q: int, n: int) -> int:
    """Root count of Tr_b when t = n"""
    return q ** (n - 1) + q ** (2 * n - 1)


def build_general(ctx: FieldCtx, a: int, h: Dict[int, int], q: Optional[int] = None,
                  n: Optional[int] = None) -> TraceDepPoly:
    """a + tr(h(X)) with h given as {exponent: log of coefficient}; a as an integer element"""
    q = ctx.p if q is None else q
    p, e = q_to_prime_power(q)
    if p != ctx.p or ctx.m % (2 * e):
        raise DomainError(f"GF({ctx.p}^{ctx.m}) is not GF({q}^(2n))")
    n = ctx.m // (2 * e) if n is None else n
    if not h:
        raise DomainError("h must be nonzero")
    N = ctx.mult_order
    support: Dict[int, galois.FieldArray] = {}
    for exponent, coeff_log in h.items():
        coeff = ctx.from_log(coeff_log)
        for i in range(2 * n):
            reduced = exponent * q ** i % N if exponent else 0
            support[reduced] = support.get(reduced, ctx.GF(0)) + coeff ** (q ** i)
    support[0] = support.get(0, ctx.GF(0)) + ctx.GF(a)
    support = {k: v for k, v in support.items() if int(v) != 0}
    if not support or max(support) == 0:
        raise DomainError("trace of h reduces to a constant")
    return TraceDepPoly(ctx=ctx, support=support, kind=GeneralKind(q=q, n=n, a=a, h=dict(h)))


def _roots_in_chunk(ctx: FieldCtx, support, start: int, stop: int) -> np.ndarray:
    logs = np.arange(start, stop, dtype=np.int64)
    values = evaluate_sparse(ctx, support, logs)
    return logs[values.view(np.ndarray) == 0]


def enumerate_roots(poly: TraceDepPoly, cap: Optional[int] = None, jobs: int = 1) -> galois.FieldArray:
    """All nonzero roots, in ascending discrete-log order"""
    ctx = poly.ctx
    cap = Config.ROOT_SEARCH_CAP if cap is None else cap
    if ctx.order > cap:
        raise CapExceededError('root enumeration', ctx.order, cap)

    N = ctx.mult_order
    if jobs > 1 and N > 4096:
        bounds = np.linspace(0, N, jobs + 1, dtype=np.int64)
        chunks = Parallel(n_jobs=jobs, prefer='threads')(
            delayed(_roots_in_chunk)(ctx, poly.support, int(lo), int(hi))
            for lo, hi in zip(bounds[:-1], bounds[1:])
        )
        logs = np.concatenate(chunks)
    else:
        logs = _roots_in_chunk(ctx, poly.support, 0, N)

    poly.zero_is_root = int(poly.support.get(0, ctx.GF(0))) == 0
    if poly.zero_is_root:
        message = "0 is a root and was dropped from the evaluation points"
        poly.warnings.append(message)
        logger.warning(f"{poly.describe()}: {message}")

    poly.root_logs = logs
    poly.roots = ctx.power_table[logs]
    poly.property_a = len(logs) == poly.degree
    logger.info(f"{poly.describe()}: {len(logs)} roots, degree {poly.degree}")
    return poly.roots

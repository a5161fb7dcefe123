"""
Evaluation Codes
Codes spanned by ev(X^i) at the roots of a trace-depending polynomial, their
Hermitian self-orthogonality certificates and dual-distance certificates.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import galois
import numpy as np

from config import Config
from exceptions import CapExceededError, DomainError
from models.finite_field import FieldCtx, subfield_members

logger = logging.getLogger(__name__)


def a_bound(q: int, n: int, t: int) -> int:
    """Largest tau for which Delta(tau) codes are Hermitian self-orthogonal"""
    if not 0 < t <= n:
        raise DomainError(f"t = {t} must satisfy 0 < t <= n = {n}")
    if q == 2:
        return 2 ** n - 2 ** (t - 1) - 2 if t < n else 2 ** (n - 1) - 2
    if t == n:
        return q ** (n - 1) - 2
    half = math.ceil((q - 1) / 2)
    if 2 * t <= n:
        return q ** n - half * q ** (n - 1) - half * q ** (n - t - 1) - 2
    return q ** n - half * q ** (n - 1) - half * q ** (t - 1) - 2


def delta_tau(tau: int) -> Tuple[int, ...]:
    if tau < 0:
        raise DomainError(f"tau = {tau} must be nonnegative")
    return tuple(range(tau + 1))


@dataclass
class EvalCode:
    ctx: FieldCtx
    gen: galois.FieldArray
    delta: Tuple[int, ...]
    q: int
    n: int
    alphabet_degree: int
    tag: str = 'delta'
    source: str = ''
    distance_bound: Optional[int] = None
    provenance: Dict[str, Any] = field(default_factory=dict)
    dim: int = field(init=False)

    def __post_init__(self):
        self.dim = int(np.linalg.matrix_rank(self.gen)) if self.gen.shape[0] else 0

    @property
    def length(self) -> int:
        return self.gen.shape[1]

    @property
    def alphabet_order(self) -> int:
        return self.ctx.p ** self.alphabet_degree

    @property
    def code_id(self) -> str:
        return f"{self.tag}[{self.source}|{len(self.delta)} exps|GF({self.alphabet_order})]"

    def basis(self) -> galois.FieldArray:
        """Nonzero rows of the reduced row-echelon form"""
        if self.gen.shape[0] == 0:
            return self.gen
        rref = self.gen.row_reduce()
        return rref[:self.dim]

    def prefix(self, tau: int) -> 'EvalCode':
        """The Delta(tau) code whose rows are the first tau + 1 monomials"""
        if self.delta[:tau + 1] != delta_tau(tau):
            raise DomainError("prefix codes need a Delta(tau)-shaped exponent list")
        return EvalCode(ctx=self.ctx, gen=self.gen[:tau + 1], delta=delta_tau(tau), q=self.q,
                        n=self.n, alphabet_degree=self.alphabet_degree, tag=self.tag,
                        source=self.source, distance_bound=tau + 2,
                        provenance=dict(self.provenance, tau=tau))

    def row_space_contains(self, other: 'EvalCode') -> bool:
        stacked = np.concatenate([self.gen, other.gen], axis=0)
        return int(np.linalg.matrix_rank(stacked)) == self.dim

    def generator_json(self) -> Dict[str, Any]:
        """Entries as discrete logs of the primitive element, -1 for zero"""
        values = self.gen.view(np.ndarray)
        logs = np.full(values.shape, -1, dtype=np.int64)
        nonzero = values != 0
        logs[nonzero] = np.asarray(self.gen[nonzero].log(), dtype=np.int64)
        return {'field': self.ctx.describe(), 'rows': logs.tolist()}

    def generator_text(self) -> str:
        return '\n'.join(' '.join(str(int(v)) for v in row) for row in self.gen.view(np.ndarray))


def build_eval_code(poly, delta: Iterable[int], tag: str = 'delta') -> EvalCode:
    """Rows ev(X^i) = (beta_1^i, ..., beta_m^i) for i in delta"""
    if poly.roots is None:
        raise DomainError("roots have not been enumerated")
    ctx = poly.ctx
    N = ctx.mult_order
    exponents = tuple(int(e) % N for e in delta)
    if not exponents:
        raise DomainError("empty exponent set")
    logs = np.asarray(poly.root_logs, dtype=np.int64)
    index = np.asarray(exponents, dtype=np.int64)[:, None] * logs[None, :] % N
    gen = ctx.power_table[index]
    consecutive = exponents == delta_tau(len(exponents) - 1)
    return EvalCode(ctx=ctx, gen=gen, delta=exponents, q=poly.q, n=poly.n,
                    alphabet_degree=ctx.m, tag=tag, source=poly.describe(),
                    distance_bound=len(exponents) + 1 if consecutive else None)


def hermitian_product(x: galois.FieldArray, y: galois.FieldArray, conj_power: int) -> galois.FieldArray:
    """sum x_i * y_i^Q"""
    if x.shape != y.shape:
        raise DomainError(f"length mismatch {x.shape} vs {y.shape}")
    if type(x) is not type(y):
        raise DomainError("vectors live in different fields")
    if x.size == 0:
        return type(x)(0)
    return np.add.reduce(x * y ** conj_power)


@dataclass
class SOCertificate:
    code_id: str
    conjugation_power: int
    gram_zero: bool
    witness: Optional[Tuple[int, int]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'code_id': self.code_id,
            'conjugation_power': self.conjugation_power,
            'gram_zero': self.gram_zero,
            'witness': list(self.witness) if self.witness else None,
        }


def check_self_orthogonal(code: EvalCode, conj_power: int) -> SOCertificate:
    """Full Gram matrix G * sigma(G)^T"""
    gram = code.gen @ (code.gen ** conj_power).T
    nonzero = np.argwhere(gram.view(np.ndarray) != 0)
    witness = (int(nonzero[0][0]), int(nonzero[0][1])) if len(nonzero) else None
    if witness:
        logger.info(f"{code.code_id} is not self-orthogonal, first nonzero Gram entry {witness}")
    return SOCertificate(code_id=code.code_id, conjugation_power=conj_power,
                         gram_zero=witness is None, witness=witness)


class DistanceStatus(str, Enum):
    CERTIFIED = 'Certified'
    SAMPLED_ONLY = 'SampledOnly'
    REFUTED = 'Refuted'


@dataclass
class DistanceCertificate:
    status: DistanceStatus
    delta_target: int
    subsets_checked: int
    exhaustive: bool
    witness: Optional[List[int]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'status': self.status.value,
            'delta_target': self.delta_target,
            'subsets_checked': self.subsets_checked,
            'exhaustive': self.exhaustive,
            'witness': self.witness,
        }


def independent_batches(blocks: galois.FieldArray) -> np.ndarray:
    """For blocks of shape (B, s, k): True where the s vectors of a block are independent"""
    A = blocks.copy()
    count, s, _ = A.shape
    ok = np.ones(count, dtype=bool)
    batch = np.arange(count)
    for r in range(s):
        row = A[:, r, :]
        nonzero = row.view(np.ndarray) != 0
        has_pivot = nonzero.any(axis=1)
        ok &= has_pivot
        if r == s - 1:
            break
        pivot = np.argmax(nonzero, axis=1)
        pivot_values = row[batch, pivot]
        pivot_values[~has_pivot] = 1
        normalized = row / pivot_values[:, None]
        later = np.arange(r + 1, s)
        factors = A[batch[:, None], later[None, :], pivot[:, None]]
        A[:, r + 1:, :] = A[:, r + 1:, :] - factors[:, :, None] * normalized[:, None, :]
    return ok


def _check_subsets(columns: galois.FieldArray, subsets: np.ndarray) -> Optional[List[int]]:
    ok = independent_batches(columns[subsets])
    if ok.all():
        return None
    return [int(c) for c in subsets[int(np.argmin(ok))]]


def certify_dual_distance(code: EvalCode, delta_target: int, budget: Optional[int] = None,
                          trials: Optional[int] = None, seed: Optional[int] = None,
                          chunk: int = 20000) -> DistanceCertificate:
    """Every (delta_target - 1) columns independent <=> Hermitian dual distance >= delta_target"""
    if delta_target < 2:
        raise DomainError(f"delta_target = {delta_target} must be at least 2")
    budget = Config.SUBSET_BUDGET if budget is None else budget
    trials = Config.SAMPLE_TRIALS if trials is None else trials
    seed = Config.RANDOM_SEED if seed is None else seed

    size = delta_target - 1
    m = code.length
    columns = code.basis().T
    if size > code.dim or size > m:
        return DistanceCertificate(DistanceStatus.REFUTED, delta_target, 0, True,
                                   witness=list(range(min(size, m))))

    total = math.comb(m, size)
    if total <= budget:
        checked = 0
        combos = itertools.combinations(range(m), size)
        while True:
            block = list(itertools.islice(combos, chunk))
            if not block:
                break
            subsets = np.asarray(block, dtype=np.int64)
            witness = _check_subsets(columns, subsets)
            checked += len(block)
            if witness:
                return DistanceCertificate(DistanceStatus.REFUTED, delta_target, checked, True, witness)
        return DistanceCertificate(DistanceStatus.CERTIFIED, delta_target, checked, True)

    rng = np.random.default_rng(seed)
    checked = 0
    while checked < trials:
        batch = min(chunk, trials - checked)
        subsets = np.sort(np.argsort(rng.random((batch, m)), axis=1)[:, :size], axis=1)
        witness = _check_subsets(columns, subsets)
        checked += batch
        if witness:
            return DistanceCertificate(DistanceStatus.REFUTED, delta_target, checked, False, witness)
    logger.info(f"{code.code_id}: {total} subsets exceed budget {budget}, sampled {checked}")
    return DistanceCertificate(DistanceStatus.SAMPLED_ONLY, delta_target, checked, False)


def true_min_distance(code: EvalCode, cap: Optional[int] = None, chunk: int = 1 << 14) -> int:
    """Minimum weight by enumerating every message over the code alphabet"""
    cap = Config.ENUMERATION_CAP if cap is None else cap
    if code.dim == 0:
        raise DomainError("zero-dimensional code has no minimum distance")
    alphabet = subfield_members(code.ctx, code.alphabet_degree)
    size = len(alphabet)
    total = size ** code.dim
    if total > cap:
        raise CapExceededError('message enumeration', total, cap)

    basis = code.basis()
    places = size ** np.arange(code.dim, dtype=np.int64)
    best = code.length
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = idx[:, None] // places[None, :] % size
        messages = alphabet[digits]
        words = messages @ basis
        weights = np.count_nonzero(words.view(np.ndarray), axis=1)
        best = min(best, int(weights.min()))
    return best


def so_witness_by_growth(poly, conj_power: int, start: int, stop: int) -> Optional[int]:
    """Smallest tau in [start, stop] whose Delta(tau) code is not self-orthogonal"""
    full = build_eval_code(poly, delta_tau(stop))
    for tau in range(start, stop + 1):
        if not check_self_orthogonal(full.prefix(tau), conj_power).gram_zero:
            return tau
    return None


def monotone(codes: Sequence[EvalCode]) -> bool:
    """Row-space containment along a chain of growing exponent sets"""
    return all(b.row_space_contains(a) for a, b in zip(codes, codes[1:]))


def gram_identity_failures(poly, table, conj_power: int, count: int = 1000,
                           seed: int = 0) -> List[Tuple[int, int]]:
    """Random (a, b) with ev(X^a) . ev(X^b)^Q different from s_{a + Q b}"""
    ctx = poly.ctx
    N = ctx.mult_order
    rng = np.random.default_rng(seed)
    a = rng.integers(0, N, size=count, dtype=np.int64)
    b = rng.integers(0, N, size=count, dtype=np.int64)
    logs = np.asarray(poly.root_logs, dtype=np.int64)
    rows_a = ctx.power_table[a[:, None] * logs[None, :] % N]
    rows_b = ctx.power_table[b[:, None] * logs[None, :] % N]
    products = np.add.reduce(rows_a * rows_b ** conj_power, axis=1)
    indices = (a + (conj_power % N) * b) % N
    expected = table.values_at([int(i) if i else N for i in indices])
    bad = np.flatnonzero(products.view(np.ndarray) != expected.view(np.ndarray))
    return [(int(a[i]), int(b[i])) for i in bad]

"""
Power Sums of Roots
Computes s_i = sum of beta_j^i over the roots, checks Newton's identities and
compares the nonzero pattern with the closed-form index prediction.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import galois
import numpy as np

from config import Config
from exceptions import DomainError
from models.finite_field import FieldCtx
from models.qadic import trb_degree

logger = logging.getLogger(__name__)


@dataclass
class SplitPolynomial:
    """Monic polynomial with a known list of roots"""
    ctx: FieldCtx
    roots: galois.FieldArray
    root_logs: np.ndarray

    @classmethod
    def random(cls, ctx: FieldCtx, degree: int, seed: int = 0) -> 'SplitPolynomial':
        rng = np.random.default_rng(seed)
        logs = np.sort(rng.choice(ctx.mult_order, size=degree, replace=False)).astype(np.int64)
        return cls(ctx=ctx, roots=ctx.power_table[logs], root_logs=logs)

    @property
    def degree(self) -> int:
        return len(self.roots)

    def dense_coefficients(self) -> galois.FieldArray:
        poly = galois.Poly.Roots(self.roots, field=self.ctx.GF)
        return poly.coeffs[::-1]


@dataclass
class PowerSumTable:
    ctx: FieldCtx
    root_logs: np.ndarray
    up_to: int
    values: galois.FieldArray

    @property
    def root_count(self) -> int:
        return len(self.root_logs)

    def _direct(self, i: int) -> galois.FieldArray:
        N = self.ctx.mult_order
        if self.root_count == 0:
            return self.ctx.GF(0)
        return np.add.reduce(self.ctx.power_table[(i % N) * self.root_logs % N])

    def value(self, i: int) -> galois.FieldArray:
        """s_i for any i >= 0, s_0 being the root count"""
        if i < 0:
            raise DomainError(f"negative power-sum index {i}")
        if i == 0:
            return self.ctx.GF(self.root_count % self.ctx.p)
        if i <= self.up_to:
            return self.values[i]
        N = self.ctx.mult_order
        reduced = (i - 1) % N + 1
        if reduced <= self.up_to:
            return self.values[reduced]
        return self._direct(reduced)

    def values_at(self, indices: Sequence[int]) -> galois.FieldArray:
        indices = np.asarray(indices, dtype=np.int64)
        if indices.size and indices.min() >= 0 and indices.max() <= self.up_to:
            return self.values[indices]
        return self.ctx.GF([int(self.value(int(i))) for i in indices])

    def nonzero_indices(self, limit: Optional[int] = None) -> List[int]:
        limit = self.up_to if limit is None else limit
        if limit > self.up_to:
            raise DomainError(f"table holds indices up to {self.up_to}, asked for {limit}")
        raw = self.values.view(np.ndarray)[1:limit + 1]
        return [int(i) + 1 for i in np.flatnonzero(raw)]


def power_sums(poly, up_to: Optional[int] = None) -> PowerSumTable:
    """s_1 .. s_up_to by advancing each root's power ladder; the full range on small fields"""
    if poly.roots is None:
        raise DomainError("roots have not been enumerated")
    ctx = poly.ctx
    if up_to is None:
        if ctx.order > Config.FULL_POWER_SUM_CAP:
            raise DomainError(f"full power-sum range not materialized above {Config.FULL_POWER_SUM_CAP}")
        up_to = ctx.mult_order
    values = ctx.GF.Zeros(up_to + 1)
    values[0] = len(poly.roots) % ctx.p
    ladder = poly.roots.copy()
    for i in range(1, up_to + 1):
        values[i] = np.add.reduce(ladder) if len(ladder) else 0
        ladder = ladder * poly.roots
    return PowerSumTable(ctx=ctx, root_logs=np.asarray(poly.root_logs, dtype=np.int64),
                         up_to=up_to, values=values)


def predict_el7(q: int, n: int, t: int) -> List[Tuple[int, int]]:
    """Closed-form (index, sign) pairs of the nonzero s_i with i <= m"""
    m = trb_degree(q, n, t)
    if n == 1:
        return [(m, -1)]
    if q == 2 and n == 2 and t == 2:
        return [(5, 1), (10, 1)]
    if t == n:
        return [(q ** (2 * n - 1) - q ** n + q ** (n - 1) - 1, 1)]

    def j2(ell: int) -> int:
        return 1 + (2 + ell) * q ** (t - 1) + (q - (2 + ell)) * q ** (2 * n - t - 1)

    k1 = 1 + q ** (2 * n - t)
    kt = q ** (t - 1) * k1
    predicted = [(m - k1, 1), (m - (k1 + kt - m), -1)]
    if q == 2 and n == 2 and t == 1:
        return predicted + [(m - j2(0), 1), (m - j2(1), -1)]
    for ell in range(q - 2):
        predicted.append((m - j2(ell), 1 if ell % 2 == 0 else -1))
    if t == 1:
        last_index, last_sign = predicted[-1]
        extra = last_index + q ** (2 * n - 2) - q ** (2 * n - 3) + q - 1
        predicted.append((extra, -last_sign))
    return predicted


def signed(ctx: FieldCtx, sign: int) -> galois.FieldArray:
    one = ctx.GF(1)
    return one if sign > 0 else -one


@dataclass
class El7Comparison:
    predicted: List[Tuple[int, int]]
    observed: List[Tuple[int, int]]
    mismatches: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def compare_el7(poly, table: Optional[PowerSumTable] = None) -> El7Comparison:
    """Brute-force nonzero pattern of s_1..s_m against the closed form"""
    ctx = poly.ctx
    m = poly.degree
    table = table if table is not None and table.up_to >= m else power_sums(poly, m)
    predicted = predict_el7(poly.q, poly.n, poly.kind.t)
    one = ctx.GF(1)
    observed = []
    for i in table.nonzero_indices(m):
        value = table.value(i)
        sign = 1 if value == one else -1 if value == -one else 0
        observed.append((i, sign))
    result = El7Comparison(predicted=predicted, observed=observed)
    predicted_map = dict(predicted)
    observed_map = dict(observed)
    for i in sorted(set(predicted_map) | set(observed_map)):
        if i not in observed_map:
            result.mismatches.append(f"s_{i} predicted nonzero but vanishes")
        elif i not in predicted_map:
            result.mismatches.append(f"s_{i} nonzero but not predicted")
        elif signed(ctx, predicted_map[i]) != table.value(i):
            result.mismatches.append(f"s_{i} = {int(table.value(i))}, predicted sign {predicted_map[i]}")
    return result


@dataclass
class NewtonReport:
    r_max: int
    violations: List[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_newton(poly, r_max: int, table: Optional[PowerSumTable] = None) -> NewtonReport:
    """Check both Newton identities for every 1 <= r <= r_max"""
    ctx = poly.ctx
    coeffs = poly.dense_coefficients()
    m = len(coeffs) - 1
    coeffs = coeffs / coeffs[m]
    if table is None or table.up_to < r_max:
        table = power_sums(poly, r_max)

    r = np.arange(1, r_max + 1, dtype=np.int64)
    totals = ctx.GF.Zeros(r_max)
    for k in np.flatnonzero(coeffs.view(np.ndarray)):
        idx = r - m + int(k)
        valid = idx >= 1
        totals[valid] = totals[valid] + coeffs[k] * table.values[idx[valid]]
    low = r <= m
    multipliers = ctx.GF((r[low] % ctx.p).astype(np.int64))
    totals[low] = totals[low] + multipliers * coeffs[m - r[low]]

    report = NewtonReport(r_max=r_max)
    report.violations = [int(i) + 1 for i in np.flatnonzero(totals.view(np.ndarray))]
    if report.violations:
        logger.warning(f"Newton identities fail at r = {report.violations[:10]}")
    return report


def so_by_power_sums(table: PowerSumTable, exponents: Iterable[int],
                     conj_power: int) -> Optional[Tuple[int, int]]:
    """First pair (a, b) with s_{a + Q b} != 0, or None when all vanish"""
    exps = np.asarray(sorted(set(exponents)), dtype=np.int64)
    N = table.ctx.mult_order
    grid = (exps[:, None] + (conj_power % N) * exps[None, :]) % N
    unique, inverse = np.unique(grid, return_inverse=True)
    values = table.values_at([int(u) if u else N for u in unique]).view(np.ndarray)
    bad = values[inverse.reshape(grid.shape)] != 0
    if not bad.any():
        return None
    i, j = np.argwhere(bad)[0]
    return int(exps[i]), int(exps[j])

"""
Finite Field Contexts
Exact GF(p^m) arithmetic on top of galois field arrays, with Conway moduli,
Frobenius and trace maps, subfield identification and linear solving.
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import galois
import numpy as np
import sympy

from config import Config
from exceptions import CapExceededError, DomainError, TracecodeError

logger = logging.getLogger(__name__)

# Conway polynomials, coefficients in ascending degree order.
CONWAY_POLYNOMIALS: Dict[Tuple[int, int], List[int]] = {
    (2, 2): [1, 1, 1],
    (2, 4): [1, 1, 0, 0, 1],
    (2, 8): [1, 0, 1, 1, 1, 0, 0, 0, 1],
    (2, 12): [1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1],
    (3, 4): [2, 0, 0, 2, 1],
    (3, 8): [2, 2, 2, 0, 1, 2, 0, 0, 1],
    (5, 4): [2, 4, 4, 0, 1],
    (5, 8): [2, 4, 3, 0, 1, 0, 0, 0, 1],
    (7, 4): [3, 4, 5, 0, 1],
    (11, 4): [2, 10, 8, 0, 1],
}


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """Ambient field GF(p^m); elements are instances of ``GF``"""
    p: int
    m: int
    modulus: Tuple[int, ...]
    GF: type
    source: str

    @property
    def order(self) -> int:
        return self.p ** self.m

    @property
    def mult_order(self) -> int:
        return self.order - 1

    @property
    def primitive_element(self) -> galois.FieldArray:
        return self.GF.primitive_element

    def element(self, value: int) -> galois.FieldArray:
        """Field element from its integer (polynomial basis) representation"""
        return self.GF(value)

    def from_log(self, k: int) -> galois.FieldArray:
        """g^k for the primitive element g"""
        return self.power_table[k % self.mult_order]

    def log_of(self, x) -> int:
        """Discrete log of one nonzero element"""
        return int(self.GF([int(x)]).log()[0])

    @cached_property
    def power_table(self) -> galois.FieldArray:
        """g^0, g^1, ..., g^{N-1}, built by repeated doubling"""
        n = self.mult_order
        table = self.GF.Ones(n)
        if n > 1:
            table[1] = self.primitive_element
        filled = min(2, n)
        while filled < n:
            step = min(filled, n - filled)
            table[filled:filled + step] = table[:step] * (table[filled - 1] * self.primitive_element)
            filled += step
        return table

    @cached_property
    def zech_table(self) -> Optional[np.ndarray]:
        """zech[i] = log(1 + g^i), or -1 where 1 + g^i = 0; None above the cap"""
        if self.order > Config.ZECH_CAP:
            logger.info(f"Zech table skipped for GF({self.p}^{self.m}): order above cap")
            return None
        shifted = self.power_table + self.GF(1)
        values = shifted.view(np.ndarray)
        zech = np.full(self.mult_order, -1, dtype=np.int64)
        nonzero = values != 0
        zech[nonzero] = np.asarray(shifted[nonzero].log(), dtype=np.int64)
        return zech

    def zech_log_add(self, i: int, j: int) -> Optional[int]:
        """Discrete log of g^i + g^j, None when the sum vanishes"""
        zech = self.zech_table
        if zech is None:
            total = self.from_log(i) + self.from_log(j)
            return None if int(total) == 0 else self.log_of(total)
        k = zech[(j - i) % self.mult_order]
        if k < 0:
            return None
        return int((i + k) % self.mult_order)

    def describe(self) -> Dict[str, object]:
        return {
            'p': self.p,
            'm': self.m,
            'order': self.order,
            'modulus': list(self.modulus),
            'modulus_source': self.source,
            'primitive_element': int(self.primitive_element),
        }


def reduce_exponent(e: int, mult_order: int) -> int:
    """Smallest positive exponent acting like ``e`` on the whole field (0 stays 0)"""
    if e < 0:
        raise DomainError(f"negative exponent {e}")
    if e == 0:
        return 0
    return (e - 1) % mult_order + 1


def _poly_from_ascending(coeffs: List[int], p: int) -> galois.Poly:
    return galois.Poly(list(reversed(coeffs)), field=galois.GF(p))


def _ascending(poly: galois.Poly) -> Tuple[int, ...]:
    return tuple(int(c) for c in reversed(poly.coeffs.tolist()))


def is_irreducible_rabin(poly: galois.Poly) -> bool:
    """Rabin test: f | X^{p^m} - X and gcd(f, X^{p^{m/r}} - X) = 1 for primes r | m"""
    p = poly.field.characteristic
    m = poly.degree
    if m < 1:
        return False
    x = galois.Poly([1, 0], field=poly.field)
    if pow(x, p ** m, poly) != x % poly:
        return False
    for r in sympy.primefactors(m):
        probe = pow(x, p ** (m // r), poly) - x
        if galois.gcd(poly, probe).degree != 0:
            return False
    return True


def load_conway_overrides(directory: Optional[str]) -> Dict[Tuple[int, int], List[int]]:
    """Read ``p m c0 c1 ... cm`` lines from every ``*.txt`` file in ``directory``"""
    overrides: Dict[Tuple[int, int], List[int]] = {}
    if not directory:
        return overrides
    path = Path(directory)
    if not path.is_dir():
        logger.warning(f"Conway override directory {directory} not found")
        return overrides
    for file in sorted(path.glob('*.txt')):
        for line_no, line in enumerate(file.read_text().splitlines(), start=1):
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            try:
                numbers = [int(token) for token in line.replace(',', ' ').split()]
                p, m, coeffs = numbers[0], numbers[1], numbers[2:]
                if len(coeffs) != m + 1:
                    raise ValueError(f"expected {m + 1} coefficients, got {len(coeffs)}")
                overrides[(p, m)] = coeffs
            except (ValueError, IndexError) as e:
                logger.error(f"Bad Conway override {file.name}:{line_no}: {e}")
    return overrides


def _select_modulus(p: int, m: int, conway_dir: Optional[str]) -> Tuple[galois.Poly, str]:
    candidates = []
    overrides = load_conway_overrides(conway_dir)
    if (p, m) in overrides:
        candidates.append((_poly_from_ascending(overrides[(p, m)], p), 'override'))
    if (p, m) in CONWAY_POLYNOMIALS:
        candidates.append((_poly_from_ascending(CONWAY_POLYNOMIALS[(p, m)], p), 'conway'))
    for poly, source in candidates:
        if is_irreducible_rabin(poly) and poly.is_primitive():
            return poly, source
        logger.error(f"Rejected {source} modulus for ({p}, {m}): not primitive irreducible")
    return galois.primitive_poly(p, m, method='min'), 'least-primitive'


@lru_cache(maxsize=None)
def field_new(p: int, m: int, cap: Optional[int] = None, conway_dir: Optional[str] = None) -> FieldCtx:
    """Build (and cache) the context for GF(p^m)"""
    if not sympy.isprime(p):
        raise DomainError(f"characteristic {p} is not prime")
    if m < 1:
        raise DomainError(f"extension degree {m} must be positive")
    cap = Config.FIELD_CAP if cap is None else cap
    if p ** m > cap:
        raise CapExceededError(f"GF({p}^{m})", p ** m, cap)
    conway_dir = Config.CONWAY_DIR if conway_dir is None else conway_dir

    if m == 1:
        GF = galois.GF(p)
        g = int(GF.primitive_element)
        modulus = ((-g) % p, 1)
        source = 'prime-field'
    else:
        poly, source = _select_modulus(p, m, conway_dir)
        GF = galois.GF(p ** m, irreducible_poly=poly, primitive_element=p)
        modulus = _ascending(poly)

    if int(GF.primitive_element.multiplicative_order()) != p ** m - 1:
        raise TracecodeError(f"primitive element of GF({p}^{m}) has wrong order")
    logger.info(f"Constructed GF({p}^{m}) with {source} modulus {list(modulus)}")
    return FieldCtx(p=p, m=m, modulus=modulus, GF=GF, source=source)


def field_of(x: galois.FieldArray) -> Tuple[int, int]:
    """(p, m) of the field an array lives in"""
    field = type(x)
    return field.characteristic, field.degree


def frobenius(x: galois.FieldArray, e: int, base: int = 1) -> galois.FieldArray:
    """x -> x^{p^{e*base}}"""
    if e < 0 or base < 1:
        raise DomainError(f"invalid Frobenius power e={e}, base={base}")
    p, m = field_of(x)
    steps = (e * base) % m
    if steps == 0:
        return x.copy()
    return x ** (p ** steps)


def in_subfield(x: galois.FieldArray, sub_degree: int) -> bool:
    """True when every entry of ``x`` lies in GF(p^sub_degree)"""
    p, m = field_of(x)
    if sub_degree < 1 or m % sub_degree:
        raise DomainError(f"{sub_degree} does not divide {m}")
    return bool(np.array_equal(frobenius(x, 1, sub_degree).view(np.ndarray), x.view(np.ndarray)))


def trace_map(x: galois.FieldArray, from_degree: int, to_degree: int) -> galois.FieldArray:
    """Relative trace GF(p^from_degree) -> GF(p^to_degree)"""
    p, m = field_of(x)
    if to_degree < 1 or from_degree % to_degree or m % from_degree:
        raise DomainError(f"cannot trace from degree {from_degree} to {to_degree} inside degree {m}")
    if not in_subfield(x, from_degree):
        raise DomainError(f"argument does not lie in the degree-{from_degree} subfield")
    total = x.copy()
    term = x
    for _ in range(from_degree // to_degree - 1):
        term = frobenius(term, 1, to_degree)
        total = total + term
    return total


def subfield_members(ctx: FieldCtx, sub_degree: int) -> galois.FieldArray:
    """All p^sub_degree elements of the subfield, in integer order"""
    if sub_degree < 1 or ctx.m % sub_degree:
        raise DomainError(f"{sub_degree} does not divide {ctx.m}")
    step = ctx.mult_order // (ctx.p ** sub_degree - 1)
    members = ctx.power_table[::step]
    values = np.sort(np.concatenate([[0], members.view(np.ndarray)]))
    return ctx.GF(values)


@dataclass
class LinearSolution:
    rank: int
    rref: galois.FieldArray
    pivots: List[int]
    kernel: galois.FieldArray
    solution: Optional[galois.FieldArray] = None
    consistent: bool = True


def _pivot_columns(rref: galois.FieldArray, ncols: int) -> List[int]:
    pivots = []
    values = rref.view(np.ndarray)
    for row in values:
        nonzero = np.flatnonzero(row[:ncols])
        if nonzero.size == 0:
            break
        pivots.append(int(nonzero[0]))
    return pivots


def solve_linear(mat: galois.FieldArray, rhs: Optional[galois.FieldArray] = None) -> LinearSolution:
    """Exact Gaussian elimination: rank, RREF, kernel basis and optionally a solution"""
    if mat.ndim != 2:
        raise DomainError("solve_linear expects a matrix")
    GF = type(mat)
    rows, cols = mat.shape
    rref = mat.row_reduce()
    pivots = _pivot_columns(rref, cols)
    kernel = mat.null_space() if cols else GF.Zeros((0, 0))
    result = LinearSolution(rank=len(pivots), rref=rref, pivots=pivots, kernel=kernel)
    if rhs is None:
        return result

    if not isinstance(rhs, GF):
        raise DomainError("right-hand side lives in a different field")
    column = rhs.ndim == 1
    rhs2 = rhs.reshape(-1, 1) if column else rhs
    if rhs2.shape[0] != rows:
        raise DomainError(f"rhs has {rhs2.shape[0]} rows, matrix has {rows}")
    augmented = np.concatenate([mat, rhs2], axis=1).row_reduce(ncols=cols)
    values = augmented.view(np.ndarray)
    aug_pivots = _pivot_columns(augmented, cols)
    tail = values[len(aug_pivots):, cols:]
    if tail.size and np.any(tail != 0):
        result.consistent = False
        return result
    solution = GF.Zeros((cols, rhs2.shape[1]))
    for r, c in enumerate(aug_pivots):
        solution[c] = augmented[r, cols:]
    result.solution = solution[:, 0] if column else solution
    return result

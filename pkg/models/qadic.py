"""
q-adic Expansions
Digit expansions of exponents and the shift calculus that fixes the support
of the b-th trace-depending polynomial.
"""

from dataclasses import dataclass
from typing import List, Optional, Set, Tuple

import sympy

from exceptions import DomainError

INT64_MAX = 2 ** 63 - 1


def _checked(value: int, what: str) -> int:
    if value > INT64_MAX:
        raise OverflowError(f"{what} = {value} does not fit in 64 bits")
    return value


@dataclass(frozen=True)
class QAdicExpansion:
    digits: Tuple[int, ...]
    q: int
    value: int

    def __post_init__(self):
        if any(not 0 <= d < self.q for d in self.digits):
            raise DomainError(f"digits {self.digits} out of range for base {self.q}")
        if sum(d * self.q ** i for i, d in enumerate(self.digits)) != self.value:
            raise DomainError("digits do not reconstruct the value")

    @property
    def width(self) -> int:
        return len(self.digits)

    def shifted(self, s: int) -> 'QAdicExpansion':
        """Cyclic shift by s places: multiplication by q^s modulo q^width - 1"""
        s %= self.width
        digits = self.digits[-s:] + self.digits[:-s] if s else self.digits
        value = sum(d * self.q ** i for i, d in enumerate(digits))
        return QAdicExpansion(digits=digits, q=self.q, value=value)


def expand(k: int, q: int, width: int) -> QAdicExpansion:
    """Little-endian base-q digits of k, padded to ``width``"""
    if q < 2 or width < 1:
        raise DomainError(f"invalid base {q} or width {width}")
    if not 0 <= k < q ** width:
        raise DomainError(f"{k} is out of range for {width} digits in base {q}")
    digits = []
    rest = k
    for _ in range(width):
        rest, digit = divmod(rest, q)
        digits.append(digit)
    return QAdicExpansion(digits=tuple(digits), q=q, value=k)


def q_to_prime_power(q: int) -> Tuple[int, int]:
    """q = p^e -> (p, e)"""
    if q >= 2 and sympy.isprime(q):
        return q, 1
    power = sympy.perfect_power(q) if q >= 2 else False
    if not power:
        raise DomainError(f"{q} is not a prime power")
    base, exponent = power
    p, inner = q_to_prime_power(int(base))
    return p, inner * int(exponent)


def _check_triple(q: int, n: int, t: int):
    q_to_prime_power(q)
    if n < 1:
        raise DomainError(f"n = {n} must be positive")
    if not 0 < t <= n:
        raise DomainError(f"t = {t} must satisfy 0 < t <= n = {n}")


def b_of_t(q: int, t: int) -> int:
    return _checked(1 + q ** t, 'b')


def t_of_b(q: int, b: int) -> int:
    """Inverse of b = 1 + q^t"""
    t, power = 0, 1
    while power < b - 1:
        power *= q
        t += 1
    if t == 0 or power != b - 1:
        raise DomainError(f"b = {b} is not of the form 1 + {q}^t")
    return t


def trb_degree(q: int, n: int, t: int) -> int:
    """m = q^{2n-1-t} + q^{2n-1}"""
    _check_triple(q, n, t)
    return _checked(q ** (2 * n - 1 - t) + q ** (2 * n - 1), 'm')


def shift_orbit(b: int, q: int, n: int, modulus: Optional[int] = None) -> List[int]:
    """Distinct residues q^s * b mod N, in shift order"""
    modulus = _checked(q ** (2 * n) - 1 if modulus is None else modulus, 'N')
    if not 0 < b < modulus:
        raise DomainError(f"b = {b} must satisfy 0 < b < {modulus}")
    orbit = []
    value = b
    while value not in orbit:
        orbit.append(value)
        value = value * q % modulus
    return orbit


def support_of_trb(q: int, n: int, t: int) -> Set[int]:
    """Exponents carrying a nonzero coefficient in Tr_b"""
    _check_triple(q, n, t)
    b = b_of_t(q, t)
    support = {0}
    support.update(_checked(q ** j * b, 'exponent') for j in range(2 * n - t))
    if t < n:
        support.update(q ** (j - 1) * (1 + q ** (2 * n - t)) for j in range(1, t + 1))
    return support

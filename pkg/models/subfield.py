"""
Subfield-Subcodes
Cyclotomic coset systems, the bound table for Gamma(tau) codes, and the
restriction of an evaluation code to a subfield alphabet.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional

import galois
import numpy as np

from exceptions import DomainError, TracecodeError
from models.eval_codes import EvalCode, a_bound, build_eval_code
from models.finite_field import in_subfield, trace_map
from models.qadic import q_to_prime_power

logger = logging.getLogger(__name__)


@dataclass
class CosetSystem:
    q: int
    n: int
    n_prime: int
    modulus: int
    multiplier: int
    cosets: List[List[int]]
    owner: np.ndarray = field(repr=False)

    @property
    def min_reps(self) -> List[int]:
        return [c[0] for c in self.cosets]

    @property
    def omega(self) -> int:
        return len(self.cosets) - 1

    def coset_of(self, g: int) -> List[int]:
        return self.cosets[int(self.owner[g % self.modulus])]

    def size(self, index: int) -> int:
        return len(self.cosets[index])

    def gamma(self, tau: int) -> List[int]:
        """Union of the cosets of g_0, ..., g_tau"""
        if not 0 <= tau <= self.omega:
            raise DomainError(f"tau = {tau} outside 0..{self.omega}")
        return sorted(e for coset in self.cosets[:tau + 1] for e in coset)

    def union_of(self, values: Iterable[int]) -> List[int]:
        """Union of the cosets containing the given exponents"""
        indices = sorted({int(self.owner[v % self.modulus]) for v in values})
        return sorted(e for i in indices for e in self.cosets[i])

    def to_json(self, limit: int = 32) -> Dict[str, Any]:
        return {
            'q': self.q,
            'n': self.n,
            'n_prime': self.n_prime,
            'modulus': self.modulus,
            'multiplier': self.multiplier,
            'count': len(self.cosets),
            'min_reps': self.min_reps[:limit],
            'sizes': [len(c) for c in self.cosets[:limit]],
        }


def coset_system(q: int, n: int, n_prime: int) -> CosetSystem:
    """Cosets of Z_{q^{2n}-1} under multiplication by q^{2n'}"""
    if n_prime < 1 or n % n_prime or n_prime >= n:
        raise DomainError(f"n' = {n_prime} must be a proper divisor of n = {n}")
    modulus = q ** (2 * n) - 1
    multiplier = q ** (2 * n_prime) % modulus
    owner = np.full(modulus, -1, dtype=np.int64)
    cosets: List[List[int]] = []
    for g in range(modulus):
        if owner[g] >= 0:
            continue
        orbit = []
        value = g
        while owner[value] < 0:
            owner[value] = len(cosets)
            orbit.append(value)
            value = value * multiplier % modulus
        cosets.append(sorted(orbit))
    return CosetSystem(q=q, n=n, n_prime=n_prime, modulus=modulus, multiplier=multiplier,
                       cosets=cosets, owner=owner)


@dataclass(frozen=True)
class BoundSet:
    A: int
    B: int
    B1: int
    C: Fraction
    D: int
    branch: str

    def to_json(self) -> Dict[str, Any]:
        return {'A': self.A, 'B': self.B, 'B1': self.B1, 'C': str(self.C),
                'C_floor': math.floor(self.C), 'D': self.D, 'branch': self.branch}


def d_bound(q: int, n: int, t: int, n_prime: int) -> BoundSet:
    """A, B, B1, C and the Gamma(tau) self-orthogonality bound D"""
    if n_prime < 1 or n % n_prime or n_prime >= n:
        raise DomainError(f"n' = {n_prime} must be a proper divisor of n = {n}")
    A = a_bound(q, n, t)
    B = q ** n - (q - 1) * q ** (n - t) - q
    B1 = q ** n - (q - 1) * q ** (n - t) - 2
    C = Fraction(q ** (2 * n - 2) - 1, q ** (n - 2) + 1)

    if t > 1:
        if n_prime != 1:
            D, branch = A, 't>1, n\'>1: A'
        elif n % 2 == 0:
            D, branch = B, 't>1, n\'=1, n even: B'
        else:
            D, branch = min(A, B), 't>1, n\'=1, n odd: min(A, B)'
    elif n == 2:
        D, branch = q - 2, 't=1, n=2: q-2'
    else:
        if not B1 < C:
            raise TracecodeError(f"B1 = {B1} is not below C = {C}")
        if n_prime > 2:
            D, branch = A, 't=1, n\'>2: A'
        elif n_prime == 2:
            D, branch = math.floor(C), 't=1, n\'=2: floor(C)'
        else:
            D, branch = B1, 't=1, n\'=1: B1'
    return BoundSet(A=A, B=B, B1=B1, C=C, D=D, branch=branch)


def sub_degree_of(q: int, n_prime: int) -> int:
    """Prime-field degree of GF(q^{2n'})"""
    _, e = q_to_prime_power(q)
    return 2 * e * n_prime


def same_row_space(a: galois.FieldArray, b: galois.FieldArray) -> bool:
    rank_a = int(np.linalg.matrix_rank(a)) if a.shape[0] else 0
    rank_b = int(np.linalg.matrix_rank(b)) if b.shape[0] else 0
    if rank_a != rank_b:
        return False
    if rank_a == 0:
        return True
    return int(np.linalg.matrix_rank(np.concatenate([a, b], axis=0))) == rank_a


def _prime_basis(code: EvalCode) -> galois.FieldArray:
    ctx = code.ctx
    return ctx.GF(ctx.p ** np.arange(ctx.m, dtype=np.int64))


def _subcode(code: EvalCode, gen: galois.FieldArray, sub_degree: int, tag: str) -> EvalCode:
    return EvalCode(ctx=code.ctx, gen=gen, delta=code.delta, q=code.q, n=code.n,
                    alphabet_degree=sub_degree, tag=tag, source=code.source,
                    distance_bound=code.distance_bound, provenance=dict(code.provenance))


def subfield_subcode(code: EvalCode, n_prime: int) -> EvalCode:
    """Codewords whose coordinates all lie in GF(q^{2n'}), by a kernel over the prime field"""
    ctx = code.ctx
    sub_degree = sub_degree_of(code.q, n_prime)
    if code.alphabet_degree % sub_degree:
        raise DomainError(f"GF({ctx.p}^{sub_degree}) is not a subfield of the code alphabet")
    if sub_degree == code.alphabet_degree:
        return _subcode(code, code.basis(), sub_degree, code.tag)

    G = code.basis()
    dim, m = G.shape
    scaled = (_prime_basis(code)[:, None, None] * G[None, :, :]).reshape(ctx.m * dim, m)
    defect = scaled ** (ctx.p ** sub_degree) - scaled
    system = defect.vector().reshape(ctx.m * dim, m * ctx.m)
    kernel = system.left_null_space()
    if kernel.shape[0] == 0:
        gen = ctx.GF.Zeros((0, m))
    else:
        words = ctx.GF(kernel.view(np.ndarray)) @ scaled
        rank = int(np.linalg.matrix_rank(words))
        gen = words.row_reduce()[:rank]

    if gen.shape[0] and not in_subfield(gen, sub_degree):
        raise TracecodeError("subfield-subcode basis left the subfield")
    result = _subcode(code, gen, sub_degree, 'subfield')
    if result.dim and not code.row_space_contains(result):
        raise TracecodeError("subfield-subcode is not contained in the parent code")
    logger.info(f"{code.code_id}: subfield-subcode over GF({ctx.p}^{sub_degree}) has dimension {result.dim}")
    return result


def delsarte_subcode(code: EvalCode, n_prime: int) -> EvalCode:
    """The same subcode as the dual of the trace of the dual code"""
    ctx = code.ctx
    sub_degree = sub_degree_of(code.q, n_prime)
    m = code.length
    dual = code.basis().null_space()
    if dual.shape[0] == 0:
        return _subcode(code, ctx.GF.Identity(m), sub_degree, 'delsarte')
    scaled = (_prime_basis(code)[:, None, None] * dual[None, :, :]).reshape(-1, m)
    traced = trace_map(scaled, ctx.m, sub_degree)
    gen = traced.null_space()
    return _subcode(code, gen, sub_degree, 'delsarte')


def remdim_applies(poly, exponents: Iterable[int]) -> bool:
    """The defining polynomial's support lies inside the exponent set"""
    N = poly.ctx.mult_order
    exps = {e % N for e in exponents}
    return all(e % N in exps for e in poly.support)


def gamma_tau_code(poly, cs: CosetSystem, tau: int) -> EvalCode:
    """Subfield-subcode of the code spanned by X^g, g in Gamma(tau)"""
    if not 0 <= tau < cs.omega:
        raise DomainError(f"tau = {tau} outside 0..{cs.omega - 1}")
    exponents = cs.gamma(tau)
    big = build_eval_code(poly, exponents, tag='gamma')
    sub = subfield_subcode(big, cs.n_prime)
    sizes = sum(cs.size(i) for i in range(tau + 1))
    applies = remdim_applies(poly, exponents)
    sub.tag = 'gamma'
    sub.distance_bound = cs.min_reps[tau + 1] + 1
    sub.provenance.update({
        'tau': tau,
        'n_prime': cs.n_prime,
        'g_tau': cs.min_reps[tau],
        'sum_coset_sizes': sizes,
        'remdim_applies': applies,
        'dimension_bound': sizes - 1 if applies else sizes,
    })
    if sub.dim > sizes:
        raise TracecodeError(f"dimension {sub.dim} exceeds the coset-size bound {sizes}")
    return sub

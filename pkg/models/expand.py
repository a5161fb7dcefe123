"""
Quantum Parameter Derivation
Stabilizer parameters from Hermitian self-orthogonal codes, base-field
expansion, propagation rules and the Gilbert-Varshamov comparison.
"""

import logging
import math
from typing import List, Optional

import sympy

from exceptions import DomainError, SelfOrthogonalityError
from models.eval_codes import EvalCode, SOCertificate
from result_models import DerivationStep, QuantumParams

logger = logging.getLogger(__name__)

GV_SOURCE = 'Feng-Ma existence inequality (external reference)'


def _require(certificate: Optional[SOCertificate], conj_power: Optional[int] = None):
    if certificate is None or not certificate.gram_zero:
        witness = certificate.witness if certificate else None
        raise SelfOrthogonalityError(f"no passing self-orthogonality certificate (witness {witness})")
    if conj_power is not None and certificate.conjugation_power != conj_power:
        raise SelfOrthogonalityError(
            f"certificate uses conjugation {certificate.conjugation_power}, expected {conj_power}")


def stabilizer_from_so(n: int, k: int, d_bound: int, Q: int,
                       certificate: Optional[SOCertificate] = None,
                       derivation: Optional[List[DerivationStep]] = None) -> QuantumParams:
    """[[n, n - 2k, >= d]]_Q from a Hermitian self-orthogonal [n, k] code over GF(Q^2)"""
    _require(certificate, Q)
    if 2 * k > n:
        raise DomainError(f"self-orthogonal code cannot have dimension {k} > {n}/2")
    d = 1 if k == 0 else d_bound
    steps = list(derivation or [])
    steps.append(DerivationStep(rule='hermitian-self-orthogonal', detail={
        'length': n, 'classical_dim': k, 'Q': Q, 'certificate': certificate.code_id}))
    return QuantumParams(n=n, k=n - 2 * k, d=d, q=Q, derivation=steps)


def base_of(alphabet_order: int, r: int) -> int:
    """q with q^{2r} equal to the alphabet order"""
    root, exact = sympy.integer_nthroot(alphabet_order, 2 * r)
    if not exact:
        raise DomainError(f"alphabet of order {alphabet_order} is not GF(q^{2 * r})")
    return int(root)


def code_derivation(code: EvalCode) -> List[DerivationStep]:
    detail = {'source': code.source, 'tag': code.tag, 'exponents': len(code.delta),
              'dim': code.dim, 'alphabet': code.alphabet_order}
    detail.update({k: v for k, v in code.provenance.items() if isinstance(v, (int, bool, str))})
    return [DerivationStep(rule=f"{code.tag}-code", detail=detail)]


def params_from_code(code: EvalCode, certificate: SOCertificate) -> QuantumParams:
    """Stabilizer parameters over the square root of the code alphabet"""
    if code.distance_bound is None:
        raise DomainError(f"{code.code_id} carries no distance bound")
    Q = base_of(code.alphabet_order, 1)
    return stabilizer_from_so(code.length, code.dim, code.distance_bound, Q, certificate,
                              code_derivation(code))


def expand_basefield(code: EvalCode, r: int, certificate: SOCertificate) -> QuantumParams:
    """[[rn, rn - 2rk, >= d]]_q from a self-orthogonal code over GF(q^{2r})"""
    if r < 1:
        raise DomainError(f"r = {r} must be positive")
    if code.distance_bound is None:
        raise DomainError(f"{code.code_id} carries no distance bound")
    q = base_of(code.alphabet_order, r)
    _require(certificate, q ** r)
    n, k = code.length, code.dim
    steps = code_derivation(code)
    steps.append(DerivationStep(rule='base-field-expansion', detail={
        'r': r, 'from_alphabet': code.alphabet_order, 'to_alphabet': q,
        'certificate': certificate.code_id}))
    return QuantumParams(n=r * n, k=r * n - 2 * r * k, d=code.distance_bound, q=q, derivation=steps)


def propagate(params: QuantumParams) -> List[QuantumParams]:
    """[[n, k-1, >= d]] (when k >= 1) and [[n+1, k, >= d]]"""
    derived = []
    if params.k >= 1:
        derived.append(params.extended('drop-dimension', k=params.k - 1))
    derived.append(params.extended('extend-length', n=params.n + 1))
    return derived


def propagate_chain(params: QuantumParams, extra_length: int = 0, drop: int = 0) -> List[QuantumParams]:
    """Repeated application of one propagation rule at a time"""
    chain = []
    current = params
    for _ in range(drop):
        current = propagate(current)[0]
        chain.append(current)
    current = params
    for _ in range(extra_length):
        current = propagate(current)[-1]
        chain.append(current)
    return chain


def gv_distance(n: int, k: int, q: int) -> int:
    """Largest d for which the existence inequality guarantees an [[n, k, d]]_q code"""
    if n <= k:
        raise DomainError(f"need n > k, got n = {n}, k = {k}")
    threshold = q ** (n - k + 2) - 1
    weight = q * q - 1
    total = 0
    d = 1
    while d < n:
        total += math.comb(n, d) * weight ** (d - 1)
        if threshold <= weight * total:
            break
        d += 1
    return d


def exceeds_gv(params: QuantumParams) -> bool:
    """Strictly better distance than the Gilbert-Varshamov guarantee for (n, k); d <= 1 passes vacuously"""
    if params.k >= params.n:
        return False
    if params.d <= 1:
        return True
    return params.d > gv_distance(params.n, params.k, params.q)

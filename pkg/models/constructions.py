"""
Construction Pipeline
Trace-depending polynomial -> evaluation code (Delta or Gamma) ->
self-orthogonality certificate -> distance certificate -> quantum parameters.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional

from exceptions import DomainError, SelfOrthogonalityError, TracecodeError
from models.eval_codes import (DistanceCertificate, DistanceStatus, EvalCode, SOCertificate,
                               a_bound, build_eval_code, certify_dual_distance,
                               check_self_orthogonal, delta_tau)
from models.expand import expand_basefield, params_from_code
from models.subfield import CosetSystem, coset_system, d_bound, gamma_tau_code
from models.trace_poly import TraceDepPoly, build_trb, enumerate_roots
from result_models import DerivationStep, QuantumParams

logger = logging.getLogger(__name__)


@lru_cache(maxsize=32)
def rooted_trb(q: int, n: int, t: int) -> TraceDepPoly:
    """Tr_b with its roots enumerated, shared between constructions"""
    poly = build_trb(q, n, t)
    enumerate_roots(poly)
    return poly


@lru_cache(maxsize=32)
def cached_cosets(q: int, n: int, n_prime: int) -> CosetSystem:
    return coset_system(q, n, n_prime)


@dataclass
class ConstructionResult:
    params: QuantumParams
    code: EvalCode
    certificate: SOCertificate
    distance: Optional[DistanceCertificate]
    in_proven_range: bool
    notes: List[str] = field(default_factory=list)


def _classical_code(q: int, n: int, t: int, construction: str, tau: int,
                    n_prime: Optional[int]):
    poly = rooted_trb(q, n, t)
    if construction == 'delta':
        code = build_eval_code(poly, delta_tau(tau))
        limit = a_bound(q, n, t)
        return code, q ** n, tau <= limit, f"tau = {tau}, A = {limit}"
    if construction == 'gamma':
        if n_prime is None:
            raise DomainError("gamma constructions need n'")
        cs = cached_cosets(q, n, n_prime)
        bounds = d_bound(q, n, t, n_prime)
        code = gamma_tau_code(poly, cs, tau)
        g_tau = cs.min_reps[tau]
        return code, q ** n_prime, g_tau <= bounds.D, f"g_tau = {g_tau}, D = {bounds.D} ({bounds.branch})"
    raise DomainError(f"unknown construction {construction}")


def construct(q: int, n: int, t: int, construction: str, tau: int, n_prime: Optional[int] = None,
              r: Optional[int] = None, certify: bool = True, budget: Optional[int] = None,
              trials: Optional[int] = None, seed: Optional[int] = None) -> ConstructionResult:
    """Run the whole pipeline for one (q, n, t, tau) and return certified parameters"""
    code, conj_power, in_range, range_note = _classical_code(q, n, t, construction, tau, n_prime)
    notes = [range_note]
    if not in_range:
        logger.warning(f"{code.code_id}: outside the proven range ({range_note})")
        notes.append('outside the proven range; certificates decide')

    certificate = check_self_orthogonal(code, conj_power)
    if not certificate.gram_zero:
        raise SelfOrthogonalityError(f"{code.code_id} fails self-orthogonality at {certificate.witness}")

    params = expand_basefield(code, r, certificate) if r else params_from_code(code, certificate)

    distance = None
    steps = list(params.derivation)
    if certify:
        distance = certify_dual_distance(code, code.distance_bound, budget=budget, trials=trials, seed=seed)
        if distance.status == DistanceStatus.REFUTED:
            raise TracecodeError(f"{code.code_id}: columns {distance.witness} are dependent")
        steps.append(DerivationStep(rule='distance-certificate', detail=distance.to_dict()))
    if construction == 'gamma':
        steps.append(DerivationStep(rule='dimension-bound', detail={
            key: code.provenance[key] for key in ('sum_coset_sizes', 'remdim_applies', 'dimension_bound')}))
    params = params.model_copy(update={'derivation': steps})
    return ConstructionResult(params=params, code=code, certificate=certificate,
                              distance=distance, in_proven_range=in_range, notes=notes)

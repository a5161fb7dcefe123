"""
Sporadic binary codes from 1 + tr(h(X)) over GF(2^8)
Each row takes the subfield-subcode over GF(16) of a coset-union code,
searches the primitive elements for Hermitian self-orthogonality and
expands the result to a binary stabilizer code.
"""

import logging
import math
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple

from commands import run_rows
from golden_tables import expected_triple, load_table8, parse_terms
from models.constructions import cached_cosets
from models.eval_codes import EvalCode, SOCertificate, build_eval_code, check_self_orthogonal
from models.expand import expand_basefield
from models.finite_field import field_new
from models.subfield import subfield_subcode
from models.trace_poly import TraceDepPoly, build_general, enumerate_roots
from report_generator import export_code
from result_models import Report, ReportRow, RunConfig

logger = logging.getLogger(__name__)

BASE_Q = 2
BASE_N = 4
SUB_N_PRIME = 2
EXPANSION_R = 2


def primitive_powers(mult_order: int) -> List[int]:
    """Exponents j for which g^j is again primitive, ascending"""
    return [j for j in range(1, mult_order) if math.gcd(j, mult_order) == 1]


@lru_cache(maxsize=1024)
def sporadic_poly(terms: str, power: int = 1) -> TraceDepPoly:
    """1 + tr(h(X)) with every coefficient log scaled by ``power``"""
    ctx = field_new(BASE_Q, 2 * BASE_N)
    h = {e: c * power % ctx.mult_order for e, c in parse_terms(terms).items()}
    poly = build_general(ctx, 1, h, q=BASE_Q, n=BASE_N)
    enumerate_roots(poly)
    return poly


def sporadic_code(poly: TraceDepPoly, top: int) -> Tuple[EvalCode, SOCertificate]:
    """Subfield-subcode over GF(16) of the code on the cosets of 0..top"""
    cs = cached_cosets(BASE_Q, BASE_N, SUB_N_PRIME)
    code = build_eval_code(poly, cs.union_of(range(top + 1)), tag='sporadic')
    sub = subfield_subcode(code, SUB_N_PRIME)
    sub.tag = 'sporadic'
    sub.distance_bound = cs.min_reps[top + 1] + 1
    sub.provenance.update({'delta_top': top})
    return sub, check_self_orthogonal(sub, BASE_Q ** SUB_N_PRIME)


def _key(row: Dict[str, Any]) -> str:
    return f"row {row['row']}: 1+tr({row['terms']}) top={row['delta_top']}"


def _search(row: Dict[str, Any], top: int, everything: bool):
    """First self-orthogonal primitive power, and all of them when asked"""
    first: Optional[Tuple[int, TraceDepPoly, EvalCode, SOCertificate]] = None
    passing: List[int] = []
    for power in primitive_powers(2 ** (2 * BASE_N) - 1):
        poly = sporadic_poly(row['terms'], power)
        sub, certificate = sporadic_code(poly, top)
        if not certificate.gram_zero:
            continue
        passing.append(power)
        if first is None:
            first = (power, poly, sub, certificate)
        if not everything:
            break
    return first, passing


def _sporadic_row(row: Dict[str, Any], cfg: RunConfig) -> ReportRow:
    top = row['alt_delta_top'] if row['alt_delta_top'] is not None else row['delta_top']
    length, k, d = expected_triple(row)
    expected = {'length': length, 'k': k, 'd': d}
    notes = []
    if top != row['delta_top']:
        notes.append(f"printed Delta top {row['delta_top']} read as {top}, the reading consistent with k")

    first, passing = _search(row, top, cfg.all_primitive)
    if first is None:
        m = sporadic_poly(row['terms']).root_count
        notes.append('no primitive element gives a self-orthogonal subfield-subcode')
        logger.error(f"{_key(row)}: no self-orthogonal primitive element")
        return ReportRow(key=_key(row), status='mismatch', expected=expected, notes=notes,
                         values={'m': m, 'claimed_m': row['claimed_m']})

    power, poly, sub, certificate = first
    params = expand_basefield(sub, EXPANSION_R, certificate)
    values: Dict[str, Any] = {
        'length': params.n, 'k': params.k, 'd': params.d,
        'm': poly.root_count,
        'claimed_m': row['claimed_m'],
        'used_delta_top': top,
        'dim': sub.dim,
        'primitive_power': power,
        'primitive_element': int(poly.ctx.from_log(power)),
    }
    if cfg.all_primitive:
        values['self_orthogonal_powers'] = passing
    if cfg.export:
        values['exported'] = export_code(cfg.export, _key(row), poly, sub)
    if poly.root_count != row['claimed_m']:
        values['discrepancy'] = True
        notes.append(f"computed m = {poly.root_count}, claimed m = {row['claimed_m']}")
        logger.warning(f"{_key(row)}: computed {poly.root_count} roots, claimed {row['claimed_m']}")
    status = 'match' if all(values[key] == value for key, value in expected.items()) else 'mismatch'
    return ReportRow(key=_key(row), status=status, values=values, expected=expected,
                     params=[params], notes=notes)


def cmd_sporadic(cfg: RunConfig) -> Report:
    rows = run_rows(load_table8(), _sporadic_row, cfg, _key, 'sporadic')
    return Report(command=cfg.command, config=cfg.model_dump(), rows=rows)


def register(subparsers, parent):
    parser = subparsers.add_parser('sporadic', parents=[parent],
                                   help='binary codes from 1 + tr(h(X)) over GF(2^8)')
    parser.set_defaults(handler=cmd_sporadic)

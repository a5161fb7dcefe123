"""
Verification commands
Degree and root counts of Tr_b, the nonzero power-sum pattern, and the
self-orthogonality range of Delta(tau) codes.
"""

import logging
from typing import Dict, List

from commands import matches_filters, run_rows
from config import Config
from golden_tables import load_table1
from models.constructions import rooted_trb
from models.eval_codes import (DistanceStatus, a_bound, build_eval_code, certify_dual_distance,
                               check_self_orthogonal, delta_tau, gram_identity_failures)
from models.expand import stabilizer_from_so
from models.power_sums import compare_el7, power_sums, so_by_power_sums
from models.qadic import b_of_t, trb_degree
from models.trace_poly import dense_reduction, la2_root_count
from result_models import Report, ReportRow, RunConfig

logger = logging.getLogger(__name__)

DENSE_ORACLE_CAP = 2 ** 20
LA2_TRIPLES = [(2, 2, 2), (3, 2, 2)]
# t = 1, n = 2 over GF(2) sits outside the proven Delta(tau) range
ERA2_EXCLUDED = {(2, 2, 1)}


def _key(row: Dict[str, int]) -> str:
    return f"q={row['q']} n={row['n']} t={row['t']}"


def _selected_table1(cfg: RunConfig) -> List[Dict[str, int]]:
    return [row for row in load_table1() if matches_filters(row, cfg)]


def _heavy_skip(row: Dict[str, int], cfg: RunConfig):
    if row.get('heavy') and not (cfg.heavy or Config.HEAVY):
        return ReportRow(key=_key(row), status='skipped', notes=['heavy row, pass --heavy to run it'])
    return None


def _table1_row(row: Dict[str, int], cfg: RunConfig) -> ReportRow:
    skipped = _heavy_skip(row, cfg)
    if skipped:
        return skipped
    q, n, t = row['q'], row['n'], row['t']
    poly = rooted_trb(q, n, t)
    values = {
        'b': poly.kind.b,
        'degree': poly.degree,
        'roots': poly.root_count,
        'property_a': poly.property_a,
        'support_size': len(poly.support),
    }
    expected = {'b': row['b'], 'degree': row['m'], 'roots': row['m'], 'property_a': True}
    notes = []
    if q ** (2 * n) <= DENSE_ORACLE_CAP:
        oracle = dense_reduction(q, n, t)
        agrees = oracle == {e: int(c) for e, c in poly.support.items()}
        values['dense_oracle'] = agrees
        expected['dense_oracle'] = True
        if not agrees:
            notes.append('sparse support differs from the dense reduction')
    status = 'match' if all(values[k] == v for k, v in expected.items()) else 'mismatch'
    return ReportRow(key=_key(row), status=status, values=values, expected=expected, notes=notes)


def cmd_verify_table1(cfg: RunConfig) -> Report:
    rows = run_rows(_selected_table1(cfg), _table1_row, cfg, _key, 'table1')
    return Report(command=cfg.command, config=cfg.model_dump(), rows=rows)


def _el7_row(row: Dict[str, int], cfg: RunConfig) -> ReportRow:
    skipped = _heavy_skip(row, cfg)
    if skipped:
        return skipped
    q, n, t = row['q'], row['n'], row['t']
    poly = rooted_trb(q, n, t)
    comparison = compare_el7(poly)
    notes = list(comparison.mismatches)
    values = {
        'degree': poly.degree,
        'observed': [list(pair) for pair in comparison.observed],
    }
    expected = {'predicted': [list(pair) for pair in comparison.predicted]}
    if t == n:
        values['roots'] = poly.root_count
        expected['roots'] = la2_root_count(q, n)
        if poly.root_count != expected['roots']:
            notes.append(f"root count {poly.root_count}, expected {expected['roots']}")
    status = 'match' if not notes else 'mismatch'
    return ReportRow(key=_key(row), status=status, values=values, expected=expected, notes=notes)


def cmd_verify_el7(cfg: RunConfig) -> Report:
    items = _selected_table1(cfg)
    for q, n, t in LA2_TRIPLES:
        extra = {'q': q, 'n': n, 't': t, 'b': b_of_t(q, t), 'm': trb_degree(q, n, t), 'heavy': 0}
        if matches_filters(extra, cfg):
            items.append(extra)
    rows = run_rows(items, _el7_row, cfg, _key, 'el7')
    return Report(command=cfg.command, config=cfg.model_dump(), rows=rows)


def _era2_row(row: Dict[str, int], cfg: RunConfig) -> ReportRow:
    skipped = _heavy_skip(row, cfg)
    if skipped:
        return skipped
    q, n, t = row['q'], row['n'], row['t']
    poly = rooted_trb(q, n, t)
    ctx = poly.ctx
    conj = q ** n
    A = a_bound(q, n, t)
    taus = [tau for tau in range(A + 1) if not cfg.tau or tau in cfg.tau]
    full = build_eval_code(poly, delta_tau(A + 1))

    if ctx.order <= Config.FULL_POWER_SUM_CAP:
        table = power_sums(poly)
    else:
        table = power_sums(poly, 0)

    failures: Dict[str, List[int]] = {'dimension': [], 'self_orthogonal': [], 'power_sums': [], 'distance': []}
    sampled = []
    params = []
    for tau in taus:
        code = full.prefix(tau)
        if code.dim != tau + 1:
            failures['dimension'].append(tau)
        certificate = check_self_orthogonal(code, conj)
        by_sums = so_by_power_sums(table, code.delta, conj)
        if (by_sums is None) != certificate.gram_zero:
            failures['power_sums'].append(tau)
        if not certificate.gram_zero:
            failures['self_orthogonal'].append(tau)
            continue
        distance = certify_dual_distance(code, code.distance_bound, budget=cfg.budget,
                                         trials=cfg.trials, seed=cfg.seed + tau)
        if distance.status == DistanceStatus.REFUTED:
            failures['distance'].append(tau)
        elif distance.status == DistanceStatus.SAMPLED_ONLY:
            sampled.append(tau)
        params.append(stabilizer_from_so(code.length, code.dim, code.distance_bound, conj, certificate))

    beyond = check_self_orthogonal(full.prefix(A + 1), conj)
    values = {
        'A': A,
        'checked': len(taus),
        'failures': failures,
        'sampled_only': sampled,
        'next_tau_self_orthogonal': beyond.gram_zero,
    }
    notes = []
    if table.up_to >= ctx.mult_order:
        mismatched = gram_identity_failures(poly, table, conj, count=min(cfg.trials, 1000), seed=cfg.seed)
        values['gram_identity_failures'] = len(mismatched)
        if mismatched:
            notes.append(f"Gram entries differ from power sums at {mismatched[:5]}")
    if sampled:
        notes.append(f"dual distance sampled only for tau in {sampled}")

    failed = any(failures.values()) or values.get('gram_identity_failures', 0) > 0
    if (q, n, t) in ERA2_EXCLUDED:
        notes.insert(0, 'outside the proven range; reported for information')
        return ReportRow(key=_key(row), status='info', values=values, params=params, notes=notes)
    return ReportRow(key=_key(row), status='mismatch' if failed else 'match', values=values,
                     expected={'failures': {k: [] for k in failures}}, params=params, notes=notes)


def cmd_verify_era2(cfg: RunConfig) -> Report:
    rows = run_rows(_selected_table1(cfg), _era2_row, cfg, _key, 'era2')
    return Report(command=cfg.command, config=cfg.model_dump(), rows=rows)


def register(subparsers, parent):
    for name, handler, text in (
        ('verify-table1', cmd_verify_table1, 'degree, root count and Property (A) of Tr_b'),
        ('verify-el7', cmd_verify_el7, 'nonzero power sums of the roots against the closed form'),
        ('verify-era2', cmd_verify_era2, 'self-orthogonality and distance of Delta(tau) codes for tau <= A'),
    ):
        parser = subparsers.add_parser(name, parents=[parent], help=text)
        parser.set_defaults(handler=handler)

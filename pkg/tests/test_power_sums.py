import numpy as np
import pytest

from config import Config
from exceptions import DomainError
from golden_tables import load_table1
from models.constructions import rooted_trb
from models.eval_codes import delta_tau
from models.power_sums import (SplitPolynomial, compare_el7, power_sums, predict_el7,
                               so_by_power_sums, verify_newton)

TABLE1_TRIPLES = [
    pytest.param((row['q'], row['n'], row['t']), marks=[pytest.mark.heavy] if row['heavy'] else [],
                 id=f"q{row['q']}-n{row['n']}-t{row['t']}")
    for row in load_table1()
]


def test_prediction_for_smallest_case():
    assert sorted(i for i, _ in predict_el7(2, 2, 1)) == [3, 6, 9, 12]
    assert predict_el7(2, 2, 2) == [(5, 1), (10, 1)]


def test_prediction_when_t_equals_n():
    assert predict_el7(3, 2, 2) == [(3 ** 3 - 3 ** 2 + 3 - 1, 1)]


@pytest.mark.parametrize('triple', TABLE1_TRIPLES + [(2, 2, 2), (3, 2, 2)])
def test_nonzero_power_sums_follow_closed_form(triple):
    comparison = compare_el7(rooted_trb(*triple))
    assert comparison.ok, comparison.mismatches


def test_power_sum_table_wraps_around(trb_221):
    table = power_sums(trb_221)
    N = trb_221.ctx.mult_order
    assert table.up_to == N
    assert table.value(0) == trb_221.root_count % 2
    for i in (1, 3, 7, 12):
        assert table.value(i + N) == table.value(i)
        assert table.value(i) == np.add.reduce(trb_221.roots ** i)


def test_partial_table_computes_missing_entries(trb_242):
    full = power_sums(trb_242)
    partial = power_sums(trb_242, 10)
    assert partial.value(95) == full.value(95)
    assert np.array_equal(partial.values_at([1, 95, 200]), full.values_at([1, 95, 200]))


def test_full_table_needs_small_field(trb_221, monkeypatch):
    monkeypatch.setattr(Config, 'FULL_POWER_SUM_CAP', 8)
    with pytest.raises(DomainError):
        power_sums(trb_221)


@pytest.mark.parametrize('triple', [(2, 2, 1), (2, 2, 2), (2, 4, 2), (3, 2, 1), (3, 2, 2)])
def test_newton_identities_on_trace_polynomials(triple):
    poly = rooted_trb(*triple)
    assert verify_newton(poly, 2 * poly.degree).ok


@pytest.mark.parametrize('seed', range(20))
def test_newton_identities_on_random_split_polynomials(gf81, seed):
    poly = SplitPolynomial.random(gf81, degree=3 + seed % 9, seed=seed)
    assert verify_newton(poly, 2 * poly.degree).ok


def test_newton_detects_wrong_roots(gf81):
    poly = SplitPolynomial.random(gf81, degree=6, seed=1)
    logs = (poly.root_logs + 1) % 80
    wrong = SplitPolynomial(ctx=gf81, roots=gf81.power_table[logs], root_logs=logs)
    table = power_sums(wrong, 12)
    assert not verify_newton(poly, 12, table=table).ok


def test_power_sum_criterion_matches_proven_range(trb_242):
    table = power_sums(trb_242)
    assert so_by_power_sums(table, delta_tau(12), 16) is None
    witness = so_by_power_sums(table, delta_tau(15), 16)
    assert witness is not None
    a, b = witness
    assert table.value(a + 16 * b) != 0

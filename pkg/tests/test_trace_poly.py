import numpy as np
import pytest

from exceptions import CapExceededError, DomainError
from golden_tables import load_table1
from models.constructions import rooted_trb
from models.trace_poly import (build_general, build_trb, dense_reduction, enumerate_roots,
                               la2_root_count)

LIGHT_ROWS = [row for row in load_table1() if not row['heavy']]
HEAVY_ROWS = [row for row in load_table1() if row['heavy']]


def _id(row):
    return f"{row['q']}-{row['n']}-{row['t']}"


def test_small_trace_polynomial():
    poly = build_trb(2, 2, 1)
    assert poly.degree == 12
    assert poly.exponents() == [0, 3, 6, 9, 12]
    assert poly.kind.b == 3
    assert poly.to_json() == {'p': 2, 'm_degree': 4, 'degree': 12,
                              'support': [[0, 0], [3, 0], [6, 0], [9, 0], [12, 0]]}


@pytest.mark.parametrize('triple', [(2, 2, 1), (2, 2, 2), (2, 4, 2), (2, 4, 3), (3, 2, 1),
                                    (3, 2, 2), (3, 4, 2), (5, 2, 1), (7, 2, 1)])
def test_support_matches_dense_reduction(triple):
    poly = build_trb(*triple)
    assert dense_reduction(*triple) == {e: int(c) for e, c in poly.support.items()}


@pytest.mark.parametrize('row', LIGHT_ROWS, ids=_id)
def test_property_a_on_table_rows(row):
    poly = rooted_trb(row['q'], row['n'], row['t'])
    assert poly.degree == row['m']
    assert poly.root_count == row['m']
    assert poly.property_a
    assert not poly.zero_is_root


@pytest.mark.heavy
@pytest.mark.parametrize('row', HEAVY_ROWS, ids=_id)
def test_property_a_on_large_field_rows(row):
    poly = build_trb(row['q'], row['n'], row['t'])
    enumerate_roots(poly, jobs=4)
    assert poly.root_count == row['m']


@pytest.mark.parametrize('q, n', [(2, 2), (3, 2)])
def test_root_count_when_t_equals_n(q, n):
    poly = rooted_trb(q, n, n)
    assert poly.root_count == la2_root_count(q, n)
    assert poly.property_a


def test_roots_are_roots(trb_242):
    assert np.all(trb_242.evaluate(trb_242.roots) == 0)
    assert np.all(np.diff(trb_242.root_logs) > 0)


def test_threaded_enumeration_matches_serial():
    poly = build_trb(3, 4, 2)
    enumerate_roots(poly, jobs=3)
    assert np.array_equal(poly.root_logs, rooted_trb(3, 4, 2).root_logs)


def test_enumeration_cap():
    with pytest.raises(CapExceededError):
        enumerate_roots(build_trb(2, 4, 2), cap=100)


def test_zero_root_is_dropped_with_warning(gf16):
    poly = build_general(gf16, 0, {1: 0})
    enumerate_roots(poly)
    assert poly.zero_is_root
    assert poly.warnings
    assert poly.root_count == 2 ** 3 - 1


def test_general_polynomial_validation(gf16, gf81):
    with pytest.raises(DomainError):
        build_general(gf16, 1, {})
    with pytest.raises(DomainError):
        build_general(gf16, 1, {0: 0})
    with pytest.raises(DomainError):
        build_general(gf81, 1, {1: 0}, q=2)


def test_sporadic_root_counts(gf256):
    cubic = build_general(gf256, 1, {3: 5}, q=2, n=4)
    enumerate_roots(cubic)
    assert cubic.root_count == 120
    quintic = build_general(gf256, 1, {5: 5}, q=2, n=4)
    enumerate_roots(quintic)
    assert quintic.root_count == 160

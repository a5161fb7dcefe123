import pytest

from exceptions import DomainError
from golden_tables import load_table1
from models.qadic import (b_of_t, expand, q_to_prime_power, shift_orbit, support_of_trb, t_of_b,
                          trb_degree)


def test_expansion_digits_and_shift():
    expansion = expand(10, 3, 3)
    assert expansion.digits == (1, 0, 1)
    shifted = expansion.shifted(1)
    assert shifted.digits == (1, 1, 0)
    assert shifted.value == 10 * 3 % 26
    assert expansion.shifted(3) == expansion


def test_expansion_out_of_range():
    with pytest.raises(DomainError):
        expand(27, 3, 3)
    with pytest.raises(DomainError):
        expand(1, 1, 3)


@pytest.mark.parametrize('q, expected', [(2, (2, 1)), (4, (2, 2)), (8, (2, 3)), (9, (3, 2)),
                                         (25, (5, 2)), (7, (7, 1))])
def test_prime_power_decomposition(q, expected):
    assert q_to_prime_power(q) == expected


@pytest.mark.parametrize('q', [1, 6, 12])
def test_not_a_prime_power(q):
    with pytest.raises(DomainError):
        q_to_prime_power(q)


def test_b_and_t_are_inverse():
    assert b_of_t(2, 2) == 5
    assert t_of_b(2, 9) == 3
    assert t_of_b(3, 10) == 2
    assert t_of_b(7, b_of_t(7, 1)) == 1
    with pytest.raises(DomainError):
        t_of_b(2, 6)


@pytest.mark.parametrize('row', load_table1(), ids=lambda r: f"{r['q']}-{r['n']}-{r['t']}")
def test_degree_formula_matches_table(row):
    assert b_of_t(row['q'], row['t']) == row['b']
    assert trb_degree(row['q'], row['n'], row['t']) == row['m']


def test_degree_rejects_bad_t():
    with pytest.raises(DomainError):
        trb_degree(2, 2, 3)
    with pytest.raises(DomainError):
        trb_degree(2, 2, 0)


def test_shift_orbit():
    assert shift_orbit(5, 2, 4) == [5, 10, 20, 40, 80, 160, 65, 130]
    assert shift_orbit(26, 5, 2, modulus=624) == [26, 130]


def test_support_of_small_trace_polynomials():
    assert support_of_trb(2, 2, 1) == {0, 3, 6, 9, 12}
    assert support_of_trb(2, 2, 2) == {0, 5, 10}
    assert max(support_of_trb(2, 4, 2)) == 160


def test_overflow_is_reported():
    with pytest.raises(OverflowError):
        b_of_t(2, 70)

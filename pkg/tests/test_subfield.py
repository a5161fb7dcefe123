import pytest

from exceptions import DomainError
from models.constructions import rooted_trb
from models.eval_codes import build_eval_code, check_self_orthogonal, delta_tau
from models.finite_field import in_subfield
from models.subfield import (coset_system, d_bound, delsarte_subcode, gamma_tau_code,
                             remdim_applies, same_row_space, subfield_subcode)


def test_cosets_under_sixteen():
    cs = coset_system(2, 4, 2)
    assert cs.modulus == 255
    assert cs.multiplier == 16
    assert cs.min_reps[:13] == list(range(13))
    assert cs.coset_of(16) == [1, 16]
    assert sum(len(c) for c in cs.cosets) == 255


def test_cosets_under_four():
    cs = coset_system(2, 4, 1)
    assert cs.min_reps[:10] == [0, 1, 2, 3, 5, 6, 7, 9, 10, 11]
    assert cs.coset_of(5) == [5, 20, 65, 80]
    assert cs.gamma(1) == [0, 1, 4, 16, 64]
    assert cs.union_of([4, 0]) == [0, 1, 4, 16, 64]
    assert cs.to_json()['count'] == len(cs.cosets)
    with pytest.raises(DomainError):
        cs.gamma(cs.omega + 1)


def test_coset_system_needs_proper_divisor():
    with pytest.raises(DomainError):
        coset_system(2, 4, 3)
    with pytest.raises(DomainError):
        coset_system(2, 4, 4)


def test_bound_branches():
    assert d_bound(2, 4, 2, 1).D == 10
    assert d_bound(2, 4, 2, 2).D == 12
    assert d_bound(5, 2, 2, 1).D == 16
    assert d_bound(5, 2, 1, 1).D == 3
    assert d_bound(5, 2, 1, 1).branch.startswith('t=1, n=2')
    assert d_bound(2, 4, 2, 1).to_json()['C'] == '63/5'
    with pytest.raises(DomainError):
        d_bound(2, 4, 2, 3)


def test_record_gamma_code(trb_242):
    cs = coset_system(2, 4, 1)
    code = gamma_tau_code(trb_242, cs, 8)
    assert code.provenance['sum_coset_sizes'] == 33
    assert code.provenance['remdim_applies']
    assert code.provenance['dimension_bound'] == 32
    assert code.dim == 32
    assert code.distance_bound == 12
    assert code.alphabet_order == 4
    assert check_self_orthogonal(code, 2).gram_zero


def test_remdim_condition(trb_242):
    cs = coset_system(2, 4, 1)
    assert remdim_applies(trb_242, cs.gamma(8))
    assert not remdim_applies(trb_242, cs.gamma(3))


def test_gamma_index_must_leave_a_next_coset(trb_242):
    cs = coset_system(2, 4, 1)
    with pytest.raises(DomainError):
        gamma_tau_code(trb_242, cs, cs.omega)


def test_subcode_lives_in_subfield_and_parent(trb_242):
    code = build_eval_code(trb_242, coset_system(2, 4, 2).gamma(3))
    sub = subfield_subcode(code, 2)
    assert sub.alphabet_degree == 4
    assert in_subfield(sub.gen, 4)
    assert code.row_space_contains(sub)


def test_full_alphabet_subcode_is_the_code(trb_221):
    code = build_eval_code(trb_221, delta_tau(2))
    assert subfield_subcode(code, 2).dim == code.dim


@pytest.mark.parametrize('triple', [(2, 2, 1), (2, 2, 2), (3, 2, 1), (3, 2, 2)])
@pytest.mark.parametrize('exponents', [(0, 1, 2), (0, 1, 2, 3, 4, 5, 6), (1, 3, 4)])
def test_kernel_subcode_matches_trace_of_dual(triple, exponents):
    poly = rooted_trb(*triple)
    assert poly.root_count <= 40
    code = build_eval_code(poly, exponents)
    kernel = subfield_subcode(code, 1)
    delsarte = delsarte_subcode(code, 1)
    assert kernel.dim == delsarte.dim
    assert same_row_space(kernel.basis(), delsarte.basis())

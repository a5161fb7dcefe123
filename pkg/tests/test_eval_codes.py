import math

import numpy as np
import pytest

from exceptions import DomainError
from models.eval_codes import (DistanceStatus, EvalCode, a_bound, build_eval_code,
                               certify_dual_distance, check_self_orthogonal, delta_tau,
                               gram_identity_failures, hermitian_product, independent_batches,
                               monotone, so_witness_by_growth, true_min_distance)
from models.power_sums import power_sums


@pytest.mark.parametrize('triple, expected', [((2, 4, 2), 12), ((5, 2, 1), 11), ((7, 2, 1), 23),
                                              ((2, 4, 3), 10), ((3, 2, 1), 3), ((2, 2, 2), 0)])
def test_a_bound(triple, expected):
    assert a_bound(*triple) == expected


def test_a_bound_rejects_bad_t():
    with pytest.raises(DomainError):
        a_bound(2, 2, 3)


def test_delta_tau():
    assert delta_tau(3) == (0, 1, 2, 3)
    with pytest.raises(DomainError):
        delta_tau(-1)


def test_constant_row_code(trb_221):
    code = build_eval_code(trb_221, [0])
    assert code.dim == 1
    assert code.length == 12
    assert np.all(code.gen == 1)
    assert code.distance_bound == 2


def test_delta_code_dimension(trb_321):
    code = build_eval_code(trb_321, delta_tau(3))
    assert code.dim == 4
    assert code.length == 36
    assert code.alphabet_order == 81


def test_empty_exponent_set(trb_221):
    with pytest.raises(DomainError):
        build_eval_code(trb_221, [])


def test_hermitian_product_is_a_power_sum(trb_242):
    code = build_eval_code(trb_242, [3, 7])
    table = power_sums(trb_242)
    assert hermitian_product(code.gen[0], code.gen[1], 16) == table.value(3 + 16 * 7)
    zero = trb_242.ctx.GF.Zeros(5)
    assert hermitian_product(zero, zero, 16) == 0
    with pytest.raises(DomainError):
        hermitian_product(code.gen[0], zero, 16)


def test_gram_entries_match_power_sums_on_random_pairs(trb_242):
    table = power_sums(trb_242)
    assert gram_identity_failures(trb_242, table, 16, count=1000, seed=7) == []


def test_delta_codes_are_self_orthogonal_up_to_a(trb_242):
    code = build_eval_code(trb_242, delta_tau(12))
    certificate = check_self_orthogonal(code, 16)
    assert certificate.gram_zero
    assert certificate.witness is None
    assert code.dim == 13


def test_growth_eventually_breaks_self_orthogonality(trb_242):
    tau = so_witness_by_growth(trb_242, 16, 0, 20)
    assert tau is not None
    assert 13 <= tau <= 15
    certificate = check_self_orthogonal(build_eval_code(trb_242, delta_tau(tau)), 16)
    assert not certificate.gram_zero
    assert certificate.to_dict()['witness'] is not None


def test_prefix_and_monotonicity(trb_242):
    full = build_eval_code(trb_242, delta_tau(12))
    prefix = full.prefix(4)
    assert np.array_equal(prefix.gen, build_eval_code(trb_242, delta_tau(4)).gen)
    assert prefix.distance_bound == 6
    assert monotone([full.prefix(t) for t in range(13)])
    assert not build_eval_code(trb_242, [0]).row_space_contains(full)


def test_independent_batches(gf16):
    GF = gf16.GF
    blocks = GF([[[1, 0], [0, 1]], [[1, 2], [2, 4]], [[0, 0], [1, 1]]])
    assert independent_batches(blocks).tolist() == [True, False, False]


def test_exhaustive_distance_certificate(trb_321):
    code = build_eval_code(trb_321, delta_tau(3))
    certificate = certify_dual_distance(code, 5)
    assert certificate.status == DistanceStatus.CERTIFIED
    assert certificate.exhaustive
    assert certificate.subsets_checked == math.comb(36, 4)


def test_constant_code_certified_and_refuted(trb_221):
    code = build_eval_code(trb_221, [0])
    assert certify_dual_distance(code, 2).status == DistanceStatus.CERTIFIED
    refuted = certify_dual_distance(code, 3)
    assert refuted.status == DistanceStatus.REFUTED
    assert refuted.witness is not None


def test_large_subset_count_is_sampled(trb_242):
    code = build_eval_code(trb_242, delta_tau(12))
    certificate = certify_dual_distance(code, 14, budget=1000, trials=200, seed=3)
    assert certificate.status == DistanceStatus.SAMPLED_ONLY
    assert certificate.subsets_checked == 200
    assert certificate.to_dict()['status'] == 'SampledOnly'


def test_distance_target_must_be_at_least_two(trb_221):
    with pytest.raises(DomainError):
        certify_dual_distance(build_eval_code(trb_221, [0]), 1)


def test_true_min_distance(trb_221):
    assert true_min_distance(build_eval_code(trb_221, [0])) == 12
    assert true_min_distance(build_eval_code(trb_221, delta_tau(1))) >= 11
    empty = EvalCode(ctx=trb_221.ctx, gen=trb_221.ctx.GF.Zeros((0, 12)), delta=(), q=2, n=2,
                     alphabet_degree=4)
    with pytest.raises(DomainError):
        true_min_distance(empty)


def test_generator_exports(trb_221):
    code = build_eval_code(trb_221, delta_tau(2))
    exported = code.generator_json()
    assert len(exported['rows']) == 3
    assert exported['rows'][0] == [0] * 12
    assert exported['field']['order'] == 16
    assert len(code.generator_text().splitlines()) == 3

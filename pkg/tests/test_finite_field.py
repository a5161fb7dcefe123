import galois
import numpy as np
import pytest

from config import Config
from exceptions import CapExceededError, DomainError
from models.finite_field import (CONWAY_POLYNOMIALS, FieldCtx, field_new, frobenius, in_subfield,
                                 is_irreducible_rabin, load_conway_overrides, reduce_exponent,
                                 solve_linear, subfield_members, trace_map)


def _poly(ascending, p):
    return galois.Poly(list(reversed(ascending)), field=galois.GF(p))


@pytest.mark.parametrize('key', sorted(CONWAY_POLYNOMIALS))
def test_compiled_table_matches_conway_database(key):
    p, m = key
    assert galois.conway_poly(p, m) == _poly(CONWAY_POLYNOMIALS[key], p)


def test_field_uses_conway_modulus_and_x_as_generator(gf256):
    assert gf256.source == 'conway'
    assert gf256.modulus == tuple(CONWAY_POLYNOMIALS[(2, 8)])
    assert int(gf256.primitive_element) == 2
    assert gf256.order == 256
    assert gf256.mult_order == 255


def test_field_without_table_entry_falls_back_to_least_primitive():
    ctx = field_new(2, 6)
    assert ctx.source == 'least-primitive'
    assert int(ctx.primitive_element.multiplicative_order()) == 63


def test_prime_field_uses_smallest_primitive_root():
    ctx = field_new(7, 1)
    assert int(ctx.primitive_element) == 3
    assert ctx.modulus == (4, 1)


def test_field_rejects_bad_arguments():
    with pytest.raises(DomainError):
        field_new(6, 1)
    with pytest.raises(DomainError):
        field_new(2, 0)
    with pytest.raises(CapExceededError):
        field_new(2, 30, cap=2 ** 20)


def test_conway_override_directory(tmp_path):
    (tmp_path / 'moduli.txt').write_text('# x^4 + x^3 + 1\n2 4 1 0 0 1 1\n3 2 bad line\n')
    assert load_conway_overrides(str(tmp_path)) == {(2, 4): [1, 0, 0, 1, 1]}
    ctx = field_new(2, 4, conway_dir=str(tmp_path))
    assert ctx.source == 'override'
    assert ctx.modulus == (1, 0, 0, 1, 1)


def test_reducible_override_is_rejected(tmp_path):
    (tmp_path / 'moduli.txt').write_text('2 4 1 0 0 0 1\n')
    ctx = field_new(2, 4, conway_dir=str(tmp_path))
    assert ctx.source == 'conway'


def test_missing_override_directory_is_ignored(tmp_path):
    assert load_conway_overrides(str(tmp_path / 'absent')) == {}


def test_rabin_irreducibility():
    assert is_irreducible_rabin(_poly([1, 1, 0, 0, 1], 2))
    assert is_irreducible_rabin(_poly([1, 1, 1], 2))
    assert not is_irreducible_rabin(_poly([1, 0, 0, 0, 1], 2))
    assert not is_irreducible_rabin(_poly([0, 1, 1], 3))


def test_reduce_exponent():
    assert reduce_exponent(0, 15) == 0
    assert reduce_exponent(15, 15) == 15
    assert reduce_exponent(16, 15) == 1
    assert reduce_exponent(30, 15) == 15
    with pytest.raises(DomainError):
        reduce_exponent(-1, 15)


def test_power_table_lists_every_nonzero_element(gf81):
    table = gf81.power_table
    g = gf81.primitive_element
    assert len(table) == 80
    assert len(np.unique(table.view(np.ndarray))) == 80
    for k in (0, 1, 2, 17, 40, 79):
        assert table[k] == g ** k
    assert gf81.from_log(80 + 5) == table[5]


def _log_by_search(ctx, value):
    return None if value == 0 else int(np.flatnonzero(ctx.power_table == value)[0])


def test_zech_logarithms_agree_with_field_addition(gf16):
    for i in range(15):
        for j in range(15):
            total = gf16.from_log(i) + gf16.from_log(j)
            assert gf16.zech_log_add(i, j) == _log_by_search(gf16, total)


def test_log_addition_without_zech_table(monkeypatch):
    base = field_new(2, 5)
    monkeypatch.setattr(Config, 'ZECH_CAP', 4)
    ctx = FieldCtx(p=base.p, m=base.m, modulus=base.modulus, GF=base.GF, source=base.source)
    assert ctx.zech_table is None
    for i, j in [(0, 0), (0, 1), (3, 17), (30, 2)]:
        total = ctx.from_log(i) + ctx.from_log(j)
        assert ctx.zech_log_add(i, j) == _log_by_search(ctx, total)


def test_log_of_scalar(gf81):
    for k in (0, 1, 40, 79):
        assert gf81.log_of(gf81.from_log(k)) == k


def test_frobenius_and_subfields(gf256):
    x = gf256.power_table[:20]
    assert np.array_equal(frobenius(x, 1), x ** 2)
    assert np.array_equal(frobenius(x, 8), x)
    members = subfield_members(gf256, 4)
    assert len(members) == 16
    assert in_subfield(members, 4)
    assert not in_subfield(gf256.primitive_element, 4)
    assert subfield_members(gf256, 1).tolist() == [0, 1]


def test_trace_lands_in_target_subfield(gf256):
    x = gf256.power_table
    traced = trace_map(x, 8, 4)
    assert in_subfield(traced, 4)
    assert trace_map(gf256.GF(1), 8, 1) == 0
    with pytest.raises(DomainError):
        trace_map(gf256.primitive_element, 4, 2)


def test_solve_linear_solution_kernel_and_inconsistency():
    GF = galois.GF(7)
    mat = GF([[1, 2], [3, 4]])
    rhs = GF([5, 6])
    result = solve_linear(mat, rhs)
    assert result.rank == 2
    assert result.consistent
    assert np.array_equal(mat @ result.solution, rhs)

    singular = GF([[1, 1], [1, 1]])
    result = solve_linear(singular, GF([1, 2]))
    assert result.rank == 1
    assert not result.consistent
    assert result.kernel.shape == (1, 2)
    assert np.all(singular @ result.kernel.T == 0)

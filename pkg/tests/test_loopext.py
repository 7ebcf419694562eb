import pytest

from colorcas.casimir import bilinear_form, form_from_table, solve_commutants
from colorcas.loopext import (LoopElement, build_extension, check_loop_antisymmetry, loop_bracket,
                              verify_loop_jacobi)
from colorcas.scalars import CycScalar, parse_scalar

from conftest import deg, entry
from reference_tables import Z3_LOOP_BRACKETS


def extension(e):
    alg = e.algebra
    forms = {}
    for mu in alg.ctx.order:
        for M in solve_commutants(alg, alg.ctx.neg(mu)).basis:
            f = bilinear_form(alg, M, e.normalization.get(mu, alg.one()))
            if not f.is_zero() and mu not in forms:
                forms[mu] = f
    return build_extension(alg, forms)


def test_active_central_degrees():
    assert extension(entry("qn", None, 1)).central_degrees == [(1, 1)]
    assert [entry("z32-sl2").algebra.ctx.label(g) for g in extension(entry("z32-sl2")).central_degrees] == ["00", "11", "22"]


@pytest.mark.parametrize("name,n", [("qn", 1), ("z32-sl2", None)])
def test_loop_jacobi_passes(name, n):
    ext = extension(entry(name, None, n))
    rep = verify_loop_jacobi(ext, range(-2, 3))
    assert rep.ok
    assert rep.results[0].checked == ext.alg.dim ** 3 * 125
    assert rep.flags["instances_with_central_terms"] > 0


def test_fast_and_literal_verifiers_agree():
    ext = extension(entry("qn", None, 1))
    fast = verify_loop_jacobi(ext, range(-2, 3))
    lit = verify_loop_jacobi(ext, range(-2, 3), literal=True)
    assert fast.to_dict() == lit.to_dict()


def test_perturbed_cocycle_fails_in_both_verifiers():
    e = entry("qn", None, 1)
    alg = e.algebra
    good = extension(e).forms[(1, 1)]
    table = dict(good.table)
    k = sorted(table)[0]
    table[k] = table[k] * CycScalar.rational(alg.n, 2)
    ext = build_extension(alg, {(1, 1): form_from_table(alg, (1, 1), table)})
    fast = verify_loop_jacobi(ext, range(-1, 2))
    lit = verify_loop_jacobi(ext, range(-1, 2), literal=True)
    assert not fast.ok and not lit.ok
    assert fast.results[0].witness == lit.results[0].witness


def test_zero_mode_window_is_plain_jacobi():
    ext = extension(entry("z32-sl2"))
    rep = verify_loop_jacobi(ext, range(0, 1))
    assert rep.ok and rep.flags["instances_with_central_terms"] == 0
    assert rep.results[0].checked == 9 ** 3


def test_loop_antisymmetry():
    assert check_loop_antisymmetry(extension(entry("z32-sl2")), range(-1, 2)).ok


@pytest.mark.parametrize("pair,linear,central,coef", Z3_LOOP_BRACKETS)
def test_z3_loop_relations(pair, linear, central, coef):
    ext = extension(entry("z32-sl2"))
    alg = ext.alg
    a, b = (alg.index[x] for x in pair)
    for m in (1, 2, -3):
        got = loop_bracket(ext, LoopElement.generator(alg, a, m), LoopElement.generator(alg, b, -m))
        assert got.terms == {(alg.index[x], 0): parse_scalar(v) for x, v in linear.items()}
        assert got.central == {deg(alg, central): parse_scalar(coef) * CycScalar.rational(alg.n, m)}
    # no central term off m + n = 0
    got = loop_bracket(ext, LoopElement.generator(alg, a, 1), LoopElement.generator(alg, b, 1))
    assert not got.central


def test_qn_loop_charge_follows_the_general_rule():
    # [E_ij^a(m), E_ji^(11-a)(-m)] carries + m c11 for every a
    e = entry("qn", None, 2)
    ext = extension(e)
    alg = ext.alg
    for a in ("00", "01", "10", "11"):
        b = {"00": "11", "01": "10", "10": "01", "11": "00"}[a]
        x = alg.index[f"E{a}(1,2)"]
        y = alg.index[f"E{b}(2,1)"]
        got = loop_bracket(ext, LoopElement.generator(alg, x, 3), LoopElement.generator(alg, y, -3))
        assert got.central == {(1, 1): CycScalar.rational(alg.n, 3)}
        linear = {(alg.index[k], 0): parse_scalar(v) for k, v in (("E11(1,1)", "1"), ("E11(2,2)", "-1"))}
        assert got.terms == linear


def test_duplicate_central_degree_rejected():
    e = entry("z32-sl2")
    f = extension(e).forms[(0, 0)]
    with pytest.raises(ValueError):
        build_extension(e.algebra, [f, f])

import pytest

from colorcas.algebra import QuadElement, quad_to_matrix
from colorcas.casimir import (DegenerateFormError, FormError, NotCommutantError, bilinear_form, build_casimir,
                              casimir_pipeline, check_form_properties, form_from_table, invert_form,
                              solve_commutants, verify_centrality)
from colorcas.gmatrix import GradedMatrix, color_bracket
from colorcas.scalars import CycScalar, parse_scalar

from conftest import deg, entry, named_table, nonzero, words_to_quad
from reference_tables import (Z3_CASIMIR, Z3_ETA, Z3_ETA_INV, osp_casimirs, osp_tables, qn_casimir11, qn_eta11)

SMALL = [("qn", None, 1), ("qn", None, 2), ("z32-sl2", None, None), ("osp", 1, 1), ("osp", 2, 1), ("osp", 3, 1)]


def forms_of(e):
    alg = e.algebra
    out = []
    for mu in alg.ctx.order:
        for M in solve_commutants(alg, alg.ctx.neg(mu)).basis:
            out.append(bilinear_form(alg, M, e.normalization.get(mu, alg.one())))
    return out


@pytest.mark.parametrize("name,m,n", SMALL)
def test_kernels_equal_known_commutants(name, m, n):
    e = entry(name, m, n)
    alg = e.algebra
    for mu in alg.ctx.order:
        basis = solve_commutants(alg, mu).basis
        want = e.expected_commutants.get(mu)
        if want is None:
            assert basis == []
        else:
            assert basis == [want]


def test_commutant_dimensions():
    for n in (1, 2, 3):
        alg = entry("qn", None, n).algebra
        assert [solve_commutants(alg, g).dim for g in alg.ctx.order] == [1, 1, 1, 1]
    alg = entry("z32-sl2").algebra
    dims = {alg.ctx.label(g): solve_commutants(alg, g).dim for g in alg.ctx.order}
    assert dims == {"00": 1, "11": 1, "22": 1, "02": 0, "21": 0, "10": 0, "01": 0, "12": 0, "20": 0}
    alg = entry("osp", 1, 1).algebra
    dims = {alg.ctx.label(g): solve_commutants(alg, g).dim for g in alg.ctx.order}
    assert dims == {"00": 1, "01": 0, "10": 0, "11": 1}


def test_kernel_normalization_convention():
    alg = entry("z32-sl2").algebra
    for g in alg.ctx.order:
        for M in solve_commutants(alg, g).basis:
            first = min(M.entries)
            assert M.entries[first] == alg.one()


@pytest.mark.parametrize("name,m,n", SMALL)
def test_form_laws_for_every_form(name, m, n):
    for form in forms_of(entry(name, m, n)):
        try:
            inv = invert_form(form)
        except DegenerateFormError:
            inv = None
        rep = check_form_properties(form, inv)
        assert rep.ok, rep.lines()
        if inv is not None:
            assert inv.left_identity and inv.right_identity


def test_qn_forms():
    for n in (1, 2, 3):
        e = entry("qn", None, n)
        alg = e.algebra
        for label in ("00", "01", "10"):
            mu = deg(alg, label)
            M = solve_commutants(alg, alg.ctx.neg(mu)).basis[0]
            form = bilinear_form(alg, M, e.normalization[mu])
            assert form.is_zero()
            with pytest.raises(DegenerateFormError) as err:
                invert_form(form)
            assert err.value.rank == 0 and err.value.witness
        mu = deg(alg, "11")
        form = bilinear_form(alg, solve_commutants(alg, mu).basis[0], e.normalization[mu])
        assert form.table == named_table(alg, qn_eta11(n))
        inv = invert_form(form)
        assert inv.table == named_table(alg, qn_eta11(n))
        assert build_casimir(alg, inv) == words_to_quad(alg, qn_casimir11(n))


@pytest.mark.parametrize("label", ["00", "11", "22"])
def test_z3_tables(label):
    e = entry("z32-sl2")
    alg = e.algebra
    mu = deg(alg, label)
    form = bilinear_form(alg, solve_commutants(alg, alg.ctx.neg(mu)).basis[0], e.normalization[mu])
    assert form.table == named_table(alg, Z3_ETA[label])
    inv = invert_form(form)
    assert inv.table == named_table(alg, Z3_ETA_INV[label])
    C = build_casimir(alg, inv)
    assert C == words_to_quad(alg, Z3_CASIMIR[label])
    assert C.degrees() == {mu}


def symmetry_completion(alg, mu, table):
    out = dict(table)
    for (a, b), v in table.items():
        out.setdefault((b, a), alg.ctx.omega(mu, mu) * alg.ctx.omega(alg.degrees[a], alg.degrees[b]) * v)
    return out


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (3, 1)])
def test_osp_tables(m, n):
    e = entry("osp", m, n)
    alg = e.algebra
    for inverse in (False, True):
        listed = osp_tables(m, n, inverse)
        for label in ("00", "11"):
            mu = deg(alg, label)
            form = bilinear_form(alg, solve_commutants(alg, alg.ctx.neg(mu)).basis[0], e.normalization[mu])
            got = invert_form(form).table if inverse else form.table
            want = nonzero(symmetry_completion(alg, mu, named_table(alg, listed[label])))
            assert got == want
    for label in ("00", "11"):
        mu = deg(alg, label)
        inv = invert_form(bilinear_form(alg, solve_commutants(alg, alg.ctx.neg(mu)).basis[0], e.normalization[mu]))
        assert build_casimir(alg, inv) == words_to_quad(alg, osp_casimirs(m, n)[label])


def flipped(C, key, kind):
    lin, quad = dict(C.linear), dict(C.quadratic)
    (lin if kind == "linear" else quad)[key] = -(lin if kind == "linear" else quad)[key]
    return QuadElement(C.alg, C.constant, lin, quad)


@pytest.mark.parametrize("name,m,n", [("qn", None, 1), ("qn", None, 2), ("z32-sl2", None, None), ("osp", 1, 1)])
def test_centrality_and_sign_corruption(name, m, n):
    e = entry(name, m, n)
    alg = e.algebra
    for mu in alg.ctx.order:
        res = casimir_pipeline(alg, mu, e.normalization.get(mu, alg.one()))
        for C in res.casimirs:
            if C is None:
                continue
            rep = verify_centrality(alg, C)
            assert rep.ok and len(rep.results) == 2
            assert all(r.checked == alg.dim for r in rep.results)
            for kind, terms in (("linear", C.linear), ("quadratic", C.quadratic)):
                for key in terms:
                    bad = flipped(C, key, kind)
                    symbolic, matrix = [r.passed for r in verify_centrality(alg, bad).results]
                    assert not symbolic, (kind, key)
                    # the matrix oracle is blind exactly when the change has a central image
                    delta = quad_to_matrix(alg, C - bad)
                    assert matrix == all(color_bracket(X, delta).is_zero() for X in alg.matrices)
                    if name != "z32-sl2":
                        assert not matrix, (kind, key)


def test_not_a_commutant():
    alg = entry("z32-sl2").algebra
    with pytest.raises(NotCommutantError):
        bilinear_form(alg, alg.matrices[1], alg.one())
    with pytest.raises(FormError):
        bilinear_form(alg, GradedMatrix.zero(alg.space), alg.one())


def test_perturbed_form_fails_invariance():
    alg = entry("z32-sl2").algebra
    mu = deg(alg, "00")
    form = bilinear_form(alg, solve_commutants(alg, mu).basis[0], CycScalar.rational(12, 1))
    table = dict(form.table)
    k = next(iter(table))
    table[k] = table[k] + alg.one()
    bad = form_from_table(alg, mu, table)
    rep = check_form_properties(bad)
    assert not rep.ok
    assert {r.law.split(":")[0] for r in rep.failures()} >= {"invariance"}


def test_normalization_scales_form_and_inverse():
    alg = entry("z32-sl2").algebra
    mu = deg(alg, "11")
    M = solve_commutants(alg, alg.ctx.neg(mu)).basis[0]
    s = parse_scalar("2*zeta3")
    f1 = bilinear_form(alg, M, alg.one())
    f2 = bilinear_form(alg, M, s)
    assert f2.table == {k: v * s for k, v in f1.table.items()}
    i1, i2 = invert_form(f1), invert_form(f2)
    assert i2.table == {k: v / s for k, v in i1.table.items()}

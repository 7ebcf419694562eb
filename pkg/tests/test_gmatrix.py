import pytest
import sympy
from hypothesis import given, settings, strategies as st

from colorcas.catalog.qn import T, THETA, z22_context
from colorcas.catalog.z32 import z32_context
from colorcas.gmatrix import (GradedMatrix, GradedMatrixError, GradedSpace, JForm, color_bracket, color_trace,
                              ctr_permutation_check, j_member, matrix_unit, transpose_condition)
from colorcas.scalars import CycScalar, parse_scalar

N = 12
Z22 = z22_context()
Z32 = z32_context()
SPACE22 = GradedSpace(Z22, {(0, 0): 1, (0, 1): 2, (1, 0): 1, (1, 1): 1})
SPACE32 = GradedSpace(Z32, {(0, 0): 1, (1, 1): 2, (2, 2): 1, (0, 1): 1})
VALUES = ["1", "-1", "2", "zeta3", "-zeta3^2", "i", "1/2"]


def homogeneous(space, d, draw):
    ctx = space.ctx
    deg = space.index_degree
    ent = {}
    for r in range(space.dim):
        for c in range(space.dim):
            if ctx.sub(deg[r], deg[c]) == d and draw(st.booleans()):
                ent[(r, c)] = parse_scalar(draw(st.sampled_from(VALUES)))
    return GradedMatrix(space, ent)


@st.composite
def homog_pair(draw, space):
    els = space.ctx.elements
    d = draw(st.sampled_from(els))
    e = draw(st.sampled_from(els))
    return homogeneous(space, d, draw), homogeneous(space, e, draw), d, e


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_color_trace_is_omega_cyclic(data):
    for space in (SPACE22, SPACE32):
        X, Y, d, e = data.draw(homog_pair(space))
        assert ctr_permutation_check(X, Y)
        assert color_trace(X @ Y) == space.ctx.omega(d, e) * color_trace(Y @ X)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_color_trace_vanishes_off_degree_zero(data):
    space = SPACE32
    d = data.draw(st.sampled_from([g for g in Z32.elements if g != Z32.zero]))
    assert color_trace(homogeneous(space, d, data.draw)).is_zero()


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_products_have_added_degree(data):
    space = SPACE32
    X, Y, d, e = data.draw(homog_pair(space))
    P = X @ Y
    assert P.is_zero() or P.degree == Z32.add(d, e)
    B = color_bracket(X, Y)
    assert B == X @ Y - (Y @ X).scale(Z32.omega(d, e))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_dense_product_matches_sympy(data):
    space = SPACE22
    X, Y, _, _ = data.draw(homog_pair(space))
    X = X + data.draw(homog_pair(space))[0]  # mixed degrees

    def sym(m):
        return sympy.Matrix([[sympy.Rational(v.to_fraction().numerator, v.to_fraction().denominator)
                              if v.is_rational() else sympy.nan for v in row] for row in m.to_dense()])

    if all(v.is_rational() for v in list(X.entries.values()) + list(Y.entries.values())):
        assert sym(X @ Y) == sym(X) * sym(Y)
    assert (X @ Y).transpose() == Y.transpose() @ X.transpose()


def test_parts_split_by_degree():
    a = matrix_unit(SPACE22, (0, 0), (0, 1), 1, 2)
    b = matrix_unit(SPACE22, (1, 1), (1, 1), 1, 1)
    m = a + b
    assert set(m.parts) == {(0, 1), (0, 0)}
    assert not m.is_homogeneous()
    assert m.parts[(0, 1)] == a and m.parts[(0, 0)] == b
    with pytest.raises(GradedMatrixError):
        ctr_permutation_check(m, a)
    with pytest.raises(GradedMatrixError):
        matrix_unit(SPACE22, (0, 0), (0, 1), 1, 3)


def test_dense_round_trip():
    m = matrix_unit(SPACE32, (1, 1), (0, 0), 2, 1).scale(parse_scalar("zeta3"))
    again = GradedMatrix.from_dense(SPACE32, m.to_strings())
    assert again == m
    assert m.degree == (1, 1)


def test_theta_t_color_trace_value():
    space = GradedSpace(Z22, {g: 1 for g in Z22.elements})

    def mat(p):
        return GradedMatrix.from_dense(space, p)

    assert color_trace(mat(T[(1, 1)]) @ mat(THETA[(1, 1)])) == CycScalar.rational(N, 4)
    for g in Z22.elements:
        if g != (1, 1):
            assert color_trace(mat(T[(1, 1)]) @ mat(THETA[g])).is_zero()
    # Theta^a T^b = omega(a, b) T^b Theta^a
    for a in Z22.elements:
        for b in Z22.elements:
            assert mat(THETA[a]) @ mat(T[b]) == (mat(T[b]) @ mat(THETA[a])).scale(Z22.omega(a, b))


def test_jform_rejects_bad_input():
    space = GradedSpace(Z22, {(0, 0): 2})
    one = CycScalar.one(N)
    ident = GradedMatrix.identity(space)
    JForm(space, ident, "symmetric")
    with pytest.raises(GradedMatrixError):
        JForm(space, ident, "skew")
    with pytest.raises(GradedMatrixError):
        JForm(space, GradedMatrix(space, {(0, 0): one}), "symmetric")
    with pytest.raises(GradedMatrixError):
        JForm(space, ident, "hermitian")


def test_membership_of_orthogonal_generators():
    space = GradedSpace(Z22, {(0, 0): 2})
    J = JForm(space, GradedMatrix.identity(space), "symmetric")
    one = CycScalar.one(N)
    rot = GradedMatrix(space, {(0, 1): one, (1, 0): -one})
    sym = GradedMatrix(space, {(0, 1): one, (1, 0): one})
    assert j_member(rot, J)
    assert not j_member(sym, J)
    assert transpose_condition(rot, J.matrix, {(0, 0): one}) == {(0, 0): True}

from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from colorcas.linalg import CoordinateReader, nullspace, rank, rref, solve_square_inverse
from colorcas.scalars import CycScalar, parse_scalar

N = 12
entries = st.sampled_from([0, 0, 0, 1, -1, 2, Fraction(1, 2), -3])
cyc_entries = st.sampled_from(["0", "0", "1", "-1", "zeta3", "zeta3^2", "i", "1/2*zeta12", "2 - i"])


def sparse(rows, conv):
    out = []
    for r in rows:
        d = {}
        for c, v in enumerate(r):
            s = conv(v)
            if not s.is_zero():
                d[c] = s
        out.append(d)
    return out


def rat(v):
    return CycScalar.rational(N, v)


def matrices(rmin=1, rmax=5, cmin=1, cmax=5, elems=entries):
    return st.integers(rmin, rmax).flatmap(
        lambda r: st.integers(cmin, cmax).flatmap(
            lambda c: st.lists(st.lists(elems, min_size=c, max_size=c), min_size=r, max_size=r)))


def apply(rows, vec):
    return [sum((v * vec.get(c, CycScalar.zero(N)) for c, v in r.items()), CycScalar.zero(N)) for r in rows]


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_matches_sympy(m):
    assert rank(sparse(m, rat)) == sympy.Matrix(m).rank()


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_nullspace_dimension_and_vanishing(m):
    rows = sparse(m, rat)
    ncols = len(m[0])
    kern = nullspace(rows, ncols, N)
    assert len(kern) == len(sympy.Matrix(m).nullspace())
    for vec in kern:
        assert all(x.is_zero() for x in apply(rows, vec))
        assert vec[min(vec)] == CycScalar.one(N)


@settings(max_examples=60, deadline=None)
@given(matrices(3, 3, 3, 3, cyc_entries))
def test_cyclotomic_inverse_is_two_sided(m):
    rows = sparse(m, lambda s: parse_scalar(s, N))
    inv = solve_square_inverse(rows, N)
    if rank(rows) < 3:
        assert inv is None
        return
    one = CycScalar.one(N)
    for i in range(3):
        for j in range(3):
            left = sum((rows[i].get(k, CycScalar.zero(N)) * inv[k].get(j, CycScalar.zero(N)) for k in range(3)),
                       CycScalar.zero(N))
            right = sum((inv[i].get(k, CycScalar.zero(N)) * rows[k].get(j, CycScalar.zero(N)) for k in range(3)),
                        CycScalar.zero(N))
            want = one if i == j else CycScalar.zero(N)
            assert left == want and right == want


@settings(max_examples=60, deadline=None)
@given(matrices(2, 4, 4, 4))
def test_rational_inverse_matches_sympy(m):
    if len(m) != 4:
        m = (m + [[0] * 4] * 4)[:4]
    M = sympy.Matrix(m)
    inv = solve_square_inverse(sparse(m, rat), N)
    if M.det() == 0:
        assert inv is None
    else:
        want = M.inv()
        for i in range(4):
            for j in range(4):
                w = want[i, j]
                assert inv[i].get(j, CycScalar.zero(N)) == rat(Fraction(int(w.p), int(w.q)))


def test_rref_respects_column_order():
    one = CycScalar.one(N)
    rows = [{0: one, 1: one}]
    red, piv = rref(rows, [1, 0])
    assert piv == [1]
    assert red[0] == {0: one, 1: one}


def test_coordinate_reader():
    xi = parse_scalar("zeta3")
    one = CycScalar.one(N)
    vecs = [{0: one, 1: xi}, {1: one, 2: one}]
    rd = CoordinateReader(vecs, N)
    assert rd.dependent is None
    target = {0: 2 * one, 1: 2 * xi + 3 * one, 2: 3 * one}
    coeffs, res = rd.coords(target)
    assert res == {} and coeffs == {0: 2 * one, 1: 3 * one}
    coeffs, res = rd.coords({2: one, 0: one})
    assert res != {}
    dep = CoordinateReader(vecs + [{0: one, 1: xi + one, 2: one}], N)
    assert dep.dependent

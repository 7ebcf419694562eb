"""Z3^2-graded sl(2): three twisted copies of sl(2) acting on a six-dimensional graded space."""
from __future__ import annotations

from fractions import Fraction

from ..algebra import structure_constants_from_rep
from ..gmatrix import GradedMatrix, GradedSpace
from ..grading import group_make, make_bicharacter
from ..scalars import CycScalar, root_of_unity
from .entry import CatalogEntry

H_DEGREES = ((0, 0), (1, 1), (2, 2))
EP_DEGREES = ((0, 1), (1, 2), (2, 0))
EM_DEGREES = ((0, 2), (2, 1), (1, 0))
# weight +1 vectors first, then weight -1; the remaining three degrees carry nothing
SPACE_ORDER = H_DEGREES + EM_DEGREES + EP_DEGREES


def z32_context(conductor=12):
    omega = make_bicharacter(3, [[0, 1], [-1, 0]])  # xi^(a1 b2 - a2 b1)
    sigma = make_bicharacter(3, [[0, 1], [0, 0]])  # xi^(a1 b2)
    return group_make([3, 3], omega, sigma, order=SPACE_ORDER, conductor=conductor)


def _rep(ctx, space, alpha, kind):
    """rho(e^alpha (x) X)|beta, s> = sigma(alpha, beta) |alpha + beta> (x) X|s>."""
    ent = {}
    plus = H_DEGREES  # vectors |beta> (x) |+1>
    minus = EM_DEGREES  # vectors |beta> (x) |-1>
    N = ctx.conductor
    for beta in plus + minus:
        weight = 1 if beta in plus else -1
        target = ctx.add(alpha, beta)
        if kind == "H":
            coeff = CycScalar.rational(N, weight)
        elif kind == "E+":
            if weight == 1:
                continue
            coeff = CycScalar.one(N)
        else:
            if weight == -1:
                continue
            coeff = CycScalar.one(N)
        if space.dims[target] == 0:
            raise AssertionError("representation leaves the occupied degrees")
        ent[(space.offsets[target], space.offsets[beta])] = ctx.sigma(alpha, beta) * coeff
    return GradedMatrix(space, ent)


def _dense(space, rows):
    return GradedMatrix.from_dense(space, rows)


def build_z32_sl2() -> CatalogEntry:
    ctx = z32_context()
    space = GradedSpace(ctx, {g: 1 for g in H_DEGREES + EM_DEGREES})
    basis = []
    for a in H_DEGREES:
        basis.append((f"H{ctx.label(a)}", a, _rep(ctx, space, a, "H")))
    for a in EP_DEGREES:
        basis.append((f"E+{ctx.label(a)}", a, _rep(ctx, space, a, "E+")))
    for a in EM_DEGREES:
        basis.append((f"E-{ctx.label(a)}", a, _rep(ctx, space, a, "E-")))
    alg = structure_constants_from_rep(ctx, basis)
    N = ctx.conductor
    z, o = 0, 1
    xi = root_of_unity(N, N // 3)
    xi2 = xi * xi
    m11 = _dense(space, [
        [z, z, o, z, z, z],
        [xi, z, z, z, z, z],
        [z, xi2, z, z, z, z],
        [z, z, z, z, xi2, z],
        [z, z, z, z, z, xi],
        [z, z, z, o, z, z],
    ])
    m22 = _dense(space, [
        [z, o, z, z, z, z],
        [z, z, xi2, z, z, z],
        [xi, z, z, z, z, z],
        [z, z, z, z, z, xi],
        [z, z, z, xi2, z, z],
        [z, z, z, z, o, z],
    ])
    sixth = CycScalar.rational(N, Fraction(1, 6))
    return CatalogEntry(
        name="z32-sl2",
        params={},
        algebra=alg,
        normalization={g: sixth for g in ctx.order},
        expected_commutants={(0, 0): GradedMatrix.identity(space), (1, 1): m11, (2, 2): m22},
    )

"""Z2^2-graded q(n) on C^{n,n|n,n}: basis Theta^a (x) e_ij, commutants T^a (x) I_n."""
from __future__ import annotations

from fractions import Fraction

from ..algebra import structure_constants_from_rep
from ..gmatrix import GradedMatrix, GradedSpace
from ..grading import group_make, make_bicharacter
from ..scalars import CycScalar
from .entry import CatalogEntry

DEGREES = ((0, 0), (0, 1), (1, 0), (1, 1))

# 4x4 block patterns acting on the block layout 00, 01, 10, 11
THETA = {
    (0, 0): [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    (0, 1): [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
    (1, 0): [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]],
    (1, 1): [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
}
T = {
    (0, 0): THETA[(0, 0)],
    (0, 1): [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]],
    (1, 0): [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]],
    (1, 1): [[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]],
}


def z22_context(conductor=12):
    # omega(a,b) = (-1)^(a1 b1 + a2 b2)
    return group_make([2, 2], make_bicharacter(2, [[1, 0], [0, 1]]), conductor=conductor)


def kron_block(space, pattern, small):
    """pattern (4x4 over the four degree blocks) tensor an n x n matrix given as dict."""
    n = space.dims[(0, 0)]
    N = space.ctx.conductor
    ent = {}
    for bi, row in enumerate(pattern):
        for bj, p in enumerate(row):
            if p == 0:
                continue
            for (i, j), v in small.items():
                ent[(bi * n + i, bj * n + j)] = CycScalar.rational(N, p) * v
    return GradedMatrix(space, ent)


def build_qn(n: int) -> CatalogEntry:
    if n < 1:
        raise ValueError("q(n) needs n >= 1")
    ctx = z22_context()
    space = GradedSpace(ctx, {g: n for g in DEGREES})
    one = CycScalar.one(ctx.conductor)
    basis = []
    for a in DEGREES:
        for i in range(n):
            for j in range(n):
                name = f"E{ctx.label(a)}({i + 1},{j + 1})"
                basis.append((name, a, kron_block(space, THETA[a], {(i, j): one})))
    alg = structure_constants_from_rep(ctx, basis)
    ident = {(k, k): one for k in range(n)}
    commutants = {a: kron_block(space, T[a], ident) for a in DEGREES}
    quarter = CycScalar.rational(ctx.conductor, Fraction(1, 4))
    return CatalogEntry(
        name="qn",
        params={"n": n},
        algebra=alg,
        normalization={a: quarter for a in DEGREES},
        expected_commutants=commutants,
    )

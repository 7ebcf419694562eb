"""Graded vector spaces, graded block matrices, color trace and color bracket."""
from __future__ import annotations

from .checks import Report
from .grading import GradingContext
from .linalg import rank as _rank, nullspace
from .scalars import CycScalar, parse_scalar, format_scalar


class GradedMatrixError(ValueError):
    pass


class GradedSpace:
    """V = sum of V_g, blocks laid out following the context's total order."""

    def __init__(self, ctx: GradingContext, dims: dict):
        self.ctx = ctx
        self.dims = {g: int(dims.get(g, 0)) for g in ctx.order}
        if any(d < 0 for d in self.dims.values()):
            raise GradedMatrixError("negative dimension")
        self.offsets = {}
        self.index_degree = []
        off = 0
        for g in ctx.order:
            self.offsets[g] = off
            off += self.dims[g]
            self.index_degree.extend([g] * self.dims[g])
        self.dim = off

    def __eq__(self, other):
        return isinstance(other, GradedSpace) and other.ctx is self.ctx and other.dims == self.dims

    def __hash__(self):
        return hash(tuple(sorted(self.dims.items())))

    def block(self, g) -> range:
        return range(self.offsets[g], self.offsets[g] + self.dims[g])

    def nonempty_degrees(self) -> list:
        return [g for g in self.ctx.order if self.dims[g]]


class GradedMatrix:
    """Matrix on a graded space, stored sparsely; parts indexed by degree.

    The part of degree d holds the entries (r, c) with deg(r) - deg(c) = d.
    """

    __slots__ = ("space", "entries", "_parts")

    def __init__(self, space: GradedSpace, entries=None):
        self.space = space
        self.entries = {k: v for k, v in (entries or {}).items() if not v.is_zero()}
        self._parts = None

    # construction -------------------------------------------------------
    @classmethod
    def zero(cls, space):
        return cls(space, {})

    @classmethod
    def identity(cls, space):
        one = CycScalar.one(space.ctx.conductor)
        return cls(space, {(i, i): one for i in range(space.dim)})

    @classmethod
    def from_dense(cls, space, rows):
        n = space.ctx.conductor
        if len(rows) != space.dim or any(len(r) != space.dim for r in rows):
            raise GradedMatrixError(f"expected a {space.dim}x{space.dim} matrix")
        ent = {}
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if isinstance(x, str):
                    x = parse_scalar(x, n)
                elif not isinstance(x, CycScalar):
                    x = CycScalar.rational(n, x)
                if not x.is_zero():
                    ent[(i, j)] = x
        return cls(space, ent)

    def to_dense(self) -> list:
        z = CycScalar.zero(self.space.ctx.conductor)
        out = [[z] * self.space.dim for _ in range(self.space.dim)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def to_strings(self) -> list:
        return [[format_scalar(x) for x in row] for row in self.to_dense()]

    # degree bookkeeping -------------------------------------------------
    def entry_degree(self, r, c):
        deg = self.space.index_degree
        return self.space.ctx.sub(deg[r], deg[c])

    @property
    def parts(self) -> dict:
        if self._parts is None:
            groups = {}
            deg = self.space.index_degree
            sub = self.space.ctx.sub
            for (r, c), v in self.entries.items():
                groups.setdefault(sub(deg[r], deg[c]), {})[(r, c)] = v
            pos = self.space.ctx.position
            self._parts = {d: _homog(self.space, groups[d], d) for d in sorted(groups, key=pos)}
        return self._parts

    def is_zero(self) -> bool:
        return not self.entries

    def is_homogeneous(self) -> bool:
        return len(self.parts) <= 1

    @property
    def degree(self):
        """Degree of a homogeneous nonzero matrix; ``None`` for zero; raises if mixed."""
        p = self.parts
        if not p:
            return None
        if len(p) > 1:
            raise GradedMatrixError("matrix is not homogeneous")
        return next(iter(p))

    # arithmetic ---------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, GradedMatrix):
            raise TypeError("expected GradedMatrix")
        if other.space is not self.space and other.space != self.space:
            raise GradedMatrixError("space mismatch")

    def __add__(self, other):
        self._check(other)
        ent = dict(self.entries)
        for k, v in other.entries.items():
            cur = ent.get(k)
            ent[k] = v if cur is None else cur + v
        return GradedMatrix(self.space, ent)

    def __neg__(self):
        return GradedMatrix(self.space, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "GradedMatrix":
        if not isinstance(s, CycScalar):
            s = CycScalar.rational(self.space.ctx.conductor, s)
        if s.is_zero():
            return GradedMatrix(self.space, {})
        return GradedMatrix(self.space, {k: v * s for k, v in self.entries.items()})

    def __matmul__(self, other):
        self._check(other)
        rows = {}
        for (k, j), v in other.entries.items():
            rows.setdefault(k, []).append((j, v))
        acc = {}
        for (i, k), a in self.entries.items():
            for j, b in rows.get(k, ()):
                key = (i, j)
                cur = acc.get(key)
                acc[key] = a * b if cur is None else cur + a * b
        return GradedMatrix(self.space, acc)

    def __mul__(self, other):
        if isinstance(other, GradedMatrix):
            return self @ other
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        return isinstance(other, GradedMatrix) and self.space == other.space and self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def transpose(self) -> "GradedMatrix":
        return GradedMatrix(self.space, {(j, i): v for (i, j), v in self.entries.items()})

    def trace(self) -> CycScalar:
        t = CycScalar.zero(self.space.ctx.conductor)
        for (i, j), v in self.entries.items():
            if i == j:
                t = t + v
        return t

    def __repr__(self):
        return f"GradedMatrix(dim={self.space.dim}, nnz={len(self.entries)})"


def _homog(space, entries, d):
    m = GradedMatrix(space, entries)
    m._parts = {d: m} if entries else {}
    return m


def gm_arith(a: GradedMatrix, b, kind: str) -> GradedMatrix:
    if kind == "add":
        return a + b
    if kind == "mul":
        return a @ b
    if kind == "scale":
        return a.scale(b)
    raise ValueError(f"unknown operation {kind!r}")


def matrix_unit(space: GradedSpace, alpha, beta, i: int, j: int) -> GradedMatrix:
    """E(alpha, beta)_{ij}: 1 at row i of block alpha, column j of block beta (1-based)."""
    da, db = space.dims[alpha], space.dims[beta]
    if da == 0 or db == 0:
        raise GradedMatrixError("matrix unit into an empty graded subspace")
    if not (1 <= i <= da and 1 <= j <= db):
        raise GradedMatrixError("matrix unit index out of range")
    one = CycScalar.one(space.ctx.conductor)
    return GradedMatrix(space, {(space.offsets[alpha] + i - 1, space.offsets[beta] + j - 1): one})


def color_trace(X: GradedMatrix) -> CycScalar:
    ctx = X.space.ctx
    deg = X.space.index_degree
    t = CycScalar.zero(ctx.conductor)
    for (i, j), v in X.entries.items():
        if i == j:
            g = deg[i]
            t = t + ctx.omega(g, g) * v
    return t


def color_bracket(X: GradedMatrix, Y: GradedMatrix) -> GradedMatrix:
    X._check(Y)
    ctx = X.space.ctx
    out = GradedMatrix.zero(X.space)
    for d, Xd in X.parts.items():
        for e, Ye in Y.parts.items():
            out = out + (Xd @ Ye) - (Ye @ Xd).scale(ctx.omega(d, e))
    return out


def ctr_permutation_check(X: GradedMatrix, Y: GradedMatrix) -> bool:
    """ctr(XY) == omega(deg X, deg Y) ctr(YX) for homogeneous X, Y."""
    if not (X.is_homogeneous() and Y.is_homogeneous()):
        raise GradedMatrixError("ctr permutation check needs homogeneous inputs")
    if X.is_zero() or Y.is_zero():
        return True
    ctx = X.space.ctx
    return color_trace(X @ Y) == ctx.omega(X.degree, Y.degree) * color_trace(Y @ X)


# ---------------------------------------------------------------------------
# invariant bilinear forms on V
# ---------------------------------------------------------------------------

SYMMETRY_KINDS = ("symmetric", "skew", "color-symmetric", "color-skew")


class JForm:
    """Degree-zero nondegenerate bilinear form J(x, y) = x^T J y on V.

    ``symmetry`` is ``symmetric``/``skew`` (J^T = +-J) or the graded variants
    ``color-symmetric``/``color-skew`` meaning J(u, v) = +-omega(a, b) J(v, u)
    for u in V_a, v in V_b.
    """

    def __init__(self, space: GradedSpace, matrix: GradedMatrix, symmetry: str):
        if symmetry not in SYMMETRY_KINDS:
            raise GradedMatrixError(f"unknown symmetry {symmetry!r}")
        self.space = space
        self.matrix = matrix
        self.symmetry = symmetry
        ctx = space.ctx
        deg = space.index_degree
        for (r, c) in matrix.entries:
            if ctx.add(deg[r], deg[c]) != ctx.zero:
                raise GradedMatrixError(f"J is not of degree zero at entry ({r},{c})")
        rows = [{} for _ in range(space.dim)]
        for (r, c), v in matrix.entries.items():
            rows[r][c] = v
        if _rank(rows) < space.dim:
            raise GradedMatrixError("J is degenerate")
        sign = 1 if symmetry in ("symmetric", "color-symmetric") else -1
        for (r, c), v in matrix.entries.items():
            other = matrix.entries.get((c, r))
            factor = CycScalar.rational(ctx.conductor, sign)
            if symmetry.startswith("color"):
                factor = factor * ctx.omega(deg[r], deg[c])
            if other is None or v != factor * other:
                raise GradedMatrixError(f"J does not have the declared {symmetry} symmetry at ({r},{c})")


def j_membership(X: GradedMatrix, J: JForm) -> dict:
    """For each homogeneous part X(g): J(Xu, v) + omega(g, deg u) J(u, Xv) == 0 on basis vectors."""
    ctx = X.space.ctx
    deg = X.space.index_degree
    out = {}
    for g, Xg in X.parts.items():
        lhs = Xg.transpose() @ J.matrix  # (X^T J)[r, s] = J(X e_r, e_s)
        rhs = J.matrix @ Xg  # (J X)[r, s] = J(e_r, X e_s)
        ok = True
        for key in set(lhs.entries) | set(rhs.entries):
            r = key[0]
            a = lhs.entries.get(key)
            b = rhs.entries.get(key)
            val = (a if a is not None else 0) + (ctx.omega(g, deg[r]) * b if b is not None else 0)
            if not (val == 0):
                ok = False
                break
        out[g] = ok
    return out


def j_member(X: GradedMatrix, J: JForm) -> bool:
    return all(j_membership(X, J).values())


def transpose_condition(X: GradedMatrix, Jmat: GradedMatrix, factors: dict) -> dict:
    """Per homogeneous part X(g): X(g) J + c_g J X(g)^T == 0, with c_g taken from ``factors``."""
    out = {}
    for g, Xg in X.parts.items():
        if g not in factors:
            raise GradedMatrixError(f"no factor given for degree {X.space.ctx.label(g)}")
        out[g] = (Xg @ Jmat + (Jmat @ Xg.transpose()).scale(factors[g])).is_zero()
    return out


def matrix_kernel_in_degree(space: GradedSpace, mu, constraints) -> list:
    """Homogeneous degree-mu matrices M with every linear functional in ``constraints`` vanishing.

    ``constraints`` is a callable mapping the list of unknown positions to
    sparse equation rows over those positions.
    """
    ctx = space.ctx
    deg = space.index_degree
    positions = [(r, c) for r in range(space.dim) for c in range(space.dim)
                 if ctx.sub(deg[r], deg[c]) == mu]
    rows = constraints(positions)
    basis = nullspace(rows, len(positions), ctx.conductor)
    return [GradedMatrix(space, {positions[k]: v for k, v in vec.items()}) for vec in basis]


def report_homogeneity(named) -> Report:
    """Each (name, declared degree, matrix) must be homogeneous of its declared degree."""
    rep = Report("homogeneity")
    bad = None
    for name, d, m in named:
        p = m.parts
        if not (set(p) <= {d}):
            bad = bad or f"{name} has parts in degrees {sorted(p)}"
    rep.add("generators homogeneous of declared degree", bad is None, len(named), bad)
    return rep

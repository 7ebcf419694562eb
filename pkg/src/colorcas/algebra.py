"""Color Lie algebras from matrix realizations; structure constants and the quadratic part of U(g)."""
from __future__ import annotations

from fractions import Fraction

from .checks import LawTally, Report
from .gmatrix import GradedMatrix, color_bracket
from .linalg import CoordinateReader, nullspace
from .scalars import CycScalar, format_scalar


class AlgebraError(ValueError):
    pass


class HomogeneityError(AlgebraError):
    pass


class ClosureError(AlgebraError):
    """A bracket of two basis elements leaves the span of the basis."""

    def __init__(self, a, b, residual):
        self.pair = (a, b)
        self.residual = residual
        super().__init__(f"bracket [{a}, {b}] is not in the span of the basis")


class DependentBasisError(AlgebraError):
    def __init__(self, relation):
        self.relation = relation
        super().__init__("basis matrices are linearly dependent")


def _flatten(m: GradedMatrix) -> dict:
    d = m.space.dim
    return {r * d + c: v for (r, c), v in m.entries.items()}


def _acc(target: dict, key, val):
    cur = target.get(key)
    nv = val if cur is None else cur + val
    if nv.is_zero():
        target.pop(key, None)
    else:
        target[key] = nv


class ColorAlgebra:
    """Named homogeneous basis, its matrices and structure constants.

    ``f[(a, b)]`` is a sparse dict c -> f_{a,b}^c over basis positions.
    """

    def __init__(self, ctx, names, degrees, matrices, f, space=None):
        self.ctx = ctx
        self.names = list(names)
        self.degrees = list(degrees)
        self.matrices = list(matrices)
        self.f = f
        self.space = space if space is not None else (matrices[0].space if matrices else None)
        self.index = {nm: k for k, nm in enumerate(self.names)}
        self.by_degree = {}
        for k, d in enumerate(self.degrees):
            self.by_degree.setdefault(d, []).append(k)
        self.n = ctx.conductor

    @property
    def dim(self) -> int:
        return len(self.names)

    def bracket_coeffs(self, a, b) -> dict:
        return self.f.get((a, b), {})

    def zero(self):
        return CycScalar.zero(self.n)

    def one(self):
        return CycScalar.one(self.n)

    def structure_triples(self) -> list:
        out = []
        for a in range(self.dim):
            for b in range(self.dim):
                for c, v in sorted(self.bracket_coeffs(a, b).items()):
                    out.append([self.names[a], self.names[b], self.names[c], format_scalar(v)])
        return out

    def __repr__(self):
        return f"ColorAlgebra(dim={self.dim})"


def structure_constants_from_rep(ctx, basis) -> ColorAlgebra:
    """``basis`` is a list of (name, degree, GradedMatrix); brackets are solved exactly in the basis."""
    names, degrees, mats = [], [], []
    for name, d, m in basis:
        p = m.parts
        if not p:
            raise HomogeneityError(f"basis element {name} is the zero matrix")
        if set(p) != {d}:
            raise HomogeneityError(f"basis element {name} is not homogeneous of degree {ctx.label(d)}")
        names.append(name)
        degrees.append(d)
        mats.append(m)
    if len(set(names)) != len(names):
        raise AlgebraError("duplicate basis names")
    reader = CoordinateReader([_flatten(m) for m in mats], ctx.conductor)
    if reader.dependent is not None:
        rel = {names[k]: format_scalar(v) for k, v in sorted(reader.dependent.items())}
        raise DependentBasisError(rel)
    f = {}
    for a, Xa in enumerate(mats):
        for b, Xb in enumerate(mats):
            br = Xa @ Xb - (Xb @ Xa).scale(ctx.omega(degrees[a], degrees[b]))
            if br.is_zero():
                continue
            coeffs, residual = reader.coords(_flatten(br))
            if residual:
                d = br.space.dim
                res = {f"({k // d},{k % d})": format_scalar(v) for k, v in sorted(residual.items())}
                raise ClosureError(names[a], names[b], res)
            f[(a, b)] = dict(sorted(coeffs.items()))
    return ColorAlgebra(ctx, names, degrees, mats, f)


def abstract_algebra(ctx, names, degrees, f) -> ColorAlgebra:
    """Algebra given directly by structure constants (no matrices)."""
    return ColorAlgebra(ctx, names, degrees, [], f, space=None)


def check_support(alg) -> Report:
    rep = Report("structure constant support")
    t = LawTally("f_ab^c = 0 unless deg a + deg b = deg c")
    ctx = alg.ctx
    for (a, b), row in alg.f.items():
        target = ctx.add(alg.degrees[a], alg.degrees[b])
        for c in row:
            t.record(alg.degrees[c] == target,
                     lambda: f"a={alg.names[a]} b={alg.names[b]} c={alg.names[c]}")
    t.into(rep)
    return rep


def check_antisymmetry(alg) -> Report:
    rep = check_support(alg)
    rep.subject = "antisymmetry"
    ctx = alg.ctx
    t = LawTally("f_ab^c = -omega(deg a, deg b) f_ba^c")
    for a in range(alg.dim):
        for b in range(a, alg.dim):
            w = ctx.omega(alg.degrees[a], alg.degrees[b])
            fab = alg.bracket_coeffs(a, b)
            fba = alg.bracket_coeffs(b, a)
            bad = None
            for c in set(fab) | set(fba):
                lhs = fab.get(c, alg.zero())
                rhs = -(w * fba.get(c, alg.zero()))
                if lhs != rhs:
                    bad = c
                    break
            t.record(bad is None, lambda: f"a={alg.names[a]} b={alg.names[b]} c={alg.names[bad]}")
    t.into(rep)
    return rep


def _bracket_vec(alg, a, vec) -> dict:
    # [X_a, sum_d vec_d X_d]
    out = {}
    for d, v in vec.items():
        for e, s in alg.bracket_coeffs(a, d).items():
            _acc(out, e, v * s)
    return out


def _vec_bracket(alg, vec, c) -> dict:
    out = {}
    for d, v in vec.items():
        for e, s in alg.bracket_coeffs(d, c).items():
            _acc(out, e, v * s)
    return out


def jacobi_defect(alg, a, b, c) -> dict:
    """[X_a,[X_b,X_c]] - [[X_a,X_b],X_c] - omega(a,b)[X_b,[X_a,X_c]] in coordinates."""
    w = alg.ctx.omega(alg.degrees[a], alg.degrees[b])
    out = dict(_bracket_vec(alg, a, alg.bracket_coeffs(b, c)))
    for e, v in _vec_bracket(alg, alg.bracket_coeffs(a, b), c).items():
        _acc(out, e, -v)
    for e, v in _bracket_vec(alg, b, alg.bracket_coeffs(a, c)).items():
        _acc(out, e, -(w * v))
    return out


def check_jacobi(alg) -> Report:
    rep = Report("jacobi")
    t = LawTally("[X,[Y,Z]] = [[X,Y],Z] + omega(deg X, deg Y)[Y,[X,Z]]")
    nm = alg.names
    for a in range(alg.dim):
        for b in range(alg.dim):
            for c in range(alg.dim):
                t.record(not jacobi_defect(alg, a, b, c), lambda: f"a={nm[a]} b={nm[b]} c={nm[c]}")
    t.into(rep)
    return rep


def graded_center(alg) -> dict:
    """Per degree (in group order), a basis of central elements as sparse coefficient dicts."""
    out = {}
    for d in alg.ctx.order:
        idx = alg.by_degree.get(d, [])
        if not idx:
            continue
        rows = {}
        for k, a in enumerate(idx):
            for b in range(alg.dim):
                for c, v in alg.bracket_coeffs(a, b).items():
                    rows.setdefault((b, c), {})[k] = v
        eqs = [rows[key] for key in sorted(rows)]
        kern = nullspace(eqs, len(idx), alg.n)
        if kern:
            out[d] = [{idx[k]: v for k, v in sorted(vec.items())} for vec in kern]
    return out


# ---------------------------------------------------------------------------
# quadratic elements of U(g)
# ---------------------------------------------------------------------------

class QuadElement:
    """constant + sum linear_a X_a + sum quad_(a,b) X_a X_b with a <= b in basis order."""

    __slots__ = ("alg", "constant", "linear", "quadratic")

    def __init__(self, alg, constant=None, linear=None, quadratic=None):
        self.alg = alg
        self.constant = constant if constant is not None else alg.zero()
        self.linear = {k: v for k, v in (linear or {}).items() if not v.is_zero()}
        self.quadratic = {k: v for k, v in (quadratic or {}).items() if not v.is_zero()}

    def is_zero(self) -> bool:
        return self.constant.is_zero() and not self.linear and not self.quadratic

    def __eq__(self, other):
        return (isinstance(other, QuadElement) and self.constant == other.constant
                and self.linear == other.linear and self.quadratic == other.quadratic)

    def __add__(self, other):
        return normal_order(self.alg, list(self.terms()) + list(other.terms()))

    def __neg__(self):
        return self.scale(-self.alg.one())

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return QuadElement(self.alg, self.constant * s,
                           {k: v * s for k, v in self.linear.items()},
                           {k: v * s for k, v in self.quadratic.items()})

    def terms(self):
        if not self.constant.is_zero():
            yield self.constant, ()
        for a, v in self.linear.items():
            yield v, (a,)
        for ab, v in self.quadratic.items():
            yield v, ab

    def degrees(self) -> set:
        ctx = self.alg.ctx
        out = set()
        for _, word in self.terms():
            g = ctx.zero
            for a in word:
                g = ctx.add(g, self.alg.degrees[a])
            out.add(g)
        return out

    def to_dict(self) -> dict:
        nm = self.alg.names
        return {
            "constant": format_scalar(self.constant),
            "linear": [[nm[a], format_scalar(v)] for a, v in sorted(self.linear.items())],
            "quadratic": [[nm[a], nm[b], format_scalar(v)] for (a, b), v in sorted(self.quadratic.items())],
        }

    def __str__(self):
        nm = self.alg.names
        parts = []
        for v, word in self.terms():
            mono = " ".join(nm[a] for a in word)
            parts.append(f"({format_scalar(v)}) {mono}".rstrip())
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


def normal_order(alg, raw) -> QuadElement:
    """Canonical form of a raw list of (coefficient, word) with words of length <= 2.

    X_b X_a (b > a) -> omega(deg b, deg a) X_a X_b + [X_b, X_a]; an odd square
    (omega(deg a, deg a) = -1) becomes (1/2)[X_a, X_a].  A QuadElement is returned unchanged.
    """
    if isinstance(raw, QuadElement):
        return raw
    ctx = alg.ctx
    const = alg.zero()
    lin, quad = {}, {}
    half = CycScalar.rational(alg.n, Fraction(1, 2))
    for coef, word in raw:
        if coef.is_zero():
            continue
        word = tuple(word)
        if len(word) == 0:
            const = const + coef
        elif len(word) == 1:
            _acc(lin, word[0], coef)
        elif len(word) == 2:
            b, a = word
            if b < a:
                _acc(quad, (b, a), coef)
            elif b > a:
                w = ctx.omega(alg.degrees[b], alg.degrees[a])
                _acc(quad, (a, b), coef * w)
                for c, v in alg.bracket_coeffs(b, a).items():
                    _acc(lin, c, coef * v)
            else:
                if ctx.omega(alg.degrees[a], alg.degrees[a]) == alg.one():
                    _acc(quad, (a, a), coef)
                else:
                    for c, v in alg.bracket_coeffs(a, a).items():
                        _acc(lin, c, coef * v * half)
        else:
            raise AlgebraError("words longer than 2 are outside the quadratic truncation")
    return QuadElement(alg, const, dict(sorted(lin.items())), dict(sorted(quad.items())))


def bracket_generator_quadratic(alg, a: int, q: QuadElement) -> QuadElement:
    """[X_a, q] via [X, YZ] = [X,Y]Z + omega(deg X, deg Y) Y[X,Z], normal ordered."""
    ctx = alg.ctx
    da = alg.degrees[a]
    raw = []
    for b, v in q.linear.items():
        for c, s in alg.bracket_coeffs(a, b).items():
            raw.append((v * s, (c,)))
    for (b, c), v in q.quadratic.items():
        for d, s in alg.bracket_coeffs(a, b).items():
            raw.append((v * s, (d, c)))
        w = ctx.omega(da, alg.degrees[b])
        for d, s in alg.bracket_coeffs(a, c).items():
            raw.append((v * w * s, (b, d)))
    return normal_order(alg, raw)


def quad_to_matrix(alg, q: QuadElement) -> GradedMatrix:
    """Image of q in the defining representation."""
    if alg.space is None:
        raise AlgebraError("algebra has no matrix realization")
    out = GradedMatrix.identity(alg.space).scale(q.constant)
    for a, v in q.linear.items():
        out = out + alg.matrices[a].scale(v)
    for (a, b), v in q.quadratic.items():
        out = out + (alg.matrices[a] @ alg.matrices[b]).scale(v)
    return out


def matrix_bracket_generator(alg, a: int, M: GradedMatrix) -> GradedMatrix:
    return color_bracket(alg.matrices[a], M)

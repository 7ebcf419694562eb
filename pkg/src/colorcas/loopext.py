"""Loop algebra L(g) = g (x) C[t, 1/t] with graded central charges built from invariant forms."""
from __future__ import annotations

from dataclasses import dataclass

from .checks import LawTally, Report
from .scalars import CycScalar, format_scalar


def _acc(target, key, val):
    cur = target.get(key)
    nv = val if cur is None else cur + val
    if nv.is_zero():
        target.pop(key, None)
    else:
        target[key] = nv


class LoopElement:
    """sum coeff * X_a^(m) + sum coeff * c_mu.  ``terms`` keys are (a, m); ``central`` keys are degrees."""

    __slots__ = ("alg", "terms", "central")

    def __init__(self, alg, terms=None, central=None):
        self.alg = alg
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}
        self.central = {k: v for k, v in (central or {}).items() if not v.is_zero()}

    @classmethod
    def generator(cls, alg, a, m, coeff=None):
        return cls(alg, {(a, m): coeff if coeff is not None else alg.one()})

    @classmethod
    def charge(cls, alg, mu, coeff=None):
        return cls(alg, central={mu: coeff if coeff is not None else alg.one()})

    def is_zero(self) -> bool:
        return not self.terms and not self.central

    def __add__(self, other):
        t = dict(self.terms)
        for k, v in other.terms.items():
            _acc(t, k, v)
        c = dict(self.central)
        for k, v in other.central.items():
            _acc(c, k, v)
        return LoopElement(self.alg, t, c)

    def scale(self, s):
        return LoopElement(self.alg, {k: v * s for k, v in self.terms.items()},
                           {k: v * s for k, v in self.central.items()})

    def __neg__(self):
        return self.scale(-self.alg.one())

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, LoopElement) and self.terms == other.terms and self.central == other.central

    def __str__(self):
        nm = self.alg.names
        lab = self.alg.ctx.label
        parts = [f"({format_scalar(v)}) {nm[a]}^({m})" for (a, m), v in sorted(self.terms.items())]
        parts += [f"({format_scalar(v)}) c_{lab(mu)}" for mu, v in self.central.items()]
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


@dataclass
class ExtensionData:
    alg: object
    forms: dict  # degree -> GradedForm with at least one nonzero entry

    @property
    def central_degrees(self) -> list:
        return list(self.forms)


def build_extension(alg, forms) -> ExtensionData:
    """Keep only the nonzero forms (in the given order); zero forms contribute no charge."""
    items = forms.items() if isinstance(forms, dict) else ((f.degree, f) for f in forms)
    active = {}
    for mu, form in items:
        if not form.is_zero():
            if mu in active:
                raise ValueError(f"two forms for central degree {alg.ctx.label(mu)}")
            active[mu] = form
    return ExtensionData(alg, active)


def _basis_bracket(ext, a, m, b, n, cache):
    key = (a, m, b, n)
    hit = cache.get(key)
    if hit is not None:
        return hit
    alg = ext.alg
    terms = {(c, m + n): v for c, v in alg.bracket_coeffs(a, b).items()}
    central = {}
    if m + n == 0 and m != 0:
        mm = CycScalar.rational(alg.n, m)
        for mu, form in ext.forms.items():
            e = form.table.get((a, b))
            if e is not None:
                _acc(central, mu, mm * alg.ctx.omega(alg.degrees[a], mu) * e)
    res = (terms, central)
    cache[key] = res
    return res


def loop_bracket(ext: ExtensionData, x: LoopElement, y: LoopElement, _cache=None) -> LoopElement:
    cache = {} if _cache is None else _cache
    terms, central = {}, {}
    for (a, m), u in x.terms.items():
        for (b, n), v in y.terms.items():
            t, c = _basis_bracket(ext, a, m, b, n, cache)
            uv = u * v
            for k, s in t.items():
                _acc(terms, k, uv * s)
            for k, s in c.items():
                _acc(central, k, uv * s)
    return LoopElement(ext.alg, terms, central)


def _central_row(ext, a, b) -> dict:
    # mu -> omega(deg a, mu) eta^mu(a, b): the coefficient of m c_mu in [X_a^(m), X_b^(-m)]
    alg = ext.alg
    out = {}
    for mu, form in ext.forms.items():
        e = form.table.get((a, b))
        if e is not None:
            out[mu] = alg.ctx.omega(alg.degrees[a], mu) * e
    return out


def _contract(coeffs, table) -> dict:
    # sum_d coeffs[d] * table(d), table(d) being a central row
    out = {}
    for d, s in coeffs.items():
        for mu, v in table(d).items():
            _acc(out, mu, s * v)
    return out


def verify_loop_jacobi(ext: ExtensionData, mode_window=range(-2, 3), literal=False) -> Report:
    """Color Jacobi identity for every basis triple and every mode triple in the window.

    The default evaluates each instance from per-triple sums: the bracket part
    does not depend on the modes and the central part is
    m S1 - (m+n) S2 - omega(a,b) n S3 on m+n+l = 0.  ``literal=True`` instead
    expands every nested bracket of loop elements.
    """
    if literal:
        return _verify_loop_jacobi_literal(ext, mode_window)
    from .algebra import jacobi_defect
    alg = ext.alg
    ctx = alg.ctx
    nm = alg.names
    modes = list(mode_window)
    rep = Report("loop extension")
    rep.flags["central_degrees"] = [ctx.label(mu) for mu in ext.central_degrees]
    rep.flags["modes"] = [modes[0], modes[-1]] if modes else []
    rows = {}

    def crow(x, y):
        key = (x, y)
        r = rows.get(key)
        if r is None:
            r = rows[key] = _central_row(ext, x, y)
        return r

    zero_sum = [(m, n, -m - n) for m in modes for n in modes if -m - n in modes]
    per_triple = len(modes) ** 3
    t = LawTally("[x,[y,z]] = [[x,y],z] + omega(deg x, deg y)[y,[x,z]] with central terms")
    central_hits = 0
    for a in range(alg.dim):
        for b in range(alg.dim):
            w = ctx.omega(alg.degrees[a], alg.degrees[b])
            fab = alg.bracket_coeffs(a, b)
            for c in range(alg.dim):
                plain_ok = not jacobi_defect(alg, a, b, c)
                s1 = _contract(alg.bracket_coeffs(b, c), lambda d: crow(a, d))
                s2 = _contract(fab, lambda d: crow(d, c))
                s3 = _contract(alg.bracket_coeffs(a, c), lambda d: crow(b, d))
                bad = None if plain_ok or not modes else (modes[0],) * 3
                if s1 or s2 or s3:
                    for m, n, l in zero_sum:
                        if (m and s1) or ((m + n) and s2) or (n and s3):
                            central_hits += 1
                        total = {}
                        mm = CycScalar.rational(alg.n, m)
                        for mu, v in s1.items():
                            _acc(total, mu, mm * v)
                        mn = CycScalar.rational(alg.n, -(m + n))
                        for mu, v in s2.items():
                            _acc(total, mu, mn * v)
                        nn = CycScalar.rational(alg.n, -n) * w
                        for mu, v in s3.items():
                            _acc(total, mu, nn * v)
                        if total and bad is None:
                            bad = (m, n, l)
                if bad is None:
                    t.checked += per_triple
                else:
                    t.checked += per_triple - 1
                    m, n, l = bad
                    t.record(False, lambda: f"{nm[a]}^({m}) {nm[b]}^({n}) {nm[c]}^({l})")
    t.into(rep)
    rep.flags["instances_with_central_terms"] = central_hits
    return rep


def _verify_loop_jacobi_literal(ext: ExtensionData, mode_window) -> Report:
    alg = ext.alg
    ctx = alg.ctx
    nm = alg.names
    modes = list(mode_window)
    cache = {}
    rep = Report("loop extension")
    rep.flags["central_degrees"] = [ctx.label(mu) for mu in ext.central_degrees]
    rep.flags["modes"] = [modes[0], modes[-1]] if modes else []
    gens = {(a, m): LoopElement.generator(alg, a, m) for a in range(alg.dim) for m in modes}
    t = LawTally("[x,[y,z]] = [[x,y],z] + omega(deg x, deg y)[y,[x,z]] with central terms")
    central_hits = 0
    for a in range(alg.dim):
        for b in range(alg.dim):
            w = ctx.omega(alg.degrees[a], alg.degrees[b])
            for c in range(alg.dim):
                for m in modes:
                    x = gens[(a, m)]
                    for n in modes:
                        y = gens[(b, n)]
                        xy = loop_bracket(ext, x, y, cache)
                        for l in modes:
                            z = gens[(c, l)]
                            lhs = loop_bracket(ext, x, loop_bracket(ext, y, z, cache), cache)
                            r1 = loop_bracket(ext, xy, z, cache)
                            r2 = loop_bracket(ext, y, loop_bracket(ext, x, z, cache), cache).scale(w)
                            diff = lhs - r1 - r2
                            if lhs.central or r1.central or r2.central:
                                central_hits += 1
                            t.record(diff.is_zero(), lambda: f"{nm[a]}^({m}) {nm[b]}^({n}) {nm[c]}^({l})")
    t.into(rep)
    rep.flags["instances_with_central_terms"] = central_hits
    return rep


def check_loop_antisymmetry(ext: ExtensionData, mode_window=range(-2, 3)) -> Report:
    alg = ext.alg
    ctx = alg.ctx
    nm = alg.names
    modes = list(mode_window)
    cache = {}
    rep = Report("loop antisymmetry")
    t = LawTally("[x,y] = -omega(deg x, deg y)[y,x] including central terms")
    for a in range(alg.dim):
        for b in range(alg.dim):
            w = ctx.omega(alg.degrees[a], alg.degrees[b])
            for m in modes:
                for n in modes:
                    x = LoopElement.generator(alg, a, m)
                    y = LoopElement.generator(alg, b, n)
                    ok = (loop_bracket(ext, x, y, cache) + loop_bracket(ext, y, x, cache).scale(w)).is_zero()
                    t.record(ok, lambda: f"{nm[a]}^({m}) {nm[b]}^({n})")
    t.into(rep)
    return rep

"""Finite grading groups Z_k1 x ... x Z_kp with bicharacter commutation factors."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .checks import LawTally, Report
from .scalars import DEFAULT_CONDUCTOR, CycScalar, root_of_unity

GroupElement = tuple  # tuple of residues, component j in range(orders[j])


class GradingError(ValueError):
    pass


@dataclass(frozen=True)
class Bicharacter:
    """Value rule (a, b) -> zeta_M^(a^T B b)."""

    root_order: int
    matrix: tuple

    def exponent(self, a, b) -> int:
        return sum(a[i] * self.matrix[i][j] * b[j] for i in range(len(a)) for j in range(len(b))) % self.root_order

    def to_dict(self):
        return {"root_order": self.root_order, "matrix": [list(r) for r in self.matrix]}


# same data shape, different role
CommutationFactor = Bicharacter
SigmaFactor = Bicharacter


def make_bicharacter(root_order: int, matrix) -> Bicharacter:
    if root_order < 1:
        raise GradingError("root order must be positive")
    return Bicharacter(root_order, tuple(tuple(int(x) for x in row) for row in matrix))


class GradingContext:
    """Grading group, its total order, the commutation factor and optional sigma."""

    def __init__(self, orders, omega_factor=None, sigma_factor=None, order=None,
                 conductor=DEFAULT_CONDUCTOR):
        self.orders = tuple(orders)
        self.omega_factor = omega_factor
        self.sigma_factor = sigma_factor
        self.conductor = conductor
        self._omega_cache = {}
        self._sigma_cache = {}
        elems = list(itertools.product(*(range(k) for k in self.orders)))
        if order is None:
            self.order = elems
        else:
            self.order = [tuple(g) for g in order]
            if sorted(self.order) != elems:
                raise GradingError("element order must list every group element exactly once")
        self._position = {g: i for i, g in enumerate(self.order)}
        p = len(self.orders)
        for name, bc in (("omega", omega_factor), ("sigma", sigma_factor)):
            if bc is None:
                continue
            if len(bc.matrix) != p or any(len(r) != p for r in bc.matrix):
                raise GradingError(f"{name} matrix must be {p}x{p}")
            if conductor % bc.root_order:
                raise GradingError(
                    f"{name} root order {bc.root_order} does not divide conductor {conductor}"
                )

    def __repr__(self):
        return f"GradingContext(orders={self.orders}, conductor={self.conductor})"

    # group structure ----------------------------------------------------
    @property
    def elements(self) -> list:
        return list(self.order)

    @property
    def zero(self) -> GroupElement:
        return (0,) * len(self.orders)

    def add(self, a, b) -> GroupElement:
        return tuple((x + y) % k for x, y, k in zip(a, b, self.orders))

    def neg(self, a) -> GroupElement:
        return tuple((-x) % k for x, k in zip(a, self.orders))

    def sub(self, a, b) -> GroupElement:
        return self.add(a, self.neg(b))

    def position(self, g) -> int:
        return self._position[g]

    def label(self, g) -> str:
        if all(k <= 10 for k in self.orders):
            return "".join(str(x) for x in g)
        return ",".join(str(x) for x in g)

    def parse(self, text) -> GroupElement:
        if isinstance(text, (list, tuple)):
            g = tuple(int(x) for x in text)
        else:
            text = str(text).strip()
            if "," in text or not all(k <= 10 for k in self.orders):
                g = tuple(int(x) for x in text.split(","))
            else:
                g = tuple(int(c) for c in text)
        if len(g) != len(self.orders) or any(not 0 <= x < k for x, k in zip(g, self.orders)):
            raise GradingError(f"{text!r} is not an element of Z_{self.orders}")
        return g

    # factors ------------------------------------------------------------
    def _eval(self, bc, cache, a, b) -> CycScalar:
        key = (a, b)
        val = cache.get(key)
        if val is None:
            e = bc.exponent(a, b)
            val = root_of_unity(self.conductor, e * (self.conductor // bc.root_order))
            cache[key] = val
        return val

    def omega(self, a, b) -> CycScalar:
        if self.omega_factor is None:
            raise GradingError("no commutation factor")
        return self._eval(self.omega_factor, self._omega_cache, a, b)

    def sigma(self, a, b) -> CycScalar:
        if self.sigma_factor is None:
            raise GradingError("no sigma factor given")
        return self._eval(self.sigma_factor, self._sigma_cache, a, b)

    def to_dict(self) -> dict:
        d = {"orders": list(self.orders), "omega": self.omega_factor.to_dict()}
        if self.sigma_factor is not None:
            d["sigma"] = self.sigma_factor.to_dict()
        d["element_order"] = [self.label(g) for g in self.order]
        d["conductor"] = self.conductor
        return d


def group_make(orders, omega=None, sigma=None, order=None, conductor=DEFAULT_CONDUCTOR) -> GradingContext:
    """Build a grading context; elements default to lexicographic order."""
    if not orders:
        raise GradingError("empty order list")
    if any(int(k) < 1 for k in orders):
        raise GradingError("group orders must be >= 1")
    return GradingContext(tuple(int(k) for k in orders), omega, sigma, order, conductor)


def omega_eval(ctx: GradingContext, a, b) -> CycScalar:
    return ctx.omega(a, b)


def sigma_eval(ctx: GradingContext, a, b) -> CycScalar:
    return ctx.sigma(a, b)


def validate_factor(ctx: GradingContext) -> Report:
    """Check the commutation-factor laws and their consequences over the whole group.

    Failures become report entries carrying the first offending elements.
    """
    G = ctx.elements
    lab = ctx.label
    w = ctx.omega
    one = CycScalar.one(ctx.conductor)
    rep = Report("commutation factor")

    t = LawTally("omega(a,b)*omega(b,a) = 1")
    for a in G:
        for b in G:
            t.record(w(a, b) * w(b, a) == one, lambda: f"a={lab(a)} b={lab(b)}")
    t.into(rep)

    t = LawTally("omega(a,b+c) = omega(a,b)*omega(a,c)")
    t2 = LawTally("omega(a+b,c) = omega(a,c)*omega(b,c)")
    for a in G:
        for b in G:
            for c in G:
                t.record(w(a, ctx.add(b, c)) == w(a, b) * w(a, c), lambda: f"a={lab(a)} b={lab(b)} c={lab(c)}")
                t2.record(w(ctx.add(a, b), c) == w(a, c) * w(b, c), lambda: f"a={lab(a)} b={lab(b)} c={lab(c)}")
    t.into(rep)
    t2.into(rep)

    z = ctx.zero
    t = LawTally("omega(0,a) = omega(a,0) = 1")
    for a in G:
        t.record(w(z, a) == one and w(a, z) == one, lambda: f"a={lab(a)}")
    t.into(rep)

    t = LawTally("omega(a,a) = +1 or -1")
    for a in G:
        v = w(a, a)
        t.record(v == one or v == -one, lambda: f"a={lab(a)} omega(a,a)={v}")
    t.into(rep)

    t = LawTally("omega(a,-b) = omega(-a,b) = omega(b,a)")
    t2 = LawTally("omega(-a,-b) = omega(a,b)")
    for a in G:
        na = ctx.neg(a)
        for b in G:
            nb = ctx.neg(b)
            t.record(w(a, nb) == w(b, a) and w(na, b) == w(b, a), lambda: f"a={lab(a)} b={lab(b)}")
            t2.record(w(na, nb) == w(a, b), lambda: f"a={lab(a)} b={lab(b)}")
    t.into(rep)
    t2.into(rep)

    if ctx.sigma_factor is not None:
        s = ctx.sigma
        t = LawTally("sigma(a,b)/sigma(b,a) = omega(a,b)")
        for a in G:
            for b in G:
                t.record(s(a, b) / s(b, a) == w(a, b), lambda: f"a={lab(a)} b={lab(b)}")
        t.into(rep)
        t = LawTally("sigma biadditive in both slots")
        for a in G:
            for b in G:
                for c in G:
                    ok = s(a, ctx.add(b, c)) == s(a, b) * s(a, c) and s(ctx.add(a, b), c) == s(a, c) * s(b, c)
                    t.record(ok, lambda: f"a={lab(a)} b={lab(b)} c={lab(c)}")
        t.into(rep)
    return rep

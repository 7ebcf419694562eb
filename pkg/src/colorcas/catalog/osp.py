"""Z2^2-graded osp(m|2n) on the doubled space C^{m,m|2n,2n} (block order 00, 11, 01, 10)."""
from __future__ import annotations

from fractions import Fraction

from ..algebra import structure_constants_from_rep
from ..gmatrix import GradedMatrix, GradedSpace, JForm, transpose_condition
from ..grading import group_make, make_bicharacter
from ..scalars import CycScalar, root_of_unity
from .entry import CatalogEntry

SPACE_ORDER = ((0, 0), (1, 1), (0, 1), (1, 0))


def osp_context(conductor=12):
    return group_make([2, 2], make_bicharacter(2, [[1, 0], [0, 1]]), order=SPACE_ORDER, conductor=conductor)


class _Index:
    """Positions of the concise matrix-unit labels.

    Latin labels: ("i", k) for k in 1..l, ("i'", k), and ("m",) for the odd middle row.
    Greek labels: ("mu", k), ("mu'", k).  ``upper`` shifts to the second copy.
    """

    def __init__(self, m, n):
        self.m, self.n, self.l = m, n, m // 2

    def pos(self, label, upper):
        kind = label[0]
        m, n, l = self.m, self.n, self.l
        if kind == "i":
            p = label[1] - 1
        elif kind == "i'":
            p = l + label[1] - 1
        elif kind == "m":
            p = 2 * l
        elif kind == "mu":
            p = 2 * m + label[1] - 1
        elif kind == "mu'":
            p = 2 * m + n + label[1] - 1
        else:
            raise KeyError(label)
        if upper:
            p += 2 * n if kind in ("mu", "mu'") else m
        return p


def prime(label):
    flip = {"i": "i'", "i'": "i", "mu": "mu'", "mu'": "mu"}
    if label[0] == "m":
        return label
    return (flip[label[0]], label[1])


def _txt(label):
    kind = label[0]
    if kind == "m":
        return "m"
    k = label[1]
    return {"i": f"{k}", "i'": f"{k}'", "mu": f"μ{k}", "mu'": f"μ{k}'"}[kind]


def build_osp(m: int, n: int) -> CatalogEntry:
    if m < 1 or n < 1:
        raise ValueError("osp(m|2n) needs m >= 1 and n >= 1")
    ctx = osp_context()
    N = ctx.conductor
    space = GradedSpace(ctx, {(0, 0): m, (1, 1): m, (0, 1): 2 * n, (1, 0): 2 * n})
    idx = _Index(m, n)
    l = idx.l
    odd = m % 2 == 1
    one = CycScalar.one(N)
    two = CycScalar.rational(N, 2)

    def unit_sum(terms):
        # terms: (sign, row label, row upper?, col label, col upper?)
        ent = {}
        for s, a, ua, b, ub in terms:
            key = (idx.pos(a, ua), idx.pos(b, ub))
            v = ent.get(key, CycScalar.zero(N)) + CycScalar.rational(N, s)
            ent[key] = v
        return GradedMatrix(space, ent)

    def four(a, b, s, upper_first):
        # E_ab + s E_{b'a'} (and the same in the other copy); U-type when upper_first is mixed
        if upper_first == "low":  # E_{ab} + s E_{b'a'} + E^{ab} + s E^{b'a'}
            pats = [(1, a, False, b, False), (s, prime(b), False, prime(a), False),
                    (1, a, True, b, True), (s, prime(b), True, prime(a), True)]
        else:  # E_a^b + s E_{b'}^{a'} + E^a_b + s E^{b'}_{a'}
            pats = [(1, a, False, b, True), (s, prime(b), False, prime(a), True),
                    (1, a, True, b, False), (s, prime(b), True, prime(a), False)]
        return pats

    def two_term(a, b, kind):
        if kind == "low":
            return [(1, a, False, b, False), (1, a, True, b, True)]
        return [(1, a, False, b, True), (1, a, True, b, False)]

    lat = [("i", k) for k in range(1, l + 1)]
    latm = lat + ([("m",)] if odd else [])
    gr = [("mu", k) for k in range(1, n + 1)]

    def even_family(sym, kind, deg):
        out = []
        # so(m) part
        for a in lat:
            for b in latm:
                out.append((f"{sym}({_txt(a)}{_sep(kind)}{_txt(b)})", deg, four(a, b, -1, kind)))
        for a in lat:
            for b in lat:
                if a[1] < b[1]:
                    out.append((f"{sym}({_txt(a)}{_sep(kind)}{_txt(prime(b))})", deg, four(a, prime(b), -1, kind)))
        for a in lat:
            for b in latm:
                if b[0] == "m" or a[1] < b[1]:
                    out.append((f"{sym}({_txt(prime(a))}{_sep(kind)}{_txt(b)})", deg, four(prime(a), b, -1, kind)))
        # sp(2n) part
        for a in gr:
            for b in gr:
                out.append((f"{sym}({_txt(a)}{_sep(kind)}{_txt(b)})", deg, four(a, b, -1, kind)))
        for a in gr:
            for b in gr:
                if a[1] < b[1]:
                    out.append((f"{sym}({_txt(a)}{_sep(kind)}{_txt(prime(b))})", deg, four(a, prime(b), 1, kind)))
                elif a[1] == b[1]:
                    out.append((f"{sym}({_txt(a)}{_sep(kind)}{_txt(prime(b))})", deg, two_term(a, prime(b), kind)))
        for a in gr:
            for b in gr:
                if a[1] < b[1]:
                    out.append((f"{sym}({_txt(prime(a))}{_sep(kind)}{_txt(b)})", deg, four(prime(a), b, 1, kind)))
                elif a[1] == b[1]:
                    out.append((f"{sym}({_txt(prime(a))}{_sep(kind)}{_txt(b)})", deg, two_term(prime(a), b, kind)))
        return out

    def odd_family(sym, kind, deg, signs):
        # signs for the (mu, mu', mu, mu') lines; first two lines allow i = m
        out = []
        s1, s2, s3, s4 = signs
        for a in latm:
            for g in gr:
                out.append((f"{sym}({_txt(a)}{_sep(kind)}{_txt(g)})", deg, four(a, g, s1, kind)))
        for a in latm:
            for g in gr:
                out.append((f"{sym}({_txt(a)}{_sep(kind)}{_txt(prime(g))})", deg, four(a, prime(g), s2, kind)))
        for a in lat:
            for g in gr:
                out.append((f"{sym}({_txt(prime(a))}{_sep(kind)}{_txt(g)})", deg, four(prime(a), g, s3, kind)))
        for a in lat:
            for g in gr:
                out.append((f"{sym}({_txt(prime(a))}{_sep(kind)}{_txt(prime(g))})", deg, four(prime(a), prime(g), s4, kind)))
        return out

    raw = (even_family("T", "low", (0, 0)) + even_family("U", "mixed", (1, 1))
           + odd_family("Λ", "low", (0, 1), (-1, 1, -1, 1))
           + odd_family("Γ", "mixed", (1, 0), (1, -1, 1, -1)))
    basis = [(name, d, unit_sum(terms)) for name, d, terms in raw]
    alg = structure_constants_from_rep(ctx, basis)

    # commutant of degree 11 and the degree-zero invariant form
    m11 = {}
    for k in range(m):
        m11[(k, m + k)] = one
        m11[(m + k, k)] = one
    for k in range(2 * n):
        m11[(2 * m + k, 2 * m + 2 * n + k)] = -one
        m11[(2 * m + 2 * n + k, 2 * m + k)] = -one
    commutants = {(0, 0): GradedMatrix.identity(space), (1, 1): GradedMatrix(space, m11)}
    jform = JForm(space, GradedMatrix(space, _j_entries(m, n, N, graded=True)), "color-symmetric")

    cartan = [alg.index[f"T({_txt(a)},{_txt(a)})"] for a in lat] + [alg.index[f"T({_txt(g)},{_txt(g)})"] for g in gr]
    labels = [f"ε{k}" for k in range(1, l + 1)] + [f"δ{k}" for k in range(1, n + 1)]
    quarter = CycScalar.rational(N, Fraction(1, 4))
    return CatalogEntry(
        name="osp",
        params={"m": m, "n": n},
        algebra=alg,
        normalization={g: quarter for g in SPACE_ORDER},
        expected_commutants=commutants,
        jform=jform,
        cartan=cartan,
        cartan_labels=labels,
        transpose_rule=block_condition_data(m, n, space),
    )


def _sep(kind):
    return "," if kind == "low" else "|"


def _b_entries(m, off, scale, ent):
    l = m // 2
    for k in range(l):
        ent[(off + k, off + l + k)] = scale
        ent[(off + l + k, off + k)] = scale
    if m % 2:
        ent[(off + 2 * l, off + 2 * l)] = scale


def _g_entries(n, off, scale, ent):
    for k in range(n):
        ent[(off + k, off + n + k)] = -scale
        ent[(off + n + k, off + k)] = scale


def _j_entries(m, n, N, graded):
    """graded=True: diag(B, B, G, -G) (the form tested by the color membership rule);
    graded=False: diag(iB, iB, G, G) (the form of the block conditions)."""
    ent = {}
    one = CycScalar.one(N)
    ib = root_of_unity(N, N // 4)
    _b_entries(m, 0, one if graded else ib, ent)
    _b_entries(m, m, one if graded else ib, ent)
    _g_entries(n, 2 * m, one, ent)
    _g_entries(n, 2 * m + 2 * n, -one if graded else one, ent)
    return ent


def block_condition_data(m, n, space):
    """J = diag(iB, iB, G, G) and the factors c = 1, 1, i, -i of X J + c J X^T = 0 per degree."""
    N = space.ctx.conductor
    J = GradedMatrix(space, _j_entries(m, n, N, graded=False))
    i = root_of_unity(N, N // 4)
    one = CycScalar.one(N)
    return J, {(0, 0): one, (1, 1): one, (0, 1): i, (1, 0): -i}


def osp_block_conditions(entry, X: GradedMatrix) -> dict:
    J, factors = entry.transpose_rule
    return transpose_condition(X, J, factors)

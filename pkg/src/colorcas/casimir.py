"""Commutants, graded invariant bilinear forms, their inverses and quadratic Casimir elements."""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (QuadElement, bracket_generator_quadratic, normal_order, quad_to_matrix)
from .checks import LawTally, Report
from .gmatrix import GradedMatrix, color_bracket, color_trace, matrix_kernel_in_degree
from .linalg import nullspace, solve_square_inverse
from .scalars import CycScalar, format_scalar

KERNEL_CONVENTION = "first nonzero entry in row-major order equals 1"


class FormError(ValueError):
    pass


class NotCommutantError(FormError):
    def __init__(self, generator):
        self.generator = generator
        super().__init__(f"matrix does not graded-commute with {generator}")


class DegenerateFormError(FormError):
    """Raised by invert_form; carries the rank and one nullspace vector (basis name -> scalar)."""

    def __init__(self, degree_label, rank, size, witness):
        self.rank = rank
        self.size = size
        self.witness = witness
        super().__init__(f"form of degree {degree_label} is degenerate (rank {rank} of {size})")


@dataclass
class Commutant:
    degree: tuple
    basis: list
    convention: str = KERNEL_CONVENTION

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass
class GradedForm:
    alg: object
    degree: tuple
    table: dict  # (a, b) -> nonzero CycScalar
    commutant: GradedMatrix
    normalization: CycScalar

    def value(self, a, b):
        return self.table.get((a, b), self.alg.zero())

    def is_zero(self) -> bool:
        return not self.table

    def triples(self) -> list:
        nm = self.alg.names
        return [[nm[a], nm[b], format_scalar(v)] for (a, b), v in sorted(self.table.items())]


@dataclass
class InverseForm:
    form: GradedForm
    table: dict
    left_identity: bool = False
    right_identity: bool = False

    @property
    def degree(self):
        return self.form.degree

    def value(self, a, b):
        return self.table.get((a, b), self.form.alg.zero())

    def triples(self) -> list:
        nm = self.form.alg.names
        return [[nm[a], nm[b], format_scalar(v)] for (a, b), v in sorted(self.table.items())]


# ---------------------------------------------------------------------------

def solve_commutants(alg, mu) -> Commutant:
    """Kernel of M -> M rho(X_a) - omega(mu, deg a) rho(X_a) M over homogeneous M of degree mu."""
    ctx = alg.ctx
    space = alg.space

    def constraints(positions):
        where = {p: k for k, p in enumerate(positions)}
        eqs = {}
        for a, X in enumerate(alg.matrices):
            w = ctx.omega(mu, alg.degrees[a])
            by_row, by_col = {}, {}
            for (i, j), v in X.entries.items():
                by_row.setdefault(i, []).append((j, v))
                by_col.setdefault(j, []).append((i, v))
            for (r, c), k in where.items():
                # (M X)[r, j] += M[r, c] X[c, j]
                for j, v in by_row.get(c, ()):
                    row = eqs.setdefault((a, r, j), {})
                    row[k] = row[k] + v if k in row else v
                # (X M)[i, c] += X[i, r] M[r, c]
                for i, v in by_col.get(r, ()):
                    row = eqs.setdefault((a, i, c), {})
                    t = -(w * v)
                    row[k] = row[k] + t if k in row else t
        return [{k: v for k, v in eqs[key].items() if not v.is_zero()} for key in sorted(eqs)]

    return Commutant(mu, matrix_kernel_in_degree(space, mu, constraints))


def is_commutant(alg, M: GradedMatrix):
    """Name of the first generator M fails to graded-commute with, or None."""
    for a, X in enumerate(alg.matrices):
        if not color_bracket(M, X).is_zero():
            return alg.names[a]
    return None


def bilinear_form(alg, M: GradedMatrix, normalization, check=True) -> GradedForm:
    """eta(a, b) = normalization * ctr(rho(X_a) M rho(X_b)); the form has degree -deg M."""
    ctx = alg.ctx
    if not isinstance(normalization, CycScalar):
        normalization = CycScalar.rational(ctx.conductor, normalization)
    if M.is_zero():
        raise FormError("commutant is zero")
    nu = M.degree
    if check:
        bad = is_commutant(alg, M)
        if bad is not None:
            raise NotCommutantError(bad)
    mu = ctx.neg(nu)
    table = {}
    left = [X @ M for X in alg.matrices]
    for a in range(alg.dim):
        target = ctx.sub(mu, alg.degrees[a])
        for b in alg.by_degree.get(target, []):
            v = color_trace(left[a] @ alg.matrices[b]) * normalization
            if not v.is_zero():
                table[(a, b)] = v
    return GradedForm(alg, mu, table, M, normalization)


def form_from_table(alg, degree, table, normalization=None) -> GradedForm:
    """Wrap an explicit table (used for negative controls and imported forms)."""
    norm = normalization if normalization is not None else alg.one()
    return GradedForm(alg, degree, {k: v for k, v in table.items() if not v.is_zero()}, None, norm)


def _form_symmetry_factor(ctx, mu, da, db):
    return ctx.omega(mu, mu) * ctx.omega(da, db)


def check_form_properties(form: GradedForm, inverse: InverseForm = None) -> Report:
    alg = form.alg
    ctx = alg.ctx
    mu = form.degree
    nm = alg.names
    deg = alg.degrees
    rep = Report(f"form of degree {ctx.label(mu)}")
    if form.is_zero():
        rep.flags["degenerate"] = True
        rep.flags["zero_form"] = True

    t = LawTally("support: eta(a,b) = 0 unless deg a + deg b = mu")
    for (a, b) in form.table:
        t.record(ctx.add(deg[a], deg[b]) == mu, lambda: f"a={nm[a]} b={nm[b]}")
    t.into(rep)

    t = LawTally("symmetry: eta(b,a) = omega(mu,mu) omega(deg a, deg b) eta(a,b)")
    for a in range(alg.dim):
        for b in range(alg.dim):
            ok = form.value(b, a) == _form_symmetry_factor(ctx, mu, deg[a], deg[b]) * form.value(a, b)
            t.record(ok, lambda: f"a={nm[a]} b={nm[b]}")
    t.into(rep)

    t = LawTally("invariance: sum f_ab^v eta(v,c) = omega(mu, deg b) sum f_bc^v eta(a,v)")
    for a in range(alg.dim):
        for b in range(alg.dim):
            fab = alg.bracket_coeffs(a, b)
            w = ctx.omega(mu, deg[b])
            for c in range(alg.dim):
                lhs = alg.zero()
                for v, s in fab.items():
                    e = form.table.get((v, c))
                    if e is not None:
                        lhs = lhs + s * e
                rhs = alg.zero()
                for v, s in alg.bracket_coeffs(b, c).items():
                    e = form.table.get((a, v))
                    if e is not None:
                        rhs = rhs + s * e
                t.record(lhs == w * rhs, lambda: f"a={nm[a]} b={nm[b]} c={nm[c]}")
    t.into(rep)

    if inverse is not None:
        K = inverse.table
        t = LawTally("inverse support: eta_mu(a,b) = 0 unless deg a + deg b = mu")
        for (a, b) in K:
            t.record(ctx.add(deg[a], deg[b]) == mu, lambda: f"a={nm[a]} b={nm[b]}")
        t.into(rep)
        t = LawTally("inverse symmetry: eta_mu(b,a) = omega(mu,mu) omega(deg a, deg b) eta_mu(a,b)")
        for a in range(alg.dim):
            for b in range(alg.dim):
                ok = inverse.value(b, a) == _form_symmetry_factor(ctx, mu, deg[a], deg[b]) * inverse.value(a, b)
                t.record(ok, lambda: f"a={nm[a]} b={nm[b]}")
        t.into(rep)
        left, right = inverse_identities(form, inverse)
        rep.add("sum_c eta_mu(a,c) eta(c,b) = delta(a,b)", left is None, alg.dim ** 2, left)
        rep.add("sum_c eta(b,c) eta_mu(c,a) = delta(a,b)", right is None, alg.dim ** 2, right)
        t = LawTally("dual invariance: sum eta_mu(a,v) f_vb^c = omega(mu, deg b) sum eta_mu(v,c) f_bv^a")
        krow, kcol = {}, {}
        for (a, v), s in K.items():
            krow.setdefault(a, []).append((v, s))
            kcol.setdefault(v, []).append((a, s))
        for a in range(alg.dim):
            for b in range(alg.dim):
                w = ctx.omega(mu, deg[b])
                for c in range(alg.dim):
                    lhs = alg.zero()
                    for v, s in krow.get(a, ()):
                        f = alg.bracket_coeffs(v, b).get(c)
                        if f is not None:
                            lhs = lhs + s * f
                    rhs = alg.zero()
                    for v, s in kcol.get(c, ()):
                        f = alg.bracket_coeffs(b, v).get(a)
                        if f is not None:
                            rhs = rhs + s * f
                    t.record(lhs == w * rhs, lambda: f"a={nm[a]} b={nm[b]} c={nm[c]}")
        t.into(rep)
    return rep


def inverse_identities(form: GradedForm, inverse: InverseForm):
    """Witness strings (or None) for the left and right inverse identities."""
    alg = form.alg
    nm = alg.names
    one, zero = alg.one(), alg.zero()
    E = form.table
    K = inverse.table
    erow, krow = {}, {}
    for (a, c), v in E.items():
        erow.setdefault(a, {})[c] = v
    for (a, c), v in K.items():
        krow.setdefault(a, {})[c] = v
    left = right = None
    for a in range(alg.dim):
        for b in range(alg.dim):
            want = one if a == b else zero
            s = zero
            for c, v in krow.get(a, {}).items():
                e = E.get((c, b))
                if e is not None:
                    s = s + v * e
            if s != want and left is None:
                left = f"a={nm[a]} b={nm[b]}"
            s = zero
            for c, v in erow.get(b, {}).items():
                k = K.get((c, a))
                if k is not None:
                    s = s + v * k
            if s != want and right is None:
                right = f"a={nm[a]} b={nm[b]}"
    return left, right


def invert_form(form: GradedForm) -> InverseForm:
    """Blockwise exact inverse: the (alpha, mu - alpha) block of eta_mu inverts the (mu - alpha, alpha) block of eta."""
    alg = form.alg
    ctx = alg.ctx
    mu = form.degree
    K = {}
    for alpha in ctx.order:
        rows_idx = alg.by_degree.get(alpha, [])
        if not rows_idx:
            continue
        cols_idx = alg.by_degree.get(ctx.sub(mu, alpha), [])
        # block of eta with rows of degree mu - alpha and columns of degree alpha
        if len(cols_idx) != len(rows_idx):
            _raise_degenerate(form)
        block = [{j: form.table[(c, b)] for j, b in enumerate(rows_idx) if (c, b) in form.table}
                 for c in cols_idx]
        inv = solve_square_inverse(block, alg.n)
        if inv is None:
            _raise_degenerate(form)
        # inv[j][k]: inverse entry with row = rows_idx[j] (degree alpha), col = cols_idx[k]
        for j, row in enumerate(inv):
            for k, v in row.items():
                K[(rows_idx[j], cols_idx[k])] = v
    inverse = InverseForm(form, dict(sorted(K.items())))
    left, right = inverse_identities(form, inverse)
    inverse.left_identity = left is None
    inverse.right_identity = right is None
    return inverse


def _raise_degenerate(form):
    alg = form.alg
    rows = [{} for _ in range(alg.dim)]
    for (a, b), v in form.table.items():
        rows[a][b] = v
    kern = nullspace([r for r in rows if r], alg.dim, alg.n)
    rank = alg.dim - len(kern)
    witness = {alg.names[k]: format_scalar(v) for k, v in sorted(kern[0].items())} if kern else {}
    raise DegenerateFormError(alg.ctx.label(form.degree), rank, alg.dim, witness)


def build_casimir(alg, inverse: InverseForm) -> QuadElement:
    return normal_order(alg, [(v, (a, b)) for (a, b), v in inverse.table.items()])


def verify_centrality(alg, C: QuadElement, matrix=True) -> Report:
    """Symbolic bracket in U(g) and, when a realization exists, the matrix image; both must vanish."""
    nm = alg.names
    rep = Report("centrality")
    t = LawTally("symbolic: [X_a, C] = 0 in U(g)")
    for a in range(alg.dim):
        t.record(bracket_generator_quadratic(alg, a, C).is_zero(), lambda: f"generator {nm[a]}")
    t.into(rep)
    if matrix and alg.space is not None:
        rho = quad_to_matrix(alg, C)
        t = LawTally("matrix: [rho(X_a), rho(C)] = 0")
        for a in range(alg.dim):
            t.record(color_bracket(alg.matrices[a], rho).is_zero(), lambda: f"generator {nm[a]}")
        t.into(rep)
    return rep


@dataclass
class DegreeResult:
    """Everything computed for one degree mu: commutant kernel at -mu, forms, inverses, Casimirs."""

    degree: tuple
    commutant: Commutant
    forms: list = field(default_factory=list)
    inverses: list = field(default_factory=list)  # InverseForm or DegenerateFormError, aligned with forms
    casimirs: list = field(default_factory=list)  # QuadElement or None


def casimir_pipeline(alg, mu, normalization) -> DegreeResult:
    ctx = alg.ctx
    comm = solve_commutants(alg, ctx.neg(mu))
    res = DegreeResult(mu, comm)
    for M in comm.basis:
        form = bilinear_form(alg, M, normalization, check=False)
        res.forms.append(form)
        try:
            inv = invert_form(form)
        except DegenerateFormError as err:
            res.inverses.append(err)
            res.casimirs.append(None)
            continue
        res.inverses.append(inv)
        res.casimirs.append(build_casimir(alg, inv))
    return res

"""Algebra spec files (JSON) and the in-memory problem they describe.

Every scalar is a string in the scalar grammar so that values stay exact
through serialization.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .algebra import structure_constants_from_rep
from .gmatrix import GradedMatrix, GradedSpace, JForm
from .grading import GradingError, group_make, make_bicharacter
from .scalars import CycScalar, ScalarError, format_scalar, parse_scalar

SPEC_VERSION = 1


class SpecError(ValueError):
    """Malformed or inconsistent spec input (CLI exit status 2)."""


@dataclass
class Problem:
    """Everything the pipeline needs: grading, space, generators, optional J data and Cartan."""

    name: str
    params: dict
    ctx: object
    space: GradedSpace
    generators: list  # (name, degree, GradedMatrix)
    normalization: dict = field(default_factory=dict)  # degree -> CycScalar
    jform: JForm | None = None
    transpose_rule: tuple | None = None
    cartan: list = field(default_factory=list)  # generator names
    cartan_labels: list = field(default_factory=list)
    expected_forms: dict = field(default_factory=dict)  # degree -> {(a, b): CycScalar}
    expected_inverses: dict = field(default_factory=dict)
    _algebra: object = None

    @property
    def algebra(self):
        if self._algebra is None:
            self._algebra = structure_constants_from_rep(self.ctx, self.generators)
        return self._algebra

    def norm(self, mu) -> CycScalar:
        return self.normalization.get(mu, CycScalar.one(self.ctx.conductor))


def problem_from_entry(entry) -> Problem:
    alg = entry.algebra
    gens = list(zip(alg.names, alg.degrees, alg.matrices))
    p = Problem(
        name=entry.name,
        params=dict(entry.params),
        ctx=alg.ctx,
        space=alg.space,
        generators=gens,
        normalization=dict(entry.normalization),
        jform=entry.jform,
        transpose_rule=entry.transpose_rule,
        cartan=[alg.names[k] for k in entry.cartan],
        cartan_labels=list(entry.cartan_labels),
    )
    p._algebra = alg
    return p


# ---------------------------------------------------------------------------
# serialization

def _matrix_out(m: GradedMatrix) -> list:
    return m.to_strings()


def problem_to_spec(p: Problem) -> dict:
    ctx = p.ctx
    lab = ctx.label
    doc = {
        "format": "colorcas-spec",
        "version": SPEC_VERSION,
        "name": p.name,
        "params": p.params,
        "grading": ctx.to_dict(),
        "space": {lab(g): p.space.dims[g] for g in ctx.order},
        "generators": [
            {"name": nm, "degree": lab(d), "matrix": _matrix_out(m)} for nm, d, m in p.generators
        ],
        "normalization": {lab(g): format_scalar(v) for g, v in p.normalization.items()},
    }
    if p.jform is not None:
        doc["jform"] = {"symmetry": p.jform.symmetry, "matrix": _matrix_out(p.jform.matrix)}
    if p.transpose_rule is not None:
        J, factors = p.transpose_rule
        doc["transpose_rule"] = {
            "matrix": _matrix_out(J),
            "factors": {lab(g): format_scalar(v) for g, v in factors.items()},
        }
    if p.cartan:
        doc["cartan"] = {"elements": list(p.cartan), "labels": list(p.cartan_labels)}
    for key, table in (("expected_forms", p.expected_forms), ("expected_inverses", p.expected_inverses)):
        if table:
            names = [g[0] for g in p.generators]
            doc[key] = {
                lab(mu): [[names[a], names[b], format_scalar(v)] for (a, b), v in sorted(t.items())]
                for mu, t in table.items()
            }
    return doc


def dump_spec(p: Problem) -> str:
    return json.dumps(problem_to_spec(p), indent=2, ensure_ascii=False) + "\n"


def _need(doc, key, where="spec"):
    if not isinstance(doc, dict) or key not in doc:
        raise SpecError(f"{where}: missing '{key}'")
    return doc[key]


def _bichar(doc, where):
    try:
        return make_bicharacter(int(_need(doc, "root_order", where)), _need(doc, "matrix", where))
    except (TypeError, ValueError) as err:
        if isinstance(err, SpecError):
            raise
        raise SpecError(f"{where}: {err}") from None


def problem_from_spec(doc: dict) -> Problem:
    try:
        return _problem_from_spec(doc)
    except (GradingError, ScalarError) as err:
        raise SpecError(str(err)) from None


def _parse_matrix(space, rows, where):
    n = space.ctx.conductor
    if not isinstance(rows, list) or len(rows) != space.dim or any(
            not isinstance(r, list) or len(r) != space.dim for r in rows):
        raise SpecError(f"{where}: expected a {space.dim}x{space.dim} array")
    out = []
    for r in rows:
        row = []
        for x in r:
            if not isinstance(x, str):
                raise SpecError(f"{where}: scalars must be strings, got {x!r}")
            row.append(parse_scalar(x, n))
        out.append(row)
    return GradedMatrix.from_dense(space, out)


def _problem_from_spec(doc: dict) -> Problem:
    if not isinstance(doc, dict):
        raise SpecError("spec must be a JSON object")
    g = _need(doc, "grading")
    orders = _need(g, "orders", "grading")
    omega = _bichar(_need(g, "omega", "grading"), "grading.omega")
    sigma = _bichar(g["sigma"], "grading.sigma") if g.get("sigma") is not None else None
    conductor = int(g.get("conductor", 12))
    proto = group_make(orders, omega, sigma, conductor=conductor)
    order = None
    if g.get("element_order") is not None:
        order = [proto.parse(x) for x in g["element_order"]]
    ctx = group_make(orders, omega, sigma, order=order, conductor=conductor)

    dims_doc = _need(doc, "space")
    if not isinstance(dims_doc, dict):
        raise SpecError("space: expected an object mapping degrees to dimensions")
    dims = {}
    for k, v in dims_doc.items():
        if not isinstance(v, int) or v < 0:
            raise SpecError(f"space: dimension of {k} must be a nonnegative integer")
        dims[ctx.parse(k)] = v
    space = GradedSpace(ctx, dims)
    if space.dim == 0:
        raise SpecError("space: total dimension is zero")

    gens = []
    seen = set()
    for k, gdoc in enumerate(_need(doc, "generators")):
        where = f"generators[{k}]"
        nm = str(_need(gdoc, "name", where))
        if nm in seen:
            raise SpecError(f"{where}: duplicate name {nm!r}")
        seen.add(nm)
        d = ctx.parse(_need(gdoc, "degree", where))
        gens.append((nm, d, _parse_matrix(space, _need(gdoc, "matrix", where), where)))
    if not gens:
        raise SpecError("generators: empty list")

    norm = {}
    for k, v in (doc.get("normalization") or {}).items():
        norm[ctx.parse(k)] = parse_scalar(str(v), conductor)

    jform = None
    if doc.get("jform") is not None:
        jd = doc["jform"]
        from .gmatrix import GradedMatrixError
        try:
            jform = JForm(space, _parse_matrix(space, _need(jd, "matrix", "jform"), "jform"),
                          str(_need(jd, "symmetry", "jform")))
        except GradedMatrixError as err:
            raise SpecError(f"jform: {err}") from None
    rule = None
    if doc.get("transpose_rule") is not None:
        td = doc["transpose_rule"]
        J = _parse_matrix(space, _need(td, "matrix", "transpose_rule"), "transpose_rule")
        factors = {ctx.parse(k): parse_scalar(str(v), conductor)
                   for k, v in _need(td, "factors", "transpose_rule").items()}
        rule = (J, factors)
    cartan, labels = [], []
    if doc.get("cartan") is not None:
        cartan = [str(x) for x in _need(doc["cartan"], "elements", "cartan")]
        labels = [str(x) for x in doc["cartan"].get("labels") or [f"h{k + 1}" for k in range(len(cartan))]]
        missing = [c for c in cartan if c not in seen]
        if missing:
            raise SpecError(f"cartan: unknown generators {missing}")
        if len(labels) != len(cartan):
            raise SpecError("cartan: one label per element required")

    names = [x[0] for x in gens]
    pos = {nm: k for k, nm in enumerate(names)}

    def table(key):
        out = {}
        for dk, rows in (doc.get(key) or {}).items():
            t = {}
            for row in rows:
                if len(row) != 3 or row[0] not in pos or row[1] not in pos:
                    raise SpecError(f"{key}: bad entry {row!r}")
                t[(pos[row[0]], pos[row[1]])] = parse_scalar(str(row[2]), conductor)
            out[ctx.parse(dk)] = t
        return out

    return Problem(
        name=str(doc.get("name", "spec")),
        params=dict(doc.get("params") or {}),
        ctx=ctx,
        space=space,
        generators=gens,
        normalization=norm,
        jform=jform,
        transpose_rule=rule,
        cartan=cartan,
        cartan_labels=labels,
        expected_forms=table("expected_forms"),
        expected_inverses=table("expected_inverses"),
    )


def load_spec_text(text: str) -> Problem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise SpecError(f"not valid JSON: {err}") from None
    return problem_from_spec(doc)


def load_spec(path) -> Problem:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as err:
        raise SpecError(f"cannot read {path}: {err}") from None
    return load_spec_text(text)

"""Runs the full analysis of a Problem and assembles a deterministic report document.

Sections are independent, so they may run in worker processes
(``COLORCAS_JOBS`` > 1); results are always merged in a fixed order.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from types import SimpleNamespace

from .algebra import ClosureError, DependentBasisError, HomogeneityError
from .algebra import check_antisymmetry, check_jacobi, graded_center
from .casimir import (DegenerateFormError, InverseForm, bilinear_form, build_casimir,
                      check_form_properties, invert_form, solve_commutants, verify_centrality)
from .catalog.entry import RootError, extract_roots
from .checks import Report
from .gmatrix import color_trace, ctr_permutation_check, j_membership, transpose_condition
from .grading import validate_factor
from .loopext import build_extension, verify_loop_jacobi
from .scalars import format_scalar

DEFAULT_MODES = range(-2, 3)


def jobs_setting() -> int:
    try:
        return max(1, int(os.environ.get("COLORCAS_JOBS", "1")))
    except ValueError:
        return 1


def _lab(p, g):
    return p.ctx.label(g)


# ---------------------------------------------------------------------------
# sections

def validation_section(p) -> dict:
    """Factor laws, homogeneity, closure, antisymmetry, Jacobi and the optional J tests."""
    out = {}
    fac = validate_factor(p.ctx)
    out["commutation_factor"] = fac.to_dict()
    rep = Report("realization")
    bad = None
    for name, d, m in p.generators:
        parts = m.parts
        if set(parts) != {d} and bad is None:
            bad = f"{name} has parts in degrees {[_lab(p, g) for g in parts]}"
    rep.add("generators homogeneous of declared degree", bad is None, len(p.generators), bad)
    try:
        alg = p.algebra
    except ClosureError as err:
        rep.add("brackets close on the basis", False, 0, f"[{err.pair[0]}, {err.pair[1]}] residual {err.residual}")
        out["realization"] = rep.to_dict()
        return out
    except DependentBasisError as err:
        rep.add("basis linearly independent", False, 0, f"relation {err.relation}")
        out["realization"] = rep.to_dict()
        return out
    except HomogeneityError as err:
        out["realization"] = rep.to_dict()
        out["realization"]["error"] = str(err)
        return out
    rep.add("basis linearly independent", True, alg.dim)
    rep.add("brackets close on the basis", True, alg.dim ** 2)
    out["realization"] = rep.to_dict()
    out["antisymmetry"] = check_antisymmetry(alg).to_dict()
    out["jacobi"] = check_jacobi(alg).to_dict()

    rep = Report("color trace")
    ok, bad = True, None
    for a in range(alg.dim):
        for b in range(alg.dim):
            if not ctr_permutation_check(alg.matrices[a], alg.matrices[b]):
                ok = False
                bad = bad or f"a={alg.names[a]} b={alg.names[b]}"
    rep.add("ctr(XY) = omega(deg X, deg Y) ctr(YX)", ok, alg.dim ** 2, bad)
    bad = None
    for a in range(alg.dim):
        if alg.degrees[a] != p.ctx.zero and not color_trace(alg.matrices[a]).is_zero():
            bad = bad or alg.names[a]
    rep.add("ctr vanishes off degree zero", bad is None, alg.dim, bad)
    out["color_trace"] = rep.to_dict()

    if p.jform is not None:
        rep = Report("invariant form on V")
        bad = None
        for name, _, m in p.generators:
            if not all(j_membership(m, p.jform).values()) and bad is None:
                bad = name
        rep.add("J(Xu,v) + omega(deg X, deg u) J(u,Xv) = 0", bad is None, len(p.generators), bad)
        bad = None
        for a in range(alg.dim):
            for b in range(alg.dim):
                br = alg.matrices[a] @ alg.matrices[b] - (alg.matrices[b] @ alg.matrices[a]).scale(
                    p.ctx.omega(alg.degrees[a], alg.degrees[b]))
                if not all(j_membership(br, p.jform).values()) and bad is None:
                    bad = f"[{alg.names[a]}, {alg.names[b]}]"
        rep.add("brackets of members are members", bad is None, alg.dim ** 2, bad)
        out["jform"] = rep.to_dict()
    if p.transpose_rule is not None:
        J, factors = p.transpose_rule
        rep = Report("block transpose conditions")
        bad = None
        for name, _, m in p.generators:
            if not all(transpose_condition(m, J, factors).values()) and bad is None:
                bad = name
        rep.add("X J + c J X^T = 0 per degree", bad is None, len(p.generators), bad)
        out["transpose_rule"] = rep.to_dict()
    return out


def _matrix_doc(p, m):
    return {"degree": _lab(p, m.degree) if m.parts else None, "rows": m.to_strings()}


def commutant_section(p, mu) -> dict:
    comm = solve_commutants(p.algebra, mu)
    return {
        "degree": _lab(p, mu),
        "dimension": comm.dim,
        "convention": comm.convention,
        "basis": [_matrix_doc(p, M) for M in comm.basis],
    }


def _compare(alg, computed_table, expected):
    bad = None
    keys = set(expected) | set(computed_table)
    for k in sorted(keys):
        want = expected.get(k)
        got = computed_table.get(k)
        if want is None or got is None or want != got:
            if want is None and got is None:
                continue
            bad = f"{alg.names[k[0]]},{alg.names[k[1]]}"
            break
    return bad


def casimir_section(p, mu, normalization=None) -> dict:
    """Forms of degree mu from each commutant of degree -mu; inverse, Casimir and checks."""
    alg = p.algebra
    ctx = p.ctx
    norm = normalization if normalization is not None else p.norm(mu)
    comm = solve_commutants(alg, ctx.neg(mu))
    out = {
        "degree": _lab(p, mu),
        "commutant_degree": _lab(p, ctx.neg(mu)),
        "commutant_dimension": comm.dim,
        "normalization": format_scalar(norm),
        "forms": [],
    }
    for M in comm.basis:
        form = bilinear_form(alg, M, norm, check=False)
        fd = {"form": form.triples()}
        try:
            inv = invert_form(form)
        except DegenerateFormError as err:
            inv = None
            fd["degenerate"] = {"rank": err.rank, "size": err.size, "nullspace_witness": err.witness}
        props = check_form_properties(form, inv)
        if mu in p.expected_forms:
            bad = _compare(alg, form.table, p.expected_forms[mu])
            props.add("matches expected form table", bad is None, len(p.expected_forms[mu]), bad)
        if inv is not None:
            fd["inverse"] = inv.triples()
            if mu in p.expected_inverses:
                bad = _compare(alg, inv.table, p.expected_inverses[mu])
                props.add("matches expected inverse table", bad is None, len(p.expected_inverses[mu]), bad)
            C = build_casimir(alg, inv)
            fd["casimir"] = C.to_dict()
            fd["casimir_degrees"] = sorted(_lab(p, g) for g in C.degrees())
            fd["centrality"] = verify_centrality(alg, C).to_dict()
        fd["properties"] = props.to_dict()
        out["forms"].append(fd)
    return out


def roots_section(p) -> dict:
    alg = p.algebra
    view = SimpleNamespace(algebra=alg, cartan=[alg.index[c] for c in p.cartan], cartan_labels=p.cartan_labels)
    rep = Report("cartan")
    bad = None
    for x in view.cartan:
        if alg.degrees[x] != p.ctx.zero:
            bad = bad or f"{alg.names[x]} not of degree zero"
        for y in view.cartan:
            if alg.bracket_coeffs(x, y):
                bad = bad or f"[{alg.names[x]}, {alg.names[y]}] != 0"
    rep.add("Cartan elements commute and have degree zero", bad is None, len(view.cartan) ** 2, bad)
    out = {"cartan": list(p.cartan), "labels": list(p.cartan_labels)}
    try:
        roots, zero = extract_roots(view)
    except RootError as err:
        rep.add("every basis element is a simultaneous eigenvector", False, alg.dim, str(err))
        out["checks"] = rep.to_dict()
        return out
    rep.add("every basis element is a simultaneous eigenvector", True, alg.dim)
    out["checks"] = rep.to_dict()
    out["roots"] = [[nm, _lab(p, d), str(rv)] for nm, d, rv in roots]
    out["zero_roots"] = [[nm, _lab(p, d)] for nm, d in zero]
    return out


def loop_section(p, modes=DEFAULT_MODES) -> dict:
    alg = p.algebra
    forms = {}
    for mu in p.ctx.order:
        comm = solve_commutants(alg, p.ctx.neg(mu))
        for k, M in enumerate(comm.basis):
            f = bilinear_form(alg, M, p.norm(mu), check=False)
            if not f.is_zero() and mu not in forms:
                forms[mu] = f
    ext = build_extension(alg, forms)
    rep = verify_loop_jacobi(ext, modes)
    return rep.to_dict()


def center_section(p) -> dict:
    alg = p.algebra
    cen = graded_center(alg)
    return {
        _lab(p, d): [{alg.names[k]: format_scalar(v) for k, v in vec.items()} for vec in vecs]
        for d, vecs in cen.items()
    }


def algebra_section(p) -> dict:
    alg = p.algebra
    return {
        "name": p.name,
        "params": p.params,
        "dimension": alg.dim,
        "grading": p.ctx.to_dict(),
        "space": {_lab(p, g): p.space.dims[g] for g in p.ctx.order},
        "basis": [[nm, _lab(p, d)] for nm, d in zip(alg.names, alg.degrees)],
        "normal_order": "basis order",
        "structure_constants": alg.structure_triples(),
    }


# ---------------------------------------------------------------------------

def _run(task):
    kind, p, arg = task
    if kind == "validation":
        return validation_section(p)
    if kind == "algebra":
        return algebra_section(p)
    if kind == "center":
        return center_section(p)
    if kind == "commutant":
        return commutant_section(p, arg)
    if kind == "casimir":
        return casimir_section(p, arg)
    if kind == "roots":
        return roots_section(p)
    if kind == "loop":
        return loop_section(p, arg)
    raise ValueError(kind)


def run_tasks(tasks, jobs=None) -> list:
    jobs = jobs_setting() if jobs is None else jobs
    if jobs <= 1 or len(tasks) <= 1:
        return [_run(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run, tasks))


def all_passed(doc) -> bool:
    """True when no nested report in the document has ok == False."""
    if isinstance(doc, dict):
        if doc.get("ok") is False:
            return False
        return all(all_passed(v) for v in doc.values())
    if isinstance(doc, list):
        return all(all_passed(v) for v in doc)
    return True


def full_report(p, modes=DEFAULT_MODES, jobs=None) -> dict:
    validation = validation_section(p)
    doc = {"format": "colorcas-report", "version": 1}
    if not validation.get("jacobi"):
        doc["validation"] = validation
        doc["ok"] = False
        return doc
    p.algebra  # built once, shipped to workers
    degs = list(p.ctx.order)
    tasks = [("algebra", p, None), ("center", p, None)]
    tasks += [("commutant", p, mu) for mu in degs]
    tasks += [("casimir", p, mu) for mu in degs]
    if p.cartan:
        tasks.append(("roots", p, None))
    tasks.append(("loop", p, list(modes)))
    results = run_tasks(tasks, jobs)
    it = iter(results)
    doc["algebra"] = next(it)
    doc["validation"] = validation
    doc["graded_center"] = next(it)
    doc["commutants"] = [next(it) for _ in degs]
    cas = [next(it) for _ in degs]
    doc["casimirs"] = [c for c in cas if c["commutant_dimension"]]
    if p.cartan:
        doc["roots"] = next(it)
    doc["loop_extension"] = next(it)
    doc["ok"] = all_passed(doc)
    return doc

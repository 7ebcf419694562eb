"""Exact Gaussian elimination over CycScalar on sparse rows.

Rows are ``dict[int, CycScalar]`` mapping column index to a nonzero entry.
"""
from __future__ import annotations

from .scalars import CycScalar


def _axpy(target: dict, factor: CycScalar, row: dict):
    # target -= factor * row, in place, dropping exact zeros
    for c, v in row.items():
        cur = target.get(c)
        nv = -(factor * v) if cur is None else cur - factor * v
        if nv.is_zero():
            target.pop(c, None)
        else:
            target[c] = nv


def rref(rows, col_order=None):
    """Reduced row echelon form.

    ``col_order`` fixes the pivot search order (defaults to sorted column
    indices).  Returns ``(reduced_rows, pivots)`` with ``reduced_rows[k]``
    having a 1 at ``pivots[k]`` and zeros at every other pivot column.
    """
    work = [dict(r) for r in rows if r]
    if col_order is None:
        cols = sorted({c for r in work for c in r})
    else:
        cols = list(col_order)
    rank_of = {c: k for k, c in enumerate(cols)}
    pivot_rows = []
    pivots = []
    for row in work:
        # reduce against existing pivots
        for p, prow in zip(pivots, pivot_rows):
            v = row.get(p)
            if v is not None:
                _axpy(row, v, prow)
        if not row:
            continue
        lead = min(row, key=rank_of.__getitem__)
        inv = row[lead].inverse()
        row = {c: v * inv for c, v in row.items()}
        # eliminate new pivot from existing rows
        for prow in pivot_rows:
            v = prow.get(lead)
            if v is not None:
                _axpy(prow, v, row)
        pivot_rows.append(row)
        pivots.append(lead)
    order = sorted(range(len(pivots)), key=lambda k: rank_of[pivots[k]])
    return [pivot_rows[k] for k in order], [pivots[k] for k in order]


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols: int, n: int, col_order=None):
    """Basis of {x : row . x = 0 for all rows}, in reduced form.

    Each basis vector has first nonzero entry 1 with respect to ``col_order``
    and the basis is the unique reduced echelon basis of the kernel.
    """
    if col_order is None:
        col_order = list(range(ncols))
    red, pivots = rref(rows, col_order)
    pivset = set(pivots)
    one = CycScalar.one(n)
    basis = []
    for free in col_order:
        if free in pivset:
            continue
        vec = {free: one}
        for prow, p in zip(red, pivots):
            v = prow.get(free)
            if v is not None:
                vec[p] = -v
        basis.append(vec)
    if not basis:
        return []
    red_basis, _ = rref(basis, col_order)
    return red_basis


def solve_square_inverse(matrix, n: int):
    """Inverse of a square matrix given as a list of sparse rows, or ``None`` if singular."""
    size = len(matrix)
    aug = []
    one = CycScalar.one(n)
    for i, row in enumerate(matrix):
        r = dict(row)
        r[size + i] = one
        aug.append(r)
    red, pivots = rref(aug, list(range(2 * size)))
    if len(pivots) < size or pivots[size - 1] >= size:
        return None
    return [{c - size: v for c, v in red[i].items() if c >= size} for i in range(size)]


class CoordinateReader:
    """Expresses vectors in the span of a fixed independent family.

    Built once by row reduction of the family (with an identity tracker);
    ``coords`` then costs one sparse vector-matrix product plus a residual
    check.
    """

    def __init__(self, vectors, n: int):
        self.n = n
        self.size = len(vectors)
        one = CycScalar.one(n)
        # tracker columns are encoded as negative indices to stay out of the way
        aug = []
        for k, v in enumerate(vectors):
            r = dict(v)
            r[-1 - k] = one
            aug.append(r)
        data_cols = sorted({c for v in vectors for c in v})
        tracker_cols = [-1 - k for k in range(self.size)]
        red, pivots = rref(aug, data_cols + tracker_cols)
        self.dependent = None
        if len(pivots) < self.size or any(p < 0 for p in pivots):
            # first tracker-pivot row encodes a dependency
            for row, p in zip(red, pivots):
                if p < 0:
                    self.dependent = {-1 - c: v for c, v in row.items() if c < 0}
                    break
            if self.dependent is None:
                self.dependent = {}
            return
        self.pivots = pivots
        self.data_rows = [{c: v for c, v in row.items() if c >= 0} for row in red]
        self.tracker = [{-1 - c: v for c, v in row.items() if c < 0} for row in red]

    def coords(self, vec):
        """Return ``(coefficients, residual)``; residual is empty iff ``vec`` is in the span."""
        residual = dict(vec)
        coeffs = {}
        for p, drow, trow in zip(self.pivots, self.data_rows, self.tracker):
            v = residual.get(p)
            if v is None:
                continue
            _axpy(residual, v, drow)
            for a, t in trow.items():
                cur = coeffs.get(a)
                nv = v * t if cur is None else cur + v * t
                if nv.is_zero():
                    coeffs.pop(a, None)
                else:
                    coeffs[a] = nv
        return coeffs, residual

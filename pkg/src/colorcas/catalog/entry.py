from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra import ColorAlgebra
from ..gmatrix import JForm


class RootError(ValueError):
    def __init__(self, name, cartan_name):
        self.element = name
        self.cartan = cartan_name
        super().__init__(f"{name} is not an ad-eigenvector of {cartan_name}")


@dataclass
class CatalogEntry:
    name: str
    params: dict
    algebra: ColorAlgebra
    normalization: dict  # degree -> CycScalar used for eta^degree
    expected_commutants: dict = field(default_factory=dict)  # degree -> GradedMatrix
    jform: JForm | None = None
    cartan: list = field(default_factory=list)  # basis indices
    cartan_labels: list = field(default_factory=list)  # dual basis names, one per Cartan element
    transpose_rule: tuple | None = None  # (J matrix, {degree: c}) for X J + c J X^T = 0


@dataclass(frozen=True)
class RootVector:
    """Integer coefficients on the dual basis of the Cartan elements."""

    coeffs: tuple
    labels: tuple

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        out = ""
        for c, lab in zip(self.coeffs, self.labels):
            if c == 0:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            if not out:
                out = f"{'-' if c < 0 else ''}{mag}{lab}"
            else:
                out += f" {'-' if c < 0 else '+'} {mag}{lab}"
        return out or "0"


def extract_roots(entry: CatalogEntry):
    """Simultaneous ad-eigenvalues of the non-Cartan basis elements.

    Returns ``(roots, zero_roots)``: ``roots`` lists (name, degree, RootVector)
    for nonzero roots in basis order; ``zero_roots`` lists (name, degree).
    Raises RootError if some element is not an eigenvector.
    """
    alg = entry.algebra
    labels = tuple(entry.cartan_labels)
    roots, zero_roots = [], []
    cart = set(entry.cartan)
    for x in range(alg.dim):
        if x in cart:
            continue
        vals = []
        for h in entry.cartan:
            row = alg.bracket_coeffs(h, x)
            if not row:
                vals.append(0)
                continue
            if set(row) != {x} or not row[x].is_rational():
                raise RootError(alg.names[x], alg.names[h])
            q = row[x].to_fraction()
            if q.denominator != 1:
                raise RootError(alg.names[x], alg.names[h])
            vals.append(int(q))
        rv = RootVector(tuple(vals), labels)
        if rv.is_zero():
            zero_roots.append((alg.names[x], alg.degrees[x]))
        else:
            roots.append((alg.names[x], alg.degrees[x], rv))
    return roots, zero_roots

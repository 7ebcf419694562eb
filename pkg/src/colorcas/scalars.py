"""Exact arithmetic in a cyclotomic field Q(zeta_N).

An element is stored as an integer numerator vector of length phi(N) over a
common positive denominator, i.e. a residue modulo the N-th cyclotomic
polynomial written in the power basis 1, zeta, ..., zeta^(phi-1).  Every
operation re-reduces, so equality is plain coefficient comparison.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

DEFAULT_CONDUCTOR = 12


class ScalarError(ValueError):
    pass


def _poly_divexact(num, den):
    # integer polynomials, lowest degree first; den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_poly(d))
    return tuple(poly)


class _Field:
    """Precomputed tables for Q(zeta_N)."""

    def __init__(self, n: int):
        if n < 1:
            raise ScalarError(f"conductor must be positive, got {n}")
        self.n = n
        phi_poly = cyclotomic_poly(n)
        self.phi = len(phi_poly) - 1
        # x^k mod Phi_N for k in [0, max(N, 2*phi - 1))
        top = max(n, 2 * self.phi - 1)
        powers = []
        cur = [1] + [0] * (self.phi - 1)
        for _ in range(top):
            powers.append(tuple(cur))
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                for j in range(self.phi):
                    cur[j] -= lead * phi_poly[j]
        self.powers = powers
        self.reduce_rows = [(k, powers[k]) for k in range(self.phi, 2 * self.phi - 1)]
        self.units = [k for k in range(1, n) if math.gcd(k, n) == 1] if n > 1 else []


@lru_cache(maxsize=None)
def field(n: int) -> _Field:
    return _Field(n)


def _normalize(num, den):
    g = math.gcd(den, *num)
    if den < 0:
        g = -g
    if g != 1:
        num = tuple(c // g for c in num)
        den //= g
    return num, den


class CycScalar:
    """Immutable element of Q(zeta_N)."""

    __slots__ = ("n", "num", "den", "_hash")

    def __init__(self, n: int, num, den: int = 1, _canonical: bool = False):
        self.n = n
        if not _canonical:
            f = field(n)
            num = tuple(int(c) for c in num)
            if len(num) != f.phi:
                raise ScalarError(f"expected {f.phi} coefficients for conductor {n}")
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            num, den = _normalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def rational(cls, n: int, value) -> "CycScalar":
        value = Fraction(value)
        phi = field(n).phi
        num = (value.numerator,) + (0,) * (phi - 1)
        return cls(n, num, value.denominator, _canonical=True)

    @classmethod
    def zero(cls, n: int) -> "CycScalar":
        return cls.rational(n, 0)

    @classmethod
    def one(cls, n: int) -> "CycScalar":
        return cls.rational(n, 1)

    @classmethod
    def from_fractions(cls, n: int, coeffs) -> "CycScalar":
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return cls(n, [c.numerator * (den // c.denominator) for c in coeffs], den)

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num[0] == 0 and not any(self.num)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ScalarError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def coefficients(self) -> list:
        return [Fraction(c, self.den) for c in self.num]

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CycScalar):
            if other.n != self.n:
                raise ScalarError(f"conductor mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycScalar.rational(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            num = tuple(a + b for a, b in zip(self.num, other.num))
            den = self.den
        else:
            num = tuple(a * other.den + b * self.den for a, b in zip(self.num, other.num))
            den = self.den * other.den
        num, den = _normalize(num, den)
        return CycScalar(self.n, num, den, _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.n, tuple(-a for a in self.num), self.den, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.num, other.num
        if not any(b[1:]):
            c = b[0]
            num = tuple(x * c for x in a)
        elif not any(a[1:]):
            c = a[0]
            num = tuple(x * c for x in b)
        else:
            f = field(self.n)
            phi = f.phi
            prod = [0] * (2 * phi - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        if y:
                            prod[i + j] += x * y
            res = prod[:phi]
            for k, row in f.reduce_rows:
                c = prod[k]
                if c:
                    for j, r in enumerate(row):
                        if r:
                            res[j] += c * r
            num = tuple(res)
        num, den = _normalize(num, self.den * other.den)
        return CycScalar(self.n, num, den, _canonical=True)

    __rmul__ = __mul__

    def galois(self, k: int) -> "CycScalar":
        """Apply the automorphism zeta -> zeta^k (k coprime to N)."""
        f = field(self.n)
        res = [0] * f.phi
        for j, c in enumerate(self.num):
            if c:
                for t, r in enumerate(f.powers[(j * k) % self.n]):
                    res[t] += c * r
        return CycScalar(self.n, res, self.den)

    def inverse(self) -> "CycScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return CycScalar.rational(self.n, 1 / self.to_fraction())
        # a^-1 = (product of the other conjugates) / norm(a)
        others = CycScalar.one(self.n)
        for k in field(self.n).units:
            if k != 1:
                others = others * self.galois(k)
        norm = (self * others).to_fraction()
        return others * (1 / norm)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycScalar.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CycScalar):
            return self.n == other.n and self.den == other.den and self.num == other.num
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.n, self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"CycScalar({format_scalar(self)!r}, N={self.n})"

    def __str__(self):
        return format_scalar(self)

    def __reduce__(self):
        return (CycScalar, (self.n, self.num, self.den))


def root_of_unity(n: int, k: int) -> CycScalar:
    """zeta_n^k inside Q(zeta_n)."""
    f = field(n)
    return CycScalar(n, f.powers[k % n], 1, _canonical=True)


def scalar_arith(a: CycScalar, b: CycScalar | None, kind: str) -> CycScalar:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    if kind == "neg":
        return -a
    if kind == "inv":
        return a.inverse()
    raise ValueError(f"unknown operation {kind!r}")


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<root>zeta\d+|i)|(?P<op>[-+*/^]))")


def _tokenize(text):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ScalarError(f"syntax error at {pos} in {text!r}")
        pos = m.end()
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
    return out


def _root_value(name: str, exponent: int, n: int) -> CycScalar:
    order = 4 if name == "i" else int(name[4:])
    if order < 1 or n % order:
        raise ScalarError(f"root {name} has order {order}, which does not divide conductor {n}")
    return root_of_unity(n, (n // order) * exponent)


def parse_scalar(text: str, n: int = DEFAULT_CONDUCTOR) -> CycScalar:
    """Parse a signed sum of terms such as ``"-1/2*zeta3^2 + i"``."""
    if not isinstance(text, str):
        raise ScalarError(f"scalars must be strings, got {type(text).__name__}")
    toks = _tokenize(text)
    if not toks:
        raise ScalarError("empty scalar expression")
    pos = 0
    total = CycScalar.zero(n)

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def integer():
        nonlocal pos
        kind, val = peek()
        if kind != "int":
            raise ScalarError(f"expected integer in {text!r}")
        pos += 1
        return int(val)

    def factor():
        nonlocal pos
        kind, val = peek()
        if kind == "int":
            pos += 1
            q = Fraction(int(val))
            if peek() == ("op", "/"):
                pos += 1
                d = integer()
                if d == 0:
                    raise ScalarError("zero denominator")
                q /= d
            return CycScalar.rational(n, q)
        if kind == "root":
            pos += 1
            exponent = 1
            if peek() == ("op", "^"):
                pos += 1
                sign = 1
                if peek() == ("op", "-"):
                    pos += 1
                    sign = -1
                exponent = sign * integer()
            return _root_value(val, exponent, n)
        raise ScalarError(f"unexpected token {val!r} in {text!r}")

    first = True
    while pos < len(toks):
        sign = 1
        kind, val = peek()
        if kind == "op" and val in "+-":
            pos += 1
            sign = -1 if val == "-" else 1
        elif not first:
            raise ScalarError(f"expected '+' or '-' in {text!r}")
        term = factor()
        while peek() == ("op", "*"):
            pos += 1
            term = term * factor()
        total = total + (term if sign > 0 else -term)
        first = False
    return total


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _root_name(d: int, k: int) -> str:
    if d == 4 and k == 1:
        return "i"
    return f"zeta{d}" if k == 1 else f"zeta{d}^{k}"


@lru_cache(maxsize=None)
def _subfield_basis(n: int, d: int):
    """Pivot data to read off coordinates of an element of Q(zeta_d) in Q(zeta_n)."""
    f = field(n)
    phi_d = field(d).phi
    cols = [f.powers[(n // d) * k] for k in range(phi_d)]
    # rows of the system: coordinates t; unknowns: coefficients c_k
    rows = [[Fraction(cols[k][t]) for k in range(phi_d)] for t in range(f.phi)]
    return rows, phi_d


def _subfield_coords(x: CycScalar, d: int):
    rows, m = _subfield_basis(x.n, d)
    target = x.coefficients()
    aug = [r[:] + [target[t]] for t, r in enumerate(rows)]
    piv_row = 0
    pivots = []
    for c in range(m):
        sel = next((r for r in range(piv_row, len(aug)) if aug[r][c] != 0), None)
        if sel is None:
            continue
        aug[piv_row], aug[sel] = aug[sel], aug[piv_row]
        p = aug[piv_row][c]
        aug[piv_row] = [v / p for v in aug[piv_row]]
        for r in range(len(aug)):
            if r != piv_row and aug[r][c] != 0:
                fac = aug[r][c]
                aug[r] = [a - fac * b for a, b in zip(aug[r], aug[piv_row])]
        pivots.append(c)
        piv_row += 1
    if any(aug[r][m] != 0 for r in range(piv_row, len(aug))):
        return None
    coords = [Fraction(0)] * m
    for r, c in enumerate(pivots):
        coords[c] = aug[r][m]
    return coords


def _join_terms(terms):
    out = ""
    for coeff, root in terms:
        neg = coeff < 0
        mag = -coeff if neg else coeff
        if root is None:
            body = _frac_str(mag)
        elif mag == 1:
            body = root
        else:
            body = f"{_frac_str(mag)}*{root}"
        if not out:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


def format_scalar(x: CycScalar) -> str:
    """Deterministic text form, re-parseable by :func:`parse_scalar`.

    Prefers a single term ``q*zeta_d^k`` with the smallest possible order d;
    otherwise writes the power basis of the smallest subfield Q(zeta_d)
    containing ``x``, highest power first.
    """
    if x.is_rational():
        return _frac_str(x.to_fraction())
    n = x.n
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    for d in divisors:
        for k in range(1, d):
            if math.gcd(k, d) != 1:
                continue
            y = x * root_of_unity(n, -(n // d) * k)
            if y.is_rational():
                return _join_terms([(y.to_fraction(), _root_name(d, k))])
    for d in divisors:
        coords = _subfield_coords(x, d)
        if coords is None:
            continue
        terms = [(coords[k], None if k == 0 else _root_name(d, k)) for k in range(len(coords) - 1, -1, -1) if coords[k] != 0]
        return _join_terms(terms)
    raise AssertionError("element not found in its own field")

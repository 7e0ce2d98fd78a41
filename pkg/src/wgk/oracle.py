"""Brute-force graded dimensions by exact linear algebra.

Given weighted coordinates and weighted-homogeneous equations, the dimension
of the quotient ring in a fixed degree is the number of monomials of that
degree minus the rank of the span of all monomial multiples of the equations.
Everything runs over the integers (fraction-free row reduction), so results
are exact; one reduced echelon per degree is cached so that rank and
membership queries share the elimination work.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

DEGREE_BUDGET = 200_000  # refuse degrees whose monomial count exceeds this
ROW_BUDGET = 60_000      # likewise for the number of equation-multiple rows


class OracleBudgetError(ValueError):
    """Raised when a requested degree exceeds the practical bound."""


def count_monomials(weights, degree):
    """Number of exponent vectors with the given weighted degree."""
    counts = [0] * (degree + 1)
    counts[0] = 1
    for w in weights:
        if w <= 0:
            raise ValueError("weights must be positive")
        for d in range(w, degree + 1):
            counts[d] += counts[d - w]
    return counts[degree]


def weighted_monomials(weights, degree):
    """All exponent tuples of the given weighted degree, in deterministic order."""
    n = len(weights)
    out = []
    cur = [0] * n

    def rec(i, rem):
        if i == n:
            if rem == 0:
                out.append(tuple(cur))
            return
        w = weights[i]
        if i == n - 1:
            if rem % w == 0:
                cur[i] = rem // w
                out.append(tuple(cur))
                cur[i] = 0
            return
        for e in range(rem // w + 1):
            cur[i] = e
            rec(i + 1, rem - e * w)
        cur[i] = 0
    rec(0, degree)
    return out


def _normalize_row(row):
    g = 0
    for v in row.values():
        g = gcd(g, abs(v))
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _int_row(row):
    lcm = 1
    for v in row.values():
        f = Fraction(v)
        lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    out = {}
    for c, v in row.items():
        f = Fraction(v) * lcm
        if f:
            out[c] = int(f)
    return out


class IntegerEchelon:
    """Incremental fully-reduced echelon of sparse integer rows.

    Pivot columns appear in exactly one stored row each, so reducing a row
    strictly removes pivot columns and terminates.  Insertion keeps the form
    reduced (Gauss-Jordan), making repeated membership queries cheap.
    """

    def __init__(self):
        self.rows = {}          # pivot column -> normalized row

    @property
    def rank(self):
        return len(self.rows)

    def _combine(self, row, piv_col):
        piv = self.rows[piv_col]
        a, b = piv[piv_col], row[piv_col]
        new = {}
        for c, v in row.items():
            w = a * v - b * piv.get(c, 0)
            if w:
                new[c] = w
        for c, v in piv.items():
            if c not in row:
                w = -b * v
                if w:
                    new[c] = w
        return _normalize_row(new)

    def reduce(self, row):
        """Remainder of the row against the echelon; empty means dependent."""
        row = _normalize_row({c: int(v) for c, v in row.items() if v})
        while row:
            hit = next((c for c in row if c in self.rows), None)
            if hit is None:
                break
            row = self._combine(row, hit)
        return row

    def insert(self, row):
        """Add a row; returns True when it enlarges the span."""
        red = self.reduce(row)
        if not red:
            return False
        p = min(red, key=lambda c: (abs(red[c]), c))
        for q in list(self.rows):
            other = self.rows[q]
            if p in other:
                a, b = red[p], other[p]
                new = {}
                for c, v in other.items():
                    w = a * v - b * red.get(c, 0)
                    if w:
                        new[c] = w
                for c, v in red.items():
                    if c not in other:
                        w = a * 0 - b * v
                        if w:
                            new[c] = w
                self.rows[q] = _normalize_row(new)
        self.rows[p] = red
        return True

    def contains(self, row):
        return not self.reduce(row)


def exact_rank(rows):
    """Rank over Q of a sparse matrix given as dicts col -> value."""
    ech = IntegerEchelon()
    for r in rows:
        ints = _int_row(r)
        if ints:
            ech.insert(ints)
    return ech.rank


class GradedRing:
    """Weighted coordinates with weighted-homogeneous defining equations.

    Dimension queries run the brute-force oracle; nothing here knows the
    closed-form Hilbert series, which is the point.
    """

    def __init__(self, coords, equations):
        names = [n for n, _ in coords]
        if len(set(names)) != len(names):
            raise ValueError("coordinate names must be distinct")
        self.coords = tuple((n, int(w)) for n, w in coords)
        self.index = {n: i for i, (n, _) in enumerate(self.coords)}
        self.weights = tuple(w for _, w in self.coords)
        self.equations = []
        for eq in equations:
            if eq.is_zero():
                continue
            terms = []
            for mono, coeff in sorted(eq.terms.items()):
                vec = [0] * len(self.coords)
                for var, exp in mono:
                    vec[self.index[var]] += exp
                terms.append((tuple(vec), coeff))
            deg = {sum(e * w for e, w in zip(vec, self.weights)) for vec, _ in terms}
            if len(deg) != 1:
                raise ValueError("equations must be weighted-homogeneous")
            self.equations.append((deg.pop(), terms))
        self._slices = {}

    def monomial_count(self, degree):
        return count_monomials(self.weights, degree)

    def check_budget(self, degree):
        if self.monomial_count(degree) > DEGREE_BUDGET:
            raise OracleBudgetError(
                f"degree {degree} exceeds the oracle budget "
                f"({self.monomial_count(degree)} monomials)")
        rows = sum(count_monomials(self.weights, degree - eq_deg)
                   for eq_deg, _ in self.equations if degree >= eq_deg)
        if rows > ROW_BUDGET:
            raise OracleBudgetError(
                f"degree {degree} exceeds the oracle budget ({rows} rows)")

    def _slice(self, degree):
        """Column index and reduced echelon of the ideal slice in one degree."""
        if degree not in self._slices:
            self.check_budget(degree)
            cols = {m: i for i, m in
                    enumerate(weighted_monomials(self.weights, degree))}
            ech = IntegerEchelon()
            for eq_deg, terms in self.equations:
                shift = degree - eq_deg
                if shift < 0:
                    continue
                for mult in weighted_monomials(self.weights, shift):
                    row = {}
                    for vec, coeff in terms:
                        key = tuple(a + b for a, b in zip(mult, vec))
                        col = cols[key]
                        row[col] = row.get(col, 0) + coeff
                    ech.insert(_int_row(row))
            self._slices[degree] = (cols, ech)
        return self._slices[degree]

    def ideal_rank(self, degree):
        """Rank of the degree slice spanned by monomial multiples of the equations."""
        return self._slice(degree)[1].rank

    def dimension(self, degree):
        """dim of the degree piece of coordinate ring / ideal."""
        if degree < 0:
            return 0
        total = self.monomial_count(degree)
        if not self.equations:
            return total
        return total - self.ideal_rank(degree)

    def contains_monomial(self, exponents):
        """Does the given monomial lie in the span of the ideal slice?"""
        if not self.equations:
            return False
        degree = sum(e * w for e, w in zip(exponents, self.weights))
        cols, ech = self._slice(degree)
        return ech.contains({cols[tuple(exponents)]: 1})


@lru_cache(maxsize=None)
def graded_dimension(family, weight_data, degree):
    """Oracle dimension of the family's coordinate ring in one degree.

    ``family`` is "wgr25" or "wogr510"; ``weight_data`` supplies the coordinate
    weights (GrWeights or OGrWeights).
    """
    from . import wgrass25, wogr510
    if family == "wgr25":
        coords = [(wgrass25.pair_name(i, j),
                   (weight_data.w2[i - 1] + weight_data.w2[j - 1]) // 2)
                  for i, j in wgrass25.PAIRS]
        ring = GradedRing(coords, wgrass25.pfaffian_equations())
    elif family == "wogr510":
        coords = [(name, weight_data.vertex_weight(v))
                  for name, v in zip(wogr510.VERTEX_NAMES, wogr510.VERTICES)]
        ring = GradedRing(coords, wogr510.equations())
    else:
        raise ValueError(f"unknown family {family!r}")
    return ring.dimension(degree)

"""Exact arithmetic for sparse Laurent polynomials and rational Hilbert series.

Everything here is over the rationals (``fractions.Fraction``); there is no
floating point anywhere.  A Hilbert series is stored as a Laurent-polynomial
numerator over a multiset of positive integers ``{a}``, meaning division by
``prod (1 - t^a)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod


class SeriesError(ValueError):
    """Raised when a series operation is applied outside its domain."""


F0 = Fraction(0)
F1 = Fraction(1)


class LaurentPoly:
    """Sparse Laurent polynomial in one variable t.

    Coefficients are ``Fraction``, exponents are (possibly negative) ints.
    Zero coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for e, c in items:
                c = Fraction(c)
                if c:
                    e = int(e)
                    v = data.get(e, F0) + c
                    if v:
                        data[e] = v
                    else:
                        data.pop(e, None)
        self.coeffs = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def term(cls, coeff, exponent=0):
        return cls({exponent: coeff})

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def min_exp(self):
        if not self.coeffs:
            raise SeriesError("zero polynomial has no minimal exponent")
        return min(self.coeffs)

    def max_exp(self):
        if not self.coeffs:
            raise SeriesError("zero polynomial has no maximal exponent")
        return max(self.coeffs)

    def __getitem__(self, e):
        return self.coeffs.get(e, F0)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def items(self):
        return sorted(self.coeffs.items())

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = out.get(e, F0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        res = LaurentPoly()
        res.coeffs = out
        return res

    def __neg__(self):
        res = LaurentPoly()
        res.coeffs = {e: -c for e, c in self.coeffs.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                v = out.get(e, F0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        res = LaurentPoly()
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return LaurentPoly()
        res = LaurentPoly()
        res.coeffs = {e: c * v for e, v in self.coeffs.items()}
        return res

    def shift(self, k):
        """Multiply by t^k."""
        res = LaurentPoly()
        res.coeffs = {e + k: c for e, c in self.coeffs.items()}
        return res

    def reciprocal(self):
        """Substitute t -> 1/t."""
        res = LaurentPoly()
        res.coeffs = {-e: c for e, c in self.coeffs.items()}
        return res

    def __call__(self, value):
        value = Fraction(value)
        if value == 0 and any(e < 0 for e in self.coeffs):
            raise SeriesError("cannot evaluate negative exponents at 0")
        return sum((c * value ** e for e, c in self.coeffs.items()), F0)

    def divexact(self, other):
        """Exact quotient self/other, or None when the division leaves a remainder."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        bmin = other.min_exp()
        bmax = other.max_exp()
        blead = other.coeffs[bmin]
        bitems = list(other.coeffs.items())
        max_qexp = self.max_exp() - bmax
        rem = dict(self.coeffs)
        quot = {}
        while rem:
            rmin = min(rem)
            e = rmin - bmin
            if e > max_qexp:
                return None
            c = rem[rmin] / blead
            quot[e] = c
            for be, bc in bitems:
                k = e + be
                v = rem.get(k, F0) - c * bc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        res = LaurentPoly()
        res.coeffs = quot
        return res

    # -- display -----------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for e, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                tpow = "t" if e == 1 else f"t^{e}"
                body = tpow if mag == 1 else f"{mag}{tpow}"
            bits.append((sign, body))
        first_sign, first_body = bits[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in bits[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPoly({self})"

    def to_json(self):
        """Sorted (exponent, numerator, denominator) triples."""
        return [[e, c.numerator, c.denominator] for e, c in self.items()]

    @classmethod
    def from_json(cls, data):
        return cls({int(e): Fraction(int(n), int(d)) for e, n, d in data})


def one_minus(a):
    """The factor 1 - t^a."""
    if a < 1:
        raise SeriesError(f"factor exponent must be positive, got {a}")
    return LaurentPoly({0: 1, a: -1})


def denominator_poly(denominator):
    """Expand prod (1 - t^a) over the multiset."""
    p = LaurentPoly.one()
    for a in denominator:
        p = p * one_minus(a)
    return p


class HilbertSeries:
    """Rational function numerator / prod (1 - t^a), a ranging over a multiset.

    The denominator multiset is stored sorted.  Comparison is exact, via
    cross-multiplied numerators; expansion is exact rational arithmetic.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=()):
        if not isinstance(numerator, LaurentPoly):
            numerator = LaurentPoly(numerator)
        denominator = tuple(sorted(int(a) for a in denominator))
        if any(a < 1 for a in denominator):
            raise SeriesError("denominator entries must be positive integers")
        self.numerator = numerator
        self.denominator = denominator

    # -- algebra -----------------------------------------------------------

    def series_equal(self, other):
        """Exact equality as rational functions (never truncated comparison)."""
        return (self.numerator * denominator_poly(other.denominator)
                == other.numerator * denominator_poly(self.denominator))

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self.series_equal(other)

    def __hash__(self):
        c = self.canonical()
        return hash((c.numerator, c.denominator))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HilbertSeries(LaurentPoly.term(other))
        num = (self.numerator * denominator_poly(other.denominator)
               + other.numerator * denominator_poly(self.denominator))
        return HilbertSeries(num, self.denominator + other.denominator).canonical()

    __radd__ = __add__

    def scale(self, c):
        return HilbertSeries(self.numerator.scale(c), self.denominator)

    def mul_poly(self, p):
        return HilbertSeries(self.numerator * p, self.denominator)

    def over(self, extra):
        """Extend the denominator by further (1 - t^a) factors."""
        return HilbertSeries(self.numerator, self.denominator + tuple(extra))

    def canonical(self):
        """Cancel (1 - t^a) pairs greedily by exact polynomial division."""
        num = self.numerator
        denom = list(self.denominator)
        changed = True
        while changed and not num.is_zero():
            changed = False
            for a in sorted(set(denom)):
                q = num.divexact(one_minus(a))
                if q is not None:
                    num = q
                    denom.remove(a)
                    changed = True
                    break
        return HilbertSeries(num, denom)

    # -- analysis ------------------------------------------------------------

    def expand(self, order):
        """Exact power-series coefficients c_0..c_order.

        Rejects input whose negative-exponent numerator terms do not cancel in
        the expansion (the series is then not a power series).
        """
        if order < 0:
            raise SeriesError("expansion order must be >= 0")
        if self.numerator.is_zero():
            return [F0] * (order + 1)
        start = min(0, self.numerator.min_exp())
        dp = denominator_poly(self.denominator).coeffs
        pitems = [(e, c) for e, c in dp.items() if e > 0]
        coeffs = {}
        for n in range(start, order + 1):
            acc = self.numerator[n]
            for e, c in pitems:
                if n - e >= start:
                    acc -= c * coeffs.get(n - e, F0)
            coeffs[n] = acc
        for n in range(start, 0):
            if coeffs[n]:
                raise SeriesError(
                    "numerator with negative exponents not cleared by expansion")
        return [coeffs.get(n, F0) for n in range(order + 1)]

    def coefficient(self, n):
        return self.expand(n)[n]

    def pole_order_at_one(self):
        """Order of the pole at t = 1."""
        if self.numerator.is_zero():
            raise SeriesError("zero series has no pole order")
        num = self.numerator
        v = 0
        while True:
            q = num.divexact(one_minus(1))
            if q is None:
                break
            num = q
            v += 1
        return len(self.denominator) - v

    def intersection_number(self, n):
        """Exact value of (1-t)^{n+1} * H at t = 1 when the pole order is n+1.

        This is the degree of the polarizing class on an n-fold with Hilbert
        series H.
        """
        if self.numerator.is_zero():
            raise SeriesError("zero series has no intersection number")
        num = self.numerator
        v = 0
        while True:
            q = num.divexact(one_minus(1))
            if q is None:
                break
            num = q
            v += 1
        order = len(self.denominator) - v
        if order != n + 1:
            raise SeriesError(
                f"pole order at t=1 is {order}, expected {n + 1}")
        return num(1) / prod(self.denominator, start=1)

    def hilbert_numerator(self, denominator):
        """H * prod (1 - t^a) over the given multiset, as a Laurent polynomial.

        Exact division is enforced; when the product is not a polynomial the
        denominator does not clear the series and an error is raised.
        """
        denominator = tuple(denominator)
        if not denominator:
            raise SeriesError("denominator multiset must be nonempty")
        num = self.numerator * denominator_poly(denominator)
        for a in self.denominator:
            q = num.divexact(one_minus(a))
            if q is None:
                raise SeriesError("denominator does not clear series")
            num = q
        return num

    # -- display -------------------------------------------------------------

    def __str__(self):
        denom = "".join(f"(1-t^{a})" if a > 1 else "(1-t)" for a in self.denominator)
        if not denom:
            return str(self.numerator)
        return f"({self.numerator}) / {denom}"

    def __repr__(self):
        return f"HilbertSeries({self})"

    def to_json(self):
        return {"numerator": self.numerator.to_json(),
                "denominator": list(self.denominator)}

    @classmethod
    def from_json(cls, data):
        return cls(LaurentPoly.from_json(data["numerator"]),
                   data.get("denominator", ()))


# Module-level forms of the operations, convenient for callers that work with
# bare series values.

def expand(series, order):
    return series.expand(order)


def hilbert_numerator(series, denominator):
    return series.hilbert_numerator(denominator)


def intersection_number(series, n):
    return series.intersection_number(n)


def binom3(m):
    """m(m-1)(m-2)/6 for any integer m; vanishes for 0 <= m < 3."""
    m = int(m)
    num = m * (m - 1) * (m - 2)
    assert num % 6 == 0
    return num // 6


def geometric(weights):
    """Free graded series 1 / prod (1 - t^a)."""
    return HilbertSeries(LaurentPoly.one(), weights)

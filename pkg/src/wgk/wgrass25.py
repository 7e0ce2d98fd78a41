"""Weighted Gr(2,5): weights, Pfaffian equations, Hilbert data, charts.

The ambient family lives in the 10 coordinates x_ij (i<j) of a generic 5x5
skew matrix and is cut out by its five 4x4 Pfaffians.  Weight data is five
half-integers (stored doubled) plus an overall weight that is absorbed into
the half-integers on construction, so the internal normal form always has
overall weight zero.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .polynomials import MPoly
from .series import HilbertSeries, LaurentPoly, binom3

PAIRS = tuple((i, j) for i in range(1, 6) for j in range(i + 1, 6))


def pair_name(i, j):
    return f"x{min(i, j)}{max(i, j)}"


def skew_entry(i, j):
    """x_ij as a signed variable of the generic skew matrix (x_ji = -x_ij)."""
    if i == j:
        return MPoly()
    v = MPoly.var(pair_name(i, j))
    return v if i < j else -v


def pfaffian_equations():
    """The five 4x4 Pfaffians Pf_1..Pf_5 of the generic 5x5 skew matrix.

    Pf_k omits index k; signs alternate so that the vector (Pf_1,..,Pf_5)
    satisfies M * Pf(M) = 0 identically.  Pf_5 = x12*x34 - x13*x24 + x14*x23.
    """
    pfs = []
    for k in range(1, 6):
        a, b, c, d = [i for i in range(1, 6) if i != k]
        core = (skew_entry(a, b) * skew_entry(c, d)
                - skew_entry(a, c) * skew_entry(b, d)
                + skew_entry(a, d) * skew_entry(b, c))
        pfs.append(core if k % 2 == 1 else -core)
    return pfs


def pfaffians_at(matrix):
    """Evaluate Pf_1..Pf_5 at a rational skew matrix given as {(i,j): value}, i<j."""
    assign = {pair_name(i, j): Fraction(matrix.get((i, j), 0)) for i, j in PAIRS}
    return [p.evaluate(assign) for p in pfaffian_equations()]


@dataclass(frozen=True)
class Chart:
    """Affine orbifold chart: label, cyclic group order, raw local weights.

    ``order`` equals the ambient weight of the labelling coordinate; the raw
    integer local weights are reduced mod ``order`` only at analysis time.
    """
    label: str
    order: int
    local_weights: tuple

    def residues(self):
        return tuple(w % self.order for w in self.local_weights)


@dataclass(frozen=True)
class GrNumerology:
    d: Fraction
    pfaffian_degrees: tuple
    syzygy_degrees: tuple
    adjunction: int
    canonical: int


@dataclass(frozen=True)
class GrWeights:
    """Weight data (w_1..w_5; u) in the normal form u = 0, w half-integers.

    ``w2`` holds the doubled weights, canonically sorted.  All five doubled
    weights share one parity and every pairwise sum is positive.
    """

    w2: tuple

    def __post_init__(self):
        w2 = tuple(sorted(int(v) for v in self.w2))
        if len(w2) != 5:
            raise ValueError("need exactly five weights")
        if len({v % 2 for v in w2}) != 1:
            raise ValueError("doubled weights must share one parity")
        if w2[0] + w2[1] <= 0:
            raise ValueError("every pairwise weight sum must be positive")
        object.__setattr__(self, "w2", w2)

    @classmethod
    def of(cls, w2, u2=0):
        """Build from doubled weights and doubled overall weight, absorbing u."""
        u2 = int(u2)
        if u2 % 2:
            raise ValueError("overall weight must be an integer (doubled value even)")
        return cls(tuple(int(v) + u2 // 2 for v in w2))

    @classmethod
    def from_fractions(cls, ws, u=0):
        w2 = []
        for w in ws:
            v = Fraction(w) * 2
            if v.denominator != 1:
                raise ValueError(f"weight {w} is not a half-integer")
            w2.append(int(v))
        u2 = Fraction(u) * 2
        if u2.denominator != 1:
            raise ValueError(f"overall weight {u} is not an integer")
        return cls.of(tuple(w2), int(u2))

    # -- basic numerology ----------------------------------------------------

    def weights(self):
        return tuple(Fraction(v, 2) for v in self.w2)

    def d2(self):
        return sum(self.w2)

    def plucker_weights(self):
        """The multiset {w_i + w_j} of the ten coordinate weights."""
        return tuple(sorted((self.w2[i] + self.w2[j]) // 2
                            for i in range(5) for j in range(i + 1, 5)))

    def numerology(self):
        d2 = self.d2()
        pf = tuple(sorted((d2 - v) // 2 for v in self.w2))
        syz = tuple(sorted((d2 + v) // 2 for v in self.w2))
        return GrNumerology(d=Fraction(d2, 2), pfaffian_degrees=pf,
                            syzygy_degrees=syz, adjunction=d2, canonical=-d2)

    def hilbert_series(self):
        """Closed form: (1 - sum t^{d-w_i} + sum t^{d+w_i} - t^{2d}) / prod(1-t^a)."""
        d2 = self.d2()
        num = {0: Fraction(1)}
        for v in self.w2:
            e = (d2 - v) // 2
            num[e] = num.get(e, Fraction(0)) - 1
            e = (d2 + v) // 2
            num[e] = num.get(e, Fraction(0)) + 1
        num[d2] = num.get(d2, Fraction(0)) - 1
        return HilbertSeries(LaurentPoly(num), self.plucker_weights())

    def degree(self):
        d2 = self.d2()
        top = (sum(binom3((d2 - v) // 2) for v in self.w2)
               - sum(binom3((d2 + v) // 2) for v in self.w2)
               + binom3(d2))
        return Fraction(top, prod(self.plucker_weights()))

    def charts(self):
        """For each pair (i,j): order w_i + w_j, local weights w_i+w_k, w_j+w_k."""
        out = []
        for i, j in PAIRS:
            r = (self.w2[i - 1] + self.w2[j - 1]) // 2
            rest = [k for k in range(1, 6) if k not in (i, j)]
            local = tuple((self.w2[i - 1] + self.w2[k - 1]) // 2 for k in rest) \
                + tuple((self.w2[j - 1] + self.w2[k - 1]) // 2 for k in rest)
            out.append(Chart(label=pair_name(i, j), order=r, local_weights=local))
        return out

    def is_well_formed(self):
        """Chart-gcd criterion: effective action and no quasi-reflections.

        Returns (flag, witness); the witness names the failing chart and gcd.
        """
        return charts_well_formed(self.charts())

    def to_json(self):
        return {"w2": list(self.w2), "u2": 0}

    def __str__(self):
        ws = ",".join(str(Fraction(v, 2)) for v in self.w2)
        return f"wGr(2,5; w=({ws}))"


def charts_well_formed(chart_list):
    for ch in chart_list:
        r = ch.order
        if r == 1:
            continue
        g = gcd(r, *ch.local_weights)
        if g != 1:
            return False, f"chart {ch.label}: gcd(order {r}, local weights) = {g}"
        for k in range(len(ch.local_weights)):
            others = ch.local_weights[:k] + ch.local_weights[k + 1:]
            g = gcd(r, *others)
            if g != 1:
                return False, (f"chart {ch.label}: omitting local weight "
                               f"{ch.local_weights[k]} leaves gcd {g} (quasi-reflection)")
    return True, None


def fit_pfaffian_weights(degree_matrix):
    """Solve d_ij = w_i + w_j over half-integers; diagonal entries are ignored.

    Returns the unique solution as a tuple of Fractions, or None when the
    system is inconsistent.
    """
    d = {}
    for i in range(5):
        for j in range(5):
            if i != j:
                d[(i, j)] = Fraction(degree_matrix[i][j])
    for i in range(5):
        for j in range(5):
            if i != j and d[(i, j)] != d[(j, i)]:
                return None
    w = [None] * 5
    w[0] = (d[(0, 1)] + d[(0, 2)] - d[(1, 2)]) / 2
    for j in range(1, 5):
        w[j] = d[(0, j)] - w[0]
    for i in range(5):
        for j in range(i + 1, 5):
            if w[i] + w[j] != d[(i, j)]:
                return None
    return tuple(w)


def _minor(i, j):
    """x_ij at the rank-2 locus: a_i b_j - a_j b_i."""
    ai, aj = MPoly.var(f"a{i}"), MPoly.var(f"a{j}")
    bi, bj = MPoly.var(f"b{i}"), MPoly.var(f"b{j}")
    return ai * bj - aj * bi


def verify_gr_identities(pfaffians=None, rng_seed=2025):
    """Symbolic identity suite for the Pfaffian family.

    (a) M * Pf(M) = 0 as five cubics in the x_ij;
    (b) the ten relations x_ij s_k - x_ik s_j + x_jk s_i vanish identically
        after s_i -> (a_i, b_i), x_ij -> a_i b_j - a_j b_i;
    (c) each Pfaffian vanishes under x_ij -> a_i b_j - a_j b_i;
    (d) a numeric spot check of (a) at a random rational skew matrix.
    Any failure indicates a sign-convention bug and is reported per identity.
    """
    pfs = list(pfaffians) if pfaffians is not None else pfaffian_equations()
    checks = []

    for i in range(1, 6):
        combo = MPoly()
        for j in range(1, 6):
            combo = combo + skew_entry(i, j) * pfs[j - 1]
        checks.append((f"(a) row {i} of M*Pf(M)", combo.is_zero()))

    minors = {pair_name(i, j): _minor(i, j) for i, j in PAIRS}
    for i, j, k in itertools.combinations(range(1, 6), 3):
        for col, letter in enumerate("ab"):
            rel = (minors[pair_name(i, j)] * MPoly.var(f"{letter}{k}")
                   - minors[pair_name(i, k)] * MPoly.var(f"{letter}{j}")
                   + minors[pair_name(j, k)] * MPoly.var(f"{letter}{i}"))
            checks.append((f"(b) relation ({i},{j},{k}) component {col}", rel.is_zero()))

    for idx, p in enumerate(pfs, start=1):
        checks.append((f"(c) Pf_{idx} on rank-2 locus", p.substitute(minors).is_zero()))

    rng = random.Random(rng_seed)
    matrix = {(i, j): Fraction(rng.randint(-9, 9), rng.randint(1, 9))
              for i, j in PAIRS}
    assign = {pair_name(i, j): matrix[(i, j)] for i, j in PAIRS}
    pf_vals = [p.evaluate(assign) for p in pfs]
    ok = True
    for i in range(1, 6):
        total = Fraction(0)
        for j in range(1, 6):
            if i == j:
                continue
            v = matrix[(i, j)] if i < j else -matrix[(j, i)]
            total += v * pf_vals[j - 1]
        ok = ok and total == 0
    checks.append(("(d) numeric spot check of M*Pf(M)", ok))

    return {"checks": checks, "ok": all(flag for _, flag in checks)}

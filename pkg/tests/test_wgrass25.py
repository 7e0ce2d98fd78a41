"""The codimension-3 Pfaffian family: weights, equations, Hilbert data."""

import random
from fractions import Fraction

import pytest

from wgk.oracle import graded_dimension
from wgk.series import LaurentPoly
from wgk.wgrass25 import (GrWeights, fit_pfaffian_weights, pfaffian_equations,
                          pfaffians_at, verify_gr_identities)

HALF = ["1/2"] * 5
W1 = GrWeights.from_fractions(["1/2"] * 4 + ["3/2"])
W2 = GrWeights.from_fractions(["1/2"] * 3 + ["3/2"] * 2)
STRAIGHT = GrWeights.from_fractions(HALF)


def test_weight_validation():
    with pytest.raises(ValueError, match="parity"):
        GrWeights((1, 1, 1, 1, 2))
    with pytest.raises(ValueError, match="positive"):
        GrWeights((-3, 1, 1, 1, 1))
    with pytest.raises(ValueError, match="five"):
        GrWeights((1, 1, 1))


def test_u_absorption():
    # integral weights (0,0,0,0,0) with u=1 is the straight family
    assert GrWeights.of((0, 0, 0, 0, 0), 2) == STRAIGHT
    assert GrWeights.of((0, 0, 0, 0, 2), 2) == W1
    with pytest.raises(ValueError, match="integer"):
        GrWeights.of((1, 1, 1, 1, 1), 1)


def test_plucker_weights():
    assert STRAIGHT.plucker_weights() == (1,) * 10
    assert W1.plucker_weights() == (1,) * 6 + (2,) * 4
    assert W2.plucker_weights() == (1, 1, 1, 2, 2, 2, 2, 2, 2, 3)


def test_numerology():
    n1 = W1.numerology()
    assert n1.pfaffian_degrees == (2, 3, 3, 3, 3)
    assert n1.adjunction == 7
    assert n1.canonical == -7
    assert W2.numerology().pfaffian_degrees == (3, 3, 4, 4, 4)
    n0 = STRAIGHT.numerology()
    assert n0.d == Fraction(5, 2)
    assert n0.pfaffian_degrees == (2,) * 5
    assert n0.canonical == -5


def test_adjunction_pairs_with_dual_syzygy_degrees():
    for w in (STRAIGHT, W1, W2):
        n = w.numerology()
        for pf, syz in zip(n.pfaffian_degrees, reversed(n.syzygy_degrees)):
            assert pf + syz == n.adjunction


def test_adjunction_bookkeeping():
    # minus the sum of coordinate weights plus the adjunction number equals
    # the canonical degree: -4d + 2d = -2d
    rng = random.Random(19)
    for _ in range(50):
        w = random_gr_weights(rng)
        n = w.numerology()
        assert -sum(w.plucker_weights()) + n.adjunction == n.canonical


def test_hilbert_series_closed_forms():
    assert STRAIGHT.hilbert_series().numerator == LaurentPoly(
        {0: 1, 2: -5, 3: 5, 5: -1})
    assert W1.hilbert_series().numerator == LaurentPoly(
        {0: 1, 2: -1, 3: -4, 4: 4, 5: 1, 7: -1})
    assert W1.hilbert_series().coefficient(1) == 6


def test_hilbert_numerator_consistency():
    for w in (STRAIGHT, W1, W2):
        series = w.hilbert_series()
        assert series.hilbert_numerator(w.plucker_weights()) == series.numerator


def test_numerator_is_alternating_sum_over_degree_banks():
    for w in (STRAIGHT, W1, W2, GrWeights((1, 1, 3, 3, 5))):
        n = w.numerology()
        terms = [(0, 1), (n.adjunction, -1)]
        terms.extend((e, -1) for e in n.pfaffian_degrees)
        terms.extend((e, 1) for e in n.syzygy_degrees)
        assert LaurentPoly(terms) == w.hilbert_series().numerator


def test_degree():
    assert STRAIGHT.degree() == 5
    assert W1.degree() == Fraction(13, 16)      # (4 - 26 + 35) / 16
    assert W2.degree() == Fraction(7, 48)       # (14 - 70 + 84) / 192
    # cross-checks against the worked sections
    assert W1.degree() * 2 ** 3 == Fraction(13, 2)
    assert W2.degree() * 2 ** 5 == Fraction(14, 3)


def test_degree_equals_intersection_number():
    for w in (STRAIGHT, W1, W2, GrWeights((2, 2, 2, 4, 4))):
        assert w.degree() == w.hilbert_series().intersection_number(6)


def test_pfaffian_equations_fixed_signs():
    pf5 = pfaffian_equations()[4]
    x12, x34 = "x12", "x34"
    expect = {(("x12", 1), ("x34", 1)): Fraction(1),
              (("x13", 1), ("x24", 1)): Fraction(-1),
              (("x14", 1), ("x23", 1)): Fraction(1)}
    assert pf5.terms == expect


def test_pfaffians_at_elementary_matrix():
    vals = pfaffians_at({(1, 2): 1, (3, 4): 1})
    assert vals == [0, 0, 0, 0, 1]


def test_identities_all_pass():
    report = verify_gr_identities()
    assert report["ok"]
    assert len(report["checks"]) == 31      # 5 + 20 + 5 + 1


def test_identities_catch_a_corrupted_sign():
    pfs = list(pfaffian_equations())
    pfs[2] = -pfs[2]
    report = verify_gr_identities(pfaffians=pfs)
    assert not report["ok"]
    assert any(name.startswith("(a)") and not ok
               for name, ok in report["checks"])


def test_charts():
    charts = {ch.label: ch for ch in W1.charts()}
    assert charts["x45"].order == 2
    assert charts["x45"].local_weights == (1, 1, 1, 2, 2, 2)
    charts2 = {ch.label: ch for ch in W2.charts()}
    assert charts2["x45"].order == 3
    assert charts2["x45"].local_weights == (2, 2, 2, 2, 2, 2)
    assert all(ch.order == 1 for ch in STRAIGHT.charts())


def test_well_formedness():
    assert W1.is_well_formed() == (True, None)
    assert STRAIGHT.is_well_formed() == (True, None)
    flag, witness = GrWeights((2, 2, 2, 2, 2)).is_well_formed()
    assert not flag and "gcd" in witness


def test_fit_pfaffian_weights():
    rows = [[0, 1, 1, 1, 2],
            [1, 0, 1, 1, 2],
            [1, 1, 0, 1, 2],
            [1, 1, 1, 0, 2],
            [2, 2, 2, 2, 0]]
    assert fit_pfaffian_weights(rows) == tuple(
        Fraction(x, 2) for x in (1, 1, 1, 1, 3))
    ones = [[1] * 5 for _ in range(5)]
    assert fit_pfaffian_weights(ones) == (Fraction(1, 2),) * 5
    bad = [row[:] for row in ones]
    bad[3][4] = bad[4][3] = 2
    assert fit_pfaffian_weights(bad) is None


def test_fit_roundtrip_on_valid_weights():
    rng = random.Random(7)
    for _ in range(25):
        w = sorted(rng.choice([1, 1, 1, 3, 3, 5]) for _ in range(5))
        try:
            gw = GrWeights(tuple(w))
        except ValueError:
            continue
        matrix = [[0] * 5 for _ in range(5)]
        ws = gw.weights()
        for i in range(5):
            for j in range(5):
                if i != j:
                    matrix[i][j] = ws[i] + ws[j]
        assert fit_pfaffian_weights(matrix) == ws


def random_gr_weights(rng, max_w2=8):
    while True:
        parity = rng.choice((0, 1))
        w2 = sorted(rng.randrange(-max_w2 + ((-max_w2 - parity) % 2),
                                  max_w2 + 1, 2) for _ in range(5))
        try:
            return GrWeights(tuple(w2))
        except ValueError:
            continue


def test_gorenstein_symmetry_of_numerator():
    rng = random.Random(11)
    for _ in range(200):
        w = random_gr_weights(rng)
        num = w.hilbert_series().numerator
        top = w.numerology().adjunction
        assert num.max_exp() == top
        for e, c in num.coeffs.items():
            assert c == -num[top - e]


def test_expansion_matches_brute_force_oracle():
    for w, depth in ((STRAIGHT, 4), (W1, 5), (W2, 5)):
        closed = w.hilbert_series().expand(depth)
        for m in range(depth + 1):
            assert graded_dimension("wgr25", w, m) == closed[m]

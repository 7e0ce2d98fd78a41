"""Exact series arithmetic: expansion, numerators, intersection numbers."""

from fractions import Fraction

import pytest

from wgk.series import (HilbertSeries, LaurentPoly, SeriesError, binom3,
                        denominator_poly, expand, geometric,
                        hilbert_numerator, intersection_number, one_minus)


def F(x):
    return Fraction(x)


def test_geometric_square_expansion():
    h = geometric((1, 1))
    assert h.expand(3) == [1, 2, 3, 4]


def test_canonical_threefold_expansion():
    # regular 3-fold of general type with genus 7, K^3 = 21, two half points
    num = LaurentPoly({0: 1, 1: 4, 2: 10, 3: 12, 4: 10, 5: 4, 6: 1})
    h = HilbertSeries(num, (1, 1, 1, 2))
    assert [int(c) for c in h.expand(8)] == [1, 7, 29, 83, 190, 370, 645, 1035, 1562]


def test_straight_plucker_series_expansion():
    # independent oracle: dim of degree-m piece is (m+1)(m+2)^2(m+3)^2(m+4)/144
    h = HilbertSeries(LaurentPoly({0: 1, 2: -5, 3: 5, 5: -1}), (1,) * 10)
    got = [int(c) for c in h.expand(3)]
    want = [(m + 1) * (m + 2) ** 2 * (m + 3) ** 2 * (m + 4) // 144
            for m in range(4)]
    assert want == [1, 10, 50, 175]
    assert got == want


def test_expansion_is_linear_and_multiplicative():
    h1 = HilbertSeries(LaurentPoly({0: 1, 3: 2}), (1, 2))
    h2 = HilbertSeries(LaurentPoly({1: 1}), (1, 1, 5))
    n = 12
    s1, s2 = h1.expand(n), h2.expand(n)
    assert (h1 + h2).expand(n) == [a + b for a, b in zip(s1, s2)]
    prod = HilbertSeries(h1.numerator * h2.numerator,
                         h1.denominator + h2.denominator)
    conv = [sum(s1[k] * s2[m - k] for k in range(m + 1)) for m in range(n + 1)]
    assert prod.expand(n) == conv


def test_expand_rejects_uncleared_negative_exponents():
    h = HilbertSeries(LaurentPoly({-1: 1}), (1,))
    with pytest.raises(SeriesError):
        h.expand(4)


def test_laurent_shift_clears_negative_exponents():
    p = LaurentPoly({-1: 1, 0: 1})
    ok = HilbertSeries(p.shift(1), (1,))
    assert [int(c) for c in ok.expand(2)] == [1, 2, 2]


def test_hilbert_numerator_projective_space():
    assert geometric((1, 1, 1)).hilbert_numerator((1, 1, 1)) == LaurentPoly.one()


def test_hilbert_numerator_canonical_threefold():
    num = LaurentPoly({0: 1, 1: 4, 2: 10, 3: 12, 4: 10, 5: 4, 6: 1})
    h = HilbertSeries(num, (1, 1, 1, 2))
    cleared = h.hilbert_numerator((1,) * 7 + (2, 2))
    prefix = {0: 1, 2: -1, 3: -8, 4: 7, 5: 8, 7: -8}
    for e, c in prefix.items():
        assert cleared[e] == c


def test_hilbert_numerator_cy_threefold():
    num = LaurentPoly({0: 1, 1: -2, 2: 3, 3: -1, 4: -1, 5: 1, 6: 1, 7: -3,
                       8: 2, 9: -1})
    h = HilbertSeries(num, (1, 1, 1, 1, 5))
    assert h.hilbert_numerator((1, 1, 2, 2, 5)) == LaurentPoly(
        {0: 1, 3: 3, 5: -2, 6: 2, 8: -3, 11: -1})


def test_hilbert_numerator_rejects_non_clearing_denominator():
    h = geometric((3,))
    with pytest.raises(SeriesError, match="does not clear"):
        h.hilbert_numerator((2,))


def test_numerator_roundtrip_reproduces_expansion():
    h = HilbertSeries(LaurentPoly({0: 1, 4: 2, 7: -1}), (1, 1, 2, 3))
    num = h.hilbert_numerator((1, 2, 2, 3, 5))
    back = HilbertSeries(num, (1, 2, 2, 3, 5))
    assert back.expand(30) == h.expand(30)
    assert back.series_equal(h)


def test_intersection_number_projective_space():
    assert geometric((1, 1, 1, 1)).intersection_number(3) == 1


def test_intersection_number_cy_example():
    num = LaurentPoly({0: 1, 1: -2, 2: 3, 3: -1, 4: -1, 5: 1, 6: 1, 7: -3,
                       8: 2, 9: -1})
    h = HilbertSeries(num, (1, 1, 1, 1, 5))
    assert h.intersection_number(3) == F("6/5")


def test_intersection_number_fano_section():
    from wgk.wgrass25 import GrWeights
    amb = GrWeights.from_fractions(["1/2"] * 4 + ["3/2"]).hilbert_series()
    section = amb.mul_poly(denominator_poly((2, 2, 2)))
    assert section.intersection_number(3) == F("13/2")


def test_intersection_number_pole_mismatch_names_actual_order():
    with pytest.raises(SeriesError, match="pole order at t=1 is 4"):
        geometric((1, 1, 1, 1)).intersection_number(2)


def test_intersection_number_cone_scaling():
    h = HilbertSeries(LaurentPoly({0: 2, 1: 1}), (1, 2, 3))
    for a in (1, 2, 5):
        assert h.over((a,)).intersection_number(3) == h.intersection_number(2) / a


def test_binom3():
    assert binom3(2) == 0
    assert binom3(0) == 0
    assert binom3(5) == 10
    assert binom3(7) == 35
    assert binom3(-1) == -1


def test_module_level_wrappers():
    h = geometric((1, 1))
    assert expand(h, 2) == [1, 2, 3]
    assert hilbert_numerator(h, (1, 1)) == LaurentPoly.one()
    assert intersection_number(h, 1) == 1


def test_series_equality_is_cross_multiplied():
    a = HilbertSeries(LaurentPoly({0: 1, 1: 1}), (2,))       # (1+t)/(1-t^2)
    b = geometric((1,))                                       # 1/(1-t)
    assert a.series_equal(b)
    assert a == b
    assert not a.series_equal(geometric((2,)))


def test_canonical_cancels_pairs():
    h = HilbertSeries(one_minus(2) * LaurentPoly({0: 1, 1: 3}), (1, 2, 2))
    c = h.canonical()
    assert len(c.denominator) == 2          # one factor cancelled
    assert c.series_equal(h)
    assert HilbertSeries(LaurentPoly({0: 1, 1: 3}), (1, 2)).series_equal(c)


def test_divexact_detects_remainder():
    assert one_minus(3).divexact(one_minus(2)) is None
    q = one_minus(6).divexact(one_minus(2))
    assert q == LaurentPoly({0: 1, 2: 1, 4: 1})


def test_laurent_json_roundtrip():
    p = LaurentPoly({-2: Fraction(1, 3), 0: 1, 5: -2})
    assert LaurentPoly.from_json(p.to_json()) == p
    h = HilbertSeries(p, (1, 2))
    assert HilbertSeries.from_json(h.to_json()).series_equal(h)


def test_numerator_roundtrip_property():
    import random
    rng = random.Random(41)
    for _ in range(40):
        num = LaurentPoly({rng.randrange(0, 9): rng.randint(-5, 5)
                           for _ in range(rng.randint(1, 6))})
        if num.is_zero():
            continue
        denom = tuple(rng.randint(1, 5) for _ in range(rng.randint(1, 5)))
        h = HilbertSeries(num, denom)
        against = denom + tuple(rng.randint(1, 4)
                                for _ in range(rng.randint(0, 3)))
        back = HilbertSeries(h.hilbert_numerator(against), against)
        assert back.series_equal(h)
        order = rng.randrange(5, 30)
        assert back.expand(order) == h.expand(order)


def test_nonnegative_integer_coefficients_for_graded_rings():
    from wgk.wgrass25 import GrWeights
    from wgk.wogr510 import OGrWeights
    for series in (GrWeights.from_fractions(["1/2"] * 3 + ["3/2"] * 2).hilbert_series(),
                   OGrWeights((0, 0, 2, 2, 4), 1).hilbert_series()):
        for c in series.expand(25):
            assert c.denominator == 1 and c >= 0

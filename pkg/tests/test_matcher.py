"""Recognition of ambient models from target Hilbert data."""

import random
from fractions import Fraction

import pytest

from wgk.matcher import (MatchQuery, enumerate_gr_weights,
                         enumerate_ogr_weights, infer_generators,
                         match_pipeline, search, singularity_filter)
from wgk.orbifold_rr import CY3Data, Canonical3Data, FIFTH_334, hilbert_can3, hilbert_cy3
from wgk.sections import AmbientModel, QuotientSingularity
from wgk.series import HilbertSeries, LaurentPoly, geometric
from wgk.wgrass25 import GrWeights
from wgk.wogr510 import OGrWeights

H_CAN3 = hilbert_can3(Canonical3Data(7, 21, 2))
H_CY3 = hilbert_cy3(CY3Data(Fraction(6, 5), Fraction(108, 5), (FIFTH_334,)))
BASKET_CAN3 = (QuotientSingularity(2, (1, 1, 1)),) * 2
BASKET_CY3 = (QuotientSingularity(3, (1, 1, 1)), QuotientSingularity(3, (2, 2, 2)),
              QuotientSingularity(5, (3, 3, 4)))


def test_infer_generators_projective_space():
    assert infer_generators(geometric((1, 1, 1))) == (1, 1, 1)


def test_infer_generators_can3():
    # seven in degree one, and the two half points force two in degree two
    assert infer_generators(H_CAN3, basket=BASKET_CAN3) == (1,) * 7 + (2, 2)


def test_infer_generators_cy3_greedy_steps():
    # plain greedy: two of degree 1, then two of degree 2 (then three 3s)
    gens = infer_generators(H_CY3)
    assert gens[:4] == (1, 1, 2, 2)
    assert gens == (1, 1, 2, 2, 3, 3, 3)
    forced = infer_generators(H_CY3, basket=BASKET_CY3, residue_forcing=False)
    assert forced == (1, 1, 2, 2, 3, 3, 3, 5)
    full = infer_generators(H_CY3, basket=BASKET_CY3)
    assert full == (1, 1, 2, 2, 3, 3, 3, 4, 5)


def test_search_spinor_example_one():
    numerator = HilbertSeries(LaurentPoly(
        {0: 1, 2: -1, 3: -8, 4: 7, 5: 8, 7: -8, 8: -7, 9: 8, 10: 1, 12: -1}))
    hits = search(MatchQuery(target=numerator, generator_degrees=(1,) * 8 + (2,) * 8,
                             family="wogr510"))
    assert len(hits) == 1
    model = hits[0]
    assert model.base.canonical_form() == OGrWeights((0, 0, 0, 0, 2), 1)
    assert model.cone == ()


def test_search_spinor_example_two():
    target = OGrWeights((0, 0, 2, 2, 4), 1).hilbert_series()
    numerator = HilbertSeries(target.numerator)
    hits = search(MatchQuery(target=numerator, family="wogr510"))
    assert [m.base.canonical_form() for m in hits] == [OGrWeights((0, 0, 2, 2, 4), 1)]


def test_search_straight_plucker():
    numerator = HilbertSeries(LaurentPoly({0: 1, 2: -5, 3: 5, 5: -1}))
    hits = search(MatchQuery(target=numerator, generator_degrees=(1,) * 10,
                             family="wgr25"))
    assert [m.base for m in hits] == [GrWeights((1, 1, 1, 1, 1))]


def test_search_roundtrip_property():
    rng = random.Random(31)
    gr_pool = enumerate_gr_weights(4)
    for w in rng.sample(gr_pool, 12):
        hits = search(MatchQuery(target=w.hilbert_series(),
                                 generator_degrees=w.plucker_weights(),
                                 family="wgr25", max_w2=4))
        assert [m.base for m in hits] == [w]
    ogr_pool = enumerate_ogr_weights(4, 2)
    for w in rng.sample(ogr_pool, 12):
        try:
            series = w.hilbert_series()
        except ValueError:
            continue
        hits = search(MatchQuery(target=series,
                                 generator_degrees=w.coordinate_weights(),
                                 family="wogr510", max_w2=4, max_u=2))
        assert [m.base.canonical_form() for m in hits] == [w.canonical_form()]


def test_search_is_deterministic():
    numerator = HilbertSeries(LaurentPoly({0: 1, 2: -5, 3: 5, 5: -1}))
    q = MatchQuery(target=numerator)
    first = [str(m) for m in search(q)]
    second = [str(m) for m in search(q)]
    assert first == second == sorted(first)


def test_singularity_filter():
    mirage = AmbientModel(GrWeights((2, 2, 2, 4, 4)), cone=(1,))
    ok, reason = singularity_filter(mirage, (QuotientSingularity(5, (3, 3, 4)),))
    assert not ok
    assert reason == "no coordinate weight divisible by 5 in {1,2^3,3^6,4}"
    good = AmbientModel(OGrWeights((0, 0, 2, 2, 4), 1))
    assert singularity_filter(good, (QuotientSingularity(5, (3, 3, 4)),)) == (True, None)
    assert singularity_filter(mirage, ()) == (True, None)


def test_filter_soundness():
    # never rejects a model that carries a chart of the required order
    rng = random.Random(17)
    pool = enumerate_ogr_weights(6, 3)
    for w in rng.sample(pool, 30):
        model = AmbientModel(w)
        for r in {2, 3, 5}:
            if any(cw % r == 0 for cw in model.coordinate_weights()):
                ok, _ = singularity_filter(
                    model, (QuotientSingularity(r, (1,) * 3),))
                assert ok


def test_pipeline_example_one():
    report = match_pipeline(H_CAN3, basket=BASKET_CAN3)
    accepted = report.accepted()
    assert len(accepted) == 1
    cand = accepted[0]
    assert cand.model.base.canonical_form() == OGrWeights((0, 0, 0, 0, 2), 1)
    assert cand.model.cone == ()
    assert cand.sections == (1, 2, 2, 2, 2, 2, 2)
    assert cand.generators == (1,) * 7 + (2, 2)


def test_pipeline_example_two_with_mirage():
    report = match_pipeline(H_CY3, basket=BASKET_CY3)
    accepted = report.accepted()
    assert len(accepted) == 1
    cand = accepted[0]
    assert cand.model.base.canonical_form() == OGrWeights((0, 0, 2, 2, 4), 1)
    assert cand.sections == (2, 2, 3, 4, 4, 4, 5)
    mirages = [c for c in report.rejected()
               if isinstance(c.model.base, GrWeights)]
    assert len(mirages) == 1
    mirage = mirages[0]
    assert mirage.model.base == GrWeights((2, 2, 2, 4, 4))
    assert mirage.model.cone == (1,)
    assert mirage.nonlinear == (6,)
    assert mirage.reason == "no coordinate weight divisible by 5 in {1,2^3,3^6,4}"


def test_pipeline_augmentation_step():
    # without residue forcing the pipeline must guess the extra degree-4
    # generator and relation by retrying
    report = match_pipeline(H_CY3, basket=BASKET_CY3, residue_forcing=False)
    assert "added one generator and relation in degree 4" in report.diagnostics
    accepted = report.accepted()
    assert [c.model.base.canonical_form() for c in accepted] == [
        OGrWeights((0, 0, 2, 2, 4), 1)]
    assert accepted[0].generators == (1, 1, 2, 2, 3, 3, 3, 4, 5)


def test_pipeline_genus_six_curve_series():
    # subcanonical curve with p_1 = 6 and degree 10: quadric section of the
    # cone over the straight Pfaffian family, at series level
    series = HilbertSeries(LaurentPoly({0: 1, 1: 4, 2: 4, 3: 1}), (1, 1))
    assert [int(c) for c in series.expand(3)] == [1, 6, 15, 25]
    report = match_pipeline(series)
    formal = [c for c in report.candidates if c.nonlinear]
    assert any(c.model.base == GrWeights((1, 1, 1, 1, 1))
               and c.model.cone == (1,) and c.nonlinear == (2,)
               for c in formal)


def test_search_with_canonical_degree_and_basket_requirements():
    numerator = HilbertSeries(OGrWeights((0, 0, 2, 2, 4), 1)
                              .hilbert_series().numerator)
    hits = search(MatchQuery(target=numerator, family="wogr510",
                             canonical_degree=-24))
    assert len(hits) == 1
    assert search(MatchQuery(target=numerator, family="wogr510",
                             canonical_degree=-12)) == []
    assert search(MatchQuery(target=numerator, family="wogr510",
                             basket=(QuotientSingularity(7, (1, 2, 4)),))) == []


def test_query_validation():
    with pytest.raises(ValueError, match="bounds"):
        MatchQuery(target=geometric((1,)), max_w2=0)
    with pytest.raises(ValueError, match="family"):
        MatchQuery(target=geometric((1,)), family="flag")


def test_enumerations_within_bounds_and_canonical():
    for w in enumerate_gr_weights(4):
        assert all(abs(v) <= 4 for v in w.w2)
        assert w.w2 == tuple(sorted(w.w2))
    seen = set()
    for w in enumerate_ogr_weights(4, 2):
        assert all(abs(v) <= 4 for v in w.w2)
        assert 1 <= w.u <= 2
        c = w.canonical_form()
        key = (c.w2, c.u)
        assert key not in seen
        seen.add(key)

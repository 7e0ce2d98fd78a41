"""Search engine from target Hilbert data to weighted ambient models.

Generator degrees are inferred greedily from the series (optionally forced to
be compatible with a required singularity basket), the target numerator is
formed exactly, and all weight data within bounds is enumerated for both
families.  A model matches when its closed-form numerator equals the target
numerator exactly, either directly (quasilinear candidate) or after stripping
extra (1 - t^k) factors (a nonlinear section of a cone, reported as a formal
match).  A necessary-condition singularity filter rejects models that cannot
carry a required 1/r point because no coordinate weight is divisible by r.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

from .sections import AmbientModel, SectionSpec
from .series import HilbertSeries, LaurentPoly, SeriesError, one_minus
from .wgrass25 import GrWeights
from .wogr510 import OGrWeights

DEFAULT_DEPTH = 40
DEFAULT_MAX_W2 = 8
DEFAULT_MAX_U = 4
FAMILIES = ("wgr25", "wogr510")


def fmt_multiset(weights):
    parts = []
    for w, k in sorted(Counter(weights).items()):
        parts.append(f"{w}^{k}" if k > 1 else f"{w}")
    return "{" + ",".join(parts) + "}"


@dataclass(frozen=True)
class MatchQuery:
    """Target Hilbert data plus search bounds and requirements.

    When ``target`` has an empty denominator it is taken to be the numerator
    itself; otherwise the numerator is formed against the generator degrees.
    Generator degrees, when given, constrain the ambient coordinate weights
    (up to coning by unmatched degree-1 generators).
    """
    target: HilbertSeries
    generator_degrees: tuple = None
    family: str = None
    max_w2: int = DEFAULT_MAX_W2
    max_u: int = DEFAULT_MAX_U
    basket: tuple = field(default_factory=tuple)
    canonical_degree: int = None
    depth: int = DEFAULT_DEPTH

    def __post_init__(self):
        if self.max_w2 < 1 or self.max_u < 1:
            raise ValueError("search bounds must be positive and finite")
        if self.family is not None and self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")


def infer_generators(series, depth=DEFAULT_DEPTH, basket=None,
                     residue_forcing=True):
    """Greedy generator inference from the expansion.

    Repeatedly multiplies by (1 - t^k)^{c_k} at the smallest degree with a
    positive coefficient, stopping at the first negative one (or at depth).
    With a basket, each required 1/r point forces a generator of degree
    divisible by r and, when ``residue_forcing`` is set, generators covering
    the residues of its weights mod r.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    gens = []
    current = series
    while True:
        coeffs = current.expand(depth)
        k = next((i for i in range(1, depth + 1) if coeffs[i] != 0), None)
        if k is None or coeffs[k] < 0:
            break
        c = coeffs[k]
        if c.denominator != 1:
            raise ValueError(f"non-integral coefficient {c} at degree {k}")
        gens.extend([k] * int(c))
        for _ in range(int(c)):
            current = current.mul_poly(one_minus(k))
    if basket:
        needed = Counter(sing.r for sing in basket)
        for r, n in sorted(needed.items()):
            have = sum(1 for g in gens if g % r == 0)
            gens.extend([r] * max(0, n - have))
        if residue_forcing:
            for sing in basket:
                for res in sorted({w % sing.r for w in sing.weights} - {0}):
                    if not any(g % sing.r == res for g in gens):
                        gens.append(res)
    return tuple(sorted(gens))


def singularity_filter(model, required):
    """Necessary condition: every required 1/r needs a coordinate weight
    divisible by r (otherwise no chart of order a multiple of r exists)."""
    weights = model.coordinate_weights()
    for sing in required:
        if not any(w % sing.r == 0 for w in weights):
            return False, (f"no coordinate weight divisible by {sing.r} "
                           f"in {fmt_multiset(weights)}")
    return True, None


def enumerate_gr_weights(max_w2):
    """Canonically sorted normalized weight data for the Pfaffian family."""
    out = []
    for parity in (0, 1):
        lo = -max_w2 + ((-max_w2 - parity) % 2)
        vals = range(lo, max_w2 + 1, 2)
        for tup in itertools.combinations_with_replacement(vals, 5):
            if tup[0] + tup[1] > 0:
                out.append(GrWeights(tup))
    return out


def enumerate_ogr_weights(max_w2, max_u):
    """Orbit representatives of spinor-family weight data within bounds."""
    out = []
    for parity in (0, 1):
        vals = range(parity, max_w2 + 1, 2)
        for tup in itertools.combinations_with_replacement(vals, 5):
            variants = [tup]
            if all(v > 0 for v in tup):
                variants.append((-tup[0],) + tup[1:])
            for w2 in variants:
                for u in range(1, max_u + 1):
                    try:
                        out.append(OGrWeights(w2, u))
                    except ValueError:
                        continue
    return out


def _model_table(family, max_w2, max_u):
    table = []
    if family in (None, "wgr25"):
        for w in enumerate_gr_weights(max_w2):
            table.append(("wgr25", w, w.hilbert_series().numerator,
                          tuple(w.plucker_weights())))
    if family in (None, "wogr510"):
        for w in enumerate_ogr_weights(max_w2, max_u):
            try:
                num = w.hilbert_series().numerator
            except ValueError:
                continue
            table.append(("wogr510", w, num, w.coordinate_weights()))
    return table


def _strip_section_factors(quotient):
    """Write a polynomial as prod (1 - t^k) or return None."""
    factors = []
    q = quotient
    while True:
        if q == LaurentPoly.one():
            return tuple(sorted(factors))
        if q.is_zero() or q.min_exp() != 0 or q[0] != 1:
            return None
        positives = [e for e in q.coeffs if e > 0]
        if not positives:
            return None
        k = min(positives)
        nxt = q.divexact(one_minus(k))
        if nxt is None:
            return None
        factors.append(k)
        q = nxt
        if len(factors) > 8:
            return None


def _canonical_key(family, weights):
    if family == "wgr25":
        return (family, weights.w2)
    c = weights.canonical_form()
    return (family, c.w2, c.u)


def _quasilinear_sections(gens, coord_weights):
    """Cone count and section degrees making coordinates = generators + sections."""
    need = Counter(gens)
    have = Counter(coord_weights)
    for c in range(0, need[1] + 1):
        havec = have.copy()
        havec[1] += c
        if all(havec[d] >= need[d] for d in need):
            sections = sorted((havec - need).elements())
            return c, tuple(sections)
    return None, None


def search(query):
    """All ambient models within bounds matching the query exactly.

    Deduplicated by permutation (respectively signed-permutation) symmetry and
    returned in a canonical deterministic order.
    """
    gens = query.generator_degrees
    if query.target.denominator:
        if gens is None:
            gens = infer_generators(query.target, query.depth,
                                    basket=query.basket)
        n_target = query.target.hilbert_numerator(gens)
    else:
        n_target = query.target.numerator
    results = {}
    for family, w, num, cw in _model_table(query.family, query.max_w2,
                                           query.max_u):
        if num != n_target:
            continue
        cone = ()
        if gens is not None:
            gcount = Counter(gens)
            ccount = Counter(cw)
            extra = gcount - ccount
            if set(extra) - {1} or ccount - gcount:
                continue
            cone = (1,) * extra[1]
        model = AmbientModel(w, cone)
        if (query.canonical_degree is not None
                and model.canonical_degree() != query.canonical_degree):
            continue
        if query.basket and not singularity_filter(model, query.basket)[0]:
            continue
        results[_canonical_key(family, w) + (cone,)] = model
    return [results[k] for k in sorted(results)]


@dataclass
class MatchCandidate:
    model: AmbientModel
    sections: tuple          # quasilinear section degrees, or None
    nonlinear: tuple         # extra section degrees multiplying the numerator
    generators: tuple        # generator multiset that produced the hit
    provenance: str
    status: str = ""
    accepted: bool = False
    reason: str = None

    def describe(self):
        s = str(self.model)
        cuts = list(self.nonlinear) + (list(self.sections) if self.sections else [])
        if cuts:
            s += " ∩ " + str(SectionSpec(tuple(sorted(cuts))))
        return s

    def to_json(self):
        return {
            "model": self.model.to_json(),
            "numerator": self.model.base.hilbert_series().numerator.to_json(),
            "sections": list(self.sections) if self.sections is not None else None,
            "nonlinear": list(self.nonlinear),
            "generators": list(self.generators),
            "provenance": self.provenance,
            "status": self.status,
            "accepted": self.accepted,
            "reason": self.reason,
        }


@dataclass
class MatchReport:
    candidates: list
    generator_sets: list      # (provenance, gens, note)
    diagnostics: list

    def accepted(self):
        return [c for c in self.candidates if c.accepted]

    def rejected(self):
        return [c for c in self.candidates if not c.accepted]

    def to_json(self):
        return {
            "candidates": [c.to_json() for c in self.candidates],
            "generator_sets": [
                {"provenance": p, "generators": list(g), "note": n}
                for p, g, n in self.generator_sets],
            "diagnostics": list(self.diagnostics),
        }


def match_pipeline(series, basket=(), family=None, max_w2=DEFAULT_MAX_W2,
                   max_u=DEFAULT_MAX_U, depth=DEFAULT_DEPTH,
                   user_generators=(), residue_forcing=True,
                   augment_bound=8):
    """Full recognition pipeline with accepted/rejected verdicts.

    Candidate generator multisets are the greedy one, its singularity-forced
    variants, and any user-supplied ones.  If no candidate is accepted, one
    extra generator-and-relation degree k is tried for k up to the bound.
    """
    basket = tuple(basket)
    table = _model_table(family, max_w2, max_u)
    gen_sets = []
    greedy = infer_generators(series, depth)
    gen_sets.append(("greedy", greedy))
    if basket:
        forced = infer_generators(series, depth, basket=basket,
                                  residue_forcing=False)
        if forced != greedy:
            gen_sets.append(("divisibility-forced", forced))
        if residue_forcing:
            full = infer_generators(series, depth, basket=basket,
                                    residue_forcing=True)
            if full not in [g for _, g in gen_sets]:
                gen_sets.append(("residue-forced", full))
    for k, gens in enumerate(user_generators):
        gen_sets.append((f"user[{k}]", tuple(sorted(gens))))

    candidates = {}
    tried = []
    diagnostics = []

    def try_generators(gens, provenance):
        try:
            n_target = series.hilbert_numerator(gens)
        except SeriesError:
            tried.append((provenance, gens, "numerator does not clear"))
            return
        tried.append((provenance, gens, "ok"))
        for fam, w, num, cw in table:
            if num == n_target:
                cone, sections = _quasilinear_sections(gens, cw)
                model = AmbientModel(w, (1,) * cone if cone else ())
                key = _canonical_key(fam, w) + (model.cone, (), sections)
                if key not in candidates:
                    status = ("quasilinear" if sections is not None
                              else "numerator match (no quasilinear embedding)")
                    candidates[key] = MatchCandidate(
                        model=model, sections=sections, nonlinear=(),
                        generators=gens, provenance=provenance, status=status)
                continue
            quotient = n_target.divexact(num)
            if quotient is None:
                continue
            factors = _strip_section_factors(quotient)
            if not factors:
                continue
            model = AmbientModel(w, (1,))
            key = _canonical_key(fam, w) + ("formal",)
            old = candidates.get(key)
            if old is None or (len(factors), factors) < (len(old.nonlinear),
                                                         old.nonlinear):
                candidates[key] = MatchCandidate(
                    model=model, sections=None, nonlinear=factors,
                    generators=gens, provenance=provenance,
                    status="formal numerator match (nonlinear section of a cone)")

    for provenance, gens in gen_sets:
        try_generators(gens, provenance)
    _apply_filter(candidates, basket)
    if not any(c.accepted for c in candidates.values()):
        for k in range(1, augment_bound + 1):
            for provenance, gens in gen_sets:
                try_generators(tuple(sorted(gens + (k,))),
                               f"{provenance} + degree {k}")
            _apply_filter(candidates, basket)
            if any(c.accepted for c in candidates.values()):
                diagnostics.append(
                    f"added one generator and relation in degree {k}")
                break

    ranked = sorted(candidates.values(),
                    key=lambda c: (not c.accepted, c.status != "quasilinear",
                                   c.model.family, str(c.model)))
    return MatchReport(candidates=ranked, generator_sets=tried,
                       diagnostics=diagnostics)


def _apply_filter(candidates, basket):
    for cand in candidates.values():
        ok, reason = singularity_filter(cand.model, basket)
        if not ok:
            cand.accepted = False
            cand.reason = reason
        else:
            cand.accepted = cand.status == "quasilinear"
            cand.reason = None if cand.accepted else cand.status

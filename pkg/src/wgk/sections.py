"""Ambient models, quasilinear sections, invariants and singularity baskets.

An ambient model is one of the two weighted families, optionally extended by
cone variables (free generators involved in no relation).  Sections are
modelled through series only, under a regular-sequence assumption: cutting by
a general form of degree e multiplies the Hilbert series by (1 - t^e); a
non-negativity scan over the expansion is the regularity proxy.

The singularity analysis locates torus-fixed strata (coordinates of weight
divisible by r), splits them into components, counts the section points on
each component by the exact rule  N = r * degree * prod(active section
degrees), and reads the transverse quotient type off an orbifold chart of the
component.  The whole procedure is exact rational arithmetic; the stratum
Hilbert series comes from the brute-force graded-dimension oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod

from . import wgrass25, wogr510
from .oracle import GradedRing, OracleBudgetError, graded_dimension
from .series import HilbertSeries, LaurentPoly, denominator_poly, geometric, one_minus
from .wgrass25 import Chart, GrWeights
from .wogr510 import OGrWeights

DEFAULT_DEPTH = 40


@dataclass(frozen=True)
class QuotientSingularity:
    """Cyclic quotient type 1/r(a_1,...,a_k), weights reduced mod r and sorted.

    A common factor of r and all weights is divided out (the action is then
    not effective); a residual zero weight means the point is not isolated and
    is flagged by the analysis rather than silently dropped.
    """
    r: int
    weights: tuple

    def __post_init__(self):
        r = int(self.r)
        if r < 1:
            raise ValueError("order must be positive")
        ws = tuple(int(w) % r for w in self.weights)
        g = gcd(r, *ws) if ws else r
        if g > 1:
            r //= g
            ws = tuple(w // g for w in ws)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "weights", tuple(sorted(w % r for w in ws)))

    def is_trivial(self):
        return self.r == 1

    def is_isolated(self):
        return all(w != 0 for w in self.weights)

    def key(self):
        return (self.r, self.weights)

    def __str__(self):
        return f"1/{self.r}({','.join(map(str, self.weights))})"

    def to_json(self):
        return {"r": self.r, "weights": list(self.weights)}


@dataclass(frozen=True)
class SectionSpec:
    """Multiset of degrees of general hypersurface sections."""
    degrees: tuple

    def __post_init__(self):
        ds = tuple(sorted(int(d) for d in self.degrees))
        if any(d < 1 for d in ds):
            raise ValueError("section degrees must be positive")
        object.__setattr__(self, "degrees", ds)

    def __len__(self):
        return len(self.degrees)

    def __str__(self):
        return "".join(f"({d})" for d in self.degrees) or "(none)"


@dataclass(frozen=True)
class AmbientModel:
    """A weighted family plus optional cone variables of given weights."""
    base: object
    cone: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if not isinstance(self.base, (GrWeights, OGrWeights)):
            raise TypeError("base must be GrWeights or OGrWeights")
        cone = tuple(sorted(int(c) for c in self.cone))
        if any(c < 1 for c in cone):
            raise ValueError("cone weights must be positive")
        object.__setattr__(self, "cone", cone)

    @property
    def family(self):
        return "wgr25" if isinstance(self.base, GrWeights) else "wogr510"

    @property
    def dim(self):
        return (6 if self.family == "wgr25" else 10) + len(self.cone)

    def base_coordinates(self):
        if self.family == "wgr25":
            return [(wgrass25.pair_name(i, j),
                     (self.base.w2[i - 1] + self.base.w2[j - 1]) // 2)
                    for i, j in wgrass25.PAIRS]
        return [(name, self.base.vertex_weight(v))
                for name, v in zip(wogr510.VERTEX_NAMES, wogr510.VERTICES)]

    def coordinates(self):
        coords = self.base_coordinates()
        coords += [(f"c{k}", w) for k, w in enumerate(self.cone, start=1)]
        return coords

    def coordinate_weights(self):
        return tuple(sorted(w for _, w in self.coordinates()))

    def equations(self):
        if self.family == "wgr25":
            return list(wgrass25.pfaffian_equations())
        return list(wogr510.equations())

    def adjunction(self):
        if self.family == "wgr25":
            return self.base.numerology().adjunction
        return 2 * self.base.d2()

    def canonical_degree(self):
        return self.adjunction() - sum(w for _, w in self.coordinates())

    def charts(self):
        return [Chart(ch.label, ch.order, ch.local_weights + self.cone)
                for ch in self.base.charts()]

    def chart_at(self, label):
        for ch in self.charts():
            if ch.label == label:
                return ch
        raise KeyError(f"no chart at coordinate {label}")

    def graded_ring(self):
        return GradedRing(self.coordinates(), self.equations())

    def to_json(self):
        data = {"family": self.family, **self.base.to_json()}
        if self.cone:
            data["cone"] = list(self.cone)
        return data

    @classmethod
    def from_json(cls, data):
        family = data["family"]
        w2 = tuple(int(v) for v in data["w2"])
        u2 = int(data.get("u2", 0))
        if family == "wgr25":
            base = GrWeights.of(w2, u2)
        elif family == "wogr510":
            if u2 % 2:
                raise ValueError("overall weight must be an integer (u2 even)")
            base = OGrWeights(w2, u2 // 2)
        else:
            raise ValueError(f"unknown family {family!r}")
        return cls(base, tuple(data.get("cone", ())))

    def __str__(self):
        s = str(self.base)
        if self.cone:
            s = f"cone{list(self.cone)} over {s}"
        return s


# -- series-level section calculus ---------------------------------------------

def ambient_series(model):
    """Base Hilbert series with the denominator extended by the cone weights."""
    base = model.base.hilbert_series()
    return base.over(model.cone) if model.cone else base


def section_series(model, spec, depth=DEFAULT_DEPTH):
    """Ambient series times prod (1 - t^delta) over the section degrees.

    The expansion is scanned to ``depth`` for negative coefficients, which
    would mean the degrees cannot come from a regular sequence.
    """
    spec = _as_spec(spec)
    amb = ambient_series(model)
    if len(spec) >= amb.pole_order_at_one():
        raise ValueError("too many sections: pole order would drop below 1")
    series = amb
    for d in spec.degrees:
        series = series.mul_poly(one_minus(d))
    series = series.canonical()
    if any(c < 0 for c in series.expand(depth)):
        raise ValueError("section spec not plausibly regular "
                         f"(negative coefficient within degree {depth})")
    return series


def section_canonical(model, spec):
    """Canonical degree of the section: ambient canonical plus section degrees."""
    spec = _as_spec(spec)
    return model.canonical_degree() + sum(spec.degrees)


def quasilinear_embed(model, spec):
    """Eliminate one ambient generator per matching section degree.

    Returns the remaining generator weights, whether every degree matched, and
    the unmatched leftovers.
    """
    spec = _as_spec(spec)
    weights = sorted(model.coordinate_weights())
    leftovers = []
    for d in spec.degrees:
        if d in weights:
            weights.remove(d)
        else:
            leftovers.append(d)
    return {"weights": tuple(weights), "quasilinear": not leftovers,
            "leftovers": tuple(leftovers)}


def invariants(series, dim):
    """Top self-intersection of the polarizing class and h^0 in degree one."""
    return {"A_top": series.intersection_number(dim),
            "h0_A": series.coefficient(1)}


def graded_dimension_oracle(family, weights, degree):
    """Brute-force dimension of the family coordinate ring in one degree."""
    return graded_dimension(family, weights, degree)


def _as_spec(spec):
    if isinstance(spec, SectionSpec):
        return spec
    return SectionSpec(tuple(spec))


# -- singularity analysis --------------------------------------------------------

@dataclass
class StratumRecord:
    r: int
    component: tuple
    dimension: int
    active: tuple
    count: Fraction
    sing_type: object    # QuotientSingularity or None


@dataclass
class SingularityReport:
    basket: list           # [(QuotientSingularity, count)]
    diagnostics: list
    strata: list           # StratumRecord details

    def basket_key(self):
        return sorted(((s.r, s.weights), n) for s, n in self.basket)

    def to_json(self):
        return {
            "basket": [{**s.to_json(), "count": n} for s, n in self.basket],
            "diagnostics": list(self.diagnostics),
        }


def _component_split(ring, diagnostics, context):
    """Split a stratum into components via the degree-two monomial pairing.

    Coordinates c, c' land in one component when c*c' does not lie in the
    restricted-equation ideal slice; nilpotent coordinates are dropped.
    """
    n = len(ring.coords)
    alive = []
    for i in range(n):
        vec = [0] * n
        vec[i] = 2
        if ring.equations and ring.contains_monomial(tuple(vec)):
            diagnostics.append(f"{context}: coordinate {ring.coords[i][0]} "
                               "is nilpotent on the stratum; dropped")
        else:
            alive.append(i)
    parent = {i: i for i in alive}

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in itertools.combinations(alive, 2):
        vec = [0] * n
        vec[i] += 1
        vec[j] += 1
        if not (ring.equations and ring.contains_monomial(tuple(vec))):
            parent[find(i)] = find(j)
    groups = {}
    for i in alive:
        groups.setdefault(find(i), []).append(i)
    return [tuple(ring.coords[i][0] for i in sorted(g)) for g in
            sorted(groups.values())]


def _component_series(coords, equations, diagnostics, context):
    """Hilbert series of a component ring, via the oracle when necessary."""
    weights = [w for _, w in coords]
    eqs = [e for e in equations if not e.is_zero()]
    if not eqs:
        return geometric(weights)
    ring = GradedRing(coords, eqs)
    degrees = [deg for deg, _ in ring.equations]
    if len(degrees) == 1:
        # a single nonzero equation is a nonzerodivisor on the polynomial ring
        return HilbertSeries(one_minus(degrees[0]), weights)
    window = sum(weights) + max(degrees)
    cap = 3 * sum(weights) + sum(degrees) + 10
    dp = denominator_poly(weights).coeffs
    dims = []
    numer = {}
    top_nonzero = 0
    d = 0
    while d <= cap:
        dims.append(ring.dimension(d))
        nd = sum(c * dims[d - e] for e, c in dp.items() if e <= d)
        if nd:
            numer[d] = nd
            top_nonzero = d
        if d >= top_nonzero + window:
            return HilbertSeries(LaurentPoly(numer), weights)
        d += 1
    raise OracleBudgetError(f"{context}: stratum numerator did not stabilize "
                            f"within degree {cap}")


def _transverse_type(chart, r, degrees, dim_comp, diagnostics, context):
    """Quotient type transverse to the stratum, read off one chart.

    Sections of degree divisible by r consume stratum directions; the others
    eliminate one transverse weight congruent to their degree, smallest raw
    weight first.
    """
    residues = [(w % r, w) for w in chart.local_weights]
    stratum_slots = sum(1 for res, _ in residues if res == 0)
    if stratum_slots != dim_comp:
        diagnostics.append(
            f"{context}: chart {chart.label} sees {stratum_slots} stratum "
            f"directions, component has dimension {dim_comp}")
        return None
    transverse = sorted(((res, w) for res, w in residues if res != 0),
                        key=lambda p: (p[1], p[0]))
    for delta in degrees:
        if delta % r == 0:
            continue          # consumes a stratum direction
        res = delta % r
        for k, (rr, _) in enumerate(transverse):
            if rr == res:
                transverse.pop(k)
                break
        else:
            diagnostics.append(
                f"{context}: chart {chart.label} non-quasismooth: degree "
                f"{delta} section cannot eliminate a local variable")
            return None
    return QuotientSingularity(r, tuple(res for res, _ in transverse))


def singularity_analysis(model, spec, depth=DEFAULT_DEPTH):
    """Basket of quotient singularities of a general section, with diagnostics.

    Combines stratum location/counting with chart-level type computation; see
    the module docstring for the procedure.
    """
    spec = _as_spec(spec)
    degrees = spec.degrees
    section_dim = model.dim - len(degrees)
    if section_dim < 1:
        raise ValueError("section must have positive dimension")
    coords = model.coordinates()
    cone_names = {n for n, _ in coords if n.startswith("c")}
    equations = model.equations()
    diagnostics = []
    records = []

    r_candidates = sorted({r for _, w in coords for r in range(2, w + 1)
                           if w % r == 0})
    for r in r_candidates:
        stratum_coords = [(n, w) for n, w in coords if w % r == 0]
        if not stratum_coords:
            continue
        keep = {n for n, _ in stratum_coords}
        restricted = []
        seen = set()
        for eq in equations:
            cut = eq.restrict(keep)
            if not cut.is_zero() and cut not in seen:
                restricted.append(cut)
                seen.add(cut)
        context = f"1/{r} stratum"
        ring = GradedRing(stratum_coords, restricted)
        components = _component_split(ring, diagnostics, context)
        for comp in components:
            comp_context = f"{context} [{' '.join(comp)}]"
            if any(n in cone_names for n in comp):
                diagnostics.append(f"{comp_context}: contains a cone vertex; "
                                   "chart analysis unsupported")
                continue
            comp_coords = [(n, w) for n, w in stratum_coords if n in comp]
            comp_keep = set(comp)
            comp_eqs = []
            seen = set()
            for eq in restricted:
                cut = eq.restrict(comp_keep)
                if not cut.is_zero() and cut not in seen:
                    comp_eqs.append(cut)
                    seen.add(cut)

            comp_charts = [model.chart_at(n) for n in comp]
            dims = {sum(1 for w in ch.local_weights if w % r == 0)
                    for ch in comp_charts}
            if len(dims) != 1:
                diagnostics.append(f"{comp_context}: chart dimensions disagree "
                                   f"({sorted(dims)})")
                continue
            dim_comp = dims.pop()

            comp_ring = GradedRing(comp_coords, comp_eqs)
            active = tuple(d for d in degrees if comp_ring.dimension(d) > 0)
            m = len(active)
            vanishing = sorted(set(d for d in degrees
                                   if d % r == 0 and d not in active))
            if vanishing:
                diagnostics.append(
                    f"{comp_context}: sections of degree {vanishing} restrict "
                    "to zero; they vanish along the component")
            if m > dim_comp:
                continue          # generic intersection with the component is empty
            if m < dim_comp:
                diagnostics.append(
                    f"{comp_context}: non-isolated singular locus (residual "
                    f"dimension {dim_comp - m})")
                continue

            try:
                if len(comp) == len(coords):
                    # the stratum is the whole variety: closed-form series
                    series = ambient_series(model)
                else:
                    series = _component_series(comp_coords, comp_eqs,
                                               diagnostics, comp_context)
                inter = series.intersection_number(dim_comp)
            except OracleBudgetError as exc:
                diagnostics.append(f"{comp_context}: not counted ({exc})")
                continue
            except ValueError as exc:
                diagnostics.append(f"{comp_context}: {exc}")
                continue
            count = Fraction(r) * inter * prod(active, start=Fraction(1))

            types = set()
            for ch in comp_charts:
                ty = _transverse_type(ch, r, degrees, dim_comp,
                                      diagnostics, comp_context)
                if ty is not None:
                    types.add(ty)
            if len(types) != 1:
                diagnostics.append(f"{comp_context}: transverse type is "
                                   f"ambiguous ({sorted(str(t) for t in types)})")
                continue
            sing = types.pop()
            records.append(StratumRecord(r=r, component=comp, dimension=dim_comp,
                                         active=active, count=count, sing_type=sing))

    # Points with stabilizer mu_{r'} on a nested finer stratum enter the
    # level-r count with orbifold weight r/r'; correcting finest levels first
    # leaves each record with its exact-stabilizer count.
    for rec in sorted(records, key=lambda rec: -rec.r):
        for other in records:
            if (other is not rec and other.r > rec.r
                    and other.r % rec.r == 0
                    and set(other.component) <= set(rec.component)):
                rec.count -= Fraction(rec.r, other.r) * other.count
                diagnostics.append(
                    f"1/{rec.r} stratum [{' '.join(rec.component)}]: removed "
                    f"the weight of {other.count} nested 1/{other.r} point(s)")

    basket = {}
    for rec in records:
        if rec.count == 0:
            continue
        if rec.count != int(rec.count) or rec.count < 0:
            diagnostics.append(
                f"1/{rec.r} stratum [{' '.join(rec.component)}]: non-integral "
                f"point count {rec.count}")
            continue
        sing = rec.sing_type
        if sing.is_trivial():
            continue
        if not sing.is_isolated():
            diagnostics.append(f"singular type {sing} is not isolated")
        if len(sing.weights) != section_dim:
            diagnostics.append(
                f"type {sing} has {len(sing.weights)} weights on a "
                f"{section_dim}-dimensional section")
        basket[sing] = basket.get(sing, 0) + int(rec.count)

    basket_list = sorted(basket.items(), key=lambda kv: kv[0].key())
    return SingularityReport(basket=basket_list, diagnostics=diagnostics,
                             strata=records)


# -- round trip against orbifold Riemann-Roch ------------------------------------

def rr_roundtrip(model, spec, kind, depth=DEFAULT_DEPTH):
    """Fit Riemann-Roch data from a 3-fold section and reassemble its series.

    Exact rational-function equality is required; any mismatch reports the
    first differing coefficient.
    """
    from .orbifold_rr import (CY3Data, Canonical3Data, hilbert_can3, hilbert_cy3,
                              table_for_basket)
    spec = _as_spec(spec)
    if model.dim - len(spec) != 3:
        raise ValueError("round trip needs a 3-dimensional section")
    series = section_series(model, spec, depth)
    report = singularity_analysis(model, spec, depth)
    basket = [(s.key(), n) for s, n in report.basket]

    if kind == "canonical3":
        for (key, n) in basket:
            if key != (2, (1, 1, 1)):
                raise ValueError(f"canonical 3-fold round trip expects only "
                                 f"1/2(1,1,1) points, found 1/{key[0]}{key[1]}")
        n_half = sum(n for _, n in basket)
        data = Canonical3Data(pg=int(series.coefficient(1)),
                              kcubed=series.intersection_number(3),
                              half_points=n_half)
        rebuilt = hilbert_can3(data)
    elif kind == "cy3":
        entries = []
        for key, n in basket:
            entries.extend([key] * n)
        tables = table_for_basket(entries)
        acubed = series.intersection_number(3)
        p1 = series.coefficient(1)
        c1 = sum((t.at(1) for t in tables), Fraction(0))
        ac2 = 12 * (p1 - acubed / 6 - c1)
        data = CY3Data(acubed=acubed, ac2=ac2, points=tables)
        rebuilt = hilbert_cy3(data)
    else:
        raise ValueError("kind must be 'canonical3' or 'cy3'")

    ok = rebuilt.series_equal(series)
    first_mismatch = None
    if not ok:
        a = series.expand(4 * depth)
        b = rebuilt.expand(4 * depth)
        for n, (x, y) in enumerate(zip(a, b)):
            if x != y:
                first_mismatch = (n, x, y)
                break
    return {"ok": ok, "data": data, "basket": report.basket,
            "diagnostics": report.diagnostics, "series": series,
            "rebuilt": rebuilt, "first_mismatch": first_mismatch}

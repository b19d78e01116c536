"""Multi-point Seshadri constants of O(1) at singular loci of line arrangements.

For a configuration of r points, the constant is the infimum of
deg(C) / sum of multiplicities over irreducible curves C meeting the
configuration, and always lies in [1/r, 1/sqrt(r)].  This module produces
certified exact bounds:

* upper bounds from explicit curve classes - in practice lines through
  many configuration points, or user-supplied classes;
* lower bounds from a pairing argument: if a divisor built from k lines
  covers every configuration point with total multiplicity >= a, then an
  irreducible curve D that is not one of the component lines satisfies
  e*k = D.(sum of components) >= a * (sum of multiplicities of D), so its
  ratio is at least a/k, while each component line L realizes exactly
  1/(number of configuration points on L).  The certified bound is
  therefore min(a/k, min over components of 1/c_L).

A branch-and-bound search finds minimum-cardinality covering divisors,
which recovers the hand-picked covers that settle the square and
pentagon reflection arrangements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arrangements import IncidenceStructure
from .errors import (
    BadParameterError,
    CoverSearchTimeout,
    InvalidStructureError,
    NotCoveringError,
    ZeroMultiplicityError,
)
from .projective import ProjLine, incident, line_through
from .rational import SqrtRational

DEFAULT_MAX_NODES = 1_000_000


@dataclass(frozen=True)
class CurveClass:
    """A curve known only by its degree and multiplicities at configuration points."""

    degree: int
    mults: tuple[tuple[int, int], ...]
    label: str = ""
    irreducible_candidate: bool = False

    def __init__(self, degree, mults, label="", irreducible_candidate=False):
        object.__setattr__(self, "degree", int(degree))
        items = tuple(sorted((int(k), int(v)) for k, v in dict(mults).items() if v))
        object.__setattr__(self, "mults", items)
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "irreducible_candidate", irreducible_candidate)
        if self.degree < 1:
            raise BadParameterError("curve degree must be positive")
        if any(v < 0 for _, v in items):
            raise BadParameterError("multiplicities must be nonnegative")
        if not items:
            raise BadParameterError("curve class must meet the configuration")
        if irreducible_candidate:
            e = self.degree
            if sum(v * (v - 1) for _, v in items) > e * (e - 1):
                raise BadParameterError(
                    "multiplicities violate the degree bound for irreducible curves"
                )

    @property
    def total_multiplicity(self) -> int:
        return sum(v for _, v in self.mults)


@dataclass(frozen=True)
class CoverLine:
    """One component of a covering divisor, with its configuration points.

    kind is "arrangement", "virtual", "connecting" or "singleton"; only
    arrangement lines are components of the arrangement itself.
    """

    kind: str
    label: str
    points: frozenset[int]
    line: ProjLine | None = field(default=None, compare=False)


@dataclass(frozen=True)
class LineDivisor:
    """A multiset of lines used for the pairing argument."""

    components: tuple[CoverLine, ...]

    def __post_init__(self):
        if not self.components:
            raise BadParameterError("divisor needs at least one component")
        if any(not comp.points for comp in self.components):
            raise BadParameterError("divisor component carries no configuration point")

    @property
    def total_degree(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class Certificate:
    """Sound evidence for one side of the estimate."""

    kind: str  # "upper" | "lower_pairing"
    value: Fraction
    curve: CurveClass | None = None
    divisor: LineDivisor | None = None
    notes: str = ""


@dataclass(frozen=True)
class Estimate:
    """Exact interval [lower, upper] with certificates and trivial bounds."""

    lower: Fraction
    upper: Fraction
    exact: bool
    certificates: tuple[Certificate, ...]
    trivial_lower: Fraction
    trivial_upper: SqrtRational
    issues: tuple[str, ...] = ()


def seshadri_ratio(curve: CurveClass, s: IncidenceStructure | None = None) -> Fraction:
    """deg / total multiplicity, the ratio the constant is an infimum of."""
    if s is not None:
        ids = set(range(s.num_points))
        unknown = [k for k, _ in curve.mults if k not in ids]
        if unknown:
            raise BadParameterError(f"curve references unknown points {unknown}")
    total = curve.total_multiplicity
    if total == 0:
        raise ZeroMultiplicityError("curve class has total multiplicity zero")
    return Fraction(curve.degree, total)


def trivial_bounds(r: int) -> tuple[Fraction, SqrtRational]:
    """The universal bounds 1/r and 1/sqrt(r) for r points."""
    if r < 1:
        raise BadParameterError("need at least one point")
    return Fraction(1, r), SqrtRational(Fraction(1, r))


def almost_homogeneous(mults) -> bool:
    """True iff removing at most one entry leaves all entries equal."""
    values = list(mults)
    if not values:
        raise BadParameterError("empty multiplicity vector")
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    if len(counts) == 1:
        return True
    return len(counts) == 2 and min(counts.values()) == 1


# ---------------------------------------------------------------------------
# Candidate lines and covering certificates
# ---------------------------------------------------------------------------


def arrangement_divisor(s: IncidenceStructure) -> LineDivisor:
    """The full arrangement, one component per line."""
    return LineDivisor(tuple(_arrangement_lines(s)))


def _arrangement_lines(s: IncidenceStructure) -> list[CoverLine]:
    by_line: dict[int, set[int]] = {j: set() for j in range(s.num_lines)}
    for p in s.points:
        for j in p.on_lines:
            by_line[j].add(p.id)
    coords = s.lines if s.lines is not None else [None] * s.num_lines
    return [
        CoverLine("arrangement", f"l{j}", frozenset(by_line[j]), line=coords[j])
        for j in range(s.num_lines)
    ]


def subset_divisor(s: IncidenceStructure, line_ids=(), virtual=()) -> LineDivisor:
    """Divisor from a sub-selection of arrangement lines and virtual lines."""
    lines = _arrangement_lines(s)
    comps = [lines[j] for j in line_ids]
    by_name = {v.name: v for v in s.virtual_lines}
    for name in virtual:
        if name not in by_name:
            raise BadParameterError(f"no virtual line named {name!r}")
        comps.append(CoverLine("virtual", name, by_name[name].points))
    return LineDivisor(tuple(comps))


def cover_candidates(s: IncidenceStructure, include_singletons: bool = False) -> list[CoverLine]:
    """Deterministic candidate pool for covers and for the line upper bound.

    Arrangement lines first, then declared virtual lines, then (only when
    coordinates exist) the connecting lines of all point pairs, then
    optionally one singleton line per point.  Candidates whose point set
    duplicates an earlier candidate are dropped.
    """
    pool = _arrangement_lines(s)
    pool.extend(CoverLine("virtual", v.name, v.points) for v in s.virtual_lines)
    if s.lines is not None:
        known = {c.line for c in pool if c.line is not None}
        seen_lines = set(known)
        for i in range(s.num_points):
            for j in range(i + 1, s.num_points):
                line = line_through(s.points[i].coords, s.points[j].coords)
                if line in seen_lines:
                    continue
                seen_lines.add(line)
                on = frozenset(
                    p.id for p in s.points if incident(p.coords, line)
                )
                pool.append(CoverLine("connecting", f"p{i}+p{j}", on, line=line))
    if include_singletons:
        pool.extend(
            CoverLine("singleton", f"pt{p.id}", frozenset({p.id})) for p in s.points
        )
    deduped, seen_sets = [], set()
    for cand in pool:
        if cand.points in seen_sets:
            continue
        seen_sets.add(cand.points)
        deduped.append(cand)
    return deduped


def best_line_upper(s: IncidenceStructure) -> Certificate:
    """Upper bound 1/(max point count) over candidate lines.

    For coordinate-backed structures the candidates include every
    connecting line of a point pair, so lines outside the arrangement are
    searched as well.
    """
    best = None
    for cand in cover_candidates(s, include_singletons=False):
        if best is None or len(cand.points) > len(best.points):
            best = cand
    assert best is not None
    curve = CurveClass(1, {pid: 1 for pid in best.points}, label=f"line {best.label}")
    return Certificate(
        kind="upper",
        value=Fraction(1, len(best.points)),
        curve=curve,
        notes=f"{best.kind} line {best.label} through {len(best.points)} points",
    )


def covering_lower_bound(div: LineDivisor, s: IncidenceStructure) -> Certificate:
    """Certified lower bound min(a/k, min 1/c_L) from a covering divisor.

    a is the least total divisor multiplicity over configuration points,
    k the divisor degree, c_L the point count of component L.  Raises
    NotCoveringError when some point lies on no component.
    """
    coverage = [0] * s.num_points
    for comp in div.components:
        for pid in comp.points:
            coverage[pid] += 1
    missed = [pid for pid, c in enumerate(coverage) if c == 0]
    if missed:
        raise NotCoveringError(f"points {missed} lie on no component")
    a = min(coverage)
    k = div.total_degree
    component_counts = [len(comp.points) for comp in div.components]
    value = min(Fraction(a, k), Fraction(1, max(component_counts)))
    labels = ",".join(comp.label for comp in div.components)
    return Certificate(
        kind="lower_pairing",
        value=value,
        divisor=div,
        notes=(
            f"pairing with {labels}: a={a}, k={k}, "
            f"component point counts {component_counts}"
        ),
    )


# ---------------------------------------------------------------------------
# Minimum line cover (exact branch and bound)
# ---------------------------------------------------------------------------


class _Budget:
    def __init__(self, max_nodes: int):
        self.left = max_nodes
        self.max_nodes = max_nodes

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise CoverSearchTimeout(self.max_nodes)


def min_line_cover(
    s: IncidenceStructure,
    budget: int | None = None,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> LineDivisor | None:
    """Minimum-cardinality cover of all configuration points by candidate lines.

    Exact branch and bound: a greedy incumbent, then depth-first search
    branching on the point with the fewest remaining candidates, pruned by
    chosen + ceil(uncovered / max candidate coverage).  Among minimum
    covers, the lexicographically least tuple of candidate indices is
    returned, independent of search order.  Returns None when the optimum
    exceeds `budget` (a size cap); raises CoverSearchTimeout when the
    search uses more than `max_nodes` nodes.
    """
    pool = cover_candidates(s, include_singletons=True)
    universe = frozenset(range(s.num_points))
    sets = [cand.points for cand in pool]
    tracker = _Budget(max_nodes)

    greedy = _greedy_cover(sets, universe)
    best_size = len(greedy)
    optimum = _optimal_size(sets, universe, best_size, tracker)
    if budget is not None and optimum > budget:
        return None
    chosen = _lex_least_cover(sets, universe, optimum, tracker)
    assert chosen is not None
    return LineDivisor(tuple(pool[i] for i in chosen))


def _greedy_cover(sets, universe):
    uncovered = set(universe)
    chosen = []
    while uncovered:
        best_i, best_gain = -1, 0
        for i, pts in enumerate(sets):
            gain = len(pts & uncovered)
            if gain > best_gain:
                best_i, best_gain = i, gain
        if best_i < 0:
            raise NotCoveringError("candidate pool does not cover all points")
        chosen.append(best_i)
        uncovered -= sets[best_i]
    return chosen


def _optimal_size(sets, universe, incumbent, tracker):
    best = incumbent

    def descend(uncovered, used):
        nonlocal best
        tracker.tick()
        if not uncovered:
            best = min(best, used)
            return
        gains = [len(pts & uncovered) for pts in sets]
        max_gain = max(gains)
        if max_gain == 0:
            return
        if used + (len(uncovered) + max_gain - 1) // max_gain >= best:
            return
        # branch on the hardest point: fewest candidates, lowest id
        pivot = min(
            uncovered, key=lambda pid: (sum(pid in pts for pts in sets), pid)
        )
        for i, pts in enumerate(sets):
            if pivot in pts:
                descend(uncovered - pts, used + 1)

    descend(set(universe), 0)
    return best


def _lex_least_cover(sets, universe, size, tracker):
    def descend(start, uncovered, chosen):
        tracker.tick()
        if not uncovered:
            return chosen
        slots = size - len(chosen)
        if slots == 0:
            return None
        for i in range(start, len(sets)):
            gain = sets[i] & uncovered
            if not gain:
                continue
            remaining_max = max(
                (len(sets[j] & uncovered) for j in range(i, len(sets))), default=0
            )
            if remaining_max * slots < len(uncovered):
                return None
            found = descend(i + 1, uncovered - sets[i], chosen + [i])
            if found is not None:
                return found
        return None

    return descend(0, set(universe), [])


# ---------------------------------------------------------------------------
# Resolver
# ---------------------------------------------------------------------------


def resolve(
    s: IncidenceStructure,
    extra_uppers=(),
    budget: int | None = None,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> Estimate:
    """Best certified interval for the constant at the singular locus.

    Upper bound: the best candidate line (plus any user-supplied curve
    classes).  Lower bound: the better of the full-arrangement pairing
    and the pairing of a minimum line cover, clamped to the trivial 1/r.
    The cover search is skipped when the full arrangement already
    certifies the upper bound; search failures degrade to a non-exact
    estimate with an explanatory issue instead of raising.
    """
    r = s.num_points
    trivial_lower, trivial_upper = trivial_bounds(r)
    issues: list[str] = []

    certificates = [best_line_upper(s)]
    for curve in extra_uppers:
        certificates.append(
            Certificate(
                kind="upper",
                value=seshadri_ratio(curve, s),
                curve=curve,
                notes=f"user-supplied class {curve.label or ''}".strip(),
            )
        )
    upper = min(c.value for c in certificates)

    pairing_full = covering_lower_bound(arrangement_divisor(s), s)
    certificates.append(pairing_full)
    lower = max(pairing_full.value, trivial_lower)

    if lower < upper:
        try:
            cover = min_line_cover(s, budget=budget, max_nodes=max_nodes)
        except CoverSearchTimeout as exc:
            issues.append(f"cover search exhausted its node budget ({exc.nodes} nodes)")
            cover = None
        else:
            if cover is None:
                issues.append(f"no cover within the size budget {budget}")
        if cover is not None:
            cover_cert = covering_lower_bound(cover, s)
            certificates.append(cover_cert)
            lower = max(lower, cover_cert.value)

    if lower > upper:
        raise InvalidStructureError(
            f"certificates cross: lower {lower} exceeds upper {upper}"
        )
    return Estimate(
        lower=lower,
        upper=upper,
        exact=lower == upper,
        certificates=tuple(certificates),
        trivial_lower=trivial_lower,
        trivial_upper=trivial_upper,
        issues=tuple(issues),
    )


def severi_estimate(d: int) -> Estimate:
    """Exact constant d/((d-1)(d-2)) at the nodes of a nodal curve of
    degree d >= 6 with the maximal number (d-1)(d-2)/2 of nodes.

    The curve itself realizes the ratio; pairing any other irreducible
    curve against it gives at least 2/d, and 2/d >= d/((d-1)(d-2)) is
    equivalent to d^2 - 6d + 4 >= 0, which holds from degree 6 on.
    """
    if d < 6:
        raise BadParameterError("the nodal-curve argument needs degree >= 6")
    delta = (d - 1) * (d - 2) // 2
    value = Fraction(d, (d - 1) * (d - 2))
    curve = CurveClass(
        d, {i: 2 for i in range(delta)}, label=f"nodal degree-{d} curve"
    )
    discriminant = d * d - 6 * d + 4
    assert discriminant >= 0
    upper = Certificate(
        kind="upper",
        value=value,
        curve=curve,
        notes=f"the nodal curve itself: {d}/(2*{delta})",
    )
    lower = Certificate(
        kind="lower_pairing",
        value=value,
        curve=curve,
        notes=(
            f"pairing with the nodal curve: other curves have ratio >= 2/{d}, "
            f"and d^2-6d+4 = {discriminant} >= 0 makes 2/{d} >= {value}"
        ),
    )
    trivial_lower, trivial_upper = trivial_bounds(delta)
    return Estimate(
        lower=value,
        upper=value,
        exact=True,
        certificates=(upper, lower),
        trivial_lower=trivial_lower,
        trivial_upper=trivial_upper,
    )

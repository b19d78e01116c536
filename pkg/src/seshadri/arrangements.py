"""Line arrangements as incidence structures.

An arrangement enters either with explicit rational coordinates (the
singular locus is then computed exactly) or as abstract incidence data
(line count, and for each intersection point the set of lines through
it).  The abstract form is first-class because several classical
arrangements (CEVA for n >= 3, Klein's 21 lines, Wiman's 45 lines, the
pentagon arrangement) are not realizable over the rationals, while every
computation downstream only consumes incidences and multiplicities.

Terminology used throughout:

    d          number of lines
    m_p        multiplicity of a configuration point = #lines through it
    t_k        number of points of multiplicity exactly k
    r_j        number of configuration points on line j

Two identities hold for every genuine full arrangement and act as the
consistency gate for abstract data:

    sum_p C(m_p, 2) = C(d, 2)          (each pair of lines meets once)
    d - 1 = sum_{p on l_j} (m_p - 1)   (for every line j)
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import (
    BadParameterError,
    DuplicateLineError,
    InvalidStructureError,
    PencilError,
)
from .projective import ProjLine, ProjPoint, incident, meet


@dataclass(frozen=True)
class ConfigPoint:
    """An intersection point: the set of arrangement lines through it."""

    id: int
    on_lines: frozenset[int]
    coords: ProjPoint | None = None

    @property
    def multiplicity(self) -> int:
        return len(self.on_lines)


@dataclass(frozen=True)
class VirtualLine:
    """A named line given only by the configuration points it contains.

    Used for covers that involve lines outside the arrangement when no
    rational coordinates exist; geometric realizability is asserted by
    the data provider.
    """

    name: str
    points: frozenset[int]


@dataclass(frozen=True)
class IncidenceStructure:
    """A line arrangement reduced to its point-line incidences."""

    num_lines: int
    points: tuple[ConfigPoint, ...]
    lines: tuple[ProjLine, ...] | None = None
    virtual_lines: tuple[VirtualLine, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.num_lines < 2:
            raise InvalidStructureError("an arrangement needs at least 2 lines")
        if self.lines is not None and len(self.lines) != self.num_lines:
            raise InvalidStructureError("line list does not match num_lines")
        for idx, p in enumerate(self.points):
            if p.id != idx:
                raise InvalidStructureError("point ids must be 0..r-1 in order")
            if p.multiplicity < 2:
                raise InvalidStructureError(f"point {p.id} lies on fewer than 2 lines")
            if not p.on_lines <= frozenset(range(self.num_lines)):
                raise InvalidStructureError(f"point {p.id} references unknown lines")
        ids = frozenset(range(len(self.points)))
        for v in self.virtual_lines:
            if not v.points <= ids:
                raise InvalidStructureError(f"virtual line {v.name} references unknown points")

    @property
    def origin(self) -> str:
        return "coordinates" if self.lines is not None else "abstract"

    @property
    def num_points(self) -> int:
        return len(self.points)

    def points_on_line(self, j: int) -> tuple[ConfigPoint, ...]:
        return tuple(p for p in self.points if j in p.on_lines)

    def is_pencil(self) -> bool:
        return len(self.points) == 1


def singular_locus(lines, name: str = "") -> IncidenceStructure:
    """Compute all pairwise intersection points of distinct rational lines.

    Points are grouped by exact equality and sorted by their canonical
    coordinates, so the resulting ids are reproducible.
    """
    lines = tuple(lines)
    if len(lines) < 2:
        raise BadParameterError("need at least 2 lines")
    if len(set(lines)) != len(lines):
        raise DuplicateLineError("line list contains duplicates")
    through: dict[ProjPoint, set[int]] = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            p = meet(lines[i], lines[j])
            through.setdefault(p, set()).update((i, j))
    pts = []
    for pid, coords in enumerate(sorted(through, key=lambda p: p.coords)):
        pts.append(ConfigPoint(pid, frozenset(through[coords]), coords))
    return IncidenceStructure(len(lines), tuple(pts), lines=lines, name=name)


def tk_vector(s: IncidenceStructure) -> dict[int, int]:
    """Multiplicity census: t_k = number of points of multiplicity k."""
    census: dict[int, int] = {}
    for p in s.points:
        census[p.multiplicity] = census.get(p.multiplicity, 0) + 1
    return dict(sorted(census.items()))


def line_point_counts(s: IncidenceStructure) -> tuple[list[int], int]:
    """Per-line point counts r_j, together with their maximum s(L)."""
    counts = [0] * s.num_lines
    for p in s.points:
        for j in p.on_lines:
            counts[j] += 1
    return counts, max(counts)


def check_line_identity(s: IncidenceStructure) -> bool:
    """d - 1 = sum over points on l_j of (m_p - 1), for every line j."""
    target = s.num_lines - 1
    sums = [0] * s.num_lines
    for p in s.points:
        for j in p.on_lines:
            sums[j] += p.multiplicity - 1
    return all(v == target for v in sums)


def hirzebruch_property(s: IncidenceStructure) -> int | None:
    """n if the arrangement has 3n lines each carrying n+1 points, else None."""
    if s.num_lines % 3 != 0:
        return None
    n = s.num_lines // 3
    counts, _ = line_point_counts(s)
    return n if all(r == n + 1 for r in counts) else None


def validate_counts(s: IncidenceStructure, complete: bool = True) -> list[str]:
    """Consistency gate; returns the list of violated identities (empty = ok).

    Structural checks (no repeated point, no two lines sharing two
    points) always run.  The pair-count identity and the per-line
    identity assume a full arrangement and are skipped for explicitly
    incomplete data such as sub-selections of a larger arrangement.
    """
    violations = []
    seen: dict[frozenset[int], int] = {}
    for p in s.points:
        if p.on_lines in seen:
            violations.append(
                f"points {seen[p.on_lines]} and {p.id} have identical line sets"
            )
        seen[p.on_lines] = p.id
    shared: dict[tuple[int, int], int] = {}
    for p in s.points:
        ordered = sorted(p.on_lines)
        for a in range(len(ordered)):
            for b in range(a + 1, len(ordered)):
                pair = (ordered[a], ordered[b])
                if pair in shared:
                    violations.append(
                        f"lines {pair[0]} and {pair[1]} share points {shared[pair]} and {p.id}"
                    )
                shared[pair] = p.id
    if complete:
        pair_sum = sum(comb(p.multiplicity, 2) for p in s.points)
        expected = comb(s.num_lines, 2)
        if pair_sum != expected:
            violations.append(
                f"pair count {pair_sum} != C({s.num_lines},2) = {expected}"
            )
        counts, _ = line_point_counts(s)
        if sum(counts) != sum(p.multiplicity for p in s.points):
            violations.append("sum of r_j differs from sum of multiplicities")
        if not check_line_identity(s):
            violations.append("per-line identity d-1 = sum(m_p - 1) fails")
    return violations


def max_r_ratio(s: IncidenceStructure) -> Fraction:
    """(max_j r_j) / d, the quantity probed when asking for linear lower bounds on r_j."""
    if s.is_pencil():
        raise PencilError("ratio undefined for a pencil")
    _, s_max = line_point_counts(s)
    return Fraction(s_max, s.num_lines)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def gen_ceva(n: int) -> IncidenceStructure:
    """CEVA arrangement of 3n lines: the linear factors of
    (x^n - y^n)(y^n - z^n)(z^n - x^n), built abstractly.

    Lines are indexed family-major: family f in {0,1,2}, member i in Z_n,
    id = f*n + i.  Each family is a pencil through one of three vertices
    of multiplicity n; the remaining points are the n^2 triple points
    p(i, j) on lines (0, i), (1, j), (2, (i+j) mod n).
    """
    if n < 3:
        raise BadParameterError("CEVA arrangement needs n >= 3")
    pts = []
    for f in range(3):
        pts.append(ConfigPoint(f, frozenset(f * n + i for i in range(n))))
    pid = 3
    for i in range(n):
        for j in range(n):
            pts.append(ConfigPoint(pid, frozenset((i, n + j, 2 * n + (i + j) % n))))
            pid += 1
    return IncidenceStructure(3 * n, tuple(pts), name=f"ceva_{n}")


def gen_star(d: int) -> IncidenceStructure:
    """d rational lines in general position (all intersections double).

    Uses tangent lines of the conic y*z = x^2 at d rational parameters:
    no point of the plane lies on three tangents, so all C(d,2)
    intersection points are distinct double points.
    """
    if d < 3:
        raise BadParameterError("star arrangement needs d >= 3")
    lines = [ProjLine(2 * t, -1, -t * t) for t in range(d)]
    return singular_locus(lines, name=f"star_{d}")


def gen_quasipencil(d: int) -> IncidenceStructure:
    """d lines: d-1 concurrent lines plus one transversal.

    Yields one point of multiplicity d-1 and d-1 double points, all of
    the latter on the transversal.
    """
    if d < 3:
        raise BadParameterError("quasipencil needs d >= 3")
    lines = [ProjLine(1, -i, 0) for i in range(d - 1)] + [ProjLine(0, 1, -1)]
    return singular_locus(lines, name=f"quasipencil_{d}")


def gen_a1_6() -> IncidenceStructure:
    """Complete quadrilateral: 6 lines, 4 triple points, 3 double points."""
    lines = [
        ProjLine(1, 0, 0),
        ProjLine(0, 1, 0),
        ProjLine(0, 0, 1),
        ProjLine(0, 1, -1),
        ProjLine(1, 0, -1),
        ProjLine(1, -1, 0),
    ]
    return singular_locus(lines, name="a1_6")


def gen_a1_9() -> IncidenceStructure:
    """Square sides, its four symmetry axes, and the line at infinity.

    9 lines with 3 quadruple, 4 triple and 6 double points.
    """
    lines = [
        ProjLine(1, 0, -1),  # x = 1
        ProjLine(1, 0, 1),   # x = -1
        ProjLine(0, 1, -1),  # y = 1
        ProjLine(0, 1, 1),   # y = -1
        ProjLine(1, 0, 0),   # x = 0
        ProjLine(0, 1, 0),   # y = 0
        ProjLine(1, -1, 0),  # y = x
        ProjLine(1, 1, 0),   # y = -x
        ProjLine(0, 0, 1),   # line at infinity
    ]
    return singular_locus(lines, name="a1_9")


def gen_a1_15() -> IncidenceStructure:
    """Regular pentagon: sides, symmetry axes and diagonals (15 lines).

    Needs sqrt(5), so the structure ships as bundled incidence data with
    6 quintuple, 10 triple and 15 double points, plus the named virtual
    lines L1..L6 of the classical six-line cover (L1 is not an
    arrangement line).
    """
    from .io import load_bundled

    return load_bundled("a1_15")


def gen_klein() -> IncidenceStructure:
    """Klein's arrangement of 21 lines (21 quadruple, 28 triple points).

    The lines are the axes of the 21 involutions of the PSL(2,7) action
    on the plane; bundled as abstract incidence data.
    """
    from .io import load_bundled

    return load_bundled("klein")


def gen_wiman() -> IncidenceStructure:
    """Wiman's arrangement of 45 lines (120 triple, 45 quadruple, 36
    quintuple points), the axes of the 45 involutions of the Valentiner
    A6 action; bundled as abstract incidence data."""
    from .io import load_bundled

    return load_bundled("wiman")


def gen_generic(d: int, seed: int) -> IncidenceStructure:
    """d random rational lines in general position, deterministic per seed.

    Lines are drawn with small integer coefficients and redrawn until no
    two coincide and no three are concurrent.
    """
    if d < 3:
        raise BadParameterError("generic arrangement needs d >= 3")
    rng = random.Random(seed)
    lines: list[ProjLine] = []
    meets: set = set()
    while len(lines) < d:
        coeffs = tuple(rng.randint(-30, 30) for _ in range(3))
        if not any(coeffs):
            continue
        cand = ProjLine(*coeffs)
        if cand in lines:
            continue
        if any(incident(p, cand) for p in meets):
            continue
        meets.update(meet(old, cand) for old in lines)
        lines.append(cand)
    return singular_locus(lines, name=f"generic_{d}_{seed}")


GENERATORS = {
    "ceva": gen_ceva,
    "star": gen_star,
    "quasipencil": gen_quasipencil,
    "a1_6": gen_a1_6,
    "a1_9": gen_a1_9,
    "a1_15": gen_a1_15,
    "klein": gen_klein,
    "wiman": gen_wiman,
    "generic": gen_generic,
}

#!/usr/bin/env python3
"""Regenerate the bundled incidence data files in src/seshadri/data/.

All three constructions are exact; no floating point is involved.

klein.json / wiman.json
    The 21 lines of Klein's arrangement are the fixed lines (axes) of the
    21 involutions of the PSL(2,7) action on the projective plane; the 45
    lines of Wiman's arrangement are the axes of the 45 involutions of
    the Valentiner A6 action.  An involution of PGL(3,C) fixes a line
    pointwise, so for two involutions t, u the unique intersection point
    of their axes is determined by the subgroup they generate:

      order(tu) = 2: both axes pass through the isolated fixed point of
                     the third involution tu (simultaneous
                     diagonalization diag(1,-1,-1), diag(-1,1,-1));
      order(tu) = 3 or 5: a dihedral subgroup whose reflections share a
                     fixed point - all its axes are concurrent;
      order(tu) = 4: the axes meet at the isolated fixed point of the
                     central involution (tu)^2.

    Hence the configuration points are: one point per involution c
    (axes through it = involutions commuting with c, excluding c), one
    per S3 subgroup (its 3 involutions), and one per D5 subgroup (its 5
    involutions).  The script verifies that this accounts for every pair
    of axes exactly once and reproduces the known multiplicity censuses,
    which pins the incidence structure completely.

a1_15.json
    Sides, symmetry axes and diagonals of a regular pentagon.  The
    pentagon is built over Q(sqrt5) after scaling the y-axis by
    1/sin(72deg) - an affine map, so incidences (including the five
    intersection points at infinity of side/diagonal parallels) are
    unchanged while all coordinates stay in the quadratic field.  The
    six dashed cover lines L1..L6 (L1 joins two side midpoints and is
    not an arrangement line) are exported as virtual lines.

Run from the repository root:  python3 tools/build_bundled_data.py
"""

from __future__ import annotations

import sys
from fractions import Fraction
from itertools import permutations
from math import comb
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from seshadri.arrangements import (  # noqa: E402
    ConfigPoint,
    IncidenceStructure,
    VirtualLine,
    hirzebruch_property,
    line_point_counts,
    tk_vector,
    validate_counts,
)
from seshadri.io import dump_canonical, structure_to_json  # noqa: E402

DATA_DIR = REPO / "src" / "seshadri" / "data"


# ---------------------------------------------------------------------------
# Permutation groups
# ---------------------------------------------------------------------------


def compose(p, q):
    """Permutation p after q (tuples of images)."""
    return tuple(p[q[i]] for i in range(len(q)))


def perm_order(p):
    n, ident = 1, tuple(range(len(p)))
    q = p
    while q != ident:
        q = compose(p, q)
        n += 1
    return n


def closure(generators):
    ident = tuple(range(len(generators[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in generators:
                e = compose(h, g)
                if e not in seen:
                    seen.add(e)
                    nxt.append(e)
        frontier = nxt
    return seen


def psl27():
    """PSL(2,7) acting on the projective line over F7 (point 7 = infinity)."""
    shift = tuple(list((i + 1) % 7 for i in range(7)) + [7])  # z -> z + 1
    flip = [0] * 8  # z -> -1/z
    flip[0], flip[7] = 7, 0
    for z in range(1, 7):
        flip[z] = (-pow(z, -1, 7)) % 7
    group = closure([shift, tuple(flip)])
    assert len(group) == 168
    return group


def alternating6():
    group = set()
    for perm in permutations(range(6)):
        inversions = sum(
            perm[i] > perm[j] for i in range(6) for j in range(i + 1, 6)
        )
        if inversions % 2 == 0:
            group.add(perm)
    assert len(group) == 360
    return group


def axes_structure(group, expected_census, name):
    """Incidence structure of the involution axes of a planar group action."""
    involutions = sorted(p for p in group if perm_order(p) == 2)
    index = {p: i for i, p in enumerate(involutions)}
    d = len(involutions)

    point_sets: set[frozenset[int]] = set()
    # one point per involution: the axes through its isolated fixed point
    for c in involutions:
        through = frozenset(
            index[t] for t in involutions if t != c and compose(t, c) == compose(c, t)
        )
        assert len(through) == 4
        point_sets.add(through)
    # one point per dihedral subgroup generated by a pair with odd product order
    for i in range(d):
        for j in range(i + 1, d):
            k = perm_order(compose(involutions[i], involutions[j]))
            assert k in (2, 3, 4, 5), f"unexpected product order {k}"
            if k in (3, 5):
                sub = closure([involutions[i], involutions[j]])
                refl = frozenset(index[t] for t in sub if perm_order(t) == 2)
                assert len(refl) == k
                point_sets.add(refl)

    points = tuple(
        ConfigPoint(pid, lines)
        for pid, lines in enumerate(sorted(point_sets, key=sorted))
    )
    s = IncidenceStructure(d, points, name=name)

    assert tk_vector(s) == expected_census, tk_vector(s)
    assert not validate_counts(s), validate_counts(s)
    assert sum(comb(p.multiplicity, 2) for p in s.points) == comb(d, 2)
    return s


# ---------------------------------------------------------------------------
# Q(sqrt5) and the pentagon arrangement
# ---------------------------------------------------------------------------


class Q5:
    """Exact arithmetic in Q(sqrt5): value = a + b*sqrt(5)."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a, self.b = Fraction(a), Fraction(b)

    def __add__(self, o):
        return Q5(self.a + o.a, self.b + o.b)

    def __sub__(self, o):
        return Q5(self.a - o.a, self.b - o.b)

    def __mul__(self, o):
        return Q5(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    def __neg__(self):
        return Q5(-self.a, -self.b)

    def inverse(self):
        norm = self.a * self.a - 5 * self.b * self.b
        return Q5(self.a / norm, -self.b / norm)

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def __eq__(self, o):
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def key(self):
        return (self.a, self.b)


SQRT5 = Q5(0, 1)
HALF = Q5(Fraction(1, 2))


def q5_cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def q5_canonical(triple):
    for lead in triple:
        if not lead.is_zero():
            inv = lead.inverse()
            return tuple(c * inv for c in triple)
    raise ValueError("zero triple")


def q5_incident(point, line):
    acc = Q5(0)
    for c, x in zip(line, point):
        acc = acc + c * x
    return acc.is_zero()


def pentagon_structure():
    v = [
        (Q5(0), Q5(0)),
        (Q5(4), Q5(0)),
        (Q5(3) + SQRT5, Q5(4)),
        (Q5(2), Q5(2) + SQRT5 + SQRT5),
        (Q5(1) - SQRT5, Q5(4)),
    ]

    def homog(p):
        return (p[0], p[1], Q5(1))

    def join(p, q):
        return q5_canonical(q5_cross(homog(p), homog(q)))

    def midpoint(p, q):
        return ((p[0] + q[0]) * HALF, (p[1] + q[1]) * HALF)

    sides = [join(v[k], v[(k + 1) % 5]) for k in range(5)]
    axes = [join(v[k], midpoint(v[(k + 2) % 5], v[(k + 3) % 5])) for k in range(5)]
    diagonals = [join(v[k], v[(k + 2) % 5]) for k in range(5)]
    lines = sides + axes + diagonals
    assert len(set(lines)) == 15

    through: dict[tuple, set[int]] = {}
    for i in range(15):
        for j in range(i + 1, 15):
            p = q5_canonical(q5_cross(lines[i], lines[j]))
            through.setdefault(p, set()).update((i, j))
    ordered = sorted(through, key=lambda p: tuple(c.key() for c in p))
    points = tuple(
        ConfigPoint(pid, frozenset(through[p])) for pid, p in enumerate(ordered)
    )

    cover_geometry = {
        "L1": join(midpoint(v[4], v[0]), midpoint(v[1], v[2])),
        "L2": join(v[3], v[2]),
        "L3": join(v[1], v[3]),
        "L4": join(v[3], midpoint(v[0], v[1])),
        "L5": join(v[0], v[3]),
        "L6": join(v[4], v[3]),
    }
    assert cover_geometry["L1"] not in lines
    for label in ("L2", "L3", "L4", "L5", "L6"):
        assert cover_geometry[label] in lines

    virtual = []
    covered: set[int] = set()
    for label in sorted(cover_geometry):
        line = cover_geometry[label]
        on = frozenset(
            pt.id for pt, coords in zip(points, ordered) if q5_incident(coords, line)
        )
        virtual.append(VirtualLine(label, on))
        covered |= on
    assert covered == set(range(len(points))), "cover misses a point"
    assert len(virtual[0].points) == 5  # L1
    assert all(len(vl.points) == 6 for vl in virtual[1:])

    s = IncidenceStructure(15, points, virtual_lines=tuple(virtual), name="a1_15")
    assert tk_vector(s) == {2: 15, 3: 10, 5: 6}, tk_vector(s)
    assert not validate_counts(s)
    counts, s_max = line_point_counts(s)
    assert counts == [6] * 15 and s_max == 6
    return s


# ---------------------------------------------------------------------------


def write(structure, source):
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    path = DATA_DIR / f"{structure.name}.json"
    path.write_text(dump_canonical(structure_to_json(structure, source=source)))
    census = tk_vector(structure)
    print(f"{path.name}: d={structure.num_lines} r={structure.num_points} tk={census}")


def main():
    klein = axes_structure(
        psl27(), {3: 28, 4: 21}, "klein"
    )
    assert hirzebruch_property(klein) == 7
    write(klein, "axes of the 21 involutions of PSL(2,7) acting on the plane")

    wiman = axes_structure(
        alternating6(), {3: 120, 4: 45, 5: 36}, "wiman"
    )
    assert hirzebruch_property(wiman) == 15
    write(wiman, "axes of the 45 involutions of the Valentiner A6 action")

    write(
        pentagon_structure(),
        "regular pentagon: sides, symmetry axes, diagonals (exact Q(sqrt5) model)",
    )


if __name__ == "__main__":
    main()

from fractions import Fraction
from itertools import combinations

import pytest

from seshadri.arrangements import (
    gen_a1_6,
    gen_a1_9,
    gen_a1_15,
    gen_ceva,
    gen_generic,
    gen_klein,
    gen_quasipencil,
    gen_star,
    gen_wiman,
    hirzebruch_property,
    line_point_counts,
    singular_locus,
)
from seshadri.constants import (
    CurveClass,
    arrangement_divisor,
    best_line_upper,
    cover_candidates,
    covering_lower_bound,
    min_line_cover,
    resolve,
    almost_homogeneous,
    seshadri_ratio,
    severi_estimate,
    subset_divisor,
    trivial_bounds,
)
from seshadri.errors import (
    BadParameterError,
    CoverSearchTimeout,
    NotCoveringError,
    ZeroMultiplicityError,
)
from seshadri.projective import ProjLine


def brute_min_cover_size(candidate_sets, universe, upto):
    """Independent oracle: exhaustive subset enumeration."""
    for k in range(1, upto + 1):
        for combo in combinations(range(len(candidate_sets)), k):
            if set().union(*(candidate_sets[i] for i in combo)) >= universe:
                return k
    return None


class TestRatio:
    def test_sextic_with_smooth_extras(self):
        mults = {0: 3, **{i: 2 for i in range(1, 8)}, **{i: 1 for i in range(8, 27)}}
        assert seshadri_ratio(CurveClass(6, mults)) == Fraction(1, 6)

    def test_line_through_four(self):
        assert seshadri_ratio(CurveClass(1, {i: 1 for i in range(4)})) == Fraction(1, 4)

    def test_cuspidal_kummer_classes(self):
        for k in range(1, 6):
            curve = CurveClass(6 * k, {i: 2 for i in range(9 * k * k)})
            assert seshadri_ratio(curve) == Fraction(1, 3 * k)

    def test_empty_class_rejected(self):
        with pytest.raises(BadParameterError):
            CurveClass(2, {})

    def test_unknown_point_rejected(self):
        s = gen_star(3)
        with pytest.raises(BadParameterError):
            seshadri_ratio(CurveClass(1, {99: 1}), s)


def test_zero_multiplicity_via_direct_fields():
    # CurveClass refuses empty mults, so drive the ratio check directly
    curve = CurveClass(1, {0: 1})
    object.__setattr__(curve, "mults", ())
    with pytest.raises(ZeroMultiplicityError):
        seshadri_ratio(curve)


class TestTrivialBounds:
    def test_square_count_is_exact(self):
        lower, upper = trivial_bounds(49)
        assert lower == Fraction(1, 49)
        assert upper.exact() == Fraction(1, 7)

    def test_single_point(self):
        lower, upper = trivial_bounds(1)
        assert lower == 1 and upper.exact() == 1

    def test_non_square_comparison(self):
        _, upper = trivial_bounds(12)
        assert upper.exact() is None
        assert Fraction(1, 4) <= upper  # 1/16 <= 1/12
        assert not (Fraction(1, 3) <= upper)  # 1/9 > 1/12


class TestBestLineUpper:
    def test_ceva4(self):
        assert best_line_upper(gen_ceva(4)).value == Fraction(1, 5)

    def test_quasipencil7(self):
        cert = best_line_upper(gen_quasipencil(7))
        assert cert.value == Fraction(1, 6)

    def test_star3(self):
        assert best_line_upper(gen_star(3)).value == Fraction(1, 2)

    def test_certificate_is_consistent(self):
        s = gen_a1_9()
        cert = best_line_upper(s)
        assert cert.value == seshadri_ratio(cert.curve, s) == Fraction(1, 4)


class TestCoveringLowerBound:
    def test_full_ceva3(self):
        s = gen_ceva(3)
        cert = covering_lower_bound(arrangement_divisor(s), s)
        # every point triple (a=3, k=9), every line through 4 points
        assert cert.value == min(Fraction(3, 9), Fraction(1, 4)) == Fraction(1, 4)

    def test_a1_9_four_line_subselection(self):
        s = gen_a1_9()
        # the three vertical lines x=1, x=-1, x=0 plus the line at infinity
        ids = [s.lines.index(ProjLine(*c)) for c in ((1, 0, -1), (1, 0, 1), (1, 0, 0), (0, 0, 1))]
        div = subset_divisor(s, line_ids=ids)
        cert = covering_lower_bound(div, s)
        assert cert.value == Fraction(1, 4)

    def test_a1_15_bundled_figure_cover(self):
        s = gen_a1_15()
        names = [v.name for v in s.virtual_lines]
        assert names == ["L1", "L2", "L3", "L4", "L5", "L6"]
        div = subset_divisor(s, virtual=names)
        cert = covering_lower_bound(div, s)
        assert cert.value == Fraction(1, 6)

    def test_not_covering(self):
        s = gen_star(4)
        with pytest.raises(NotCoveringError):
            covering_lower_bound(subset_divisor(s, line_ids=[0]), s)

    def test_star5_pairing(self):
        s = gen_star(5)
        cert = covering_lower_bound(arrangement_divisor(s), s)
        assert cert.value == min(Fraction(2, 5), Fraction(1, 4)) == Fraction(1, 4)


class TestMinLineCover:
    def test_a1_9_cover_size_four(self):
        s = gen_a1_9()
        cover = min_line_cover(s)
        assert cover.total_degree == 4
        pool = [c.points for c in cover_candidates(s, include_singletons=True)]
        assert brute_min_cover_size(pool, set(range(13)), 4) == 4
        assert min_line_cover(s, budget=3) is None

    def test_a1_15_cover_size_six(self):
        s = gen_a1_15()
        cover = min_line_cover(s)
        assert cover.total_degree == 6
        pool = [c.points for c in cover_candidates(s, include_singletons=True)]
        # exhaustive oracle: no cover of size 5
        assert brute_min_cover_size(pool, set(range(31)), 5) is None
        assert min_line_cover(s, budget=5) is None

    def test_pencil_cover_size_one(self):
        s = singular_locus([ProjLine(1, -i, 0) for i in range(5)])
        assert min_line_cover(s).total_degree == 1

    def test_deterministic(self):
        s = gen_a1_9()
        first = min_line_cover(s)
        second = min_line_cover(s)
        assert [c.label for c in first.components] == [c.label for c in second.components]

    def test_node_budget_timeout(self):
        with pytest.raises(CoverSearchTimeout):
            min_line_cover(gen_a1_15(), max_nodes=1)


class TestResolve:
    @pytest.mark.parametrize("n", range(3, 9))
    def test_ceva(self, n):
        est = resolve(gen_ceva(n))
        assert est.exact and est.lower == Fraction(1, n + 1)

    def test_klein(self):
        est = resolve(gen_klein())
        assert est.exact and est.lower == Fraction(1, 8)

    def test_wiman(self):
        est = resolve(gen_wiman())
        assert est.exact and est.lower == Fraction(1, 16)

    @pytest.mark.parametrize("d", range(3, 13))
    def test_star(self, d):
        est = resolve(gen_star(d))
        assert est.exact and est.lower == Fraction(1, d - 1)

    @pytest.mark.parametrize("d", range(3, 13))
    def test_quasipencil(self, d):
        est = resolve(gen_quasipencil(d))
        assert est.exact and est.lower == Fraction(1, d - 1)

    def test_real_reflection_cases(self):
        assert resolve(gen_star(3)).lower == Fraction(1, 2)
        assert resolve(gen_a1_6()).lower == Fraction(1, 3)
        assert resolve(gen_a1_9()).lower == Fraction(1, 4)
        assert resolve(gen_a1_15()).lower == Fraction(1, 6)
        for s in (gen_a1_6(), gen_a1_9(), gen_a1_15()):
            assert resolve(s).exact

    def test_soundness_interval(self):
        for s in (gen_generic(7, seed=2), gen_ceva(5), gen_a1_9(), gen_klein()):
            est = resolve(s)
            assert est.trivial_lower <= est.lower <= est.upper
            assert est.lower >= Fraction(1, s.num_points)

    def test_hirzebruch_specialization(self):
        # 3n lines, n+1 points per line, all multiplicities >= 3
        for s in (gen_ceva(3), gen_ceva(6), gen_klein(), gen_wiman()):
            n = hirzebruch_property(s)
            assert n is not None
            assert all(p.multiplicity >= 3 for p in s.points)
            est = resolve(s)
            assert est.exact and est.lower == Fraction(1, n + 1)

    def test_line_question_audit(self):
        # for every named arrangement the exact value equals 1/s(L)
        for s in (
            gen_star(3), gen_a1_6(), gen_a1_9(), gen_a1_15(),
            gen_ceva(3), gen_ceva(6), gen_klein(), gen_wiman(),
            gen_star(8), gen_quasipencil(8),
        ):
            est = resolve(s)
            _, s_max = line_point_counts(s)
            assert est.exact and est.lower == Fraction(1, s_max)

    def test_user_supplied_upper(self):
        s = gen_a1_9()
        asserted = CurveClass(23, {**{i: 8 for i in range(12)}, 12: 4}, label="asserted")
        est = resolve(s, extra_uppers=[asserted], max_nodes=1)
        assert est.upper == Fraction(23, 100)
        assert est.lower == Fraction(2, 9)
        assert not est.exact

    def test_inconsistent_user_upper_detected(self):
        from seshadri.errors import InvalidStructureError

        s = gen_star(3)
        fake = CurveClass(1, {0: 1, 1: 1, 2: 1}, label="line through all three")
        with pytest.raises(InvalidStructureError):
            resolve(s, extra_uppers=[fake])  # contradicts the pairing certificate

    def test_timeout_gives_honest_interval(self):
        s = gen_a1_9()
        est = resolve(s, max_nodes=1)
        assert not est.exact
        assert est.lower == Fraction(2, 9) and est.upper == Fraction(1, 4)
        assert any("node budget" in msg for msg in est.issues)


class TestPairingInternalCheck:
    def line_union_class(self, s, ids):
        mults = {}
        for p in s.points:
            m = len(p.on_lines & set(ids))
            if m:
                mults[p.id] = m
        return CurveClass(len(ids), mults, label=f"union of lines {ids}")

    @pytest.mark.parametrize("maker", [gen_a1_6, gen_a1_9, lambda: gen_star(6), lambda: gen_quasipencil(6)])
    def test_bezout_pairing_on_line_unions(self, maker):
        # pairing inequality e*k >= sum mult_p(divisor) * n_p for curves
        # sharing no component with the divisor: split the arrangement in
        # two and pair unions from one half against the other half
        s = maker()
        half = s.num_lines // 2
        divisor_ids = range(half)
        div = subset_divisor(s, line_ids=divisor_ids)
        k = div.total_degree
        coverage = {p.id: len(p.on_lines & set(divisor_ids)) for p in s.points}
        for ids in combinations(range(half, s.num_lines), 2):
            curve = self.line_union_class(s, ids)
            paired = sum(coverage[pid] * m for pid, m in curve.mults)
            assert curve.degree * k >= paired


class TestSeveriEstimate:
    def test_degree_six(self):
        est = severi_estimate(6)
        assert est.exact and est.lower == Fraction(3, 10)

    def test_degree_ten(self):
        assert severi_estimate(10).lower == Fraction(5, 36)

    def test_below_hypothesis(self):
        with pytest.raises(BadParameterError):
            severi_estimate(5)

    def test_certificate_notes_record_discriminant(self):
        est = severi_estimate(7)
        lower = [c for c in est.certificates if c.kind == "lower_pairing"][0]
        assert "d^2-6d+4 = 11" in lower.notes


class TestAlmostHomogeneous:
    def test_examples(self):
        assert almost_homogeneous((3, 2, 2, 2, 2, 2, 2, 2))
        assert not almost_homogeneous((3,) + (2,) * 7 + (1,) * 19)
        assert almost_homogeneous((5, 5, 5, 5))
        assert almost_homogeneous((4,))
        assert not almost_homogeneous((4, 4, 3, 3))
        with pytest.raises(BadParameterError):
            almost_homogeneous(())

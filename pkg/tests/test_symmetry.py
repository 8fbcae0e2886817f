"""Double tangency symmetry tests: frozen image values, the defining
properties on full sweeps and samples, classification, uniqueness, and
the inversive-plane extraction goldens."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from laguerre_lab.errors import (
    NotFixedPointFree,
    NotUnique,
    PointNotOnCircle,
    TangentPair,
)
from laguerre_lab.models import miquelian_plane
from laguerre_lab.report import CheckMode
from laguerre_lab.symmetry import (
    Automorphism,
    build_dts,
    classify_symmetry,
    double_tangency_pencil,
    export_automorphism,
    find_fixed_point_free_pair,
    fixed_circles,
    import_automorphism,
    moebius_extract,
    sample_nontangent_pairs,
    symmetry_uniqueness,
    tangency_map,
    tangent_to_second,
    verify_dts,
    verify_pi_symmetry,
)


@pytest.fixture(scope="module")
def p5():
    return miquelian_plane(5)


@pytest.fixture(scope="module")
def secant_pair(p5):
    return (p5.circle_from_coef((1, 0, 0)).id, p5.circle_from_coef((4, 0, 2)).id)


@pytest.fixture(scope="module")
def q3_sweep():
    """All non-tangent pairs of the order-3 plane with their symmetries."""
    P = miquelian_plane(3)
    cache = {}
    for K in range(P.n_circles):
        for L in range(K + 1, P.n_circles):
            if int(P.pair_count[K, L]) != 1:
                cache[(K, L)] = build_dts(P, K, L)
    return P, cache


def test_tangent_to_second_pinned_example(p5, secant_pair):
    K, L = secant_pair
    M, touch = tangent_to_second(p5, 0, K, L)
    assert M.coef == (4, 0, 0)
    assert p5.point_label(touch) == "(inf,4)"
    # oracle: brute pencil scan
    brute = [m for m in p5.tangent_pencil(0, K)
             if p5.tangency(m, L).kind == "tangent"]
    assert brute == [M.id]


def test_tangent_to_second_common_point_convention(p5, secant_pair):
    K, L = secant_pair
    common = p5.tangency(K, L).points
    for p in common:
        _, touch = tangent_to_second(p5, p, K, L)
        assert touch == p


def test_tangent_to_second_not_unique_on_char2():
    P4 = miquelian_plane(4)
    with pytest.raises(NotUnique):
        tangent_to_second(P4, 0, P4.circle_from_coef((0, 0, 0)),
                          P4.circle_from_coef((0, 0, 1)))
    with pytest.raises(PointNotOnCircle):
        tangent_to_second(miquelian_plane(5), 1, 25, 102)


def test_tangency_map_examples_and_roundtrip(p5, secant_pair):
    K, L = secant_pair
    h = tangency_map(p5, K, L)
    hinv = tangency_map(p5, L, K)
    assert p5.point_label(h(0)) == "(inf,4)"
    assert h(6) == 6  # (1,1) is a common point
    for x in p5.members[K]:
        assert hinv(h(int(x))) == int(x)
    with pytest.raises(TangentPair):
        tangency_map(p5, p5.circle_from_coef((1, 0, 0)), p5.circle_from_coef((1, 0, 1)))


def test_double_tangency_pencil_golden(p5, secant_pair):
    K, L = secant_pair
    pen = double_tangency_pencil(p5, K, L)
    assert sorted(p5.circle_coef(c) for c in pen) == [
        (0, 1, 1), (0, 4, 1), (1, 0, 2), (4, 0, 0)]
    # oracle identity: members are precisely the circles tangent to both
    brute = [cid for cid in range(p5.n_circles)
             if p5.tangency(cid, K).kind in ("tangent", "equal")
             and p5.tangency(cid, L).kind in ("tangent", "equal")]
    assert list(pen.members) == brute
    with pytest.raises(ValueError):
        double_tangency_pencil(p5, K, K)


def test_double_tangency_pencil_tangent_case_equals_tangent_pencil(p5):
    K = p5.circle_from_coef((1, 0, 0))
    L = p5.circle_from_coef((1, 0, 1))  # tangent to K at (inf,1)
    t = p5.tangency(K, L)
    assert t.kind == "tangent"
    pen = double_tangency_pencil(p5, K, L)
    assert set(pen.members) == set(p5.tangent_pencil(t.points[0], K).members)


def test_build_dts_restriction_is_the_tangency_map(p5, secant_pair):
    K, L = secant_pair
    phi = build_dts(p5, K, L)
    h = tangency_map(p5, K, L)
    for x in p5.members[K]:
        assert phi(int(x)) == h(int(x))
    assert phi.is_involution()


def test_build_dts_fixes_generators_through_common_points(p5, secant_pair):
    K, L = secant_pair
    phi = build_dts(p5, K, L)
    fixed = set(phi.fixed_points())
    gens = {int(p5.gen_of[p]) for p in p5.tangency(K, L).points}
    expected = {int(x) for g in gens for x in p5.gen_members[g]}
    assert fixed == expected  # nothing outside the two generators is fixed


def test_build_dts_rejects_tangent_pair(p5):
    with pytest.raises(TangentPair):
        build_dts(p5, p5.circle_from_coef((1, 0, 0)), p5.circle_from_coef((1, 0, 1)))


def test_build_dts_unordered_pair_invariance(q3_sweep, p5, secant_pair):
    P3, cache = q3_sweep
    for (K, L), phi in itertools.islice(cache.items(), 40):
        assert build_dts(P3, L, K).equals(phi)
    K, L = secant_pair
    assert build_dts(p5, L, K).equals(build_dts(p5, K, L))


def test_verify_dts_all_pairs_q3(q3_sweep):
    P3, cache = q3_sweep
    assert len(cache) == 243
    for (K, L), phi in cache.items():
        rep = verify_dts(P3, phi)
        assert rep.holds, (P3.circle_coef(K), P3.circle_coef(L),
                           [v.kind for v in rep.violations])


def test_verify_dts_sampled_pairs_q5_q7():
    for q, n in ((5, 30), (7, 12)):
        P = miquelian_plane(q)
        for K, L in sample_nontangent_pairs(P, n, seed=2024):
            phi = build_dts(P, K, L)
            rep = verify_dts(P, phi, K, L)
            assert rep.holds


def test_dtp_members_swap_touch_points_under_h(p5, secant_pair):
    K, L = secant_pair
    h = tangency_map(p5, K, L).as_dict()
    for C in double_tangency_pencil(p5, K, L):
        tk = p5.tangency(C, K)
        tl = p5.tangency(C, L)
        assert h[tk.points[0]] == tl.points[0]


def test_classify_secant_golden(p5, secant_pair):
    K, L = secant_pair
    cls = classify_symmetry(p5, K, L)
    assert cls.kind == "LaguerreSymmetry"
    assert cls.fixed_generators == (1, 4)
    assert cls.fixed_point_count == 10
    # the witness circle is fixed setwise but not pointwise
    phi = build_dts(p5, K, L)
    w = cls.witness_circle
    assert int(phi.circle_image()[w]) == w
    assert any(phi(int(x)) != int(x) for x in p5.members[w])


def test_classify_disjoint_fixed_point_free(p5):
    K = p5.circle_from_coef((1, 0, 0)).id
    L = p5.circle_from_coef((4, 0, 1)).id
    assert p5.tangency(K, L).kind == "disjoint"
    cls = classify_symmetry(p5, K, L)
    assert cls.kind == "FixedPointFree" and cls.fixed_point_count == 0


def test_all_disjoint_pairs_are_fixed_point_free_q3(q3_sweep):
    # measured: the disjoint branch never produces fixed points
    P3, cache = q3_sweep
    for (K, L), phi in cache.items():
        if int(P3.pair_count[K, L]) == 0:
            cls = classify_symmetry(P3, K, L, phi)
            assert cls.kind == "FixedPointFree" and cls.fixed_point_count == 0


def test_classify_rejects_tangent(p5):
    with pytest.raises(TangentPair):
        classify_symmetry(p5, p5.circle_from_coef((1, 0, 0)),
                          p5.circle_from_coef((1, 0, 1)))


def test_classify_all_secant_pairs_q3(q3_sweep):
    P3, cache = q3_sweep
    for (K, L), phi in cache.items():
        if int(P3.pair_count[K, L]) != 2:
            continue
        cls = classify_symmetry(P3, K, L, phi)
        assert cls.kind == "LaguerreSymmetry"
        gens = {int(P3.gen_of[p]) for p in P3.tangency(K, L).points}
        assert set(cls.fixed_generators) == gens
        # measured: nothing outside the two generators is fixed, so every
        # other generator moves pointwise somewhere
        assert cls.fixed_point_count == 2 * P3.q


def test_symmetry_uniqueness_all_q3(q3_sweep):
    P3, cache = q3_sweep
    for P, Q in itertools.combinations(range(P3.n_gens), 2):
        for M in range(P3.n_circles):
            rep = symmetry_uniqueness(P3, P, Q, M, cache)
            assert rep.verdict == "Holds", (P, Q, M)
            assert rep.hypothesis_hits > 0


def test_symmetry_uniqueness_self_consistency(p5, secant_pair):
    # the classify example's own (P, Q, M) admits its pair
    K, L = secant_pair
    cls = classify_symmetry(p5, K, L)
    P, Q = cls.fixed_generators
    rep = symmetry_uniqueness(p5, P, Q, cls.witness_circle)
    assert rep.verdict == "Holds" and rep.hypothesis_hits >= 1


def test_verify_pi_symmetry_exhaustive_q3():
    rep = verify_pi_symmetry(miquelian_plane(3), CheckMode.exhaustive())
    assert rep.verdict == "Holds"
    assert rep.hypothesis_hits + rep.skipped == 1296


def test_verify_pi_symmetry_sampled_q5(p5):
    rep = verify_pi_symmetry(p5, CheckMode.sample(1500, 77))
    assert rep.verdict == "Holds(sampled)"
    assert rep.hypothesis_hits > 0


def test_fixed_circles_identity_and_census(p5, secant_pair):
    ident = Automorphism.identity(p5)
    assert len(fixed_circles(p5, ident)) == p5.n_circles
    K, L = secant_pair
    phi = build_dts(p5, K, L)
    fc = fixed_circles(p5, phi)
    cls = classify_symmetry(p5, K, L, phi)
    assert cls.witness_circle in fc


def test_moebius_extract_golden_q5(p5):
    K, L, phi = find_fixed_point_free_pair(p5)
    assert (p5.circle_coef(K), p5.circle_coef(L)) == ((0, 0, 0), (1, 0, 2))
    assert len(fixed_circles(p5, phi)) == 25
    cand = moebius_extract(p5, phi)
    assert len(cand.points) == 26  # q^2 + 1
    assert len(cand.blocks_a) == 50 and len(cand.blocks_b) == 15
    assert cand.block_size_census() == {"A": {6: 50}, "B": {6: 15}}
    assert cand.parallel_moved_points == 0
    # recorded outcomes: the touching axiom holds, the joining axiom
    # covers exactly half the triples
    assert cand.touching_report.verdict == "Holds"
    assert cand.three_point_report.verdict == "Fails"
    assert cand.three_point_report.configurations == 2600
    assert cand.three_point_report.violation_count == 1300


def test_moebius_extract_rejects_fixed_points(p5, secant_pair):
    K, L = secant_pair
    with pytest.raises(NotFixedPointFree):
        moebius_extract(p5, build_dts(p5, K, L))


def test_automorphism_text_roundtrip(p5, secant_pair):
    K, L = secant_pair
    phi = build_dts(p5, K, L)
    text = export_automorphism(p5, phi)
    head = text.splitlines()[0]
    assert head == "dts q=5 K=1,0,0 L=4,0,2"
    back = import_automorphism(p5, text)
    assert back.equals(phi)
    assert export_automorphism(p5, back) == text
    with pytest.raises(ValueError):
        import_automorphism(miquelian_plane(3), text)


def test_automorphism_validate_rejects_non_automorphism(p5):
    img = np.arange(p5.n_points)
    img[0], img[1] = 1, 0  # swap two points of one generator only
    with pytest.raises(ValueError):
        Automorphism(p5, img).validate()


def test_sample_nontangent_pairs_deterministic(p5):
    a = sample_nontangent_pairs(p5, 25, seed=5)
    b = sample_nontangent_pairs(p5, 25, seed=5)
    assert a == b
    assert all(int(p5.pair_count[K, L]) != 1 for K, L in a)
    secant = sample_nontangent_pairs(p5, 10, seed=5, secant_only=True)
    assert all(int(p5.pair_count[K, L]) == 2 for K, L in secant)

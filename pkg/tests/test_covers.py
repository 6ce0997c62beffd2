import pytest

from finspace.complexes import SimplicialComplex, simplex_id, solid_simplex
from finspace.covers import (
    Cover,
    chains_containing,
    check_nerve_theorem,
    classify_cover,
    containing_intersections,
    n_zero_complex,
    n_zero_subspace,
    nerve,
    non_hausdorff_nerve,
    reduced_nerve,
    reduced_nerve_complex,
)
from finspace.errors import InvalidCover
from finspace.fixtures import (
    circle_arc_cover,
    circle_complex,
    finite_circle,
    finite_circle_cover,
    two_triangle_cover,
)
from finspace.generators import generate_good_space_cover, generate_strong_good_cover
from finspace.homology import homology_equal, homology_of_poset
from finspace.posets import build_poset, chain


def test_cover_must_cover_parent():
    K = circle_complex()
    with pytest.raises(InvalidCover):
        Cover("complex", K, (("U1", SimplicialComplex([["w0", "w1"]])),))


def test_poset_cover_members_must_be_open():
    X = chain(["a", "b"])
    with pytest.raises(InvalidCover):
        Cover("poset", X, (("U", frozenset({"b"})), ("V", frozenset({"a", "b"}))))


def test_cover_accessors():
    cov = circle_arc_cover()
    assert cov.names() == ["U1", "U2", "U3"]
    assert cov.intersection(["U1", "U2"]).facets == frozenset({frozenset({"w2"})})
    assert cov.intersection_is_empty(["U1", "U2", "U3"])
    assert not cov.subunion(["U1", "U2"]).is_empty()


def test_cover_json_round_trip():
    for cov in (circle_arc_cover(), finite_circle_cover()):
        assert Cover.from_json(cov.to_json()).to_json() == cov.to_json()


def test_nerve_of_single_member_cover():
    K = solid_simplex(["a", "b"])
    cov = Cover("complex", K, (("U", K),))
    assert nerve(cov).facets == frozenset({frozenset({"U"})})
    assert len(non_hausdorff_nerve(cov)) == 1


def test_circle_nerve_is_sphere_boundary():
    N = nerve(circle_arc_cover())
    assert sorted(map(sorted, N.facets)) == [["U1", "U2"], ["U1", "U3"], ["U2", "U3"]]
    chi = non_hausdorff_nerve(circle_arc_cover())
    assert len(chi) == 6 and chi.height() == 1


def test_nerve_downward_closed():
    _, cov = generate_strong_good_cover(5)
    N = nerve(cov)
    for s in N.all_simplices():
        for v in s:
            smaller = frozenset(s) - {v}
            if smaller:
                assert N.contains_simplex(smaller)


def test_reduced_nerve_identifies_equal_intersections():
    K = solid_simplex(["a", "b"])
    cov = Cover("complex", K, (("U", K), ("V", K)))
    rn = reduced_nerve(cov)
    assert len(rn.poset) == 1
    assert len(reduced_nerve_complex(cov).all_simplices()) == 1


def test_reduced_nerve_nested_pair_is_chain():
    L2 = solid_simplex(["a", "b", "c"])
    L1 = solid_simplex(["a", "b"])
    cov = Cover("complex", L2, (("L1", L1), ("L2", L2)))
    rn = reduced_nerve(cov)
    assert len(rn.poset) == 2
    assert rn.poset.height() == 1


def test_reduced_nerve_distinct_intersections_matches_face_poset():
    cov = circle_arc_cover()
    rn = reduced_nerve(cov)
    chi = non_hausdorff_nerve(cov)
    assert len(rn.poset) == len(chi)
    assert rn.poset.height() == chi.height()


def test_classify_two_triangles_strong_good():
    cls = classify_cover(two_triangle_cover())
    assert cls.good == "yes" and cls.strong_good == "yes"


def test_classify_circle_cover():
    cls = classify_cover(circle_arc_cover())
    assert cls.good == "yes" and cls.strong_good == "yes"
    rec = cls.record(("U1", "U2", "U3"))
    assert rec.empty


def test_classify_records_intersection_antimonotone():
    _, cov = generate_strong_good_cover(2)
    cls = classify_cover(cov, max_subsets=2 ** len(cov.members))
    for r in cls.records:
        for r2 in cls.records:
            if set(r.index_set) < set(r2.index_set) and not r2.empty:
                assert not r.empty


def test_strong_good_implies_good():
    for seed in range(10):
        _, cov = generate_strong_good_cover(seed)
        cls = classify_cover(cov, max_subsets=2 ** len(cov.members))
        assert cls.strong_good == "yes"
        assert cls.good == "yes"


def test_n_zero_subspace_of_good_cover_is_whole_nerve():
    cov = finite_circle_cover()
    res = n_zero_subspace(cov, mode="trivial")
    chi = non_hausdorff_nerve(cov)
    assert set(res.poset.elements) == set(chi.elements)
    assert not res.excluded_unknown


def test_containing_intersections_circle():
    cov = finite_circle_cover()
    ix = containing_intersections(cov, "x2")
    # x2 lies in U1, U2 and their overlap
    assert set(ix.elements) == {
        simplex_id(["U1"]),
        simplex_id(["U2"]),
        simplex_id(["U1", "U2"]),
    }
    assert ix.height() == 1


def test_chains_containing_two_triangles():
    cov = two_triangle_cover()
    s_sigma = chains_containing(cov, ("v0", "v2"))
    assert s_sigma.contains_simplex({"A", "B"})


def test_n_zero_complex_downward_closed():
    _, cov = generate_strong_good_cover(7)
    n0, excluded = n_zero_complex(cov)
    for s in n0.all_simplices():
        for v in s:
            smaller = frozenset(s) - {v}
            if smaller:
                assert n0.contains_simplex(smaller)


def test_check_nerve_theorem_good_complex_circle():
    report = check_nerve_theorem(circle_arc_cover(), "good-complex")
    assert report["hypothesis_verdict"] == "yes"
    assert report["conclusion_homology_match"]
    assert report["parent_homology"]["degrees"][1]["betti"] == 1


def test_check_nerve_theorem_good_space():
    report = check_nerve_theorem(finite_circle_cover(), "good-space")
    assert report["hypothesis_verdict"] == "yes"
    assert report["conclusion_homology_match"]


def test_check_nerve_theorem_subnerve_space():
    report = check_nerve_theorem(finite_circle_cover(), "trivial-subnerve-space")
    assert report["hypothesis_verdict"] == "yes"
    assert report["conclusion_homology_match"]


def test_check_nerve_theorem_reduced_space():
    report = check_nerve_theorem(finite_circle_cover(), "reduced-space")
    assert "assumption" in report
    assert report["conclusion_homology_match"] in (True, False)


def test_check_nerve_theorem_reports_failed_hypothesis():
    # one member is a two-point antichain: its own intersection is not trivial
    X = build_poset(["p", "q", "r"], [])
    cov = Cover("poset", X, (("U", frozenset({"p", "q"})), ("V", frozenset({"r"}))))
    report = check_nerve_theorem(cov, "good-space")
    assert report["hypothesis_verdict"] == "no"
    assert "conclusion_homology_match" in report


def test_check_nerve_theorem_unknown_flavor():
    with pytest.raises(ValueError):
        check_nerve_theorem(circle_arc_cover(), "no-such-flavor")


def test_good_space_cover_generator_shadow():
    for seed in range(10):
        X, cov = generate_good_space_cover(seed)
        chi = non_hausdorff_nerve(cov)
        assert homology_equal(homology_of_poset(X), homology_of_poset(chi))

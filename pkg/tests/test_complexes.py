from finspace.complexes import (
    SimplicialComplex,
    cone,
    order_complex,
    simplex_boundary,
    simplex_id,
    solid_simplex,
)
from finspace.generators import generate_complex, generate_poset

from helpers import brute_chains


def test_facets_are_maximalized():
    K = SimplicialComplex([["a", "b"], ["a"], ["a", "b", "c"]])
    assert K.facets == frozenset({frozenset("abc")})


def test_dim_and_counts():
    K = solid_simplex(["a", "b", "c"])
    assert K.dim() == 2
    assert len(K.all_simplices()) == 7
    assert K.euler_characteristic() == 1


def test_boundary_complex():
    S = simplex_boundary(2)
    assert S.dim() == 1
    assert len(S.simplices_of_dim(1)) == 3
    assert S.euler_characteristic() == 0


def test_contains_and_subcomplex():
    K = solid_simplex(["a", "b", "c"])
    assert K.contains_simplex({"a", "b"})
    assert not K.contains_simplex({"a", "d"})
    L = SimplicialComplex([["a", "b"]])
    assert L.is_subcomplex_of(K)
    assert not K.is_subcomplex_of(L)


def test_union_intersection():
    A = solid_simplex(["a", "b", "c"])
    B = solid_simplex(["b", "c", "d"])
    U = A.union(B)
    assert U.facets == frozenset({frozenset("abc"), frozenset("bcd")})
    I = A.intersection(B)
    assert I.facets == frozenset({frozenset("bc")})


def test_intersection_is_pairwise_facet_meet():
    for seed in range(25):
        A = generate_complex(seed, max_vertices=6)
        B = generate_complex(seed + 1000, max_vertices=6)
        I = A.intersection(B)
        for s in I.all_simplices():
            assert A.contains_simplex(s) and B.contains_simplex(s)


def test_cone_adds_apex_everywhere():
    K = cone("z", SimplicialComplex([["a", "b"], ["c"]]))
    assert K.contains_simplex({"z", "a", "b"})
    assert K.contains_simplex({"z", "c"})


def test_without_removes_pair():
    K = solid_simplex(["a", "b", "c"])
    L = K.without([("a", "b"), ("a", "b", "c")])
    assert not L.contains_simplex({"a", "b"})
    assert not L.contains_simplex({"a", "b", "c"})
    assert L.contains_simplex({"a", "c"})


def test_order_complex_matches_chain_enumeration():
    for seed in range(25):
        X = generate_poset(seed, 6)
        K = order_complex(X)
        assert {frozenset(s) for s in K.all_simplices()} == brute_chains(X)


def test_face_poset_adjoint_invariants():
    for seed in range(15):
        X = generate_poset(seed, 5)
        K = order_complex(X)
        if K.is_empty():
            continue
        chi = K.face_poset()
        assert chi.height() == K.dim()
        # Euler characteristic of the order complex of the face poset (the
        # barycentric subdivision) agrees with that of K
        assert order_complex(chi).euler_characteristic() == K.euler_characteristic()


def test_face_poset_ordering():
    chi = solid_simplex(["a", "b"]).face_poset()
    assert chi.leq(simplex_id(["a"]), simplex_id(["a", "b"]))
    assert not chi.leq(simplex_id(["a"]), simplex_id(["b"]))


def test_simplex_id_is_sorted_join():
    assert simplex_id(["b", "a"]) == "a|b"


def test_json_round_trip():
    K = generate_complex(7)
    L = SimplicialComplex.from_json(K.to_json())
    assert K == L


def test_empty_complex():
    K = SimplicialComplex([])
    assert K.is_empty()
    assert K.dim() == -1


def test_full_subcomplex():
    K = SimplicialComplex([["a", "b", "c"], ["c", "d"]])
    L = K.full_subcomplex({"a", "b", "d"})
    assert L.contains_simplex({"a", "b"})
    assert not L.contains_simplex({"c"})

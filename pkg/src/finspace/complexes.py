"""Abstract simplicial complexes stored by facets.

Bridges to finite spaces: the order complex K(X) of a poset and the face
poset of a complex.  Simplices are materialized on demand; the empty
complex is representable but the empty simplex is never a member.
"""

from __future__ import annotations

import json
from itertools import combinations
from typing import Iterable

from .errors import UnknownSimplex
from .posets import FinitePoset, build_poset

Simplex = frozenset


def simplex_id(s: Iterable[str]) -> str:
    """Canonical string id of a simplex, used as a face-poset element id."""
    return "|".join(sorted(s))


class SimplicialComplex:
    """Immutable abstract simplicial complex.

    ``facets`` are the maximal simplices; no facet contains another.
    Isolated vertices are singleton facets.
    """

    __slots__ = ("facets", "vertices")

    def __init__(self, facets: Iterable[Iterable[str]]):
        self.facets: frozenset[Simplex] = _maximalize(frozenset(map(frozenset, facets)))
        self.vertices: frozenset[str] = frozenset(v for f in self.facets for v in f)

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __repr__(self) -> str:
        return f"SimplicialComplex({len(self.vertices)} vertices, {len(self.facets)} facets)"

    def is_empty(self) -> bool:
        return not self.facets

    def dim(self) -> int:
        """Dimension; -1 for the empty complex."""
        return max((len(f) for f in self.facets), default=0) - 1

    def contains_simplex(self, simplex: Iterable[str]) -> bool:
        s = frozenset(simplex)
        return bool(s) and any(s <= f for f in self.facets)

    def all_simplices(self, max_dim: int | None = None) -> list[tuple[str, ...]]:
        """All simplices, by dimension then lexicographically, as sorted tuples."""
        top = self.dim() if max_dim is None else min(max_dim, self.dim())
        seen: set[tuple[str, ...]] = set()
        for f in self.facets:
            fs = sorted(f)
            for k in range(1, min(len(fs), top + 1) + 1):
                seen.update(combinations(fs, k))
        return sorted(seen, key=lambda s: (len(s), s))

    def simplices_of_dim(self, d: int) -> list[tuple[str, ...]]:
        return [s for s in self.all_simplices() if len(s) == d + 1]

    def num_simplices(self) -> int:
        return len(self.all_simplices())

    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(s) - 1) for s in self.all_simplices())

    # -- subcomplexes and combinations ---------------------------------------

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return all(other.contains_simplex(f) for f in self.facets)

    def full_subcomplex(self, vertex_subset: Iterable[str]) -> "SimplicialComplex":
        keep = frozenset(vertex_subset)
        return SimplicialComplex(f & keep for f in self.facets if f & keep)

    def union(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex(list(self.facets) + list(other.facets))

    def intersection(self, other: "SimplicialComplex") -> "SimplicialComplex":
        common = [a & b for a in self.facets for b in other.facets if a & b]
        return SimplicialComplex(common)

    def without(self, simplices: Iterable[Iterable[str]]) -> "SimplicialComplex":
        """Remove the given simplices (and implicitly all their cofaces).

        Caller is responsible for the removals leaving a complex; used by the
        collapse engine which only deletes a free face together with its
        unique coface.
        """
        gone = {frozenset(s) for s in simplices}
        keep = [
            s
            for s in map(frozenset, self.all_simplices())
            if s not in gone and not any(g <= s for g in gone)
        ]
        return SimplicialComplex(keep)

    # -- bridges to finite spaces --------------------------------------------

    def face_poset(self) -> FinitePoset:
        """Poset of all simplices ordered by inclusion (element ids via simplex_id)."""
        simplices = self.all_simplices()
        ids = {frozenset(s): simplex_id(s) for s in simplices}
        pairs = []
        for s in simplices:
            fs = frozenset(s)
            if len(s) > 1:
                for t in combinations(s, len(s) - 1):
                    pairs.append((ids[frozenset(t)], ids[fs]))
        return build_poset(ids.values(), pairs)

    # -- serialization -------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"facets": sorted(sorted(f) for f in self.facets)})

    @staticmethod
    def from_json(text: str) -> "SimplicialComplex":
        return SimplicialComplex(json.loads(text)["facets"])


def _maximalize(faces: frozenset[Simplex]) -> frozenset[Simplex]:
    faces = frozenset(f for f in faces if f)
    return frozenset(
        f for f in faces if not any(f < g for g in faces)
    )


def order_complex(X: FinitePoset) -> SimplicialComplex:
    """K(X): simplices are the non-empty chains of X, facets the maximal chains."""
    maximal_chains: list[frozenset[str]] = []

    def extend(chain: list[str], x: str) -> None:
        chain.append(x)
        uppers = [y for y in X.covers_above(x)]
        if not uppers:
            maximal_chains.append(frozenset(chain))
        else:
            for y in uppers:
                extend(chain, y)
        chain.pop()

    for x in X.minimal_elements():
        extend([], x)
    return SimplicialComplex(maximal_chains)


def simplex_boundary(n: int, prefix: str = "v") -> SimplicialComplex:
    """Boundary of an n-simplex on vertices prefix0..prefixn."""
    verts = [f"{prefix}{i}" for i in range(n + 1)]
    return SimplicialComplex(combinations(verts, n))


def solid_simplex(vertices: Iterable[str]) -> SimplicialComplex:
    return SimplicialComplex([list(vertices)])


def cone(apex: str, base: SimplicialComplex) -> SimplicialComplex:
    """Cone with the given apex over a base complex."""
    if base.is_empty():
        return SimplicialComplex([[apex]])
    return SimplicialComplex([f | {apex} for f in base.facets])


def require_simplex(K: SimplicialComplex, simplex: Iterable[str]) -> frozenset[str]:
    s = frozenset(simplex)
    if not K.contains_simplex(s):
        raise UnknownSimplex(f"{sorted(s)} is not a simplex of {K!r}")
    return s

"""Covers, nerves and the nerve-theorem hypothesis checkers.

A cover is a named family of subcomplexes of a complex, or of open (downward
closed) subsets of a finite space, whose union is the whole object.  The
nerve records which index sets have non-empty common intersection; the
non-Hausdorff nerve is its face poset; the reduced nerve identifies index
sets with literally equal intersections and orders the distinct
intersections by reverse inclusion.

Classification verdicts are three-valued and Unknown intersections are
never silently treated as trivial or collapsible: the N0 constructions
exclude them and list them separately.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from . import collapse as clp
from .complexes import SimplicialComplex, order_complex, simplex_id
from .errors import InvalidCover, UnknownElement, UnknownMember, UnknownSimplex
from .homology import homology_equal, homology_of_poset, reduced_homology
from .posets import FinitePoset, build_poset

COMPLEX = "complex"
POSET = "poset"


@dataclass(frozen=True)
class Cover:
    """Named subobjects covering a complex or a finite space.

    For ``kind == "complex"`` members map names to subcomplexes; for posets,
    to downward closed element sets.
    """

    kind: str
    parent: object
    members: tuple[tuple[str, object], ...]

    def __post_init__(self):
        names = [n for n, _ in self.members]
        if len(set(names)) != len(names):
            raise InvalidCover("duplicate member names")
        if not self.members:
            raise InvalidCover("a cover needs at least one member")
        if self.kind == COMPLEX:
            union = SimplicialComplex([])
            for name, sub in self.members:
                if not isinstance(sub, SimplicialComplex):
                    raise InvalidCover(f"member {name!r} is not a complex")
                if not sub.is_subcomplex_of(self.parent):
                    raise InvalidCover(f"member {name!r} is not a subcomplex of the parent")
                union = union.union(sub)
            if union != self.parent:
                raise InvalidCover("members do not cover the parent complex")
        elif self.kind == POSET:
            union: set[str] = set()
            for name, sub in self.members:
                sub = frozenset(sub)
                if not sub <= set(self.parent.elements):
                    raise InvalidCover(f"member {name!r} is not a subset of the space")
                if not self.parent.is_open(sub):
                    raise InvalidCover(f"member {name!r} is not open (not downward closed)")
                union |= sub
            if union != set(self.parent.elements):
                raise InvalidCover("members do not cover the space")
        else:
            raise InvalidCover(f"unknown cover kind {self.kind!r}")

    # -- member accessors ----------------------------------------------------

    def names(self) -> list[str]:
        return [n for n, _ in self.members]

    def member(self, name: str):
        for n, sub in self.members:
            if n == name:
                return sub
        raise UnknownMember(f"no cover member named {name!r}")

    def intersection(self, names):
        names = sorted(names)
        if not names:
            raise InvalidCover("intersection of an empty index set")
        out = self.member(names[0])
        for n in names[1:]:
            if self.kind == COMPLEX:
                out = out.intersection(self.member(n))
            else:
                out = frozenset(out) & frozenset(self.member(n))
        return out

    def subunion(self, names) -> object:
        """K_J: union of the members indexed by J (empty J gives the empty object)."""
        names = sorted(set(names))
        for n in names:
            self.member(n)
        if self.kind == COMPLEX:
            out = SimplicialComplex([])
            for n in names:
                out = out.union(self.member(n))
            return out
        out: frozenset[str] = frozenset()
        for n in names:
            out |= frozenset(self.member(n))
        return out

    def intersection_is_empty(self, names) -> bool:
        obj = self.intersection(names)
        return obj.is_empty() if self.kind == COMPLEX else not obj

    def to_json(self) -> str:
        if self.kind == COMPLEX:
            return json.dumps(
                {
                    "kind": self.kind,
                    "parent": json.loads(self.parent.to_json()),
                    "members": [
                        {"name": n, "facets": sorted(sorted(f) for f in sub.facets)}
                        for n, sub in self.members
                    ],
                }
            )
        return json.dumps(
            {
                "kind": self.kind,
                "parent": json.loads(self.parent.to_json()),
                "members": [
                    {"name": n, "elements": sorted(sub)} for n, sub in self.members
                ],
            }
        )

    @staticmethod
    def from_json(text: str) -> "Cover":
        doc = json.loads(text)
        if doc["kind"] == COMPLEX:
            parent = SimplicialComplex(doc["parent"]["facets"])
            members = tuple(
                (m["name"], SimplicialComplex(m["facets"])) for m in doc["members"]
            )
        else:
            parent = FinitePoset.from_json(json.dumps(doc["parent"]))
            members = tuple(
                (m["name"], frozenset(m["elements"])) for m in doc["members"]
            )
        return Cover(doc["kind"], parent, members)


def _index_sets(cover: Cover, max_subsets: int, nerve_simplices_only: bool):
    """Non-empty index sets in deterministic order (size, then lexicographic)."""
    names = sorted(cover.names())
    if len(names) > max_subsets:
        raise InvalidCover(
            f"{len(names)} members exceed the subset-enumeration cap {max_subsets}"
        )
    out = []
    for k in range(1, len(names) + 1):
        for J in combinations(names, k):
            if nerve_simplices_only and cover.intersection_is_empty(J):
                continue
            out.append(J)
    return out


def nerve(cover: Cover) -> SimplicialComplex:
    """N(U): simplices are index sets with non-empty intersection."""
    simplices = [
        J for J in _index_sets(cover, 20, nerve_simplices_only=True)
    ]
    if not simplices:
        return SimplicialComplex([])
    return SimplicialComplex(simplices)


def non_hausdorff_nerve(cover: Cover) -> FinitePoset:
    """Face poset of the nerve; elements are simplex ids of index sets."""
    return nerve(cover).face_poset()


@dataclass(frozen=True)
class ReducedNerve:
    """Distinct non-empty intersections ordered by reverse inclusion.

    Equal intersections are identified; each class is named by the simplex id
    of its smallest index set.  ``classes`` maps that id to all index sets in
    the class, ``intersections`` to the literal intersection object.
    """

    poset: FinitePoset
    classes: dict[str, tuple[tuple[str, ...], ...]]
    intersections: dict[str, object]


def reduced_nerve(cover: Cover) -> ReducedNerve:
    groups: dict[object, list[tuple[str, ...]]] = {}
    for J in _index_sets(cover, 20, nerve_simplices_only=True):
        obj = cover.intersection(J)
        key = obj.facets if cover.kind == COMPLEX else obj
        groups.setdefault(key, []).append(J)
    reps = {}
    for key, Js in groups.items():
        rep = min(Js, key=lambda J: (len(J), J))
        reps[key] = simplex_id(rep)
    # bigger intersection = lower (reverse inclusion)
    pairs = []
    keys = list(groups)
    for a in keys:
        sa = _as_set(a)
        for b in keys:
            if a is not b and _as_set(b) < sa:
                pairs.append((reps[a], reps[b]))
    poset = build_poset(reps.values(), pairs)
    classes = {reps[k]: tuple(sorted(groups[k])) for k in keys}
    intersections = {
        reps[k]: (SimplicialComplex(k) if cover.kind == COMPLEX else k) for k in keys
    }
    return ReducedNerve(poset, classes, intersections)


def _as_set(key) -> frozenset:
    if isinstance(key, frozenset) and key and isinstance(next(iter(key)), frozenset):
        # complex facet-set key; compare by simplex sets
        out = set()
        for f in key:
            for k in range(1, len(f) + 1):
                out.update(map(frozenset, combinations(sorted(f), k)))
        return frozenset(out)
    return frozenset(key)


def reduced_nerve_complex(cover: Cover) -> SimplicialComplex:
    """Simplicial counterpart of the reduced nerve: its order complex."""
    return order_complex(reduced_nerve(cover).poset)


@dataclass(frozen=True)
class IntersectionRecord:
    index_set: tuple[str, ...]
    object: object
    empty: bool
    triviality: clp.TriStateResult | None
    collapsibility: clp.TriStateResult | None


@dataclass(frozen=True)
class CoverClassification:
    records: tuple[IntersectionRecord, ...]
    good: str
    strong_good: str

    def record(self, J) -> IntersectionRecord:
        J = tuple(sorted(J))
        for r in self.records:
            if r.index_set == J:
                return r
        raise UnknownMember(f"no record for index set {J}")


def classify_cover(
    cover: Cover,
    max_subsets: int = 20,
    nerve_simplices_only: bool = False,
    restarts: int = 8,
    seed: int = 0,
) -> CoverClassification:
    """Per-intersection triviality and collapsibility verdicts.

    Empty intersections are recorded and skipped.  A Yes collapsibility
    verdict forces the triviality verdict to Yes (collapsible implies
    contractible implies homotopically trivial).
    """
    records = []
    for J in _index_sets(cover, max_subsets, nerve_simplices_only):
        obj = cover.intersection(J)
        if cover.intersection_is_empty(J):
            records.append(IntersectionRecord(J, obj, True, None, None))
            continue
        if cover.kind == COMPLEX:
            collapsibility = clp.greedy_collapse_complex(obj, restarts=restarts, seed=seed)
            triviality = (
                collapsibility
                if collapsibility.is_yes()
                else clp.is_homotopically_trivial_complex(obj, restarts=restarts, seed=seed)
            )
        else:
            sub = cover.parent.restrict(obj)
            collapsibility = clp.greedy_collapse_space(sub)
            triviality = (
                collapsibility
                if collapsibility.is_yes()
                else clp.is_homotopically_trivial_poset(sub)
            )
        records.append(IntersectionRecord(J, obj, False, triviality, collapsibility))
    nonempty = [r for r in records if not r.empty]
    good = clp.aggregate_verdict(r.triviality.verdict for r in nonempty)
    strong = clp.aggregate_verdict(r.collapsibility.verdict for r in nonempty)
    if strong == "yes" and good != "yes":
        raise AssertionError("collapsible intersections must classify as good")
    return CoverClassification(tuple(records), good, strong)


@dataclass(frozen=True)
class NZeroResult:
    """N0: the sub-nerve of verified intersections.

    ``poset`` is the induced subposet of the (reduced) non-Hausdorff nerve on
    index sets whose verdict is Yes under the chosen mode; Unknowns are
    excluded and listed, never treated as verified.
    """

    poset: FinitePoset
    included: tuple[tuple[str, ...], ...]
    excluded_unknown: tuple[tuple[str, ...], ...]


def n_zero_subspace(
    cover: Cover,
    mode: str = "trivial",
    reduced: bool = False,
    classification: CoverClassification | None = None,
    restarts: int = 8,
    seed: int = 0,
) -> NZeroResult:
    if mode not in ("trivial", "collapsible"):
        raise ValueError(f"mode must be trivial or collapsible, got {mode!r}")
    cls = classification or classify_cover(
        cover, nerve_simplices_only=True, restarts=restarts, seed=seed
    )
    verdict_of = {}
    for r in cls.records:
        if r.empty:
            continue
        v = r.triviality if mode == "trivial" else r.collapsibility
        verdict_of[r.index_set] = v.verdict
    included = tuple(sorted(J for J, v in verdict_of.items() if v == "yes"))
    excluded = tuple(sorted(J for J, v in verdict_of.items() if v == "unknown"))
    if reduced:
        rn = reduced_nerve(cover)
        keep = set()
        for rep, Js in rn.classes.items():
            if any(J in included for J in Js):
                keep.add(rep)
        poset = rn.poset.restrict(keep)
    else:
        chi = non_hausdorff_nerve(cover)
        keep = {simplex_id(J) for J in included}
        poset = chi.restrict(keep & set(chi.elements))
    return NZeroResult(poset, included, excluded)


def containing_intersections(
    cover: Cover,
    x: str,
    mode: str = "trivial",
    reduced: bool = False,
    n0: NZeroResult | None = None,
    classification: CoverClassification | None = None,
) -> FinitePoset:
    """I_x: the part of N0 whose intersections contain the point x."""
    if cover.kind != POSET:
        raise InvalidCover("containing_intersections needs a cover of a finite space")
    if x not in cover.parent:
        raise UnknownElement(f"{x!r} is not a point of the covered space")
    result = n0 or n_zero_subspace(
        cover, mode=mode, reduced=reduced, classification=classification
    )
    if reduced:
        rn = reduced_nerve(cover)
        keep = {
            rep
            for rep in result.poset.elements
            if x in rn.intersections[rep]
        }
    else:
        keep = {
            simplex_id(J)
            for J in result.included
            if x in cover.intersection(J)
        }
    return result.poset.restrict(keep & set(result.poset.elements))


def n_zero_complex(
    cover: Cover,
    mode: str = "trivial",
    classification: CoverClassification | None = None,
) -> tuple[SimplicialComplex, tuple[tuple[str, ...], ...]]:
    """Subcomplex of the nerve on verified index sets, with the excluded list.

    Only index sets all of whose non-empty subsets are also verified are kept,
    so the result is honestly downward closed.
    """
    cls = classification or classify_cover(cover, nerve_simplices_only=True)
    verdict_of = {}
    for r in cls.records:
        if not r.empty:
            v = r.triviality if mode == "trivial" else r.collapsibility
            verdict_of[r.index_set] = v.verdict
    ok = {J for J, v in verdict_of.items() if v == "yes"}
    closed = [
        J
        for J in ok
        if all(
            tuple(sub) in ok
            for k in range(1, len(J))
            for sub in combinations(J, k)
            if tuple(sub) in verdict_of
        )
    ]
    excluded = tuple(sorted(J for J, v in verdict_of.items() if v == "unknown"))
    if not closed:
        return SimplicialComplex([]), excluded
    return SimplicialComplex(closed), excluded


def chains_containing(
    cover: Cover,
    sigma,
    mode: str = "trivial",
    classification: CoverClassification | None = None,
) -> SimplicialComplex:
    """S_sigma: full subcomplex of the verified sub-nerve on the members
    containing the given simplex.  Empty when no member contains it."""
    if cover.kind != COMPLEX:
        raise InvalidCover("chains_containing needs a cover of a complex")
    s = frozenset(sigma)
    if not cover.parent.contains_simplex(s):
        raise UnknownSimplex(f"{sorted(s)} is not a simplex of the parent")
    n0, _ = n_zero_complex(cover, mode=mode, classification=classification)
    verts = {
        name for name, sub in cover.members if sub.contains_simplex(s)
    }
    return n0.full_subcomplex(verts & n0.vertices)


# ---------------------------------------------------------------------------
# nerve-theorem checkers
# ---------------------------------------------------------------------------

FLAVORS = (
    "good-complex",
    "strong-good-complex",
    "good-space",
    "strong-good-space",
    "trivial-subnerve-space",
    "collapsible-subnerve-space",
    "trivial-subnerve-complex",
    "reduced-space",
    "reduced-complex",
)


def _parent_homology(cover: Cover):
    if cover.kind == COMPLEX:
        return reduced_homology(cover.parent)
    return homology_of_poset(cover.parent)


def check_nerve_theorem(
    cover: Cover,
    flavor: str,
    restarts: int = 8,
    seed: int = 0,
) -> dict:
    """Evaluate one nerve theorem's hypotheses and its homology shadow.

    The conclusion (reduced homology of the parent equals that of the nerve
    object, all degrees, betti and torsion) is computed regardless of the
    hypothesis verdicts so counterexample hunting is possible.  Simple
    homotopy equivalence itself is not decided.
    """
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}; choose from {FLAVORS}")
    cls = classify_cover(cover, nerve_simplices_only=True, restarts=restarts, seed=seed)
    report: dict = {"flavor": flavor}
    mode = "collapsible" if ("strong" in flavor or "collapsible" in flavor or "reduced" in flavor) else "trivial"

    if flavor in ("good-complex", "strong-good-complex", "good-space", "strong-good-space"):
        report["hypothesis_verdict"] = cls.strong_good if mode == "collapsible" else cls.good
        nerve_obj_hom = (
            reduced_homology(nerve(cover))
            if cover.kind == COMPLEX
            else homology_of_poset(non_hausdorff_nerve(cover))
        )
    elif flavor in ("trivial-subnerve-space", "collapsible-subnerve-space"):
        if cover.kind != POSET:
            raise InvalidCover(f"{flavor} applies to covers of finite spaces")
        n0 = n_zero_subspace(cover, mode=mode, classification=cls)
        per_point = {}
        for x in cover.parent.elements:
            ix = containing_intersections(cover, x, mode=mode, n0=n0, classification=cls)
            if not len(ix):
                per_point[x] = clp.TriStateResult("no", note="I_x is empty")
            elif mode == "trivial":
                per_point[x] = clp.is_homotopically_trivial_poset(ix)
            else:
                per_point[x] = clp.greedy_collapse_space(ix)
        report["per_point"] = {x: v.to_doc() for x, v in per_point.items()}
        report["excluded_unknown"] = list(n0.excluded_unknown)
        report["hypothesis_verdict"] = clp.aggregate_verdict(
            [v.verdict for v in per_point.values()]
            + ["unknown"] * len(n0.excluded_unknown)
        )
        if not len(n0.poset):
            raise InvalidCover("N0 is empty; no verified intersections")
        nerve_obj_hom = homology_of_poset(n0.poset)
    elif flavor == "trivial-subnerve-complex":
        if cover.kind != COMPLEX:
            raise InvalidCover(f"{flavor} applies to covers of complexes")
        n0c, excluded = n_zero_complex(cover, mode="trivial", classification=cls)
        per_simplex = {}
        for s in cover.parent.all_simplices():
            ss = chains_containing(cover, s, mode="trivial", classification=cls)
            if ss.is_empty():
                per_simplex[s] = clp.TriStateResult("no", note="S_sigma is empty")
            else:
                per_simplex[s] = clp.is_homotopically_trivial_complex(
                    ss, restarts=restarts, seed=seed
                )
        report["per_simplex"] = {simplex_id(s): v.to_doc() for s, v in per_simplex.items()}
        report["excluded_unknown"] = list(excluded)
        report["hypothesis_verdict"] = clp.aggregate_verdict(
            [v.verdict for v in per_simplex.values()] + ["unknown"] * len(excluded)
        )
        if n0c.is_empty():
            raise InvalidCover("N0 is empty; no verified intersections")
        nerve_obj_hom = reduced_homology(n0c)
    elif flavor == "reduced-space":
        if cover.kind != POSET:
            raise InvalidCover(f"{flavor} applies to covers of finite spaces")
        n = cover.parent.height()
        n0 = n_zero_subspace(cover, mode="collapsible", reduced=True, classification=cls)
        report["height_cap"] = n
        report["n0_height_ok"] = n0.poset.height() <= n if len(n0.poset) else True
        per_point = {}
        bounds_ok = True
        for x in cover.parent.elements:
            ix = containing_intersections(
                cover, x, mode="collapsible", reduced=True, n0=n0, classification=cls
            )
            if not len(ix):
                per_point[x] = clp.TriStateResult("no", note="I_x is empty")
                continue
            per_point[x] = clp.greedy_collapse_space(ix)
            if ix.height() > n - cover.parent.height_of(x):
                bounds_ok = False
        report["per_point"] = {x: v.to_doc() for x, v in per_point.items()}
        report["height_bounds_ok"] = bounds_ok
        report["excluded_unknown"] = list(n0.excluded_unknown)
        verdicts = [v.verdict for v in per_point.values()]
        if not bounds_ok or not report["n0_height_ok"]:
            verdicts.append("no")
        report["hypothesis_verdict"] = clp.aggregate_verdict(
            verdicts + ["unknown"] * len(n0.excluded_unknown)
        )
        if not len(n0.poset):
            raise InvalidCover("reduced N0 is empty; no verified intersections")
        nerve_obj_hom = homology_of_poset(n0.poset)
        report["assumption"] = REDUCED_NERVE_ASSUMPTION
    else:  # reduced-complex
        if cover.kind != COMPLEX:
            raise InvalidCover(f"{flavor} applies to covers of complexes")
        n = cover.parent.dim()
        rn = reduced_nerve(cover)
        n0 = n_zero_subspace(cover, mode="collapsible", reduced=True, classification=cls)
        n0_complex = order_complex(n0.poset) if len(n0.poset) else SimplicialComplex([])
        report["dim_cap"] = n
        report["n0_dim_ok"] = (n0_complex.dim() <= n) if not n0_complex.is_empty() else True
        per_simplex = {}
        bounds_ok = True
        for s in cover.parent.all_simplices():
            keep = {
                rep for rep in n0.poset.elements
                if rn.intersections[rep].contains_simplex(frozenset(s))
            }
            sub = n0.poset.restrict(keep)
            if not len(sub):
                per_simplex[s] = clp.TriStateResult("no", note="S_sigma is empty")
                continue
            s_sigma = order_complex(sub)
            per_simplex[s] = clp.greedy_collapse_complex(
                s_sigma, restarts=restarts, seed=seed
            )
            if s_sigma.dim() > n - (len(s) - 1):
                bounds_ok = False
        report["per_simplex"] = {simplex_id(s): v.to_doc() for s, v in per_simplex.items()}
        report["dim_bounds_ok"] = bounds_ok
        report["excluded_unknown"] = list(n0.excluded_unknown)
        verdicts = [v.verdict for v in per_simplex.values()]
        if not bounds_ok or not report["n0_dim_ok"]:
            verdicts.append("no")
        report["hypothesis_verdict"] = clp.aggregate_verdict(
            verdicts + ["unknown"] * len(n0.excluded_unknown)
        )
        if n0_complex.is_empty():
            raise InvalidCover("reduced N0 is empty; no verified intersections")
        nerve_obj_hom = reduced_homology(n0_complex)
        report["assumption"] = REDUCED_NERVE_ASSUMPTION

    parent_hom = _parent_homology(cover)
    report["parent_homology"] = parent_hom.summary()
    report["nerve_homology"] = nerve_obj_hom.summary()
    report["conclusion_homology_match"] = homology_equal(parent_hom, nerve_obj_hom)
    report["note"] = (
        "homology agreement is the computable shadow of the asserted "
        "(simple) homotopy equivalence; the equivalence itself is not decided"
    )
    return report


REDUCED_NERVE_ASSUMPTION = (
    "reduced nerve taken as: distinct non-empty intersections ordered by "
    "reverse inclusion, equal intersections identified"
)

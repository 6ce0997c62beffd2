"""Collapse predicates for finite spaces and simplicial complexes.

Contractibility of a finite space is decidable (iterated beat-point removal
down to the core).  Collapsibility and homotopical triviality are not, so
those checkers answer with a three-valued verdict: Yes carries a replayable
certificate, No carries a non-trivial homology witness, Unknown is honest
failure of the greedy search.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterable

from .complexes import SimplicialComplex
from .errors import EmptyObject, EmptySpace, TargetNotInduced
from .homology import HomologyResult, homology_of_poset, reduced_homology
from .posets import FinitePoset

DOWN_BEAT = "down-beat"
UP_BEAT = "up-beat"
DOWN_WEAK = "down-weak"
UP_WEAK = "up-weak"


@dataclass(frozen=True)
class PointRemoval:
    element: str
    kind: str  # down-beat / up-beat / down-weak / up-weak

    def to_doc(self) -> dict:
        return {"kind": self.kind, "element": self.element}


@dataclass(frozen=True)
class FreeFacePair:
    face: tuple[str, ...]
    coface: tuple[str, ...]

    def to_doc(self) -> dict:
        return {"kind": "free-pair", "face": list(self.face), "coface": list(self.coface)}


@dataclass(frozen=True)
class CollapseCertificate:
    """Ordered removal steps witnessing a collapse onto the declared target."""

    steps: tuple = ()

    def to_json(self) -> str:
        return json.dumps({"steps": [s.to_doc() for s in self.steps]})

    @staticmethod
    def from_json(text: str) -> "CollapseCertificate":
        steps = []
        for doc in json.loads(text)["steps"]:
            if doc["kind"] == "free-pair":
                steps.append(FreeFacePair(tuple(doc["face"]), tuple(doc["coface"])))
            else:
                steps.append(PointRemoval(doc["element"], doc["kind"]))
        return CollapseCertificate(tuple(steps))


@dataclass(frozen=True)
class TriStateResult:
    verdict: str  # "yes" / "no" / "unknown"
    certificate: CollapseCertificate | None = None
    witness: HomologyResult | None = None
    note: str = ""

    def __post_init__(self):
        if self.verdict == "yes":
            assert self.certificate is not None
        if self.verdict == "no":
            # empty subobjects carry a note instead of a homology witness
            assert self.witness is not None or self.note

    def is_yes(self) -> bool:
        return self.verdict == "yes"

    def to_doc(self) -> dict:
        doc: dict = {"verdict": self.verdict}
        if self.witness is not None:
            doc["witness"] = self.witness.summary()
        if self.note:
            doc["note"] = self.note
        return doc


def yes(certificate: CollapseCertificate) -> TriStateResult:
    return TriStateResult("yes", certificate=certificate)


def no(witness: HomologyResult, note: str = "") -> TriStateResult:
    return TriStateResult("no", witness=witness, note=note)


def unknown(note: str) -> TriStateResult:
    return TriStateResult("unknown", note=note)


_VERDICT_ORDER = {"no": 0, "unknown": 1, "yes": 2}


def aggregate_verdict(verdicts: Iterable[str]) -> str:
    """Min over the lattice no < unknown < yes; empty input aggregates to yes."""
    out = "yes"
    for v in verdicts:
        if _VERDICT_ORDER[v] < _VERDICT_ORDER[out]:
            out = v
    return out


# ---------------------------------------------------------------------------
# finite spaces
# ---------------------------------------------------------------------------


def beat_point_kind(X: FinitePoset, x: str) -> str | None:
    down = X.down_set(x, strict=True)
    if down and X.restrict(down).has_maximum():
        return DOWN_BEAT
    up = X.up_set(x, strict=True)
    if up and X.restrict(up).has_minimum():
        return UP_BEAT
    return None


def beat_points(X: FinitePoset) -> list[tuple[str, str]]:
    """All beat points with their kind, in element order."""
    out = []
    for x in X.elements:
        kind = beat_point_kind(X, x)
        if kind:
            out.append((x, kind))
    return out


def core(X: FinitePoset) -> tuple[FinitePoset, CollapseCertificate]:
    """Remove beat points (lexicographically first each round) until none remain."""
    steps: list[PointRemoval] = []
    current = X
    while True:
        found = None
        for x in current.elements:
            kind = beat_point_kind(current, x)
            if kind:
                found = (x, kind)
                break
        if found is None:
            return current, CollapseCertificate(tuple(steps))
        steps.append(PointRemoval(*found))
        current = current.remove(found[0])


def is_contractible_space(X: FinitePoset) -> bool:
    if not len(X):
        raise EmptySpace("contractibility of the empty space is not defined")
    return len(core(X)[0]) == 1


def weak_point_kind(X: FinitePoset, x: str) -> str | None:
    down = X.down_set(x, strict=True)
    if down and is_contractible_space(X.restrict(down)):
        return DOWN_WEAK
    up = X.up_set(x, strict=True)
    if up and is_contractible_space(X.restrict(up)):
        return UP_WEAK
    return None


def weak_points(X: FinitePoset) -> list[tuple[str, str]]:
    out = []
    for x in X.elements:
        kind = weak_point_kind(X, x)
        if kind:
            out.append((x, kind))
    return out


def gamma_points(X: FinitePoset) -> list[tuple[str, TriStateResult]]:
    """Per element, the triviality verdict of its link (punctured down + up sets)."""
    out = []
    for x in X.elements:
        link = X.down_set(x, strict=True) | X.up_set(x, strict=True)
        if not link:
            out.append((x, unknown("empty link")))
            continue
        out.append((x, is_homotopically_trivial_poset(X.restrict(link))))
    return out


def greedy_collapse_space(
    X: FinitePoset, target: Iterable[str] | None = None
) -> TriStateResult:
    """Collapse X to a point (or onto a target subposet) by weak-point removals."""
    if not len(X):
        raise EmptySpace("cannot collapse the empty space")
    keep = frozenset(target) if target is not None else None
    if keep is not None and not keep <= set(X.elements):
        raise TargetNotInduced(f"target {sorted(keep)} is not a subset of the space")
    steps: list[PointRemoval] = []
    current = X
    while True:
        if keep is None and len(current) == 1:
            return yes(CollapseCertificate(tuple(steps)))
        if keep is not None and set(current.elements) == keep:
            return yes(CollapseCertificate(tuple(steps)))
        found = None
        for x in current.elements:
            if keep is not None and x in keep:
                continue
            kind = weak_point_kind(current, x)
            if kind:
                found = (x, kind)
                break
        if found is None:
            break
        steps.append(PointRemoval(*found))
        current = current.remove(found[0])
    if keep is None:
        hom = homology_of_poset(X)
        if not hom.is_trivial():
            return no(hom, "non-trivial reduced homology")
    else:
        hom = homology_of_poset(X)
        target_hom = homology_of_poset(X.restrict(keep))
        if hom.summary() != target_hom.summary():
            witness = hom if not hom.is_trivial() else target_hom
            return no(witness, "homology differs from target")
    return unknown("greedy weak-point removal got stuck")


def replay_space_certificate(
    X: FinitePoset, cert: CollapseCertificate, target: Iterable[str] | None = None
) -> bool:
    """Check each removal really was of the declared kind; verify the end state."""
    current = X
    for step in cert.steps:
        if not isinstance(step, PointRemoval):
            return False
        if step.element not in current.elements:
            return False
        if step.kind in (DOWN_BEAT, UP_BEAT):
            if beat_point_kind(current, step.element) != step.kind:
                return False
        else:
            down = current.down_set(step.element, strict=True)
            up = current.up_set(step.element, strict=True)
            if step.kind == DOWN_WEAK:
                if not (down and is_contractible_space(current.restrict(down))):
                    return False
            elif step.kind == UP_WEAK:
                if not (up and is_contractible_space(current.restrict(up))):
                    return False
            else:
                return False
        current = current.remove(step.element)
    if target is not None:
        return set(current.elements) == set(target)
    return len(current) == 1


# ---------------------------------------------------------------------------
# simplicial complexes
# ---------------------------------------------------------------------------


def free_faces(K: SimplicialComplex) -> list[tuple[tuple[str, ...], tuple[str, ...]]]:
    """Pairs (face, unique coface): the face lies in exactly one larger simplex."""
    simplices = [frozenset(s) for s in K.all_simplices()]
    out = []
    for s in simplices:
        cofaces = [t for t in simplices if s < t]
        if len(cofaces) == 1 and len(cofaces[0]) == len(s) + 1:
            out.append((tuple(sorted(s)), tuple(sorted(cofaces[0]))))
    return sorted(out, key=lambda p: (len(p[0]), p))


def _collapse_run(
    K: SimplicialComplex,
    keep: SimplicialComplex | None,
    rng: random.Random | None,
) -> tuple[TriStateResult | None, list[FreeFacePair]]:
    """One greedy pass; returns (Yes-result or None when stuck, steps so far)."""
    steps: list[FreeFacePair] = []
    current = K
    while True:
        if keep is None:
            if len(current.all_simplices()) == 1:
                return yes(CollapseCertificate(tuple(steps))), steps
        elif current == keep:
            return yes(CollapseCertificate(tuple(steps))), steps
        pairs = free_faces(current)
        if keep is not None:
            pairs = [
                p
                for p in pairs
                if not keep.contains_simplex(p[0]) and not keep.contains_simplex(p[1])
            ]
        if not pairs:
            return None, steps
        face, coface = pairs[0] if rng is None else rng.choice(pairs)
        steps.append(FreeFacePair(face, coface))
        current = current.without([face, coface])


def greedy_collapse_complex(
    K: SimplicialComplex,
    target: SimplicialComplex | None = None,
    restarts: int = 8,
    seed: int = 0,
) -> TriStateResult:
    """Greedy free-face removal with seeded random restarts.

    Deterministic first pass: lowest dimension, lexicographic simplex order.
    """
    if K.is_empty():
        raise EmptyObject("cannot collapse the empty complex")
    if target is not None and not target.is_subcomplex_of(K):
        raise TargetNotInduced("target is not a subcomplex")
    result, _ = _collapse_run(K, target, None)
    if result is not None:
        return result
    for r in range(restarts):
        result, _ = _collapse_run(K, target, random.Random(f"restart:{seed}:{r}"))
        if result is not None:
            return result
    if target is None:
        hom = reduced_homology(K)
        if not hom.is_trivial():
            return no(hom, "non-trivial reduced homology")
    else:
        hom = reduced_homology(K)
        target_hom = reduced_homology(target)
        if hom.summary() != target_hom.summary():
            witness = hom if not hom.is_trivial() else target_hom
            return no(witness, "homology differs from target")
    return unknown("no free faces left on any attempted schedule")


def staged_union_collapse(
    parts: list[SimplicialComplex], restarts: int = 8, seed: int = 0
) -> TriStateResult:
    """Collapse a union of complexes stage by stage.

    Repeatedly peels the last part: the union collapses onto the union of the
    rest whenever the peeled part collapses onto its intersection with the
    rest, then recurses; the final part is collapsed to a point.  Used as the
    fallback schedule for unions of collapsible complexes with collapsible
    intersections.
    """
    if not parts:
        raise EmptyObject("no parts given")
    if len(parts) == 1:
        return greedy_collapse_complex(parts[0], restarts=restarts, seed=seed)
    rest = parts[0]
    for p in parts[1:-1]:
        rest = rest.union(p)
    last = parts[-1]
    whole = rest.union(last)
    step1 = greedy_collapse_complex(whole, target=rest, restarts=restarts, seed=seed)
    if not step1.is_yes():
        return step1
    tail = staged_union_collapse(parts[:-1], restarts=restarts, seed=seed)
    if not tail.is_yes():
        return tail
    return yes(
        CollapseCertificate(step1.certificate.steps + tail.certificate.steps)
    )


def replay_complex_certificate(
    K: SimplicialComplex,
    cert: CollapseCertificate,
    target: SimplicialComplex | None = None,
) -> bool:
    """Re-execute free-face pairs, checking freeness at each step."""
    current = K
    for step in cert.steps:
        if not isinstance(step, FreeFacePair):
            return False
        face = frozenset(step.face)
        coface = frozenset(step.coface)
        if len(coface) != len(face) + 1 or not face < coface:
            return False
        if not current.contains_simplex(face):
            return False
        cofaces = [
            frozenset(t) for t in current.all_simplices() if face < frozenset(t)
        ]
        if cofaces != [coface]:
            return False
        current = current.without([face, coface])
    if target is not None:
        return current == target
    return len(current.all_simplices()) == 1


# ---------------------------------------------------------------------------
# homotopical triviality (three-valued)
# ---------------------------------------------------------------------------


def is_homotopically_trivial_poset(X: FinitePoset) -> TriStateResult:
    if not len(X):
        raise EmptyObject("the empty space is not homotopically trivial")
    core_poset, cert = core(X)
    if len(core_poset) == 1:
        return yes(cert)
    hom = homology_of_poset(X)
    if not hom.is_trivial():
        return no(hom, "non-trivial reduced homology")
    attempt = greedy_collapse_space(X)
    if attempt.is_yes():
        return attempt
    return unknown("acyclic but neither core nor greedy collapse reach a point")


def is_homotopically_trivial_complex(
    K: SimplicialComplex, restarts: int = 8, seed: int = 0
) -> TriStateResult:
    if K.is_empty():
        raise EmptyObject("the empty complex is not homotopically trivial")
    attempt = greedy_collapse_complex(K, restarts=restarts, seed=seed)
    if attempt.verdict in ("yes", "no"):
        return attempt
    return unknown("acyclic but greedy collapse got stuck")


def is_homotopically_trivial(obj, restarts: int = 8, seed: int = 0) -> TriStateResult:
    if isinstance(obj, FinitePoset):
        return is_homotopically_trivial_poset(obj)
    if isinstance(obj, SimplicialComplex):
        return is_homotopically_trivial_complex(obj, restarts=restarts, seed=seed)
    raise TypeError(f"unsupported object {obj!r}")


def shadow_report(K: SimplicialComplex, restarts: int = 8, seed: int = 0) -> dict:
    """Decidable homology shadow of contractibility next to the honest
    collapsibility verdict.  Acyclicity does not prove contractibility, so the
    shadow verdict is labelled as such rather than folded into a TriState."""
    hom = reduced_homology(K)
    coll = greedy_collapse_complex(K, restarts=restarts, seed=seed)
    return {
        "contractible_shadow": "yes" if hom.is_trivial() else "no",
        "shadow_basis": "acyclic" if hom.is_trivial() else "non-trivial reduced homology",
        "collapsible": coll.verdict,
        "homology": hom.summary(),
    }


def collapsibility_of_poset(X: FinitePoset) -> TriStateResult:
    """Collapsibility of a finite space: weak-point removals down to a point."""
    return greedy_collapse_space(X)


def collapsibility_of_complex(
    K: SimplicialComplex, restarts: int = 8, seed: int = 0
) -> TriStateResult:
    return greedy_collapse_complex(K, restarts=restarts, seed=seed)

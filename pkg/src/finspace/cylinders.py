"""Relation cylinders and the multiple cylinder of a chain of relations.

A relation between two finite spaces induces a cylinder: the disjoint union
with the cross order generated by related pairs.  Chains of direction-tagged
relations induce the multiple cylinder, where even-indexed spaces sit below
their odd-indexed neighbours.  The hypothesis checkers evaluate, per point,
the triviality/collapsibility of the open hull of preimages (or the closure
of images) and, when everything is collapsible, execute and verify the
corresponding collapse of the cylinder onto one end.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import collapse as clp
from .errors import (
    MalformedSpec,
    MismatchedSpaces,
    NotOrderPreserving,
    UnknownElement,
)
from .posets import FinitePoset, build_poset

RIGHT = "right"
LEFT = "left"


def tag(copy: str, element: str) -> str:
    return f"{copy}.{element}"


@dataclass(frozen=True)
class Relation:
    """A subset of source x target with a direction tag for sequence position."""

    source: FinitePoset
    target: FinitePoset
    pairs: frozenset[tuple[str, str]]
    direction: str = RIGHT
    source_name: str = "X"
    target_name: str = "Y"

    def __post_init__(self):
        for a, b in self.pairs:
            if a not in self.source:
                raise UnknownElement(f"{a!r} not in source poset")
            if b not in self.target:
                raise UnknownElement(f"{b!r} not in target poset")
        if self.direction not in (RIGHT, LEFT):
            raise MalformedSpec(f"direction must be right or left, got {self.direction!r}")

    def image(self, members) -> frozenset[str]:
        members = frozenset(members)
        for x in members:
            if x not in self.source:
                raise UnknownElement(f"{x!r} not in source poset")
        return frozenset(b for a, b in self.pairs if a in members)

    def preimage(self, members) -> frozenset[str]:
        members = frozenset(members)
        for y in members:
            if y not in self.target:
                raise UnknownElement(f"{y!r} not in target poset")
        return frozenset(a for a, b in self.pairs if b in members)

    def to_json(self) -> str:
        return json.dumps(
            {
                "source": self.source_name,
                "target": self.target_name,
                "direction": self.direction,
                "pairs": sorted(map(list, self.pairs)),
            }
        )


def relation_image(R: Relation, members) -> frozenset[str]:
    return R.image(members)


def relation_preimage(R: Relation, members) -> frozenset[str]:
    return R.preimage(members)


def compose_relations(R1: Relation, R2: Relation) -> Relation:
    """R2 after R1: pairs (x, z) with some middle y related on both sides."""
    if R1.target != R2.source:
        raise MismatchedSpaces("R1.target and R2.source differ")
    by_middle: dict[str, set[str]] = {}
    for y, z in R2.pairs:
        by_middle.setdefault(y, set()).add(z)
    pairs = {
        (x, z) for x, y in R1.pairs for z in by_middle.get(y, ())
    }
    return Relation(
        R1.source,
        R2.target,
        frozenset(pairs),
        direction=RIGHT,
        source_name=R1.source_name,
        target_name=R2.target_name,
    )


def compose_chain(relations: list[Relation]) -> Relation:
    out = relations[0]
    for R in relations[1:]:
        out = compose_relations(out, R)
    return out


def relation_cylinder(R: Relation) -> FinitePoset:
    """B(R): disjoint union with the order generated by x <= y for related pairs.

    Elements are tagged "<copy>.<id>" with the relation's space names.
    """
    sn, tn = R.source_name, R.target_name
    if sn == tn:
        raise MalformedSpec("source and target copies need distinct names")
    elements = [tag(sn, x) for x in R.source.elements] + [
        tag(tn, y) for y in R.target.elements
    ]
    gen = [(tag(sn, a), tag(sn, b)) for a, b in R.source.hasse]
    gen += [(tag(tn, a), tag(tn, b)) for a, b in R.target.hasse]
    gen += [(tag(sn, a), tag(tn, b)) for a, b in R.pairs]
    return build_poset(elements, gen)


def graph_relation(
    f: dict[str, str],
    X: FinitePoset,
    Y: FinitePoset,
    direction: str = RIGHT,
    source_name: str = "X",
    target_name: str = "Y",
) -> Relation:
    """The relation x R f(x) of an order-preserving map, validated."""
    for x in X.elements:
        if x not in f or f[x] not in Y:
            raise NotOrderPreserving(f"map undefined or out of range at {x!r}")
    for a, b in X.hasse:
        if not Y.leq(f[a], f[b]):
            raise NotOrderPreserving(f"{a!r} < {b!r} but images are not ordered")
    return Relation(
        X,
        Y,
        frozenset((x, f[x]) for x in X.elements),
        direction=direction,
        source_name=source_name,
        target_name=target_name,
    )


def mapping_cylinder(
    f: dict[str, str],
    X: FinitePoset,
    Y: FinitePoset,
    source_name: str = "X",
    target_name: str = "Y",
) -> FinitePoset:
    """Non-Hausdorff mapping cylinder B(f), as the cylinder of the graph relation."""
    return relation_cylinder(graph_relation(f, X, Y, RIGHT, source_name, target_name))


@dataclass(frozen=True)
class CylinderSpec:
    """Spaces X_0..X_n and direction-tagged relations R_0..R_{n-1}.

    ``spaces`` is a list of (copy name, poset).  A right relation R_i has
    source X_i and target X_{i+1}; a left one the other way around.
    """

    spaces: tuple[tuple[str, FinitePoset], ...]
    relations: tuple[Relation, ...] = field(default=())

    def __post_init__(self):
        if len(self.spaces) < 2 or len(self.relations) != len(self.spaces) - 1:
            raise MalformedSpec(
                f"{len(self.spaces)} spaces need {len(self.spaces) - 1} relations"
            )
        names = [n for n, _ in self.spaces]
        if len(set(names)) != len(names):
            raise MalformedSpec("duplicate copy names")
        for i, R in enumerate(self.relations):
            lo, hi = self.spaces[i][1], self.spaces[i + 1][1]
            if R.direction == RIGHT and (R.source, R.target) != (lo, hi):
                raise MalformedSpec(f"relation {i} marked right does not match X{i}->X{i+1}")
            if R.direction == LEFT and (R.source, R.target) != (hi, lo):
                raise MalformedSpec(f"relation {i} marked left does not match X{i+1}->X{i}")


def multiple_cylinder(spec: CylinderSpec) -> FinitePoset:
    """Multiple cylinder of relations: even-indexed copies sit below odd ones.

    Both stored orientations of a relation normalize to lower-space x
    upper-space pairs before the order is generated.
    """
    elements: list[str] = []
    gen: list[tuple[str, str]] = []
    for name, X in spec.spaces:
        elements += [tag(name, x) for x in X.elements]
        gen += [(tag(name, a), tag(name, b)) for a, b in X.hasse]
    for i, R in enumerate(spec.relations):
        even = i if i % 2 == 0 else i + 1
        odd = i + 1 if i % 2 == 0 else i
        even_name = spec.spaces[even][0]
        odd_name = spec.spaces[odd][0]
        # relation pairs run source -> target; orient each to (even, odd)
        source_is_even = (R.direction == RIGHT) == (even == i)
        for a, b in R.pairs:
            lo, hi = (a, b) if source_is_even else (b, a)
            gen.append((tag(even_name, lo), tag(odd_name, hi)))
    return build_poset(elements, gen)


def multiple_mapping_cylinder(
    maps: list[dict[str, str]],
    spaces: list[tuple[str, FinitePoset]],
    directions: list[str],
) -> FinitePoset:
    """Multiple non-Hausdorff mapping cylinder via the induced graph relations."""
    if not len(maps) == len(directions) == len(spaces) - 1:
        raise MalformedSpec("need one map and direction per adjacent pair")
    relations = []
    for i, (f, d) in enumerate(zip(maps, directions)):
        lo_name, lo = spaces[i]
        hi_name, hi = spaces[i + 1]
        if d == RIGHT:
            relations.append(graph_relation(f, lo, hi, RIGHT, lo_name, hi_name))
        else:
            relations.append(graph_relation(f, hi, lo, LEFT, hi_name, lo_name))
    return multiple_cylinder(CylinderSpec(tuple(spaces), tuple(relations)))


# ---------------------------------------------------------------------------
# hypothesis sets and collapse checkers
# ---------------------------------------------------------------------------


def underline_preimage(R: Relation, y: str) -> frozenset[str]:
    """Open hull in the source of the preimage of U_y."""
    return R.source.open_hull(R.preimage(R.target.down_set(y)))


def overline_image(R: Relation, x: str) -> frozenset[str]:
    """Closure in the target of the image of F_x."""
    return R.target.closure(R.image(R.source.up_set(x)))


def _subspace_verdicts(X: FinitePoset, members: frozenset[str]) -> dict:
    if not members:
        return {
            "empty": True,
            "triviality": clp.TriStateResult("no", note="empty subspace"),
            "collapsibility": clp.TriStateResult("no", note="empty subspace"),
        }
    sub = X.restrict(members)
    return {
        "empty": False,
        "triviality": clp.is_homotopically_trivial_poset(sub),
        "collapsibility": clp.greedy_collapse_space(sub),
    }


def check_collapse_left(R: Relation) -> dict:
    """Hypotheses of the preimage-side collapse and, when they all hold,
    an executed certificate that B(R) collapses onto the source copy."""
    per_element = {
        z: _subspace_verdicts(R.source, underline_preimage(R, z))
        for z in R.target.elements
    }
    report = _aggregate_hypotheses(per_element)
    if report["hypothesis_collapsibility"] == "yes":
        report["collapse"] = _execute_target_removal(R, side="left")
    else:
        report["collapse"] = {"verdict": "not-attempted"}
    report["per_element"] = per_element
    report["height_bound"] = relation_cylinder(R).height()
    return report


def check_collapse_right(R: Relation) -> dict:
    """Dual checker: image-side hypotheses and collapse onto the target copy."""
    per_element = {
        x: _subspace_verdicts(R.target, overline_image(R, x))
        for x in R.source.elements
    }
    report = _aggregate_hypotheses(per_element)
    if report["hypothesis_collapsibility"] == "yes":
        report["collapse"] = _execute_target_removal(R, side="right")
    else:
        report["collapse"] = {"verdict": "not-attempted"}
    report["per_element"] = per_element
    report["height_bound"] = relation_cylinder(R).height()
    return report


def _aggregate_hypotheses(per_element: dict) -> dict:
    return {
        "hypothesis_triviality": clp.aggregate_verdict(
            v["triviality"].verdict for v in per_element.values()
        ),
        "hypothesis_collapsibility": clp.aggregate_verdict(
            v["collapsibility"].verdict for v in per_element.values()
        ),
    }


def _execute_target_removal(R: Relation, side: str) -> dict:
    """Remove the far copy's points one by one along a linear extension.

    Each removal is verified twice: the punctured set of the removed point in
    the remaining poset must equal the tagged hypothesis set, and the point
    must be a weak point of the remaining poset at removal time.
    """
    B = relation_cylinder(R)
    if side == "left":
        order = R.target.linear_extension()  # ascending: lower points first
        kept, kept_name = R.source, R.source_name
        far_name = R.target_name
    else:
        order = list(reversed(R.source.linear_extension()))  # upper points first
        kept, kept_name = R.target, R.target_name
        far_name = R.source_name
    steps = []
    current = B
    identity_ok = True
    for z in order:
        tz = tag(far_name, z)
        if side == "left":
            punctured = current.down_set(tz, strict=True)
            expected = frozenset(
                tag(kept_name, x) for x in underline_preimage(R, z)
            )
            kind = clp.DOWN_WEAK
        else:
            punctured = current.up_set(tz, strict=True)
            expected = frozenset(tag(kept_name, y) for y in overline_image(R, z))
            kind = clp.UP_WEAK
        if punctured != expected:
            identity_ok = False
        if not punctured or not clp.is_contractible_space(current.restrict(punctured)):
            return {
                "verdict": "failed",
                "failed_at": z,
                "proof_identity": identity_ok,
                "note": "removed point is not a weak point at removal time",
            }
        steps.append(clp.PointRemoval(tz, kind))
        current = current.remove(tz)
    cert = clp.CollapseCertificate(tuple(steps))
    target_elements = {tag(kept_name, x) for x in kept.elements}
    replay_ok = clp.replay_space_certificate(B, cert, target=target_elements)
    return {
        "verdict": "yes" if replay_ok else "failed",
        "proof_identity": identity_ok,
        "certificate": cert,
        "target": kept_name,
    }


def check_intermediate(R1: Relation, R2: Relation, side: str) -> dict:
    """Both hypothesis families (on one factor and on the composite), with the
    two one-sided collapse certificates and the height bounds."""
    composite = compose_relations(R1, R2)
    if side == "left":
        factor_report = check_collapse_left(R1)
        composite_report = check_collapse_left(composite)
        bound_intermediate = R1.source.height()
    elif side == "right":
        factor_report = check_collapse_right(R2)
        composite_report = check_collapse_right(composite)
        bound_intermediate = R2.target.height()
    else:
        raise ValueError(f"side must be left or right, got {side!r}")
    verdict = clp.aggregate_verdict(
        [
            factor_report["hypothesis_collapsibility"],
            composite_report["hypothesis_collapsibility"],
        ]
    )
    return {
        "side": side,
        "factor": factor_report,
        "composite": composite_report,
        "verdict": verdict,
        "height_bound_intermediate": bound_intermediate,
        "height_bound_cylinder": relation_cylinder(composite).height(),
        "note": (
            "bounded-deformation claims are reported as two one-sided "
            "collapse certificates; the deformation itself is not synthesized"
        ),
    }

"""Command line surface: one JSON document per invocation on stdout.

Exit codes: 0 all checks pass, 1 verification mismatch, 2 input error.
Certificates go to files (--out), never inline into reports.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .collapse import (
    CollapseCertificate,
    TriStateResult,
    beat_points,
    core,
    free_faces,
    greedy_collapse_complex,
    greedy_collapse_space,
    is_contractible_space,
    replay_complex_certificate,
    replay_space_certificate,
)
from .complexes import SimplicialComplex
from .covers import FLAVORS, Cover, classify_cover, check_nerve_theorem, nerve, non_hausdorff_nerve, reduced_nerve
from .cylinders import (
    RIGHT,
    CylinderSpec,
    Relation,
    check_collapse_left,
    check_collapse_right,
    check_intermediate,
    compose_relations,
    multiple_cylinder,
)
from .errors import FinspaceError, MalformedSpec
from .homology import HomologyResult, homology_of_poset, reduced_homology
from .persistence import check_truncation_theorem, persistence_over_chain
from .posets import FinitePoset


def _jsonable(obj):
    """Recursively convert report values to plain JSON data."""
    if isinstance(obj, TriStateResult):
        return _jsonable(obj.to_doc())
    if isinstance(obj, CollapseCertificate):
        return json.loads(obj.to_json())
    if isinstance(obj, HomologyResult):
        return obj.summary()
    if isinstance(obj, FinitePoset):
        return json.loads(obj.to_json())
    if isinstance(obj, SimplicialComplex):
        return json.loads(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(_jsonable(v) for v in obj)
    return obj


def _emit(doc) -> None:
    json.dump(_jsonable(doc), sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _load(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _poset_from_doc(doc: dict) -> FinitePoset:
    return FinitePoset.from_json(json.dumps(doc))


def _complex_from_doc(doc: dict) -> SimplicialComplex:
    if "facets" not in doc:
        raise MalformedSpec("complex document needs a 'facets' key")
    return SimplicialComplex(doc["facets"])


def _cover_from_doc(doc: dict) -> Cover:
    return Cover.from_json(json.dumps(doc))


def _cylinder_spec_from_doc(doc: dict) -> CylinderSpec:
    spaces = [(s["name"], _poset_from_doc(s)) for s in doc["spaces"]]
    by_name = dict(spaces)
    relations = []
    for r in doc["relations"]:
        relations.append(
            Relation(
                by_name[r["source"]],
                by_name[r["target"]],
                frozenset(tuple(p) for p in r["pairs"]),
                r.get("direction", RIGHT),
                source_name=r["source"],
                target_name=r["target"],
            )
        )
    return CylinderSpec(tuple(spaces), tuple(relations))


def _write_certificate(report: dict, out: str | None) -> dict:
    """Move certificates out of a report into a file, leaving a reference."""
    def strip(node):
        if isinstance(node, dict):
            return {
                k: (None if isinstance(v, CollapseCertificate) else strip(v))
                for k, v in node.items()
            }
        return node

    certs = []

    def collect(node):
        if isinstance(node, dict):
            for v in node.values():
                collect(v)
        elif isinstance(node, CollapseCertificate):
            certs.append(node)

    collect(report)
    stripped = strip(report)
    if out and certs:
        with open(out, "w") as fh:
            fh.write(certs[0].to_json())
        stripped["certificate_file"] = out
    return stripped


# -- subcommand handlers -----------------------------------------------------


def cmd_poset(args) -> int:
    X = _poset_from_doc(_load(args.infile))
    cr, cert = core(X)
    report = {
        "elements": list(X.elements),
        "hasse": sorted(map(list, X.hasse)),
        "height": X.height(),
        "beat_points": beat_points(X),
        "core_size": len(cr),
        "contractible": is_contractible_space(X),
    }
    if args.mode == "collapse":
        res = greedy_collapse_space(X)
        report["collapse"] = _write_certificate(
            {"verdict": res.verdict, "certificate": res.certificate, "note": res.note},
            args.out,
        )
    elif args.out:
        with open(args.out, "w") as fh:
            fh.write(cert.to_json())
        report["core_certificate_file"] = args.out
    _emit(report)
    return 0


def cmd_complex(args) -> int:
    K = _complex_from_doc(_load(args.infile))
    report = {
        "dim": K.dim(),
        "num_simplices": [len(K.simplices_of_dim(d)) for d in range(K.dim() + 1)],
        "euler_characteristic": K.euler_characteristic(),
        "free_faces": len(free_faces(K)),
        "homology": reduced_homology(K),
    }
    if args.mode == "collapse":
        res = greedy_collapse_complex(K, restarts=args.restarts, seed=args.seed)
        report["collapse"] = _write_certificate(
            {"verdict": res.verdict, "certificate": res.certificate, "note": res.note},
            args.out,
        )
    elif args.mode == "order":
        report["face_poset"] = K.face_poset()
    _emit(report)
    return 0


def cmd_cylinder(args) -> int:
    doc = _load(args.infile)
    spec = _cylinder_spec_from_doc(doc)
    if args.mode in ("check-left", "check-right", "intermediate-left", "intermediate-right"):
        rels = list(spec.relations)
        if args.mode.startswith("intermediate"):
            if len(rels) != 2:
                raise MalformedSpec("intermediate checks need exactly two relations")
            report = check_intermediate(rels[0], rels[1], args.mode.split("-")[1])
        else:
            R = rels[0] if len(rels) == 1 else compose_relations(rels[0], rels[1])
            check = check_collapse_left if args.mode == "check-left" else check_collapse_right
            report = check(R)
        _emit(_write_certificate(report, args.out))
        verdict = report.get("collapse", {}).get("verdict", report.get("verdict"))
        return 0 if verdict in ("yes", "not-attempted") else 1
    B = multiple_cylinder(spec)
    _emit({"cylinder": B, "height": B.height()})
    return 0


def cmd_nerve(args) -> int:
    cover = _cover_from_doc(_load(args.infile))
    if args.mode == "face-poset":
        _emit({"face_poset": non_hausdorff_nerve(cover)})
    elif args.mode == "reduced":
        rn = reduced_nerve(cover)
        _emit(
            {
                "poset": rn.poset,
                "classes": {rep: sorted(map(list, Js)) for rep, Js in rn.classes.items()},
            }
        )
    else:
        _emit({"nerve": nerve(cover)})
    return 0


def cmd_cover(args) -> int:
    cover = _cover_from_doc(_load(args.infile))
    cls = classify_cover(
        cover,
        max_subsets=args.max_subsets,
        restarts=args.restarts,
        seed=args.seed,
    )
    _emit(
        {
            "good": cls.good,
            "strong_good": cls.strong_good,
            "records": [
                {
                    "index_set": list(r.index_set),
                    "empty": r.empty,
                    "triviality": r.triviality,
                    "collapsibility": r.collapsibility,
                }
                for r in cls.records
            ],
            "seed": args.seed,
        }
    )
    return 0


def cmd_homology(args) -> int:
    doc = _load(args.infile)
    if args.mode == "poset":
        hom = homology_of_poset(_poset_from_doc(doc))
    else:
        hom = reduced_homology(_complex_from_doc(doc))
    _emit(hom.summary()["degrees"])
    return 0


def cmd_persistence(args) -> int:
    cover = _cover_from_doc(_load(args.infile))
    if args.mode:
        chain = [step.split(",") for step in args.mode.split("<")]
    else:
        names = sorted(cover.names())
        chain = [names[: i + 1] for i in range(len(names))]
    diagram = persistence_over_chain(cover, chain)
    sys.stdout.write(diagram.to_json_lines() + "\n")
    return 0


def cmd_verify(args) -> int:
    doc = _load(args.infile)
    if args.flavor == "truncation":
        cover = _cover_from_doc(doc)
        report = check_truncation_theorem(cover, seed=args.seed)
        report["seed"] = args.seed
        _emit(report)
        implied = report["strong_good"] == "yes" and not report["has_empty_intersections"]
        holds = report["part1_nerve_homology_match"] and report["part2_subunions_acyclic"]
        return 1 if implied and not holds else 0
    if args.flavor == "replay-complex":
        K = _complex_from_doc(doc["complex"])
        cert = CollapseCertificate.from_json(json.dumps(doc["certificate"]))
        target = _complex_from_doc(doc["target"]) if "target" in doc else None
        ok = replay_complex_certificate(K, cert, target=target)
        _emit({"replay_ok": ok})
        return 0 if ok else 1
    if args.flavor == "replay-space":
        X = _poset_from_doc(doc["poset"])
        cert = CollapseCertificate.from_json(json.dumps(doc["certificate"]))
        target = frozenset(doc["target"]) if "target" in doc else None
        ok = replay_space_certificate(X, cert, target=target)
        _emit({"replay_ok": ok})
        return 0 if ok else 1
    cover = _cover_from_doc(doc)
    report = check_nerve_theorem(cover, args.flavor, restarts=args.restarts, seed=args.seed)
    report["seed"] = args.seed
    _emit(report)
    if report["hypothesis_verdict"] == "yes" and not report["conclusion_homology_match"]:
        return 1
    return 0


def cmd_suite(args) -> int:
    from .suite import run_suite

    report = run_suite(
        seed=args.seed,
        restarts=args.restarts,
        full=args.mode == "full",
        out_dir=args.out,
        fixtures_dir=args.fixtures,
    )
    _emit(report)
    return 0 if report["failed"] == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="finspace")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, needs_in=True):
        if needs_in:
            sp.add_argument("--in", dest="infile", required=True)
        sp.add_argument("--out", default=None)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--restarts", type=int, default=8)
        sp.add_argument("--max-subsets", dest="max_subsets", type=int, default=20)
        sp.add_argument("--fixtures", default=None)
        return sp

    sp = common(sub.add_parser("poset", help="summarize a finite space"))
    sp.add_argument("--mode", choices=["summary", "collapse"], default="summary")
    sp.set_defaults(fn=cmd_poset)

    sp = common(sub.add_parser("complex", help="summarize a simplicial complex"))
    sp.add_argument("--mode", choices=["summary", "collapse", "order"], default="summary")
    sp.set_defaults(fn=cmd_complex)

    sp = common(sub.add_parser("cylinder", help="build or check a cylinder of relations"))
    sp.add_argument(
        "--mode",
        choices=["build", "check-left", "check-right", "intermediate-left", "intermediate-right"],
        default="build",
    )
    sp.set_defaults(fn=cmd_cylinder)

    sp = common(sub.add_parser("nerve", help="nerve constructions of a cover"))
    sp.add_argument("--mode", choices=["nerve", "face-poset", "reduced"], default="nerve")
    sp.set_defaults(fn=cmd_nerve)

    cover_p = sub.add_parser("cover", help="cover operations")
    cover_sub = cover_p.add_subparsers(dest="cover_command", required=True)
    sp = common(cover_sub.add_parser("classify", help="good / strong-good verdicts"))
    sp.add_argument("--mode", default=None)
    sp.set_defaults(fn=cmd_cover)

    sp = common(sub.add_parser("homology", help="reduced integral homology"))
    sp.add_argument("--mode", choices=["complex", "poset"], default="complex")
    sp.set_defaults(fn=cmd_homology)

    sp = common(sub.add_parser("persistence", help="barcode over a chain of index sets"))
    sp.add_argument("--mode", default=None, help="chain, e.g. 'U1<U1,U2<U1,U2,U3'")
    sp.set_defaults(fn=cmd_persistence)

    sp = common(sub.add_parser("verify", help="theorem checkers"))
    sp.add_argument(
        "flavor", choices=list(FLAVORS) + ["truncation", "replay-complex", "replay-space"]
    )
    sp.add_argument("--mode", default=None)
    sp.set_defaults(fn=cmd_verify)

    sp = common(sub.add_parser("suite", help="golden and randomized suites"), needs_in=False)
    sp.add_argument("--mode", choices=["quick", "full"], default="quick")
    sp.set_defaults(fn=cmd_suite)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (FinspaceError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

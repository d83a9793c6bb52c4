"""Command line interface: ``idealclass <command> ...``.

Exit codes: 0 success, 2 parse or validation error, 3 resource limit,
4 theorem violation found by ``verify``.
"""
from __future__ import annotations

import argparse
import json
import sys

from .class_monoid import build_class_monoid, recover_from_abstract_monoid
from .errors import ResourceLimit, SemigroupError
from .ideals import recover_from_inclusion_poset
from .gap_poset import reconstruct
from .io import (
    dumps,
    loads,
    monoid_from_doc,
    monoid_to_doc,
    parse_semigroup,
    poset_from_doc,
    poset_of,
    poset_to_doc,
    poset_to_dot,
)
from .semigroup import (
    NumericalSemigroup,
    enumerate_by_genus,
    is_irreducible,
    is_pseudo_symmetric,
    is_symmetric,
    pseudo_frobenius,
    special_gaps,
)
from .verify import DEFAULT_CAPS, THEOREMS, verify

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_RESOURCE = 3
EXIT_VIOLATION = 4


def symmetry_class(S: NumericalSemigroup) -> str:
    if S.is_naturals:
        return "N"
    if is_symmetric(S):
        return "symmetric"
    if is_pseudo_symmetric(S):
        return "pseudo-symmetric"
    return "irreducible" if is_irreducible(S) else "not irreducible"


def info_text(S: NumericalSemigroup) -> str:
    lines = [S.describe(), f"set: {S.set_notation()}"]
    lines.append(f"generators: {list(S.min_generators)}")
    lines.append(f"gaps: {list(S.gaps)}")
    lines.append(
        f"F={S.frobenius} C={S.conductor} m={S.multiplicity} g={S.genus}"
    )
    if not S.is_naturals:
        pf = pseudo_frobenius(S)
        lines.append(f"type={len(pf)} PF={list(pf)} SG={list(special_gaps(S))}")
    else:
        lines.append("type=0 PF=[] SG=[]")
    lines.append(f"class: {symmetry_class(S)}")
    return "\n".join(lines)


def semigroup_doc(S: NumericalSemigroup) -> dict:
    return {
        "generators": list(S.min_generators),
        "gaps": list(S.gaps),
        "frobenius": S.frobenius,
        "genus": S.genus,
        "multiplicity": S.multiplicity,
        "set": S.set_notation(),
    }


def _read(path: str) -> dict:
    if path == "-":
        return loads(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise SemigroupError(f"cannot read {path}: {exc}") from exc


def _emit_semigroup(S: NumericalSemigroup, fmt: str) -> None:
    if fmt == "json":
        print(dumps(semigroup_doc(S)))
    else:
        print(f"S={S.set_notation()}")
        print(S.describe())


def cmd_info(args) -> int:
    S = parse_semigroup(args.semigroup)
    if args.format == "json":
        print(dumps(semigroup_doc(S)))
    else:
        print(info_text(S))
    return EXIT_OK


def cmd_poset(args) -> int:
    S = parse_semigroup(args.semigroup)
    P, gray, dashed = poset_of(S, args.which, args.limit)
    if args.format == "dot":
        sys.stdout.write(poset_to_dot(P, name=f"{args.which} {S.angle()}", gray=gray, dashed=dashed))
    else:
        print(dumps(poset_to_doc(P)))
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    P = poset_from_doc(_read(args.input))
    S = reconstruct(P) if args.mode == "gaps" else recover_from_inclusion_poset(P)
    _emit_semigroup(S, args.format)
    return EXIT_OK


def cmd_recover_monoid(args) -> int:
    M = monoid_from_doc(_read(args.input))
    _emit_semigroup(recover_from_abstract_monoid(M), args.format)
    return EXIT_OK


def cmd_monoid(args) -> int:
    S = parse_semigroup(args.semigroup)
    M = build_class_monoid(S, args.limit)
    doc = monoid_to_doc(M)
    doc["labels"] = M.labels()
    print(dumps(doc))
    return EXIT_OK


def cmd_verify(args) -> int:
    g_max = DEFAULT_CAPS[args.theorem] if args.g_max is None else args.g_max
    report = verify(args.theorem, g_max, jobs=args.jobs, seed=args.seed)
    if args.format == "json":
        print(json.dumps(report.to_dict(), ensure_ascii=False))
    else:
        print(report.summary())
        for v in report.violations:
            print("  " + v)
    return EXIT_OK if report.confirmed else EXIT_VIOLATION


def cmd_census(args) -> int:
    census = enumerate_by_genus(args.g_max)
    if args.format == "json":
        print(dumps({"g_max": args.g_max, "semigroups": [semigroup_doc(S) for S in census]}))
    else:
        for S in census:
            print(S.describe())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idealclass",
        description="Numerical semigroups, their gap and ideal posets, and ideal class monoids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="invariants of a semigroup")
    p.add_argument("semigroup", help="'gens:4,6,9' or 'gaps:1,2,3,5,7,11'")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("poset", help="export the gap, inclusion or ⪯ poset")
    p.add_argument("semigroup")
    p.add_argument("--which", choices=["gaps", "inclusion", "preceq"], default="gaps")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--limit", type=int, default=None, help="cap on the number of ideals")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("monoid", help="export the Cayley table of the ideal class monoid")
    p.add_argument("semigroup")
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_monoid)

    p = sub.add_parser("reconstruct", help="recover S from a poset document")
    p.add_argument("input", help="poset JSON file, or - for stdin")
    p.add_argument("--mode", choices=["gaps", "inclusion"], default="gaps")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("recover-monoid", help="recover S from a Cayley table document")
    p.add_argument("input", help="monoid JSON file, or - for stdin")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_recover_monoid)

    p = sub.add_parser("verify", help="exhaustive rigidity check over the census")
    p.add_argument("--theorem", choices=THEOREMS, default="gaps")
    p.add_argument("--g-max", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="list all semigroups up to a genus")
    p.add_argument("--g-max", type=int, default=4)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except SemigroupError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

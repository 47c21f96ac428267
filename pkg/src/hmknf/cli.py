"""Command line interface.

Exit status: 0 success / model found / no conflict / check passed,
1 no model / conflict / check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from hmknf.kb import KnowledgeBase, Partition
from hmknf.propagation import propagate
from hmknf.reduction import DimacsError, encode_3sat_disjunctive, encode_3sat_normal, parse_dimacs
from hmknf.solver import brute_force_models, check_model, solve
from hmknf.syntax import ParseError, parse_kb, serialize_kb
from hmknf.unfounded import SizeGuardError, greatest_unfounded_set, unfounded_approx


class UsageError(Exception):
    pass


def _atom_list(value: str) -> list[str]:
    return [v.strip() for v in value.split(",") if v.strip()]


def _load(path: str) -> KnowledgeBase:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_kb(text).kb
    except ParseError as exc:
        raise UsageError(f"{path}:{exc}") from None


def _assumptions(kb: KnowledgeBase, args) -> Partition:
    true = [n for v in args.true for n in _atom_list(v)]
    false = [n for v in args.false for n in _atom_list(v)]
    for name in true + false:
        if name not in kb.index:
            raise UsageError(f"unknown atom {name!r}")
        if kb.id_of(name) not in kb.ka:
            raise UsageError(f"atom {name!r} does not occur in any rule")
    if set(true) & set(false):
        raise UsageError(f"atoms both true and false: {', '.join(sorted(set(true) & set(false)))}")
    return kb.partition(true, false)


def _pjson(kb: KnowledgeBase, p: Partition) -> dict:
    return {"true": kb.names(p.t), "false": kb.names(p.f)}


def _ptext(kb: KnowledgeBase, p: Partition) -> str:
    return "true: {" + ", ".join(kb.names(p.t)) + "}  false: {" + ", ".join(kb.names(p.f)) + "}"


def _emit(out: TextIO, payload: dict, as_json: bool, lines: list[str]):
    if as_json:
        out.write(json.dumps(payload) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def cmd_solve(args, out) -> int:
    kb = _load(args.file)
    if args.brute_force:
        models = brute_force_models(kb)
        if not args.all:
            models = models[:1]
        stats = {"decisions": 0, "conflicts": 0, "checks": 1 << len(kb.ka)}
    else:
        outcome = solve(kb, Partition(), all_models=args.all)
        models = list(outcome.models)
        stats = {
            "decisions": outcome.stats.decisions,
            "conflicts": outcome.stats.conflicts,
            "checks": outcome.stats.checks,
        }
    listed = sorted((_pjson(kb, m) for m in models), key=lambda m: (m["true"], m["false"]))
    payload = {"status": "model" if models else "no_model", "models": listed, "stats": stats}
    lines = [f"Model {i}: " + _ptext(kb, m) for i, m in enumerate(sorted(models, key=lambda m: kb.names(m.t)), 1)]
    if not models:
        lines.append("no model")
    lines.append("decisions: {decisions}  conflicts: {conflicts}  checks: {checks}".format(**stats))
    _emit(out, payload, args.json, lines)
    return 0 if models else 1


def cmd_propagate(args, out) -> int:
    kb = _load(args.file)
    p = _assumptions(kb, args)
    result = propagate(kb, p)
    payload = {"status": "partition" if result.ok else "conflict", "partition": _pjson(kb, result.partition)}
    lines = [_ptext(kb, result.partition)]
    if result.conflict is not None:
        atoms = kb.names(result.conflict.atoms)
        payload["conflict"] = {"kind": result.conflict.kind, "atoms": atoms}
        if result.conflict.kind == "overlap":
            lines.append("conflict: derived both true and false: " + ", ".join(atoms))
        elif result.conflict.kind == "violated":
            lines.append("conflict: rule body holds but every head atom is false: " + ", ".join(atoms))
        elif atoms:
            lines.append(f"conflict: OB_T together with not {atoms[0]} is inconsistent")
        else:
            lines.append("conflict: OB_T is inconsistent")
    _emit(out, payload, args.json, lines)
    return 0 if result.ok else 1


def cmd_unfounded(args, out) -> int:
    kb = _load(args.file)
    p = _assumptions(kb, args)
    report = greatest_unfounded_set(kb, p) if args.exact else unfounded_approx(kb, p)
    names = kb.names(report.set)
    payload = {"status": "unfounded_set", "set": names, "exact": report.exact}
    lines = ["unfounded: {" + ", ".join(names) + "}" + ("" if report.exact else "  (approximation)")]
    if not report.dependable:
        lines.append("note: the partition is not dependable, every set is unfounded")
    _emit(out, payload, args.json, lines)
    return 0


def cmd_check(args, out) -> int:
    kb = _load(args.file)
    p = _assumptions(kb, args)
    if not args.false:
        # unspecified atoms default to false
        p = Partition(p.t, kb.ka - p.t)
    if p.decided != kb.ka:
        missing = kb.names(kb.ka - p.decided)
        raise UsageError("partition is not total, undecided: " + ", ".join(missing))
    verdict = check_model(kb, p)
    payload = {"status": "check", "result": verdict, "partition": _pjson(kb, p)}
    _emit(out, payload, args.json, [("MKNF model: " if verdict else "not an MKNF model: ") + _ptext(kb, p)])
    return 0 if verdict else 1


def cmd_encode(args, out) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            cnf = parse_dimacs(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    except DimacsError as exc:
        raise UsageError(f"{args.file}: {exc}") from None
    kb = encode_3sat_disjunctive(cnf) if args.disjunctive else encode_3sat_normal(cnf)
    out.write(serialize_kb(kb))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hmknf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_partition(p):
        p.add_argument("file")
        p.add_argument("--true", action="append", default=[], metavar="ATOMS", help="comma separated")
        p.add_argument("--false", action="append", default=[], metavar="ATOMS", help="comma separated")
        p.add_argument("--json", action="store_true")
        return p

    p = sub.add_parser("solve", help="find MKNF models")
    p.add_argument("file")
    p.add_argument("--all", action="store_true", help="enumerate every model")
    p.add_argument("--brute-force", action="store_true", help="guess-and-verify over all total partitions")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_solve)

    with_partition(sub.add_parser("propagate", help="well-founded propagation")).set_defaults(run=cmd_propagate)

    p = with_partition(sub.add_parser("unfounded", help="unfounded atoms of a partition"))
    p.add_argument("--exact", action="store_true", help="exact greatest unfounded set (exponential)")
    p.set_defaults(run=cmd_unfounded)

    p = with_partition(sub.add_parser("check", help="check a total partition"))
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("encode-3sat", help="encode a DIMACS CNF as a knowledge base")
    p.add_argument("file")
    p.add_argument("--disjunctive", action="store_true")
    p.set_defaults(run=cmd_encode)
    return parser


def run(argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.run(args, out)
    except (UsageError, SizeGuardError) as exc:
        err.write(f"hmknf: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

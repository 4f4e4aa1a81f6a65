"""Command-line front end.

Subcommands: decompose, family, check, verify, paper-examples.  Exit
codes are the machine contract: 0 = success / relation holds, 1 =
relation or membership fails (check/verify) or a fixture fails, 2 =
any error.  ``--json`` switches every report to a stable structured
schema; matrices are serialized with the same entry grammar the parser
accepts, so outputs are valid inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from .decomp import core_nilpotent, fitting_decomposition
from .errors import GeninvError
from .families import (enumerate_family, evaluate_family, gd1_family,
                       is_1gd, is_gd1, one_gd_family)
from .fixtures import FIXTURES, run_all
from .inverses import is_gdrazin, is_one_inverse, is_reflexive
from .io import load_matrix, matrix_to_document
from .matrices import Matrix, rank
from .orders import check_order
from .rng import Lcg


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geninv",
        description="Exact GD1/1GD generalized inverses and matrix partial orders.")
    parser.add_argument("--json", action="store_true",
                        help="emit structured JSON instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="index, Fitting and core-nilpotent data")
    p.add_argument("file")

    p = sub.add_parser("family", help="parameterized GD1 or 1GD inverse family")
    p.add_argument("file")
    p.add_argument("--kind", choices=("gd1", "1gd"), required=True)
    p.add_argument("--params", default=None,
                   help="'zero', 'random:SEED', or a JSON assignment file")
    p.add_argument("--enumerate", action="store_true", dest="enumerate_all",
                   help="list every member (finite fields only)")
    p.add_argument("--cap", type=int, default=4096,
                   help="enumeration size cap (default 4096)")

    p = sub.add_parser("check", help="decide an order relation between A and B")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--relation", required=True,
                   choices=("space", "minus", "gd", "gd1", "1gd",
                            "gd1-1gd", "1gd-gd1"))

    p = sub.add_parser("verify", help="membership oracle for a candidate inverse")
    p.add_argument("file_a")
    p.add_argument("file_x")
    p.add_argument("--kind", required=True,
                   choices=("one", "reflexive", "gd", "gd1", "1gd"))

    p = sub.add_parser("paper-examples", help="replay the published fixtures")
    p.add_argument("--list", action="store_true", dest="list_only")
    return parser


def _emit(args, payload: dict, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _matrix_lines(label: str, M: Matrix):
    lines = ["%s (%dx%d):" % (label, M.nrows, M.ncols)]
    for row in M.to_strings():
        lines.append("  [" + ", ".join(row) + "]")
    return lines


def cmd_decompose(args) -> int:
    A = load_matrix(args.file)
    fd = fitting_decomposition(A)
    cn = core_nilpotent(A, fd)
    ranks = []
    power = Matrix.identity(A.field, A.nrows)
    for _ in range(fd.index + 2):
        ranks.append(rank(power))
        power = power @ A
    payload = {
        "index": {"endomorphism": fd.index,
                  "matrix": fd.matrix_convention_index},
        "rank_profile": ranks,
        "r": fd.r,
        "chain_lengths": fd.chain_lengths,
        "basis_W": matrix_to_document(fd.basis_W),
        "basis_U": matrix_to_document(fd.basis_U),
        "C": matrix_to_document(fd.C),
        "P": matrix_to_document(fd.P),
        "J": matrix_to_document(fd.J),
        "A1": matrix_to_document(cn.A1),
        "A2": matrix_to_document(cn.A2),
    }
    lines = ["index: %d (endomorphism convention), %d (matrix convention)"
             % (fd.index, fd.matrix_convention_index),
             "rank profile of A^0, A^1, ...: %s" % ranks,
             "dim W = %d, chain lengths = %s" % (fd.r, fd.chain_lengths)]
    for label, M in (("basis_W", fd.basis_W), ("basis_U", fd.basis_U),
                     ("C", fd.C), ("P", fd.P), ("J", fd.J),
                     ("A1 (core)", cn.A1), ("A2 (nilpotent)", cn.A2)):
        lines.extend(_matrix_lines(label, M))
    _emit(args, payload, lines)
    return 0


def _slot_name(slot) -> str:
    return "a[%d,%d]" % (slot[0] + 1, slot[1] + 1)


def _parse_assignment(args, family):
    if args.params is None:
        return None
    if args.params == "zero":
        return {slot: family.field.zero() for slot in family.free_slots}
    if args.params.startswith("random:"):
        seed = int(args.params.split(":", 1)[1])
        rng = Lcg(seed)
        return {slot: family.field.sample(rng) for slot in family.free_slots}
    with open(args.params, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    by_name = {_slot_name(slot): slot for slot in family.free_slots}
    assignment = {}
    for name, text in raw.items():
        if name not in by_name:
            raise GeninvError("unknown parameter %r" % name)
        assignment[by_name[name]] = family.field.parse(text)
    missing = [n for n in by_name if n not in raw]
    if missing:
        raise GeninvError("missing parameters: %s" % ", ".join(sorted(missing)))
    return assignment


def cmd_family(args) -> int:
    A = load_matrix(args.file)
    fam = gd1_family(A) if args.kind == "gd1" else one_gd_family(A)
    oracle = is_gd1 if args.kind == "gd1" else is_1gd
    template = []
    free_set = set(fam.free_slots)
    dep_set = set(fam.dependent_slots)
    for i in range(fam.n):
        row = []
        for j in range(fam.n):
            if (i, j) in free_set:
                row.append({"param": _slot_name((i, j))})
            elif (i, j) in dep_set:
                row.append({"dependent": "row_%d(Jt) . J . col_%d(Jt)"
                            % (i + 1, j + 1)})
            else:
                row.append({"fixed": fam.field.format(fam.base.rows[i][j])})
        template.append(row)
    payload = {
        "kind": fam.kind,
        "param_count": fam.param_count,
        "template": template,
        "P": matrix_to_document(fam.fitting.P),
        "J": matrix_to_document(fam.fitting.J),
    }
    lines = ["kind: %s" % fam.kind,
             "param_count: %d" % fam.param_count,
             "free parameters: %s" % ", ".join(fam.slot_names()),
             "dependent entries: %s" % ", ".join(
                 _slot_name(s) for s in fam.dependent_slots)]
    members = []
    assignment = _parse_assignment(args, fam)
    if assignment is not None:
        X = evaluate_family(fam, assignment)
        if not oracle(A, X, fam.fitting):
            raise AssertionError("evaluated member fails the membership oracle")
        members.append(X)
    if args.enumerate_all:
        for X in enumerate_family(fam, cap=args.cap):
            if not oracle(A, X, fam.fitting):
                raise AssertionError("enumerated member fails the oracle")
            members.append(X)
    if members:
        payload["members"] = [matrix_to_document(M) for M in members]
        for k, M in enumerate(members):
            lines.extend(_matrix_lines("member %d" % k, M))
    _emit(args, payload, lines)
    return 0


def cmd_check(args) -> int:
    A = load_matrix(args.file_a)
    B = load_matrix(args.file_b)
    rep = check_order(args.relation, A, B)
    payload = {"relation": rep.relation, "holds": rep.holds,
               "evidence": rep.evidence,
               "witness": matrix_to_document(rep.witness)
               if rep.witness is not None else None}
    lines = ["relation %s: %s" % (rep.relation, "holds" if rep.holds else "fails"),
             "evidence: %s" % rep.evidence]
    if rep.witness is not None:
        lines.extend(_matrix_lines("witness", rep.witness))
    _emit(args, payload, lines)
    return 0 if rep.holds else 1


def cmd_verify(args) -> int:
    A = load_matrix(args.file_a)
    X = load_matrix(args.file_x)
    failed = None
    if A @ X @ A != A:
        failed = "AXA != A"
    elif args.kind in ("reflexive", "gd1", "1gd") and X @ A @ X != X:
        failed = "XAX != X"
    elif args.kind == "gd" and not is_gdrazin(A, X):
        failed = "X A^m != A^m X"
    elif args.kind == "gd1" and not is_gd1(A, X):
        failed = "X does not leave W = Im A^m invariant"
    elif args.kind == "1gd" and not is_1gd(A, X):
        failed = "X does not leave U = Ker A^m invariant"
    ok = failed is None
    # double-check through the plain predicates
    if ok:
        ok = {"one": is_one_inverse, "reflexive": is_reflexive,
              "gd": is_gdrazin, "gd1": is_gd1, "1gd": is_1gd}[args.kind](A, X)
        if not ok:
            failed = "membership predicate failed"
    payload = {"kind": args.kind, "ok": ok, "failed_identity": failed}
    _emit(args, payload,
          ["%s membership: %s" % (args.kind, "pass" if ok else "fail")]
          + (["failed identity: %s" % failed] if failed else []))
    return 0 if ok else 1


def cmd_paper_examples(args) -> int:
    if args.list_only:
        names = [name for name, _ in FIXTURES]
        _emit(args, {"fixtures": names}, names)
        return 0
    results = run_all()
    payload = {"results": [{"name": n, "ok": ok, "detail": d}
                           for n, ok, d in results]}
    lines = ["%s %s%s" % ("PASS" if ok else "FAIL", n, (": " + d) if d else "")
             for n, ok, d in results]
    _emit(args, payload, lines)
    return 0 if all(ok for _, ok, _ in results) else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "decompose": cmd_decompose,
        "family": cmd_family,
        "check": cmd_check,
        "verify": cmd_verify,
        "paper-examples": cmd_paper_examples,
    }
    try:
        return handlers[args.command](args)
    except (GeninvError, OSError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

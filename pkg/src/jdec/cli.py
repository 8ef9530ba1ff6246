"""Command line entry point: ``jdec <command> --group G.json [--chars C.json] [--rep R.json]``.

Exit codes: 0 ok, 1 validation failure, 2 method inapplicable, 3 budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys

from .characters import induced_table
from .groups import GroupError, all_subgroups
from .idempotents import RepError
from .io import InputError, fixture_path, load_bundle, validate_bundle
from .report import build_report, render_text
from .search import MethodInapplicable, build_pools, minimize_kernel

EXIT_OK, EXIT_INVALID, EXIT_INAPPLICABLE, EXIT_BUDGET = 0, 1, 2, 3

EXAMPLES = {
    "gl23": ("gl23_group.json", "gl23_chars.json", "gl23_rep.json"),
}


def _parse_signature(text: str) -> tuple[int, list[int]]:
    # "0;8,3,2"
    gam, _, rest = text.partition(";")
    return int(gam), [int(x) for x in rest.split(",") if x.strip()]


def _bundle(args):
    if args.example:
        g, c, r = (str(fixture_path(n)) for n in EXAMPLES[args.example])
        args.group = args.group or g
        args.chars = args.chars or c
        args.rep = args.rep or r
    if not args.group:
        raise InputError("<args>", "--group is required (or --example)")
    return load_bundle(args.group, args.chars, args.rep)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    b = _bundle(args)
    sig = _parse_signature(args.signature) if args.signature else None
    d = validate_bundle(b, sig)
    summary = {"ok": d.ok, "messages": d.messages, "group_order": b.group.order}
    text = "ok\n" if d.ok else "".join(f"FAIL {m}\n" for m in d.messages)
    _emit(args, summary, text)
    return EXIT_OK if d.ok else EXIT_INVALID


def cmd_subgroups(args) -> int:
    b = _bundle(args)
    G = b.group
    classes = all_subgroups(G)
    rows = [
        {
            "order": c.order,
            "length": c.length,
            "generators": [G.word_of(g) for g in c.representative.generators],
        }
        for c in classes
    ]
    text = "".join(f"order {r['order']:>3}, length {r['length']:>3}: <{', '.join(r['generators'])}>\n" for r in rows)
    _emit(args, {"group_order": G.order, "classes": rows}, text)
    return EXIT_OK


def cmd_induced_table(args) -> int:
    b = _bundle(args)
    if b.table is None:
        raise InputError("<args>", "character table required (--chars)")
    classes = all_subgroups(b.group)
    table = induced_table(b.table, classes)
    names = b.table.names
    rows = [
        {"order": c.order, "length": c.length, "multiplicities": row}
        for c, row in zip(classes, table)
    ]
    w = max(len(n) for n in names) + 1
    lines = ["subgroup class".ljust(22) + "".join(n.rjust(w) for n in names)]
    for r in rows:
        label = "identity" if r["order"] == 1 else f"order {r['order']}, length {r['length']}"
        lines.append(label.ljust(22) + "".join(str(m).rjust(w) for m in r["multiplicities"]))
    _emit(args, {"characters": names, "rows": rows}, "\n".join(lines) + "\n")
    return EXIT_OK


def _decompose(args, keep_trace: bool):
    b = _bundle(args)
    if b.table is None:
        raise InputError("<args>", "character table required (--chars)")
    if b.rep is None:
        raise InputError("<args>", "symplectic representation required (--rep)")
    classes = all_subgroups(b.group)
    cp = build_pools(b.rep, b.table, classes)
    result = None
    if cp.applicable:
        result = minimize_kernel(cp.pools, b.rep.dim, budget=args.budget, keep_trace=keep_trace)
    report = build_report(b.name, cp, result, args.budget)
    if not cp.applicable:
        code = EXIT_INAPPLICABLE
    elif result.best is None and result.exhausted:
        code = EXIT_BUDGET
    elif result.best is None:
        code = EXIT_INAPPLICABLE
    else:
        code = EXIT_OK
    return report, code


def cmd_decompose(args) -> int:
    report, code = _decompose(args, keep_trace=args.emit_trace)
    _emit(args, report.to_dict(), render_text(report))
    return code


def cmd_polarization(args) -> int:
    report, code = _decompose(args, keep_trace=False)
    payload = {
        "kernel_order": report.kernel_order,
        "factors": [
            {"character": f.character, "dim": f.dim, "induced_form": f.induced_form, "polarization_type": f.polarization_type}
            for f in report.factors
        ],
    }
    text = "".join(
        f"B{k} [{f.character}] dim {f.dim}: type ({', '.join(map(str, f.polarization_type))})\n"
        for k, f in enumerate(report.factors, 1)
    ) or "no effective set\n"
    _emit(args, payload, text)
    return code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jdec", description="Group algebra decompositions of Jacobians with group action.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, search=False):
        sp.add_argument("--group", help="group JSON file")
        sp.add_argument("--chars", help="character table JSON file")
        sp.add_argument("--rep", help="symplectic representation JSON file")
        sp.add_argument("--example", choices=sorted(EXAMPLES), help="use a shipped fixture bundle")
        sp.add_argument("--json", action="store_true", help="emit JSON instead of text")
        if search:
            sp.add_argument("--budget", type=int, default=None, help="max number of candidate sets to evaluate")
            sp.add_argument("--emit-trace", action="store_true", help="include every evaluated set in the report")

    sp = sub.add_parser("validate", help="run all input checks")
    common(sp)
    sp.add_argument("--signature", help='override signature, e.g. "0;8,3,2"')
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("subgroups", help="subgroups up to conjugacy")
    common(sp)
    sp.set_defaults(func=cmd_subgroups)

    sp = sub.add_parser("induced-table", help="multiplicities of irreducibles in Ind_H^G 1")
    common(sp)
    sp.set_defaults(func=cmd_induced_table)

    for name in ("decompose", "minimize-kernel", "report"):
        sp = sub.add_parser(name, help="build pools, search effective sets, report the best")
        common(sp, search=True)
        sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("polarization", help="polarization types of the best decomposition")
    common(sp, search=True)
    sp.set_defaults(func=cmd_polarization)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if not hasattr(args, "emit_trace"):
        args.emit_trace = False
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (GroupError, RepError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except MethodInapplicable as exc:
        print(f"method inapplicable: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE


if __name__ == "__main__":
    sys.exit(main())

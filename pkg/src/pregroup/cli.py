"""Command-line interface.

Exit codes: 0 success (or "equivalent"), 1 "not equivalent" / failed
check, 2 any error.  Words are space-separated element names.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .factory import (
    ConstructionError,
    FiniteGroup,
    NotAGroup,
    NotAMonomorphism,
    amalgam_pregroup,
    bab_pregroup,
    group_cyclic,
    group_s3,
    hnn_pregroup,
    monomorphism,
    subgroup_pregroup,
    tree_of_groups,
    tree_pregroup,
)
from .selftest import run_selftest
from .table import PregroupTable, TableError, UndefinedProduct, check_axioms, check_lemmas
from .tablefile import TableFileError, load_group, load_table, serialize_table
from .universal import TableMismatch, u_from_word, u_inv, u_mul
from .words import (
    CapExceeded,
    EmptyWord,
    LengthMismatch,
    NotReduced,
    canonical_form,
    equivalent,
    reduce_leftmost,
)

EXIT_OK, EXIT_FALSE, EXIT_ERROR = 0, 1, 2

_ERRORS = (
    TableError,
    TableFileError,
    UndefinedProduct,
    NotReduced,
    EmptyWord,
    LengthMismatch,
    CapExceeded,
    TableMismatch,
    NotAGroup,
    NotAMonomorphism,
    ConstructionError,
    OSError,
)


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def _parse_map(text: str) -> dict[str, str]:
    out = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        src, sep, dst = part.partition(":")
        if not sep or not src or not dst:
            raise CliError(f"bad map entry {part!r}; expected src:dst")
        out[src] = dst
    return out


def _parse_names(text: str) -> list[str]:
    return [n for n in (p.strip() for p in text.split(",")) if n]


def _group(spec: str) -> FiniteGroup:
    if spec.startswith("cyclic:"):
        try:
            return group_cyclic(int(spec.split(":", 1)[1]))
        except ValueError:
            raise CliError(f"bad group spec {spec!r}") from None
    if spec == "s3":
        return group_s3()
    return load_group(spec)


def _report_lines(t: PregroupTable, label: str, results) -> tuple[list[str], dict]:
    lines, data = [], {}
    for key, r in results.items():
        if r.passed:
            lines.append(f"{label} {key}: pass")
        else:
            lines.append(f"{label} {key}: FAIL {r.reason} [{t.show(r.witness)}]")
        data[str(key)] = {
            "passed": r.passed,
            "reason": r.reason,
            "witness": [t.name(x) for x in r.witness] if r.witness else None,
        }
    return lines, data


def cmd_check(args) -> int:
    t = load_table(args.table)
    report = check_axioms(t)
    lines, data = _report_lines(t, "axiom", report.results)
    _emit(args, "\n".join(lines), {"ok": report.ok, "axioms": data})
    return EXIT_OK if report.ok else EXIT_FALSE


def cmd_lemmas(args) -> int:
    t = load_table(args.table)
    report = check_lemmas(t)
    lines, data = _report_lines(t, "lemma", report.results)
    _emit(args, "\n".join(lines), {"ok": report.ok, "lemmas": data})
    return EXIT_OK if report.ok else EXIT_FALSE


def _word_out(args, t: PregroupTable, w) -> int:
    _emit(args, t.show(w), {"word": [t.name(x) for x in w]})
    return EXIT_OK


def cmd_reduce(args) -> int:
    t = load_table(args.table)
    return _word_out(args, t, reduce_leftmost(t, t.word(args.word)))


def cmd_canon(args) -> int:
    t = load_table(args.table)
    return _word_out(args, t, canonical_form(t, reduce_leftmost(t, t.word(args.word))))


def cmd_equiv(args) -> int:
    t = load_table(args.table)
    w1, w2 = t.word(args.w1), t.word(args.w2)
    if args.universal:
        same = u_from_word(t, w1) == u_from_word(t, w2)
        _emit(args, "equal" if same else "not equal", {"equal": same})
        return EXIT_OK if same else EXIT_FALSE
    a = equivalent(t, w1, w2)
    if a is None:
        _emit(args, "not equivalent", {"equivalent": False, "interleaver": None})
        return EXIT_FALSE
    _emit(args, t.show(a) if a else "(empty)", {"equivalent": True, "interleaver": [t.name(x) for x in a]})
    return EXIT_OK


def cmd_umul(args) -> int:
    t = load_table(args.table)
    g = u_mul(u_from_word(t, t.word(args.w1)), u_from_word(t, t.word(args.w2)))
    return _word_out(args, t, g.word)


def cmd_uinv(args) -> int:
    t = load_table(args.table)
    return _word_out(args, t, u_inv(u_from_word(t, t.word(args.w))).word)


def cmd_selftest(args) -> int:
    t = load_table(args.table)
    if args.max_len < 1:
        raise CliError("--max-len must be at least 1")
    results = run_selftest(t, args.max_len)
    ok = all(r.passed for r in results)
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.cases} cases)")
        lines.extend(f"    {f}" for f in r.failures)
    payload = {
        "ok": ok,
        "max_len": args.max_len,
        "checks": [{"name": r.name, "cases": r.cases, "passed": r.passed, "failures": r.failures} for r in results],
    }
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK if ok else EXIT_FALSE


def _span(args):
    a, b, c = _group(args.a), _group(args.b), _group(args.c)
    return a, b, monomorphism(c, a, _parse_map(args.phi)), monomorphism(c, b, _parse_map(args.psi))


def cmd_gen(args) -> int:
    kind = args.kind
    if kind in ("amalgam", "bab"):
        for flag in ("a", "b", "c", "phi", "psi"):
            if getattr(args, flag) is None:
                raise CliError(f"gen {kind} needs --{flag}")
        build = amalgam_pregroup if kind == "amalgam" else bab_pregroup
        t = build(*_span(args))
    elif kind == "tree":
        if not args.node:
            raise CliError("gen tree needs at least one --node NAME=GROUP")
        groups = {}
        for spec in args.node:
            name, sep, group = spec.partition("=")
            if not sep or not name:
                raise CliError(f"bad --node {spec!r}; expected NAME=GROUP")
            groups[name] = _group(group)
        edges = {}
        for edge in args.edge or []:
            if len(edge) not in (2, 3):
                raise CliError("--edge takes LO HI [MAP]")
            lo, hi = edge[0], edge[1]
            if lo not in groups or hi not in groups:
                raise CliError(f"--edge {lo} {hi} names an undeclared node")
            edges[lo, hi] = monomorphism(groups[lo], groups[hi], _parse_map(edge[2] if len(edge) == 3 else ""))
        t = tree_pregroup(tree_of_groups(groups, edges))
    elif kind in ("subgroup", "hnn"):
        if args.g is None or args.h is None:
            raise CliError(f"gen {kind} needs --g and --h")
        g, h = _group(args.g), _parse_names(args.h)
        if kind == "subgroup":
            t = subgroup_pregroup(g, h)
        else:
            t = hnn_pregroup(g, h, _parse_map(args.phi) if args.phi else None)
    else:  # pragma: no cover - argparse restricts choices
        raise CliError(f"unknown generator {kind!r}")

    report = check_axioms(t)
    if not report.ok:
        raise CliError(f"generated table fails axioms {sorted(report.failures())}")
    data = serialize_table(t)
    if args.output:
        Path(args.output).write_bytes(data)
        _emit(args, f"wrote {args.output} ({len(t)} elements)", {"output": args.output, "elements": len(t)})
    else:
        sys.stdout.write(data.decode("utf-8"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    # suppressed default on subcommands so a leading --json is not reset
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")

    p = _Parser(prog="pregroup", description="Pregroups and their universal groups")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.set_defaults(func=func)
        return sp

    add("check", cmd_check, "verify the pregroup axioms").add_argument("table")
    add("lemmas", cmd_lemmas, "verify the derived lemmas").add_argument("table")
    for name, func, help_ in (
        ("reduce", cmd_reduce, "leftmost reduction of a word"),
        ("canon", cmd_canon, "canonical reduced form of a word"),
    ):
        sp = add(name, func, help_)
        sp.add_argument("table")
        sp.add_argument("word")
    sp = add("equiv", cmd_equiv, "decide equivalence of reduced words")
    sp.add_argument("table")
    sp.add_argument("w1")
    sp.add_argument("w2")
    sp.add_argument("--universal", action="store_true", help="compare arbitrary words in the universal group")
    sp = add("umul", cmd_umul, "product in the universal group")
    sp.add_argument("table")
    sp.add_argument("w1")
    sp.add_argument("w2")
    sp = add("uinv", cmd_uinv, "inverse in the universal group")
    sp.add_argument("table")
    sp.add_argument("w")
    sp = add("selftest", cmd_selftest, "run the exhaustive invariant suite")
    sp.add_argument("table")
    sp.add_argument("--max-len", type=int, default=3)

    sp = add("gen", cmd_gen, "build a pregroup table from groups")
    sp.add_argument("kind", choices=["amalgam", "tree", "bab", "subgroup", "hnn"])
    sp.add_argument("-o", "--output", help="write the table here instead of stdout")
    sp.add_argument("--a", help="group A (file, cyclic:n or s3)")
    sp.add_argument("--b", help="group B")
    sp.add_argument("--c", help="amalgamated group C")
    sp.add_argument("--phi", help="map src:dst,... (C->A, or H->G for hnn)")
    sp.add_argument("--psi", help="map src:dst,... (C->B)")
    sp.add_argument("--g", help="group G for subgroup/hnn")
    sp.add_argument("--h", help="subgroup elements, comma separated")
    sp.add_argument("--node", action="append", help="tree node NAME=GROUP")
    sp.add_argument("--edge", action="append", nargs="+", metavar="LO HI [MAP]", help="tree edge LO < HI")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, *_ERRORS) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

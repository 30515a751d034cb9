"""Command-line entry point: ``phylocompat gen|check|verify|export-dot``.

Exit codes: 0 compatible / all checks pass, 1 incompatible / some check
failed, 2 usage, parse or cap errors.
"""

from __future__ import annotations

import argparse
import shlex
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import constructions as cons
from . import formats
from .characters import c_of_q, compat_characters_brute, is_minimally_incompatible_characters
from .quartets import (
    DEFAULT_MAX_LABELS,
    compat_quartets,
    is_minimally_incompatible_quartets,
    quartet_graph,
    to_dot,
)
from .trees import PhyloError, serialize_newick
from .triplets import (
    DEFAULT_MAX_ROOTED_LABELS,
    compat_triplets,
    extract_incompatible_subset,
    is_minimally_incompatible_triplets,
)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


@dataclass
class RunReport:
    """What a command did, renderable as human text or ``key=value`` lines."""

    command: str
    fields: list[tuple[str, str]] = field(default_factory=list)
    checks: list = field(default_factory=list)
    elapsed: float | None = None

    def add(self, key: str, value) -> None:
        self.fields.append((key, str(value)))

    def as_text(self) -> str:
        lines = [self.command]
        for key, value in self.fields:
            lines.append(f"  {key}: {value}")
        for c in self.checks:
            lines.append(f"  {'PASS' if c.passed else 'FAIL'}  {c.instance}  {c.detail}")
        if self.checks:
            passed = sum(c.passed for c in self.checks)
            lines.append(f"{passed}/{len(self.checks)} checks passed")
        if self.elapsed is not None:
            lines.append(f"elapsed: {self.elapsed:.3f} s")
        return "\n".join(lines) + "\n"

    def as_kv(self) -> str:
        lines = [f"command={self.command}"]
        lines.extend(f"{key}={value}" for key, value in self.fields)
        for i, c in enumerate(self.checks):
            lines.append(f"check.{i}.instance={c.instance}")
            lines.append(f"check.{i}.status={'pass' if c.passed else 'fail'}")
            lines.append(f"check.{i}.detail={c.detail}")
        if self.checks:
            passed = sum(c.passed for c in self.checks)
            lines.append(f"checks.passed={passed}")
            lines.append(f"checks.failed={len(self.checks) - passed}")
        if self.elapsed is not None:
            lines.append(f"elapsed_s={self.elapsed:.3f}")
        return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------- #
# gen
# --------------------------------------------------------------------------- #

def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise PhyloError(f"gen {args.kind} requires {' '.join(missing)}")


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "qst":
        _need(args, "s", "t")
        items, noun = cons.gen_Qst(args.s, args.t), "quartets"
    elif kind == "theorem3":
        _need(args, "n")
        items, noun = cons.gen_theorem3_set(args.n), "quartets"
    elif kind == "theorem5":
        _need(args, "r")
        items, noun = cons.gen_theorem5_set(args.r), "characters"
    elif kind == "rr":
        _need(args, "r")
        items, noun = cons.gen_Rr(args.r), "triplets"
    elif kind == "corollary3":
        _need(args, "n")
        items, noun = cons.gen_corollary3_triplets(args.n, args.ell or "a2"), "triplets"
    elif kind == "cq":
        _need(args, "from_")
        items, noun = c_of_q(formats.read(args.from_, "quartets")), "characters"
    elif kind == "witness":
        _need(args, "s", "t")
        if args.x is None and args.y is None:
            tree = cons.witness_tree_missing_q0(args.s, args.t)
        else:
            _need(args, "x", "y")
            tree = cons.witness_tree_missing_qxy(args.s, args.t, args.x, args.y)
        _emit(serialize_newick(tree) + "\n", args.output)
        return EXIT_OK
    else:  # pragma: no cover - argparse restricts choices
        raise PhyloError(f"unknown kind {kind!r}")
    _emit(formats.dumps(items), args.output)
    msg = f"{len(items)} {noun}"
    if args.output:
        print(f"wrote {msg} to {args.output}")
    else:
        print(msg, file=sys.stderr)
    return EXIT_OK


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


# --------------------------------------------------------------------------- #
# check
# --------------------------------------------------------------------------- #

METHODS = {
    "quartets": ("brute", "unification"),
    "characters": ("brute",),
    "triplets": ("build", "brute", "literal"),
}


def cmd_check(args, report: RunReport) -> int:
    kind = args.kind
    method = args.method or METHODS[kind][0]
    if method not in METHODS[kind]:
        raise PhyloError(f"method {method!r} not available for {kind}; choose from {METHODS[kind]}")
    items = formats.read(args.input, kind)
    report.add("input", args.input)
    report.add("kind", kind)
    report.add("method", method)
    report.add("size", len(items))
    if kind == "quartets":
        cap = args.max_labels or DEFAULT_MAX_LABELS
        rep = compat_quartets(items, method, max_labels=cap)
    elif kind == "characters":
        cap = args.max_labels or DEFAULT_MAX_LABELS
        rep = compat_characters_brute(items, max_labels=cap)
    else:
        cap = args.max_labels or DEFAULT_MAX_ROOTED_LABELS
        rep = compat_triplets(items, method, max_labels=cap)
    report.add("verdict", rep.verdict)
    if rep.witness is not None:
        report.add("witness", serialize_newick(rep.witness))
    if rep.unification is not None:
        steps = " ".join("{" + ",".join(map(str, sorted(s.unified))) + f"}}->{s.new_class}"
                         for s in rep.unification)
        report.add("unification", steps or "(empty)")
    if not rep.compatible and kind == "triplets":
        sub = extract_incompatible_subset(items)
        report.add("minimal_incompatible_subset", "; ".join(map(str, sub)))
    if args.minimality:
        if kind == "quartets":
            mrep = is_minimally_incompatible_quartets(items, method, max_labels=cap)
        elif kind == "characters":
            mrep = is_minimally_incompatible_characters(items, max_labels=cap)
        else:
            mrep = is_minimally_incompatible_triplets(items, method)
        report.add("minimally_incompatible", str(mrep.minimal).lower())
        if mrep.blocking:
            report.add("still_incompatible_without", "; ".join(map(str, mrep.blocking)))
    return EXIT_OK if rep.compatible else EXIT_FAIL


# --------------------------------------------------------------------------- #
# verify / export-dot
# --------------------------------------------------------------------------- #

def cmd_verify(args, report: RunReport) -> int:
    params = {k: v for k, v in {
        "max": args.max, "n_max": args.n_max, "r_max": args.r_max, "count": args.count,
        "seed": args.seed, "max_labels": args.max_labels,
    }.items() if v is not None}
    names = list(SUITES) if args.theorem == "all" else [args.theorem]
    for name in names:
        report.checks.extend(run_suite(name, jobs=args.jobs, **params))
    return EXIT_OK if all(c.passed for c in report.checks) else EXIT_FAIL


def cmd_export_dot(args) -> int:
    Q = formats.read(args.input, "quartets")
    _emit(to_dot(quartet_graph(Q)), args.output)
    return EXIT_OK


# --------------------------------------------------------------------------- #
# argument parsing
# --------------------------------------------------------------------------- #

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="phylocompat",
                                     description="Quartet, character and triplet compatibility tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    def report_opts(p):
        p.add_argument("--format", choices=("text", "kv"), default="text", help="report format")
        p.add_argument("--deterministic", action="store_true",
                       help="omit timing so reports are byte-identical across runs")

    g = sub.add_parser("gen", help="generate an extremal family")
    g.add_argument("kind", choices=("qst", "theorem3", "theorem5", "rr", "corollary3", "cq", "witness"))
    g.add_argument("--s", type=int)
    g.add_argument("--t", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--r", type=int)
    g.add_argument("--x", type=int, help="witness: index of the dropped q_xy")
    g.add_argument("--y", type=int)
    g.add_argument("--ell", choices=("a1", "a2"), help="corollary3: shared label to drop")
    g.add_argument("--from", dest="from_", metavar="FILE", help="cq: quartet file")
    g.add_argument("-o", "--output")

    c = sub.add_parser("check", help="decide compatibility of a set read from a file")
    c.add_argument("kind", choices=tuple(METHODS))
    c.add_argument("input")
    c.add_argument("--method")
    c.add_argument("--max-labels", type=int, help="brute-force label cap")
    c.add_argument("--minimality", action="store_true", help="also test minimal incompatibility")
    report_opts(c)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("theorem", choices=(*SUITES, "all"))
    v.add_argument("--max", type=int, help="upper bound for s and t")
    v.add_argument("--n-max", type=int)
    v.add_argument("--r-max", type=int)
    v.add_argument("--count", type=int, help="number of random instances")
    v.add_argument("--seed", type=int)
    v.add_argument("--max-labels", type=int)
    v.add_argument("--jobs", type=int, default=1)
    report_opts(v)

    d = sub.add_parser("export-dot", help="quartet graph of a quartet file as Graphviz DOT")
    d.add_argument("input")
    d.add_argument("-o", "--output")
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "export-dot":
            return cmd_export_dot(args)
        report = RunReport("phylocompat " + shlex.join(argv))
        start = time.perf_counter()
        handler = cmd_check if args.command == "check" else cmd_verify
        code = handler(args, report)
        if not args.deterministic:
            report.elapsed = time.perf_counter() - start
        sys.stdout.write(report.as_kv() if args.format == "kv" else report.as_text())
        return code
    except PhyloError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``hyperzagreb <subcommand> ...``.

Exit codes: 0 success (or verification pass / exploratory), 1 verification
failure, 2 usage or parameter error, 3 unreadable or invalid input file.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import formulas, hgio
from .constructors import (
    FamilySpec,
    attach_pendant_edges,
    b_base,
    c_base,
    extremal_b,
    extremal_c,
    family_member,
    global_max,
    hub,
    hypercycle,
    hyperpath,
    min_bicyclic,
)
from .enumeration import enumerate_linear, extremal_scan
from .errors import EmptyFamily, GuardExceeded, HyperZagrebError
from .hypergraph import (
    Hypergraph,
    StructureClass,
    degree_stats,
    girth,
    is_linear,
    structure_class,
    uniformity,
    zagreb_index,
)
from .transforms import MoveSpec, classify_bicyclic, move_edges, strip_pendant_edges
from .verify import FAIL, THEOREMS, reports_to_csv

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3

FAMILIES = ("b1", "b2", "b3", "c1", "c2", "c3", "path", "cycle",
            "extremal-b", "extremal-c", "global-max", "min-bicyclic")


@dataclass
class CliConfig:
    workers: int = 1
    fmt: str = "text"
    output: Optional[str] = None

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError("worker count must be >= 1")


class _InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _load(path: str) -> Hypergraph:
    try:
        return hgio.read(path)
    except HyperZagrebError as exc:
        raise _InputError(str(exc)) from None


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise _UsageError("missing " + ", ".join("--" + n.replace("_", "-") for n in missing))


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _stats_obj(h: Hypergraph) -> dict:
    st = degree_stats(h)
    k = uniformity(h)
    try:
        cls = structure_class(h).name
    except HyperZagrebError:
        cls = None
    g = girth(h)
    return {
        "n": h.n,
        "m": h.m,
        "k": k,
        "linear": is_linear(h),
        "degree_histogram": {str(d): c for d, c in st.histogram.items()},
        "max_degree": st.max_degree,
        "zagreb": zagreb_index(h),
        "class": cls,
        "girth": g,
    }


def cmd_construct(args, cfg: CliConfig) -> int:
    fam, k = args.family, args.k
    if fam in ("path", "cycle"):
        _need(args, "len")
        h = hyperpath(k, args.len) if fam == "path" else hypercycle(k, args.len)
    elif fam in ("extremal-b", "extremal-c"):
        _need(args, "m", "g")
        h = (extremal_b if fam == "extremal-b" else extremal_c)(k, args.m, args.g)
    elif fam == "global-max":
        _need(args, "m")
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            h = global_max(k, args.m)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
    elif fam == "min-bicyclic":
        _need(args, "m")
        h = min_bicyclic(k, args.m)
    else:
        _need(args, "p", "q", "l")
        spec = FamilySpec(fam[0].upper(), int(fam[1]), args.p, args.q, args.l, args.pendants)
        spec.validate(k)
        if spec.family == "B" and args.attach:
            base = b_base(spec, k, attach=tuple(args.attach))
            h = attach_pendant_edges(base, hub(base), spec.pendants, k)
        else:
            h = family_member(spec, k) if spec.pendants else (
                b_base(spec, k) if spec.family == "B" else c_base(spec, k))
    if cfg.fmt == "json" or (cfg.output and cfg.output.endswith(".json")):
        _emit(json.dumps(hgio.to_json_obj(h)), cfg.output)
    else:
        _emit(hgio.dumps(h), cfg.output)
    return EXIT_OK


def cmd_stats(args, cfg: CliConfig) -> int:
    obj = _stats_obj(_load(args.file))
    if cfg.fmt == "json":
        _emit(json.dumps(obj), cfg.output)
    elif cfg.fmt == "csv":
        keys = ["n", "m", "k", "linear", "max_degree", "zagreb", "class", "girth"]
        row = ["" if obj[x] is None else str(obj[x]) for x in keys]
        _emit(",".join(keys) + "\n" + ",".join(row), cfg.output)
    else:
        hist = " ".join(f"{d}:{c}" for d, c in obj["degree_histogram"].items())
        lines = [f"{key}: {'none' if obj[key] is None else obj[key]}"
                 for key in ("n", "m", "k", "linear", "max_degree", "zagreb", "class", "girth")]
        lines.insert(4, f"degrees: {hist}")
        _emit("\n".join(lines), cfg.output)
    return EXIT_OK


def cmd_zagreb(args, cfg: CliConfig) -> int:
    _emit(str(zagreb_index(_load(args.file))), cfg.output)
    return EXIT_OK


def cmd_girth(args, cfg: CliConfig) -> int:
    g = girth(_load(args.file))
    _emit("none" if g is None else str(g), cfg.output)
    return EXIT_OK


def cmd_classify(args, cfg: CliConfig) -> int:
    res = classify_bicyclic(_load(args.file))
    s = res.spec
    if cfg.fmt == "json":
        _emit(json.dumps({"family": s.family, "variant": s.variant, "p": s.p, "q": s.q, "l": s.l,
                          "pendants": s.pendants, "core_edges": res.core_edge_count,
                          "notes": list(res.notes)}), cfg.output)
    else:
        text = s.label()
        for note in res.notes:
            text += f"\nnote: {note}"
        _emit(text, cfg.output)
    return EXIT_OK


def cmd_move(args, cfg: CliConfig) -> int:
    h = _load(args.file)
    new, delta = move_edges(h, MoveSpec(args.u, args.v, tuple(args.edges)))
    if cfg.output:
        hgio.write(new, cfg.output)
        print(delta)
    else:
        sys.stdout.write(hgio.dumps(new))
        print(f"# delta {delta}", file=sys.stderr)
    return EXIT_OK


def cmd_strip(args, cfg: CliConfig) -> int:
    core, removed = strip_pendant_edges(_load(args.file))
    if cfg.output:
        hgio.write(core, cfg.output)
        print(removed)
    else:
        sys.stdout.write(hgio.dumps(core))
        print(f"# removed {removed}", file=sys.stderr)
    return EXIT_OK


def cmd_enumerate(args, cfg: CliConfig) -> int:
    cls = StructureClass.parse(args.cls)
    hs = list(enumerate_linear(args.k, args.m, cls, args.girth, workers=cfg.workers,
                               allow_large=args.allow_large))
    if cfg.fmt == "json":
        _emit(json.dumps([hgio.to_json_obj(h) for h in hs]), cfg.output)
    elif cfg.output:
        Path(cfg.output).write_text(hgio.dumps_many(hs))
        print(len(hs))
    else:
        sys.stdout.write(hgio.dumps_many(hs))
    return EXIT_OK


def cmd_scan(args, cfg: CliConfig) -> int:
    cls = StructureClass.parse(args.cls)
    rep = extremal_scan(args.k, args.m, cls, args.girth, workers=cfg.workers,
                        allow_large=args.allow_large)
    obj = {
        "k": rep.k, "m": rep.m, "n": rep.n, "class": rep.cls.name, "girth": rep.girth,
        "count": rep.count, "min_zagreb": rep.min_zagreb, "max_zagreb": rep.max_zagreb,
        "min_classes": rep.min_classes, "max_classes": rep.max_classes,
        "min_witness": hgio.to_json_obj(rep.min_witness) if rep.min_witness else None,
        "max_witness": hgio.to_json_obj(rep.max_witness) if rep.max_witness else None,
        "zagreb_values": {str(z): c for z, c in rep.zagreb_values.items()},
    }
    if cfg.fmt == "json":
        _emit(json.dumps(obj), cfg.output)
    elif cfg.fmt == "csv":
        lines = ["zagreb,classes"] + [f"{z},{c}" for z, c in rep.zagreb_values.items()]
        _emit("\n".join(lines), cfg.output)
    else:
        lines = [f"{key}: {'none' if obj[key] is None else obj[key]}"
                 for key in ("k", "m", "n", "class", "girth", "count",
                             "min_zagreb", "min_classes", "max_zagreb", "max_classes")]
        lines.append("zagreb  classes")
        lines += [f"{z:6d}  {c}" for z, c in rep.zagreb_values.items()]
        _emit("\n".join(lines), cfg.output)
    return EXIT_OK


def cmd_formula(args, cfg: CliConfig) -> int:
    name, u = args.name, args.unchecked
    if name == "min_zagreb":
        _need(args, "n", "m")
        value = formulas.min_zagreb_formula(args.n, args.m, args.k)
    elif name in ("b_max", "c1_even", "c2_odd", "c1_odd"):
        _need(args, "m", "g")
        value = formulas.FORMULAS[name](args.k, args.m, args.g, unchecked=u)
    elif name == "c3_pendant":
        _need(args, "m", "p", "q", "l")
        value = formulas.c3_pendant_formula(args.k, args.m, args.p, args.q, args.l, unchecked=u)
    elif name == "move_delta":
        _need(args, "t", "du", "dv")
        value = formulas.move_delta_formula(args.t, args.du, args.dv)
    else:
        _need(args, "m", "g")
        even, odd = formulas.theta_minus_dumbbell(args.k, args.m, args.g, unchecked=u)
        value = even if even is not None else odd
    _emit(formulas.format_exact(value), cfg.output)
    return EXIT_OK


def cmd_verify(args, cfg: CliConfig) -> int:
    fn = THEOREMS[args.theorem]
    kwargs = {"workers": cfg.workers, "allow_large": args.allow_large}
    if args.theorem in ("b-family", "c-family"):
        _need(args, "g")
        report = fn(args.k, args.m, args.g, **kwargs)
    elif args.theorem == "min":
        report = fn(args.k, args.m, girth_filter=args.g, **kwargs)
    else:
        report = fn(args.k, args.m, **kwargs)
    if cfg.fmt == "json":
        _emit(json.dumps(report.to_dict()), cfg.output)
    elif cfg.fmt == "csv":
        _emit(reports_to_csv([report]), cfg.output)
    else:
        lines = [
            f"theorem: {report.theorem}",
            f"k: {report.k}  m: {report.m}  g: {'none' if report.g is None else report.g}",
            f"expected: {report.expected}",
            f"observed: {report.observed}",
            f"classes: {report.family_size}  extremal classes: {report.extremal_classes}",
        ]
        if report.witness_isomorphic is not None:
            lines.append(f"witness isomorphic to construction: {report.witness_isomorphic}")
        lines.append(f"verdict: {report.verdict}")
        _emit("\n".join(lines), cfg.output)
    return EXIT_FAIL if report.verdict == FAIL else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
    common.add_argument("-o", "--output")
    common.add_argument("--workers", type=int, default=1)

    parser = _Parser(prog="hyperzagreb", description="Zagreb index tools for linear uniform hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", parents=[common], help="build a named hypergraph")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--k", type=int, required=True)
    for flag in ("--p", "--q", "--l", "--m", "--g", "--len"):
        p.add_argument(flag, type=int)
    p.add_argument("--pendants", type=int, default=0)
    p.add_argument("--attach", type=int, nargs=2, metavar=("I", "J"),
                   help="eligible attachment vertex index on each cycle (B family)")
    p.set_defaults(func=cmd_construct)

    for name, func, text in (("stats", cmd_stats, "degree statistics and invariants"),
                             ("zagreb", cmd_zagreb, "print the Zagreb index"),
                             ("girth", cmd_girth, "print the girth"),
                             ("classify", cmd_classify, "name the B/C family of a bicyclic hypergraph"),
                             ("strip", cmd_strip, "delete pendant edges repeatedly")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("move", parents=[common], help="move edges from vertex u to vertex v")
    p.add_argument("file")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--edges", type=int, nargs="+", required=True, help="indices of edges to move")
    p.set_defaults(func=cmd_move)

    for name, func in (("enumerate", cmd_enumerate), ("scan", cmd_scan)):
        p = sub.add_parser(name, parents=[common],
                           help="list isomorphism classes" if name == "enumerate" else "extremal Zagreb scan")
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--class", dest="cls", default="bicyclic")
        p.add_argument("--girth", type=int)
        p.add_argument("--allow-large", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("formula", parents=[common], help="evaluate a closed form exactly")
    p.add_argument("--name", required=True,
                   choices=("b_max", "c1_even", "c2_odd", "c1_odd", "c3_pendant",
                            "min_zagreb", "move_delta", "theta_gap"))
    p.add_argument("--k", type=int, default=3)
    for flag in ("--m", "--g", "--n", "--p", "--q", "--l", "--t", "--du", "--dv"):
        p.add_argument(flag, type=int)
    p.add_argument("--unchecked", action="store_true", help="evaluate outside the stated range")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", parents=[common], help="check an extremal statement by enumeration")
    p.add_argument("--theorem", required=True, choices=sorted(THEOREMS))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--g", type=int)
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = CliConfig(workers=args.workers, fmt=args.fmt, output=args.output)
        return args.func(args, cfg)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EmptyFamily as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (_UsageError, GuardExceeded, HyperZagrebError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end.

Inputs are JSON files (polyhedra as vertex or halfspace dicts, gradings as
weight lists); every command prints a single JSON report to stdout with
deterministic key order and human-readable diagnostics to stderr.  Exit
status: 0 when the checked property holds (or the requested object was
computed), 1 when the property fails and a witness or failure record is in
the report, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cases import boundary_grading, triangle_pair
from .errors import NormlocError
from .fans import normal_fan, refines
from .gitfan import (VERDICT_EXHAUSTED, fiber, fiber_point_sum_exact,
                     git_fan, graded_projection_from_dict,
                     located_multiple_search, multiple_making_sums_exact,
                     realize_pair)
from .latpoints import VERDICT_NOT_LOCATED, is_normal, normally_located
from .polyhedra import polyhedron_from_dict, polyhedron_to_dict


def _parse_window(text):
    """Parse "lo..hi,lo..hi,..." into a (lo, hi) box pair."""
    lo, hi = [], []
    for part in text.split(","):
        a, sep, b = part.partition("..")
        if not sep:
            raise NormlocError(f"bad window range {part!r}, want lo..hi")
        lo.append(int(a))
        hi.append(int(b))
    return tuple(lo), tuple(hi)


def _parse_vector(text):
    return tuple(int(x) for x in text.split(","))


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def _load_poly(path):
    return polyhedron_from_dict(_load_json(path))


def _inputs(args, count):
    paths = args.input or []
    if len(paths) != count:
        raise NormlocError(f"expected {count} --input file(s), "
                           f"got {len(paths)}")
    return paths


def _emit(args, payload):
    if args.seed is not None:
        payload["seed"] = args.seed
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _report_exit(report):
    if report.verdict == VERDICT_NOT_LOCATED:
        return 1
    if report.verdict == VERDICT_EXHAUSTED:
        return 1
    return 0


def _cmd_normal_check(args):
    p = _load_poly(_inputs(args, 1)[0])
    report = is_normal(p, args.s_max)
    _emit(args, {"command": "normal-check", **report.to_dict()})
    return _report_exit(report)


def _cmd_located_check(args):
    paths = _inputs(args, 2)
    p, q = _load_poly(paths[0]), _load_poly(paths[1])
    window = _parse_window(args.window) if args.window else None
    report = normally_located(p, q, window)
    _emit(args, {"command": "located-check", **report.to_dict()})
    return _report_exit(report)


def _cmd_normal_fan(args):
    p = _load_poly(_inputs(args, 1)[0])
    _emit(args, {"command": "normal-fan", "fan": normal_fan(p).to_dict()})
    return 0


def _cmd_refine_check(args):
    paths = _inputs(args, 2)
    f1 = normal_fan(_load_poly(paths[0]))
    f2 = normal_fan(_load_poly(paths[1]))
    ok = refines(f1, f2)
    _emit(args, {"command": "refine-check", "refines": ok})
    return 0 if ok else 1


def _cmd_gitfan(args):
    g = graded_projection_from_dict(_load_json(_inputs(args, 1)[0]))
    result = git_fan(g)
    _emit(args, {"command": "gitfan", **result.to_dict()})
    return 0 if result.fan_verified else 1


def _cmd_fiber(args):
    g = graded_projection_from_dict(_load_json(_inputs(args, 1)[0]))
    f = fiber(g, _parse_vector(args.u))
    _emit(args, {"command": "fiber", "fiber": polyhedron_to_dict(f)})
    return 0


def _cmd_realize(args):
    paths = _inputs(args, 2)
    pair = realize_pair(_load_poly(paths[0]), _load_poly(paths[1]))
    _emit(args, {"command": "realize", **pair.to_dict()})
    return 0


def _cmd_p3_search(args):
    g = graded_projection_from_dict(_load_json(_inputs(args, 1)[0]))
    report = multiple_making_sums_exact(g, _parse_vector(args.u1),
                                        _parse_vector(args.u2),
                                        args.k_max, args.s_max)
    _emit(args, {"command": "p3-search", **report.to_dict()})
    return _report_exit(report)


def _cmd_mcrit_search(args):
    paths = _inputs(args, 2)
    report = located_multiple_search(_load_poly(paths[0]),
                                     _load_poly(paths[1]),
                                     args.k_max, args.s_max)
    _emit(args, {"command": "mcrit-search", **report.to_dict()})
    return _report_exit(report)


def _cmd_paper_counterexample(args):
    p, q = triangle_pair(args.k)
    report = normally_located(p, q)
    _emit(args, {"command": "paper-counterexample", "k": args.k,
                 **report.to_dict()})
    return _report_exit(report)


def _cmd_paper_oldex(args):
    g, u1, u2 = boundary_grading()
    w1 = tuple(args.s * x for x in u1)
    w2 = tuple(args.s * x for x in u2)
    report = fiber_point_sum_exact(g, w1, w2)
    _emit(args, {"command": "paper-oldex", "s": args.s,
                 **report.to_dict()})
    return _report_exit(report)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="normloc",
        description="Exact checks for normality, normal location, normal "
                    "fans, and GIT fans of lattice polyhedra.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, doc, **flags):
        cmd = sub.add_parser(name, help=doc, description=doc)
        cmd.set_defaults(func=func)
        cmd.add_argument("--format", choices=["json"], default="json",
                         help="output format (json only)")
        cmd.add_argument("--seed", type=int, default=None,
                         help="echoed into the report (no command draws "
                              "randomness)")
        if flags.get("inputs"):
            cmd.add_argument("--input", action="append", metavar="FILE",
                             help="input JSON file (repeatable)")
        if flags.get("s_max"):
            cmd.add_argument("--s-max", type=int, default=flags["s_max"],
                             help="largest scale to check")
        if flags.get("k_max"):
            cmd.add_argument("--k-max", type=int, default=flags["k_max"],
                             help="largest multiple to try")
        if flags.get("window"):
            cmd.add_argument("--window", metavar="LO..HI,...", default=None,
                             help="box per axis, e.g. 0..10,0..10")
        for name2, kind in flags.get("vectors", ()):
            cmd.add_argument(name2, type=str, required=True, help=kind)
        return cmd

    add("normal-check", _cmd_normal_check,
        "check normality of a lattice polytope up to --s-max",
        inputs=True, s_max=5)
    add("located-check", _cmd_located_check,
        "check that the pair (P, Q) is normally located",
        inputs=True, window=True)
    add("normal-fan", _cmd_normal_fan,
        "print the normal fan of a polyhedron", inputs=True)
    add("refine-check", _cmd_refine_check,
        "check that the normal fan of the first input refines the second",
        inputs=True)
    add("gitfan", _cmd_gitfan,
        "compute the GIT fan of a grading", inputs=True)
    add("fiber", _cmd_fiber,
        "compute the fiber polyhedron of a grading at degree --u",
        inputs=True, vectors=(("--u", "degree, comma separated"),))
    add("realize", _cmd_realize,
        "embed two polyhedra as fibers of one grading", inputs=True)
    add("p3-search", _cmd_p3_search,
        "search a multiple making fiber point sums exact",
        inputs=True, k_max=6, s_max=4,
        vectors=(("--u1", "first degree"), ("--u2", "second degree")))
    add("mcrit-search", _cmd_mcrit_search,
        "search a multiple making the pair normally located",
        inputs=True, k_max=6, s_max=4)
    cex = sub.add_parser(
        "paper-counterexample",
        help="run the built-in triangle pair at multiple --k",
        description="run the built-in triangle pair at multiple --k")
    cex.set_defaults(func=_cmd_paper_counterexample)
    cex.add_argument("--format", choices=["json"], default="json")
    cex.add_argument("--seed", type=int, default=None)
    cex.add_argument("--k", type=int, default=1)
    old = sub.add_parser(
        "paper-oldex",
        help="run the built-in boundary grading at scale --s",
        description="run the built-in boundary grading at scale --s")
    old.set_defaults(func=_cmd_paper_oldex)
    old.add_argument("--format", choices=["json"], default="json")
    old.add_argument("--seed", type=int, default=None)
    old.add_argument("--s", type=int, default=1)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except NormlocError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

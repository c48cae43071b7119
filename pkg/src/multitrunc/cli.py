"""Command line front end.

    multitrunc <command> (--job FILE | --demo NAME) [--box LO..HI] [--degree D]
               [--pretty] [--method koszul|resolution]

Output is canonical JSON unless ``--pretty`` is given.  Exit codes: 0 ok,
2 parse error, 3 validation error, 4 internal assertion.  Every error is a
single stderr line starting with ``error[parse]``, ``error[validation]`` or
``error[internal]``.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import jobs
from .regions import (
    DegreeBox,
    find_region,
    linear_truncations,
    linear_truncations_bound,
    regularity_bound,
)
from .resolution import is_linear_complex, partial_regularities, render_betti, support_of_tor, total_regularity
from .ring import format_polynomial
from .truncation import has_linear_truncation, truncate

EXIT_PARSE, EXIT_VALIDATION, EXIT_INTERNAL = 2, 3, 4
COMMANDS = ("resolve", "support-tor", "linear-truncations", "bounds", "truncate", "find-region")


def _degree(text: str):
    try:
        return tuple(int(x) for x in text.replace("(", "").replace(")", "").split(","))
    except ValueError:
        raise jobs.JobParseError("cannot read degree %r" % text) from None


def _box(text: str) -> DegreeBox:
    if ".." not in text:
        raise jobs.JobParseError("box must look like LO..HI, e.g. 0,0..3,3")
    lo, hi = text.split("..", 1)
    try:
        return DegreeBox(_degree(lo), _degree(hi))
    except ValueError as exc:
        if isinstance(exc, jobs.JobParseError):
            raise
        raise jobs.JobValidationError(str(exc)) from None


def _degrees_json(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise jobs.JobParseError("column %d: %s" % (exc.colno, exc.msg)) from None
    if not isinstance(data, list):
        raise jobs.JobValidationError("expected a JSON list of degrees")
    return [tuple(d) for d in data]


def _num(x):
    return None if isinstance(x, float) and math.isinf(x) else x


def _emit(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _presentation_dict(M):
    phi = M.presentation
    return {
        "target_twists": [list(t) for t in phi.target.twists],
        "source_twists": [list(t) for t in phi.source.twists],
        "entries": [[format_polynomial(M.ring, f.coeffs) for f in row] for row in phi.matrix()],
    }


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise jobs.JobParseError("usage: %s" % message)


def run(argv=None) -> tuple[int, str]:
    parser = _Parser(prog="multitrunc", description=__doc__.split("\n\n")[0])
    parser.add_argument("command", choices=COMMANDS)
    src = parser.add_mutually_exclusive_group(required=True)
    src.add_argument("--job", help="JSON job file")
    src.add_argument("--demo", choices=sorted(jobs.DEMOS), help="built-in example module")
    parser.add_argument("--box", help="search box LO..HI, e.g. 0,0..10,5")
    parser.add_argument("--degree", help="multidegree for truncate, e.g. 1,1")
    parser.add_argument("--pretty", action="store_true", help="human-readable output")
    parser.add_argument("--method", choices=("koszul", "resolution"), default="koszul",
                        help="how linearity of truncations is decided")
    parser.add_argument("--seed-inside", help="find-region: JSON list of degrees known to qualify")
    parser.add_argument("--seed-frontier", help="find-region: JSON list of starting degrees")
    args = parser.parse_args(argv)

    if args.job:
        try:
            with open(args.job) as fh:
                text = fh.read()
        except OSError as exc:
            raise jobs.JobParseError("cannot read %s: %s" % (args.job, exc.strerror)) from None
        job = jobs.loads(text)
    else:
        job = jobs.demo(args.demo)
    M = job.module
    box = _box(args.box) if args.box else job.box
    if box is not None and box.r != job.ring.r:
        raise jobs.JobValidationError("box has wrong length for r=%d" % job.ring.r)
    pretty = args.pretty
    cmd = args.command

    if cmd == "resolve":
        res = M.resolution()
        table = M.betti()
        if pretty:
            return 0, "ranks: %s\n%s" % (" ".join(map(str, res.ranks())) or "0", render_betti(table))
        cells = [{"i": i, "degree": list(b), "rank": k} for (i, b), k in sorted(table.items())]
        return 0, _emit({"ranks": res.ranks(), "betti": cells})

    if cmd == "support-tor":
        supp = support_of_tor(M.resolution())
        if pretty:
            return 0, "\n".join("%d: %s" % (i, " ".join(str(d) for d in row)) for i, row in enumerate(supp))
        return 0, _emit([[list(d) for d in row] for row in supp])

    if cmd == "linear-truncations":
        region = linear_truncations(M, box, method=args.method)
        if pretty:
            return 0, "\n".join(str(g) for g in region) or "(none)"
        return 0, region.to_json()

    if cmd == "bounds":
        table = M.betti()
        out = {
            "linear_truncations_bound": linear_truncations_bound(M).to_list(),
            "regularity_bound": regularity_bound(M).to_list(),
            "partial_regularities": [_num(x) for x in partial_regularities(table, job.ring.r)],
            "regularity": _num(total_regularity(table)),
        }
        if pretty:
            return 0, "\n".join("%s: %s" % (k, json.dumps(out[k])) for k in sorted(out))
        return 0, _emit(out)

    if cmd == "truncate":
        if args.degree:
            d = _degree(args.degree)
        elif job.degree is not None:
            d = job.degree
        else:
            raise jobs.JobValidationError("truncate needs --degree or a degree in the job")
        if len(d) != job.ring.r:
            raise jobs.JobValidationError("degree has wrong length for r=%d" % job.ring.r)
        N = truncate(d, M)
        linear = has_linear_truncation(M, d, method=args.method)
        if pretty:
            pres = _presentation_dict(N)
            lines = ["generators: %s" % pres["target_twists"], "relations: %s" % pres["source_twists"]]
            lines += ["  " + ", ".join(row) for row in pres["entries"]]
            lines.append("linear: %s" % str(linear).lower())
            return 0, "\n".join(lines)
        return 0, _emit({"degree": list(d), "presentation": _presentation_dict(N), "linear": linear})

    # find-region
    if box is None:
        raise jobs.JobValidationError("find-region needs --box or a box in the job")
    inside = _degrees_json(args.seed_inside) if args.seed_inside else ()
    frontier = _degrees_json(args.seed_frontier) if args.seed_frontier else None
    try:
        region = find_region(box, M, lambda N, d: has_linear_truncation(N, d, method=args.method),
                             inside, frontier)
    except ValueError as exc:
        raise jobs.JobValidationError(str(exc)) from None
    if pretty:
        return 0, "\n".join(str(g) for g in region) or "(none)"
    return 0, region.to_json()


def main(argv=None) -> int:
    try:
        code, out = run(argv)
    except jobs.JobParseError as exc:
        print("error[parse]: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except jobs.JobValidationError as exc:
        print("error[validation]: %s" % exc, file=sys.stderr)
        return EXIT_VALIDATION
    except AssertionError as exc:
        print("error[internal]: %s" % (str(exc).replace("\n", " ") or "assertion failed"), file=sys.stderr)
        return EXIT_INTERNAL
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())

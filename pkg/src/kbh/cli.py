"""Command-line front end: invariants of tangle files and identity suites.

Three commands:

    kbh zeta FILE --degree D     tree-and-wheel invariant of a tangle
    kbh alexander FILE           its Alexander polynomial
    kbh selftest                 run every identity suite

Tangle files use the text format of kbh.tangle; a .json extension
switches to the JSON form.  Exit codes: 0 on success, 1 when a
computation or selftest fails, 2 for unusable input.
"""

import argparse
import json
import sys

from .errors import InputError, KbhError
from .mma import render, to_json
from .suites import all_checks
from .tangle import (
    alexander,
    parse_tangle,
    render_alexander,
    tangle_from_json,
    zeta_of_tangle,
)

__all__ = ["main"]


def _load_tangle(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as err:
        raise InputError("cannot read %s: %s" % (path, err)) from None
    if path.endswith(".json"):
        try:
            data = json.loads(text)
        except ValueError as err:
            raise InputError("%s: %s" % (path, err)) from None
        return tangle_from_json(data)
    return parse_tangle(text)


def _cmd_zeta(args):
    if args.degree < 1:
        raise InputError("--degree must be at least 1")
    show = args.show
    if show is not None and not 0 <= show <= args.degree:
        raise InputError("--show must lie between 0 and --degree")
    z = zeta_of_tangle(_load_tangle(args.file), args.degree)
    if args.json:
        print(json.dumps(to_json(z)))
    else:
        for line in render(z, show_degree=show, wheels_only=args.wheels_only):
            print(line)
    return 0


def _cmd_alexander(args):
    coeffs = alexander(_load_tangle(args.file))
    if args.json:
        print(
            json.dumps(
                {
                    "coefficients": [[e, coeffs[e]] for e in sorted(coeffs)],
                    "rendered": render_alexander(coeffs),
                }
            )
        )
    else:
        print(render_alexander(coeffs))
    return 0


def _cmd_selftest(args):
    if args.degree < 1:
        raise InputError("--degree must be at least 1")
    if args.samples < 1:
        raise InputError("--samples must be at least 1")
    print(
        "identity suites at degree %d, %d samples, seed %d"
        % (args.degree, args.samples, args.seed)
    )
    bad = 0
    for name, failures in all_checks(args.degree, args.samples, args.seed):
        if failures:
            bad += 1
            print("FAIL  %s" % name)
            for line in failures:
                print("      %s" % line)
        else:
            print("ok    %s" % name)
    if bad:
        print("%d suite(s) failed" % bad)
        return 1
    print("all suites passed")
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="kbh",
        description="invariants of ribbon-knotted tangles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "zeta", help="tree-and-wheel invariant of a tangle file"
    )
    p.add_argument("file", help="tangle file (text, or JSON with .json)")
    p.add_argument(
        "--degree",
        type=int,
        default=4,
        metavar="D",
        help="compute up to total degree D (default 4)",
    )
    p.add_argument(
        "--show",
        type=int,
        default=None,
        metavar="K",
        help="print series only up to degree K (default: everything)",
    )
    p.add_argument(
        "--wheels-only",
        action="store_true",
        help="print only the wheels line",
    )
    p.add_argument(
        "--json",
        action="store_true",
        help="emit the full element as JSON instead of text",
    )

    p = sub.add_parser(
        "alexander",
        help="Alexander polynomial of a tangle sewn into one strand",
    )
    p.add_argument("file", help="tangle file (text, or JSON with .json)")
    p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("selftest", help="run every identity suite")
    p.add_argument(
        "--degree",
        type=int,
        default=4,
        metavar="D",
        help="truncation degree for the suites (default 4)",
    )
    p.add_argument(
        "--samples",
        type=int,
        default=10,
        metavar="N",
        help="random elements per suite (default 10)",
    )
    p.add_argument(
        "--seed", type=int, default=0, metavar="N", help="random seed"
    )
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    handlers = {
        "zeta": _cmd_zeta,
        "alexander": _cmd_alexander,
        "selftest": _cmd_selftest,
    }
    try:
        return handlers[args.command](args)
    except InputError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    except KbhError as err:
        print("error: %s" % err, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

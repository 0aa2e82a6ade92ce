"""``pontcalc`` command line.

Every command produces a document ``{"command", "parameters", "result"}``.
Integers inside it are written as decimal strings.  ``--format table`` (the
default) and ``--format csv`` print the same payload flattened to
``path, value`` rows.  A result that is a single value prints as that value.

Exit codes: 0 success, 1 a verification or containment check failed, 2 usage,
parse or module error.
"""

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from pontcalc.bundles import f_poly, pontryagin
from pontcalc.cli.parser import parse_bundle, parse_containment
from pontcalc.errors import PontcalcError, RangeError
from pontcalc.ideals import DEFAULT_WEIGHT_BOUND, Ideal, ideal_contains_ideal
from pontcalc.rings import bgl_pair_ring, bgl_ring, gr2_ring, gr_ring
from pontcalc.segre import segre
from pontcalc.verify import SUITES, run_suite

FORMATS = ("json", "csv", "table")
COMMANDS = ("segre", "ideal", "pont", "fpoly", "gr2", "gr", "bgl", "bglpair", "verify")
WEIGHT_ENV = "PONTCALC_MAX_WEIGHT"


class UsageError(Exception):
    pass


@dataclass
class CommandRequest:
    command: str
    parameters: dict = field(default_factory=dict)
    format: str = "table"


def default_max_weight(environ=None):
    env = os.environ if environ is None else environ
    raw = env.get(WEIGHT_ENV)
    if raw is None or raw == "":
        return DEFAULT_WEIGHT_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise UsageError("%s must be an integer, got %r" % (WEIGHT_ENV, raw))
    if value < 0:
        raise UsageError("%s must be nonnegative" % WEIGHT_ENV)
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)

    def exit(self, status=0, message=None):
        # --help still exits normally
        if message:
            sys.stderr.write(message)
        raise SystemExit(status)


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")

    p = _Parser(prog="pontcalc", description="Pontryagin class and Grassmannian ring calculator")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("segre", parents=[common], help="Segre-type class s_j in p1..pr")
    s.add_argument("--r", type=_nonneg, required=True)
    s.add_argument("--j", type=int, required=True)

    s = sub.add_parser("ideal", parents=[common], help="check an ideal containment degreewise")
    s.add_argument("--r", type=_nonneg, required=True)
    s.add_argument("--check", required=True, metavar='"A subset B"')
    s.add_argument("--max-weight", type=_nonneg)
    s.add_argument("--mode", choices=("integer", "rational"), default="integer")

    s = sub.add_parser("pont", parents=[common], help="Pontryagin class p_k of a bundle")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--bundle", required=True)

    s = sub.add_parser("fpoly", parents=[common], help="the polynomial f_{r,E}")
    s.add_argument("--r", type=_nonneg, required=True)
    s.add_argument("--bundle", required=True)

    s = sub.add_parser("gr2", parents=[common], help="cohomology ring of Gr(2, s)")
    s.add_argument("--s", type=int, required=True)

    s = sub.add_parser("gr", parents=[common], help="cohomology ring of Gr(n, s)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--s", type=int, required=True)

    for name in ("bgl", "bglpair"):
        s = sub.add_parser(name, parents=[common], help="truncated cohomology ring of BGL_n" + (" x BGL_n" if name == "bglpair" else ""))
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--cutoff", type=int, required=True)

    s = sub.add_parser("verify", parents=[common], help="run the lemma verification suites")
    s.add_argument("--suite", choices=SUITES + ("all",), default="all")
    s.add_argument("--max-weight", type=_nonneg)
    return p


def parse_args(argv):
    ns = build_parser().parse_args(argv)
    params = {k: v for k, v in vars(ns).items() if k not in ("command", "format")}
    return CommandRequest(ns.command, params, ns.format)


# -- command bodies: each returns (result, ok) ------------------------------

def _segre(r, j):
    return str(segre(r, j)), True


def _ideal(r, check, max_weight, mode="integer"):
    left, right = parse_containment(check)
    rep = ideal_contains_ideal(Ideal(left, r), Ideal(right, r), max_weight, mode)
    result = {
        "left": rep.left,
        "right": rep.right,
        "max_weight": rep.max_weight,
        "mode": rep.mode,
        "per_weight": {str(w): ok for w, ok in rep.per_weight.items()},
        "verdict": "pass" if rep.verdict else "fail",
    }
    if rep.first_failure is not None:
        result["first_failure"] = rep.first_failure
        result["witness"] = rep.witness
    return result, rep.verdict


def _pont(k, bundle):
    return str(pontryagin(k, parse_bundle(bundle))), True


def _fpoly(r, bundle):
    return str(f_poly(r, parse_bundle(bundle))), True


def _gr2(s):
    return gr2_ring(s).report(), True


def _gr(n, s):
    return gr_ring(n, s).report(), True


def _bgl(n, cutoff):
    return bgl_ring(n, cutoff).report(), True


def _bglpair(n, cutoff):
    return bgl_pair_ring(n, cutoff).report(), True


def _verify(suite="all", max_weight=DEFAULT_WEIGHT_BOUND):
    reports = run_suite(suite, max_weight)
    ok = all(reports)
    result = {
        "suite": suite,
        "max_weight": max_weight,
        "verdict": "pass" if ok else "fail",
        "reports": [r.to_dict() for r in reports],
    }
    return result, ok


_HANDLERS = {
    "segre": _segre,
    "ideal": _ideal,
    "pont": _pont,
    "fpoly": _fpoly,
    "gr2": _gr2,
    "gr": _gr,
    "bgl": _bgl,
    "bglpair": _bglpair,
    "verify": _verify,
}


def stringify_numbers(obj):
    """Recursively replace ints (not bools) by their decimal strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): stringify_numbers(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [stringify_numbers(v) for v in obj]
    return str(obj)


def run(request, environ=None):
    """Execute a request.  Returns (document or None, exit code, error message or None)."""
    if request.command not in _HANDLERS:
        return None, 2, "unknown command %r" % request.command
    if request.format not in FORMATS:
        return None, 2, "unknown format %r" % request.format
    params = dict(request.parameters)
    try:
        if "max_weight" in _HANDLERS[request.command].__code__.co_varnames and params.get("max_weight") is None:
            params["max_weight"] = default_max_weight(environ)
        result, ok = _HANDLERS[request.command](**params)
    except UsageError as exc:
        return None, 2, str(exc)
    except TypeError as exc:
        return None, 2, "bad parameters for %s: %s" % (request.command, exc)
    except (PontcalcError, ValueError) as exc:
        return None, 2, "%s: %s" % (type(exc).__name__, exc)
    doc = {"command": request.command, "parameters": params, "result": result}
    return stringify_numbers(doc), 0 if ok else 1, None


def flatten(obj, prefix=""):
    """(path, value) rows; list indices and dict keys joined with '.'."""
    if isinstance(obj, dict):
        if not obj:
            return [(prefix, "")] if prefix else []
        rows = []
        for k, v in obj.items():
            rows.extend(flatten(v, "%s.%s" % (prefix, k) if prefix else str(k)))
        return rows
    if isinstance(obj, list):
        if not obj:
            return [(prefix, "")]
        rows = []
        for i, v in enumerate(obj):
            rows.extend(flatten(v, "%s.%d" % (prefix, i) if prefix else str(i)))
        return rows
    if isinstance(obj, bool):
        return [(prefix, "true" if obj else "false")]
    return [(prefix, "" if obj is None else str(obj))]


def render(doc, fmt):
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    result = doc["result"]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        w.writerows(flatten(result) if isinstance(result, (dict, list)) else [("value", result)])
        return buf.getvalue()
    if not isinstance(result, (dict, list)):
        return "%s\n" % result
    rows = flatten(result)
    width = max(len(k) for k, _ in rows)
    return "".join("%s  %s\n" % (k.ljust(width), v) for k, v in rows)


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        request = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        stderr.write("pontcalc: usage error: %s\n" % exc)
        return 2
    doc, code, err = run(request)
    if doc is None:
        stderr.write("pontcalc: %s\n" % err)
        return code
    stdout.write(render(doc, request.format))
    return code


if __name__ == "__main__":
    sys.exit(main())

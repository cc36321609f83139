"""Command-line interface: ``dualhyp eval``, ``dualhyp table`` and ``dualhyp verify``.

Exit codes: 0 success, 1 a verification check failed, 2 bad input (parse,
domain or arity), 3 a series or quadrature did not converge.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import re
import sys
from dataclasses import dataclass
from typing import Callable

from . import verify as _verify
from .beta import beta_dual, beta_dual_quadrature
from .dual import ELEMENTARY, Dual, arithmetic, format_dual, lift, parse_dual, pow_dual, pow_real_base
from .errors import DomainError, DualHypError, NoConvergence, ParseError
from .gamma import gamma_dual, gamma_dual_quadrature, gamma_limit_approx, pochhammer_dual
from .hypergeometric import (
    DEFAULT_MAX_TERMS,
    DEFAULT_TOL,
    HypergeometricParams,
    SeriesResult,
    pfq,
    pfq_derivative,
    theta_ode_residual,
)
from .reference import QuadratureResult, digamma, gamma_real, trigamma
from .special.confluent import confluent
from .special.gauss import gauss, gauss_sum_at_1

__all__ = ["REGISTRY", "Entry", "build_parsers", "main", "parse_axis"]

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_NO_CONVERGENCE = 3


@dataclass(frozen=True)
class Entry:
    arity: int
    fn: Callable
    uses_params: bool = False


def _real(x: Dual, what: str) -> float:
    if x.du != 0.0:
        raise DomainError(f"{what} must be real, got {format_dual(x)}")
    return x.re


def _integer(x: Dual, what: str) -> int:
    v = _real(x, what)
    if v != int(v):
        raise DomainError(f"{what} must be an integer, got {format_dual(x)}")
    return int(v)


def _real_fn(f):
    return lambda args, opt: Dual(f(_real(args[0], "argument")))


def _gauss_entry(args, opt):
    a1, a2, b, x = args
    if x == 1.0:
        return gauss_sum_at_1(a1, a2, b)
    return gauss(a1, a2, b, x, opt.tol, opt.max_terms)


REGISTRY = {
    "add": Entry(2, lambda a, o: arithmetic(a[0], a[1], "add")),
    "sub": Entry(2, lambda a, o: arithmetic(a[0], a[1], "sub")),
    "mul": Entry(2, lambda a, o: arithmetic(a[0], a[1], "mul")),
    "div": Entry(2, lambda a, o: arithmetic(a[0], a[1], "div")),
    "pow_real_base": Entry(2, lambda a, o: pow_real_base(_real(a[0], "base"), a[1])),
    "pow_dual": Entry(2, lambda a, o: pow_dual(a[0], a[1])),
    "gamma_real": Entry(1, _real_fn(gamma_real)),
    "digamma": Entry(1, _real_fn(digamma)),
    "trigamma": Entry(1, _real_fn(trigamma)),
    "gamma_dual": Entry(1, lambda a, o: gamma_dual(a[0])),
    "gamma_dual_quadrature": Entry(1, lambda a, o: gamma_dual_quadrature(a[0])),
    "pochhammer_dual": Entry(2, lambda a, o: pochhammer_dual(a[0], _integer(a[1], "k"))),
    "gamma_limit_approx": Entry(2, lambda a, o: gamma_limit_approx(a[0], _integer(a[1], "k"))),
    "beta_dual": Entry(2, lambda a, o: beta_dual(a[0], a[1])),
    "beta_dual_quadrature": Entry(2, lambda a, o: beta_dual_quadrature(a[0], a[1])),
    "pfq": Entry(1, lambda a, o: pfq(o.params, a[0], o.tol, o.max_terms), True),
    "pfq_derivative": Entry(
        2, lambda a, o: pfq_derivative(o.params, a[0], _integer(a[1], "r"), o.tol, o.max_terms), True),
    "theta_ode_residual": Entry(
        1, lambda a, o: theta_ode_residual(o.params, a[0], o.tol, o.max_terms), True),
    "confluent": Entry(3, lambda a, o: confluent(a[0], a[1], a[2], o.tol, o.max_terms)),
    "gauss": Entry(4, _gauss_entry),
    "gauss_sum_at_1": Entry(3, lambda a, o: gauss_sum_at_1(a[0], a[1], a[2])),
}
for _tag, _f in ELEMENTARY.items():
    REGISTRY[_tag] = Entry(1, lambda a, o, f=_f: lift(f, a[0]))
REGISTRY["gamma_d"] = REGISTRY["gamma_dual"]
REGISTRY["beta_d"] = REGISTRY["beta_dual"]


@dataclass
class _Options:
    tol: float
    max_terms: int
    params: HypergeometricParams | None


def _parse_list(text: str | None):
    if text is None or text.strip() == "":
        return []
    return [parse_dual(part) for part in text.split(",")]


def _options(ns) -> _Options:
    params = HypergeometricParams(_parse_list(ns.num), _parse_list(ns.den))
    return _Options(ns.tol, ns.max_terms, params)


def _lookup(name: str) -> Entry:
    try:
        return REGISTRY[name]
    except KeyError:
        raise DomainError(f"unknown function {name!r}") from None


def _call(name: str, entry: Entry, args, opt: _Options):
    if len(args) != entry.arity:
        raise DomainError(f"{name} takes {entry.arity} argument(s), got {len(args)}")
    return entry.fn(args, opt)


def _record(name: str, args, result, opt: _Options, entry: Entry) -> dict:
    rec = {"function": name, "args": [format_dual(a) for a in args]}
    if entry.uses_params:
        rec["num"] = [format_dual(a) for a in opt.params.numerator]
        rec["den"] = [format_dual(b) for b in opt.params.denominator]
    value = result.value if isinstance(result, (SeriesResult, QuadratureResult)) else result
    rec["re"] = value.re
    rec["du"] = value.du
    if isinstance(result, SeriesResult):
        rec["terms_used"] = result.terms_used
        rec["converged"] = result.converged
        rec["tail_bound"] = result.tail_bound
    return rec


def _csv_text(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _flat(rec: dict) -> dict:
    out = {}
    for key, value in rec.items():
        if isinstance(value, list):
            for i, item in enumerate(value, start=1):
                out[f"{key}{i}"] = item
        elif isinstance(value, bool):
            out[key] = "true" if value else "false"
        else:
            out[key] = repr(value) if isinstance(value, float) else value
    return out


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_eval(ns) -> int:
    entry = _lookup(ns.function)
    opt = _options(ns)
    args = [parse_dual(a) for a in ns.args]
    rec = _record(ns.function, args, _call(ns.function, entry, args, opt), opt, entry)
    if ns.format == "json":
        text = json.dumps(rec) + "\n"
    else:
        flat = _flat(rec)
        text = _csv_text([list(flat), list(flat.values())])
    _emit(text, ns.out)
    return EXIT_OK


_GRID = re.compile(r"^\s*([^:]+):([^:]+):\s*([0-9]+)\s*(.*)$")


def parse_axis(text: str) -> list[Dual]:
    """``start:stop:count`` with an optional pure-dual suffix, or a literal."""
    m = _GRID.match(text)
    if m is None:
        if ":" in text:
            raise ParseError(f"bad grid axis {text!r}; use start:stop:count", text, 0)
        return [parse_dual(text)]
    start = parse_dual(m.group(1))
    stop = parse_dual(m.group(2))
    if start.du != 0.0 or stop.du != 0.0:
        raise ParseError(f"grid bounds must be real in {text!r}", text, 0)
    count = int(m.group(3))
    if count < 1:
        raise DomainError(f"grid axis {text!r} has no points")
    du = parse_dual(m.group(4)) if m.group(4).strip() else Dual(0.0)
    if du.re != 0.0:
        raise ParseError(f"grid suffix must be a pure dual part in {text!r}", text, m.start(4))
    if count == 1:
        return [Dual(start.re, du.du)]
    step = (stop.re - start.re) / (count - 1)
    return [Dual(start.re + i * step if i < count - 1 else stop.re, du.du) for i in range(count)]


def cmd_table(ns) -> int:
    entry = _lookup(ns.function)
    opt = _options(ns)
    axes = [parse_axis(a) for a in ns.axes]
    if len(axes) != entry.arity:
        raise DomainError(f"{ns.function} takes {entry.arity} axis/axes, got {len(axes)}")
    rows = []
    header = None
    for point in itertools.product(*axes):
        rec = _record(ns.function, list(point), _call(ns.function, entry, list(point), opt),
                      opt, entry)
        flat = _flat(rec)
        del flat["function"]
        if header is None:
            header = list(flat)
            rows.append(header)
        rows.append(list(flat.values()))
    _emit(_csv_text(rows), ns.out)
    return EXIT_OK


def cmd_verify(ns) -> int:
    names = list(_verify.SUITES) if ns.suite == "all" else [ns.suite]
    for name in names:
        if name not in _verify.SUITES:
            raise DomainError(f"unknown suite {name!r}; known: all, {', '.join(_verify.SUITES)}")
    lines, ok = _verify.report(names, ns.seed)
    failed = sum(1 for line in lines if line.startswith("FAIL"))
    lines.append(f"{'OK' if ok else 'FAILED'} {len(lines) - failed}/{len(lines)} checks passed")
    _emit("\n".join(lines) + "\n", ns.out)
    return EXIT_OK if ok else EXIT_FAILED


def _allow_negative_literals(parser: argparse.ArgumentParser):
    # let "-1+2eps" through as a positional instead of an unknown option
    if hasattr(parser, "_negative_number_matcher"):
        parser._negative_number_matcher = re.compile(r"^-(?:[0-9]|\.[0-9])")


_COMMANDS = ("eval", "table", "verify")


def build_parsers() -> dict[str, argparse.ArgumentParser]:
    """One parser per subcommand; options may appear before or after positionals."""

    def common(p):
        p.add_argument("--num", help="comma-separated numerator parameters (pfq family)")
        p.add_argument("--den", help="comma-separated denominator parameters (pfq family)")
        p.add_argument("--tol", type=float, default=DEFAULT_TOL)
        p.add_argument("--max-terms", type=int, default=DEFAULT_MAX_TERMS)
        p.add_argument("--seed", type=int, default=0, help="accepted for uniformity; unused")
        p.add_argument("--out", help="write to this file instead of stdout")
        _allow_negative_literals(p)

    p_eval = argparse.ArgumentParser(prog="dualhyp eval", description="evaluate one function")
    p_eval.add_argument("function")
    p_eval.add_argument("args", nargs="*")
    p_eval.add_argument("--format", choices=("json", "csv"), default="json")
    common(p_eval)
    p_eval.set_defaults(handler=cmd_eval)

    p_table = argparse.ArgumentParser(prog="dualhyp table",
                                      description="evaluate over a grid and write CSV")
    p_table.add_argument("function")
    p_table.add_argument("axes", nargs="+", help="literal or start:stop:count[+Deps]")
    common(p_table)
    p_table.set_defaults(handler=cmd_table)

    p_verify = argparse.ArgumentParser(prog="dualhyp verify",
                                       description="run verification suites")
    p_verify.add_argument("suite", help="suite name or 'all'")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--out")
    p_verify.set_defaults(handler=cmd_verify)
    return {"eval": p_eval, "table": p_table, "verify": p_verify}


def _usage() -> str:
    return f"usage: dualhyp {{{','.join(_COMMANDS)}}} ...\n"


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv:
        sys.stderr.write(_usage())
        return EXIT_INPUT
    if argv[0] in ("-h", "--help"):
        sys.stdout.write(_usage() + __doc__)
        return EXIT_OK
    if argv[0] not in _COMMANDS:
        sys.stderr.write(_usage() + f"dualhyp: error: unknown command {argv[0]!r}\n")
        return EXIT_INPUT
    parser = build_parsers()[argv[0]]
    try:
        ns = parser.parse_intermixed_args(argv[1:])
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return ns.handler(ns)
    except NoConvergence as exc:
        print(f"dualhyp: no convergence: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except (DualHypError, ArithmeticError, ValueError, OSError) as exc:
        print(f"dualhyp: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

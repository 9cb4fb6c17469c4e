"""Command-line interface.

Commands: ``hankel``, ``minors``, ``riordan``, ``jfrac``, ``spine`` and
``verify``.  Exit status is 0 on success, 1 when a verification fails, 2 on
usage errors and 3 on precision or degeneracy errors.
"""

from __future__ import annotations

import argparse
import ast
import configparser
import csv
import io
import json
import operator
import sys
import time
from fractions import Fraction
from typing import Dict, List, Sequence

from .catalan import SequenceSpec, read_bfile, residual_seq, spine_bands, spine_toeplitz, finite_hankel, conjugated_hankel
from .exact import A, B, InexactDivision, parse_scalar, render
from .hankel import InsufficientTerms, hankel_transform, pentadiagonal, principal_minors, hankel_matrix
from .identities import UnknownIdentity
from .jfrac import InsufficientPrecision, ZeroLeadingTerm, jfraction_extract
from .matrix import Matrix
from .riordan import NotRiordan, RiordanPair, ballot_m, ballot_m_tilde, pascal
from .series import OrderMismatch, PowerSeries
from .suites import SUITES

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECISION = 0, 1, 2, 3

DEFAULTS = {"n_max": 6, "m_max": 5, "format": "text", "family": "catalan", "m": 0, "workers": 1}


class UsageError(Exception):
    pass


class PrecisionError(Exception):
    pass


# -- expressions ------------------------------------------------------------------

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv}


def parse_series(text: str, order: int, a=A, b=B) -> PowerSeries:
    """Evaluate an arithmetic expression in ``x``, ``a``, ``b`` as a power series.

    Only numbers, the three names, ``+ - * /``, parentheses and integer
    powers are accepted.
    """
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc.msg}") from None
    names = {"x": PowerSeries.x(order), "a": a, "b": b}

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name) and node.id in names:
            return names[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Pow):
            exponent = ev(node.right)
            if not isinstance(exponent, int):
                raise UsageError("exponents must be integer literals")
            return ev(node.left) ** exponent
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            left, right = ev(node.left), ev(node.right)
            if isinstance(left, int) and isinstance(right, int) and isinstance(node.op, ast.Div):
                return Fraction(left, right)
            return _BINOPS[type(node.op)](left, right)
        raise UsageError(f"unsupported syntax in {text!r}")

    value = ev(tree)
    if not isinstance(value, PowerSeries):
        value = PowerSeries.polynomial([value], order)
    return value


NAMED_PAIRS = {"pascal": pascal, "M": ballot_m, "Mtilde": ballot_m_tilde}


def build_pair(name, g, f, order, a, b) -> RiordanPair:
    if name:
        if name not in NAMED_PAIRS:
            raise UsageError(f"unknown pair {name!r}; expected one of {', '.join(NAMED_PAIRS)}")
        return NAMED_PAIRS[name](order)
    if not (g and f):
        raise UsageError("give --pair NAME or both --g and --f")
    return RiordanPair(parse_series(g, order, a, b), parse_series(f, order, a, b))


# -- output --------------------------------------------------------------------------


def _text(x):
    if isinstance(x, (list, tuple)):
        return [_text(v) for v in x]
    if isinstance(x, dict):
        return {k: _text(v) for k, v in x.items()}
    if isinstance(x, (bool, str)) or x is None:
        return x
    return render(x)


# small counts stay JSON numbers; every computed value becomes a string
_COUNT_KEYS = {"depth", "n", "k", "m", "r", "size", "n_cases"}


def emit(payload: dict, rows: List[Sequence], header: Sequence[str], text: str, fmt: str) -> str:
    if fmt == "json":
        doc = {k: v if k in _COUNT_KEYS and isinstance(v, int) else _text(v) for k, v in payload.items()}
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([_text(v) if not isinstance(v, bool) else str(v).lower() for v in r])
        return buf.getvalue()
    return text if text.endswith("\n") else text + "\n"


# -- configuration -------------------------------------------------------------------

_INT_KEYS = {"m", "count", "n_max", "m_max", "depth", "r", "k", "n", "workers", "seed"}
_BOOL_KEYS = {"normalize", "symbolic"}
_STR_KEYS = {"family", "a", "b", "format", "out", "bfile", "name", "pair", "g", "f", "g2", "f2", "h", "matrix", "penta"}


def read_config(path: str) -> Dict[str, object]:
    """Key-value file mirroring the flags (``n-max = 4``); an optional section header is ignored."""
    parser = configparser.ConfigParser()
    try:
        with open(path) as fh:
            content = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}") from None
    if not content.lstrip().startswith("["):
        content = "[run]\n" + content
    parser.read_string(content)
    out: Dict[str, object] = {}
    for section in parser.sections():
        for key, value in parser.items(section):
            dest = key.replace("-", "_")
            if dest in _INT_KEYS:
                out[dest] = int(value)
            elif dest in _BOOL_KEYS:
                out[dest] = parser.getboolean(section, key)
            elif dest in _STR_KEYS:
                out[dest] = value
            else:
                raise UsageError(f"unknown config key {key!r}")
    return out


def resolve(args: argparse.Namespace) -> argparse.Namespace:
    """Fill unset flags from the config file, then from defaults.

    ``n_max_given`` and ``m_given`` keep what was set before defaults apply.
    """
    if args.config:
        for key, value in read_config(args.config).items():
            if getattr(args, key, None) is None:
                setattr(args, key, value)
    args.n_max_given, args.m_given = args.n_max, args.m
    for key, value in DEFAULTS.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)
    if args.format not in ("text", "csv", "json"):
        raise UsageError(f"unknown format {args.format!r}")
    return args


def scalar(text, symbolic_default, fallback):
    if text is None:
        return symbolic_default if symbolic_default is not None else fallback
    try:
        return parse_scalar(str(text))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a scalar: {text!r}") from None


def sequence_spec(args) -> SequenceSpec:
    if args.bfile:
        return read_bfile(args.bfile)
    a = scalar(args.a, A if args.symbolic else None, 1)
    b = scalar(args.b, B if args.symbolic else None, 1)
    try:
        return SequenceSpec(args.family, args.m, a, b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- commands ----------------------------------------------------------------------------


def cmd_hankel(args) -> tuple:
    count = args.count if args.count is not None else args.n_max + 1
    if count < 1:
        raise UsageError("--count must be positive")
    spec = sequence_spec(args)
    values = hankel_transform(_terms(spec, 2 * count - 2), count - 1)
    payload = {"command": "hankel", "family": spec.family, "m": spec.m, "a": spec.a, "b": spec.b, "values": values}
    text = ",".join(render(v) for v in values)
    return payload, [(n, v) for n, v in enumerate(values)], ("n", "value"), text, EXIT_OK


def _terms(spec: SequenceSpec, n_max: int) -> list:
    try:
        return spec.terms(n_max)
    except ValueError as exc:
        raise PrecisionError(str(exc)) from None


def _parse_matrix(text: str) -> Matrix:
    rows = [[_scalar_expr(c) for c in row.split(",")] for row in text.split(";")]
    if any(len(r) != len(rows) for r in rows):
        raise UsageError("--matrix must be square (rows separated by ';', entries by ',')")
    return Matrix(rows)


def _scalar_expr(text: str):
    value = parse_series(text, 0)
    return value[0]


def cmd_minors(args) -> tuple:
    if args.matrix:
        M = _parse_matrix(args.matrix)
        source = "matrix"
    elif args.penta:
        parts = [_scalar_expr(p) for p in args.penta.split(",")]
        if len(parts) not in (3, 4):
            raise UsageError("--penta takes DIAG,BAND1,BAND2[,CORNER]")
        size = args.count if args.count is not None else args.n_max + 1
        M = pentadiagonal(*parts[:3], size, corner_shift=parts[3] if len(parts) == 4 else 0)
        source = "pentadiagonal"
    else:
        size = args.count if args.count is not None else args.n_max + 1
        spec = sequence_spec(args)
        M = hankel_matrix(_terms(spec, 2 * size - 2), size - 1)
        source = "hankel"
    minors = principal_minors(M)
    payload = {"command": "minors", "source": source, "matrix": M.to_lists(), "minors": minors}
    text = M.render() + "\nminors: " + ",".join(render(v) for v in minors)
    return payload, [(k + 1, v) for k, v in enumerate(minors)], ("size", "minor"), text, EXIT_OK


def _matrix_output(name: str, M: Matrix, extra: dict) -> tuple:
    payload = {"command": f"riordan {name}", **extra, "matrix": M.to_lists()}
    rows = [(n, k, M[n, k]) for n in range(M.shape[0]) for k in range(M.shape[1]) if k <= n]
    return payload, rows, ("n", "k", "value"), M.render(), EXIT_OK


def cmd_riordan(args) -> tuple:
    size = args.count if args.count is not None else args.n_max + 1
    a = scalar(args.a, A, A)
    b = scalar(args.b, B, B)
    op = args.op
    if op == "entry":
        if args.n is None or args.k is None:
            raise UsageError("riordan entry needs --n and --k")
        order = max(args.n, args.k, 1)
        R = build_pair(args.pair, args.g, args.f, order, a, b)
        value = R.entry(args.n, args.k)
        payload = {"command": "riordan entry", "n": args.n, "k": args.k, "value": value}
        return payload, [(args.n, args.k, value)], ("n", "k", "value"), render(value), EXIT_OK
    order = max(size - 1, 1)
    R = build_pair(args.pair, args.g, args.f, order, a, b)
    if op == "matrix":
        return _matrix_output("matrix", R.matrix(size), {})
    if op == "inv":
        return _matrix_output("inv", R.inverse().matrix(size), {})
    if op == "mul":
        S = build_pair(args.pair2, args.g2, args.f2, order, a, b)
        return _matrix_output("mul", (R * S).matrix(size), {})
    if op == "apply":
        if not args.h:
            raise UsageError("riordan apply needs --h")
        out = R.apply(parse_series(args.h, order, a, b)).coeffs[:size]
        payload = {"command": "riordan apply", "values": list(out)}
        return payload, list(enumerate(out)), ("n", "value"), ",".join(render(v) for v in out), EXIT_OK
    raise UsageError(f"unknown riordan operation {op!r}")


def cmd_jfrac(args) -> tuple:
    depth = args.depth if args.depth is not None else 4
    spec = sequence_spec(args)
    seq = _terms(spec, 2 * depth)
    try:
        jf = jfraction_extract(seq, depth)
    except InexactDivision:
        raise PrecisionError("J-fractions over Z[a, b] need a fraction field; use numeric --a/--b") from None
    payload = {"command": "jfrac", "depth": depth, "alphas": list(jf.alphas), "betas": list(jf.betas),
               "terminated": jf.terminated}
    if not args.normalize:
        payload["scale"] = jf.scale
    rows = [("alpha", i, v) for i, v in enumerate(jf.alphas)] + [("beta", i + 1, v) for i, v in enumerate(jf.betas)]
    lines = ["alphas: " + ",".join(render(v) for v in jf.alphas), "betas: " + ",".join(render(v) for v in jf.betas)]
    if not args.normalize:
        lines.insert(0, f"scale: {render(jf.scale)}")
    if jf.terminated:
        lines.append("terminated: a zero beta stopped the expansion")
    return payload, rows, ("kind", "index", "value"), "\n".join(lines), EXIT_OK


def cmd_spine(args) -> tuple:
    r = args.r if args.r is not None else 3
    if r < 1:
        raise UsageError("--r must be at least 1")
    size = args.count if args.count is not None else r + 4
    a = scalar(args.a, A, A)
    b = scalar(args.b, B, B)
    bands = spine_bands(r, a, b)
    residual = residual_seq(r, a, b)
    conj, _ = conjugated_hankel(r, size, a, b)
    holds = spine_toeplitz(r, size, a, b) - conj == finite_hankel(residual, size)
    payload = {"command": "spine", "r": r, "size": size, "bands": bands, "residual": residual, "decomposition": holds}
    rows = [("band", d, v) for d, v in enumerate(bands)] + [("residual", n, v) for n, v in enumerate(residual)]
    text = "\n".join([
        "bands: " + ", ".join(render(v) for v in bands),
        "residual: " + (", ".join(render(v) for v in residual) or "(none)"),
        f"spine - conjugate = Hankel(residual) on {size}x{size}: {'pass' if holds else 'FAIL'}",
    ])
    return payload, rows, ("kind", "index", "value"), text, EXIT_OK if holds else EXIT_FAIL


def cmd_verify(args) -> tuple:
    suite = args.suite
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    opts = {"m_max": args.m_max, "n_max": args.n_max, "workers": args.workers, "name": args.name,
            "r": args.r, "k": args.k, "n": args.n, "seed": args.seed, "count": args.count}
    if suite == "identity":
        # identity defaults live in the registry; only pass what was given
        opts["n_max"] = args.n_max_given
        opts["m"] = args.m_given
        opts["a"] = scalar(args.a, None, None)
        opts["b"] = scalar(args.b, None, None)
    elif suite == "ratio":
        opts["m"] = args.m_given
        opts["a"] = scalar(args.a, None, None)
        opts["b"] = scalar(args.b, None, None)
    try:
        reports = SUITES[suite](opts)
    except UnknownIdentity as exc:
        raise UsageError(exc.args[0]) from None
    passed = all(r.passed for r in reports)
    n_cases = sum(len(r) for r in reports)
    payload = {"command": " ".join(["verify", suite] + args.echo), "verdict": "pass" if passed else "fail",
               "n_cases": n_cases, "reports": [r.to_dict() for r in reports]}
    rows = []
    for r in reports:
        for c in r.cases:
            d = c.to_dict()
            rows.append((r.name, c.label, c.passed, d.get("expected", ""), d.get("actual", ""), c.detail))
    lines = []
    for r in reports:
        lines.append(f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {len(r)} cases")
        show = r.cases if r.name == "readings" else [c for c in r.cases if not c.passed]
        for c in show:
            line = f"    {'pass' if c.passed else 'FAIL'}  {c.label}"
            if c.detail:
                line += f"  ({c.detail})"
            if not c.passed and c.expected is not None:
                line += f"\n        expected {_text(c.expected)}\n        actual   {_text(c.actual)}"
            lines.append(line)
        lines.extend(f"    note: {n}" for n in r.notes)
    lines.append(f"verdict: {'pass' if passed else 'fail'} ({n_cases} cases)")
    header = ("report", "case", "passed", "expected", "actual", "detail")
    return payload, rows, header, "\n".join(lines), EXIT_OK if passed else EXIT_FAIL


COMMANDS = {"hankel": cmd_hankel, "minors": cmd_minors, "riordan": cmd_riordan, "jfrac": cmd_jfrac,
            "spine": cmd_spine, "verify": cmd_verify}


# -- parser ------------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--family", choices=("catalan", "shifted", "combo"))
    common.add_argument("--m", type=int, help="Catalan shift")
    common.add_argument("--a", help="coefficient of C(n+m): integer, rational, or 'a'")
    common.add_argument("--b", help="coefficient of C(n+m+1): integer, rational, or 'b'")
    common.add_argument("--count", type=int, help="number of values")
    common.add_argument("--n-max", type=int)
    common.add_argument("--m-max", type=int)
    common.add_argument("--depth", type=int)
    common.add_argument("--normalize", action="store_true", default=None)
    common.add_argument("--symbolic", action="store_true", default=None, help="use symbols a, b when not given")
    common.add_argument("--format", choices=("text", "csv", "json"))
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--config", metavar="PATH")
    common.add_argument("--bfile", metavar="PATH")
    common.add_argument("--workers", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--r", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--n", type=int)

    parser = _Parser(prog="catalan-hankel", description="Exact Hankel transforms of Catalan combinations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("hankel", parents=[common], help="Hankel transform of a sequence family")
    p = sub.add_parser("minors", parents=[common], help="principal minors")
    p.add_argument("--matrix", help="rows separated by ';', entries by ','")
    p.add_argument("--penta", help="DIAG,BAND1,BAND2[,CORNER] pentadiagonal matrix")
    p = sub.add_parser("riordan", parents=[common], help="Riordan array operations")
    p.add_argument("op", choices=("entry", "matrix", "mul", "inv", "apply"))
    p.add_argument("--pair", help="named pair: pascal, M, Mtilde")
    p.add_argument("--g")
    p.add_argument("--f")
    p.add_argument("--pair2")
    p.add_argument("--g2")
    p.add_argument("--f2")
    p.add_argument("--h", help="series for 'apply'")
    sub.add_parser("jfrac", parents=[common], help="J-fraction coefficients")
    sub.add_parser("spine", parents=[common], help="spine bands and residual for a shift")
    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", help=", ".join(SUITES))
    p.add_argument("--name", help="identity name (suite 'identity')")
    return parser


def _echo(argv: Sequence[str]) -> List[str]:
    """Flags after the suite name, minus those that only affect where output goes."""
    out, skip = [], False
    for tok in argv[2:]:
        if skip:
            skip = False
            continue
        if tok in ("--out", "--format", "--config"):
            skip = True
            continue
        out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        args.echo = _echo(argv)
        for key in ("matrix", "penta", "op", "pair", "g", "f", "pair2", "g2", "f2", "h", "suite", "name"):
            if not hasattr(args, key):
                setattr(args, key, None)
        resolve(args)
        payload, rows, header, text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PrecisionError, InsufficientPrecision, InsufficientTerms, ZeroLeadingTerm) as exc:
        print(f"precision error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (NotRiordan, OrderMismatch, ZeroDivisionError, InexactDivision) as exc:
        print(f"degenerate input: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = emit(payload, rows, header, text, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    print(f"elapsed {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

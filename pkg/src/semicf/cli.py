"""Command-line front door: JSON documents on stdin/stdout, exact end to end.

Document format:

    {"b0": "<rational>", "terms": [{"a": 1, "b": "<rational>"}, ...]}

where <rational> matches `[-]digits[/digits]` with a nonzero denominator.
Rationals are serialized as strings, never floats, so certificates stay
exact.  Output is byte-stable for fixed inputs: canonical reduced rationals,
fixed field order, compact separators.

Exit codes: 0 success, 1 invariant failure or invalid input (details in the
stdout document), 2 usage error, 3 step budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any, List, Optional, Tuple, Union

from . import core, oracle, tails
from .core import SemiRegularCF, Term, validate
from .errors import (
    BudgetExhausted,
    CFError,
    DenominatorBelowOne,
    IdentityViolation,
    InsufficientTerms,
    ParseError,
)
from .expand import ExpansionAlgo, expand

_RATIONAL_RE = re.compile(r"^-?[0-9]+(/[0-9]+)?$")

#: Tail-based checks are quadratic in the horizon; `check` caps them here.
CHECK_TAIL_HORIZON = 30


def _parse_rational(value: Any, where: str) -> Fraction:
    if not isinstance(value, str) or not _RATIONAL_RE.match(value):
        raise ParseError(f"{where}: expected a rational string like '7/3', got {value!r}")
    num, _, den = value.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"{where}: zero denominator in {value!r}")
    return Fraction(value)


def parse_cf(text: Union[str, bytes]) -> SemiRegularCF:
    """Strict parse of a CF document; rationals are canonicalized."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    extra = set(doc) - {"b0", "terms"}
    if extra:
        raise ParseError(f"unknown fields: {sorted(extra)}")
    if "b0" not in doc or "terms" not in doc:
        raise ParseError("document needs both 'b0' and 'terms'")
    b0 = _parse_rational(doc["b0"], "b0")
    if not isinstance(doc["terms"], list):
        raise ParseError("terms: expected a list")
    terms = []
    for i, raw in enumerate(doc["terms"]):
        where = f"terms[{i}]"
        if not isinstance(raw, dict) or set(raw) != {"a", "b"}:
            raise ParseError(f"{where}: expected an object with fields 'a' and 'b'")
        a = raw["a"]
        if isinstance(a, bool) or a not in (1, -1):
            raise ParseError(f"{where}.a: must be 1 or -1, got {a!r}")
        b = _parse_rational(raw["b"], f"{where}.b")
        if b <= 0:
            raise ParseError(f"{where}.b: must be positive, got {raw['b']!r}")
        terms.append(Term(a, b))
    return SemiRegularCF(b0, tuple(terms))


def serialize_cf(cf: SemiRegularCF) -> str:
    doc = {
        "b0": str(cf.b0),
        "terms": [{"a": t.a, "b": str(t.b)} for t in cf.terms],
    }
    return json.dumps(doc, separators=(",", ":"))


def _decimal_str(x: Fraction, places: int) -> str:
    scaled = round(x * 10**places)
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def _emit(doc: Any) -> None:
    sys.stdout.write(json.dumps(doc, separators=(",", ":")) + "\n")


def _read_cf(args: argparse.Namespace, horizon: int) -> SemiRegularCF:
    cf = parse_cf(sys.stdin.read())
    if getattr(args, "repeat", False):
        if not cf.terms:
            raise ParseError("--repeat needs at least one term to continue")
        cf = SemiRegularCF.periodic(
            cf.b0, [(t.a, t.b) for t in cf.terms], max(horizon, len(cf))
        )
    return cf


def _require_valid(cf: SemiRegularCF) -> Optional[int]:
    report = validate(cf)
    if not report.valid:
        v = report.first_violation
        _emit(
            {
                "error": "invalid input",
                "first_violation": {"index": v.index, "reason": v.reason},
            }
        )
        return 1
    return None


def _cmd_expand(args: argparse.Namespace) -> int:
    try:
        x = _parse_rational(args.value, "value")
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    cf = expand(x, ExpansionAlgo(args.algo))
    sys.stdout.write(serialize_cf(cf) + "\n")
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    eps = _parse_rational(args.eps, "--eps")
    if eps <= 0:
        sys.stderr.write("error: --eps must be > 0\n")
        return 2
    if args.max_steps < 1:
        sys.stderr.write("error: --max-steps must be >= 1\n")
        return 2
    cf = _read_cf(args, args.max_steps + 1)
    bad = _require_valid(cf)
    if bad:
        return bad
    try:
        result = tails.evaluate(cf, eps, args.max_steps)
    except BudgetExhausted as exc:
        _emit(
            {
                "error": "budget exhausted",
                "max_steps": exc.max_steps,
                "best_bound": str(exc.best_bound),
            }
        )
        return 3
    doc = {
        "approximation": str(result.approximation),
        "certified_error": str(result.certified_error),
        "steps_used": result.steps_used,
        "exact": result.exact,
    }
    if args.decimals is not None:
        doc["decimal"] = _decimal_str(result.approximation, args.decimals)
    _emit(doc)
    return 0


def _cmd_convergents(args: argparse.Namespace) -> int:
    cf = _read_cf(args, args.n)
    bad = _require_valid(cf)
    if bad:
        return bad
    if args.n > len(cf):
        _emit({"error": "insufficient terms", "available": len(cf)})
        return 1
    rows: List[dict] = []
    for s in core.iter_states(cf, args.n):
        row = {
            "n": s.n,
            "p": str(s.p_cur),
            "q": str(s.q_cur),
            "value": str(s.value),
        }
        if args.decimals is not None:
            row["decimal"] = _decimal_str(s.value, args.decimals)
        rows.append(row)
    _emit({"convergents": rows})
    return 0


def _cmd_certify(args: argparse.Namespace) -> int:
    cf = _read_cf(args, args.n + 1)
    bad = _require_valid(cf)
    if bad:
        return bad
    try:
        cert = tails.certify(cf, args.n)
    except InsufficientTerms:
        _emit({"error": "insufficient terms", "available": len(cf)})
        return 1
    _emit(
        {
            "n": cert.n,
            "anchor": cert.anchor,
            "regime": cert.regime,
            "bound": str(cert.bound),
        }
    )
    return 0


def _check_lemma1(cf: SemiRegularCF) -> Optional[int]:
    for s in core.iter_states(cf):
        if s.q_cur < 1:
            return s.n
        if s.n < len(cf) and core.gap(s, cf.a(s.n + 1)) < 1:
            return s.n
    return None


def _check_determinant(cf: SemiRegularCF) -> Optional[int]:
    for s in core.iter_states(cf):
        if s.n < 1:
            continue
        try:
            core.determinant_check(s)
        except IdentityViolation:
            return s.n
    return None


def _check_series(cf: SemiRegularCF) -> Optional[int]:
    for n in range(len(cf) + 1):
        c = core.convergent(cf, n)
        if core.series_partial_sum(cf, n) != c or oracle.fold_eval(cf, n) != c:
            return n
    return None


def _check_tail_bounds(cf: SemiRegularCF, horizon: int) -> Optional[int]:
    for end in range(1, horizon + 1):
        try:
            xs = tails._tail_sweep(cf, end)
        except DenominatorBelowOne:
            return end
        for m, x in enumerate(xs):
            a_next = cf.a(m + 1)
            if a_next == 1 and not (0 < x <= 1):
                return end
            if a_next == -1 and not (-1 <= x < 0):
                return end
    return None


def _check_shift(cf: SemiRegularCF, horizon: int) -> Optional[int]:
    for end in range(1, horizon + 1):
        for n in range(end):
            try:
                tails.shift_check(cf, n, end - n)
            except IdentityViolation:
                return end
    return None


def _check_error_bounds(cf: SemiRegularCF, horizon: int) -> Optional[int]:
    for end in range(1, horizon + 1):
        for n in range(end):
            try:
                bound = tails.error_bound(cf, n, end - n)
            except IdentityViolation:
                return end
            if n + 1 <= len(cf) and bound > tails.uniform_step_bound(cf, n):
                return end
    return None


def _cmd_check(args: argparse.Namespace) -> int:
    cf = _read_cf(args, 0)
    report = validate(cf)
    if not report.valid:
        v = report.first_violation
        _emit(
            {
                "valid": False,
                "first_violation": {"index": v.index, "reason": v.reason},
                "checks": [],
            }
        )
        return 1
    horizon = min(len(cf), CHECK_TAIL_HORIZON)
    results = [
        ("lemma1", _check_lemma1(cf)),
        ("determinant", _check_determinant(cf)),
        ("series_equivalence", _check_series(cf)),
        ("tail_bounds", _check_tail_bounds(cf, horizon)),
        ("shift_identity", _check_shift(cf, horizon)),
        ("error_bounds", _check_error_bounds(cf, horizon)),
    ]
    checks = [
        {"name": name, "pass": first is None, "first_failure": first}
        for name, first in results
    ]
    ok = all(c["pass"] for c in checks)
    _emit({"valid": True, "checks": checks})
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semicf",
        description="Exact semi-regular continued fraction toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand a rational into a continued fraction")
    p.add_argument("--algo", choices=[a.value for a in ExpansionAlgo], required=True)
    p.add_argument("value", help="rational to expand, e.g. 7/3")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("eval", help="evaluate stdin document to certified accuracy")
    p.add_argument("--eps", required=True, help="target accuracy as a rational")
    p.add_argument("--max-steps", type=int, default=tails.DEFAULT_MAX_STEPS)
    p.add_argument("--repeat", action="store_true",
                   help="treat the term list as a repeating period")
    p.add_argument("--decimals", type=int, default=None,
                   help="also print a decimal rendering (display only)")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("convergents", help="list convergents 0..N")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--repeat", action="store_true")
    p.add_argument("--decimals", type=int, default=None)
    p.set_defaults(func=_cmd_convergents)

    p = sub.add_parser("certify", help="error certificate at index N")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--repeat", action="store_true")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("check", help="run all exact identity checks on stdin")
    p.set_defaults(func=_cmd_check)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        _emit({"error": "parse error", "detail": str(exc)})
        return 1
    except CFError as exc:
        _emit({"error": type(exc).__name__, "detail": str(exc)})
        return 1


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()

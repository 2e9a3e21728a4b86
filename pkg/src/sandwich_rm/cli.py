"""Command-line front end.

    sandwich-rm field info --q 3 --n 4
    sandwich-rm code params --q 3 --n 4 --r 5 --I 1
    sandwich-rm code dual|mindist|minvecs ...
    sandwich-rm verify table2
    sandwich-rm export --what generator --q 2 --n 4 --r 2 --I 0

Exit codes: 0 pass, 1 verification mismatch, 2 usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import analysis, verify
from .codes import EXTENDED, PUNCTURED, build_code, dual, to_digits
from .errors import BudgetExceeded, SandwichRMError
from .exponents import exponent_space
from .field import build_field, prime_power

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

CONFIG_KEYS = {
    "q", "p", "l", "n", "modulus", "family", "r", "I", "kind", "format", "budget",
    "threads", "strategy", "weight", "what", "out", "samples", "seed",
}


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if text in ("", "-", "{}"):
        return []
    try:
        return [int(v) for v in text.strip("{}[]").split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_common(p: argparse.ArgumentParser, code: bool = True):
    p.add_argument("--config", help="JSON file whose keys override the flags")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--budget", type=int, default=None, help="node budget for searches")
    p.add_argument("--threads", type=int, default=1, help="accepted; searches run on one core")
    p.add_argument("--q", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--modulus", type=_int_list, help="little-endian coefficients over F_p")
    if code:
        p.add_argument("--family", choices=("sandwich", "rm", "raw"), default=None)
        p.add_argument("--r", type=int)
        p.add_argument("--I", type=_int_list, default=None)
        p.add_argument("--kind", choices=(EXTENDED, PUNCTURED), default=EXTENDED)
        p.add_argument("--strategy", choices=analysis.distance.STRATEGIES, default="auto")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sandwich-rm", description="Sandwiched Reed-Muller code toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    fld = sub.add_parser("field", help="field information")
    fsub = fld.add_subparsers(dest="action", required=True)
    _add_common(fsub.add_parser("info"), code=False)

    code = sub.add_parser("code", help="code operations")
    csub = code.add_subparsers(dest="action", required=True)
    for name in ("params", "dual", "mindist"):
        _add_common(csub.add_parser(name))
    mv = csub.add_parser("minvecs")
    _add_common(mv)
    mv.add_argument("--weight", type=int, default=None, help="list this weight instead of the minimum")

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", choices=verify.SUITES)
    _add_common(ver, code=False)
    ver.add_argument("--samples", type=int, default=None)
    ver.add_argument("--seed", type=int, default=0)

    exp = sub.add_parser("export", help="export matrices, defining sets or minimum vectors")
    _add_common(exp)
    exp.add_argument("--what", choices=("generator", "parity", "defset", "minvectors"), required=True)
    exp.add_argument("--out", default=None, help="output file (default stdout)")
    return ap


def _apply_config(args):
    if not getattr(args, "config", None):
        return args
    try:
        with open(args.config) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config: {exc}") from None
    if not isinstance(cfg, dict):
        raise UsageError("config must be a JSON object")
    unknown = set(cfg) - CONFIG_KEYS
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
    for key, val in cfg.items():
        setattr(args, key, val)
    return args


def _field(args):
    n = args.n
    if n is None:
        raise UsageError("--n is required")
    if args.q is not None:
        try:
            p, l = prime_power(args.q)
        except SandwichRMError as exc:
            raise UsageError(str(exc)) from None
    elif args.p is not None:
        p, l = args.p, args.l or 1
    else:
        raise UsageError("give --q or --p/--l")
    return build_field(p, l, n, args.modulus)


def _code(args):
    ctx = _field(args)
    family = args.family or ("sandwich" if args.I is not None else "rm")
    if family == "raw":
        raise UsageError("raw codes are not available from the command line")
    if args.r is None:
        raise UsageError("--r is required")
    I = None if family == "rm" else (args.I or [])
    return build_code(ctx, family, args.kind, args.r, I)


def _emit(args, payload, text: str):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, default=_jsonable))
    else:
        print(text)


def _jsonable(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not serializable: {type(obj).__name__}")


def _formula_dimension(c) -> int:
    E = exponent_space(c.q, c.n)
    if c.family == "sandwich" and 0 <= c.r < E.top:
        return E.dim_sandwich(c.r, c.I)
    if c.family == "rm":
        return E.dim_rm(c.r)
    return c.dimension


# ---------------------------------------------------------------------------
# commands


def cmd_field_info(args) -> int:
    ctx = _field(args)
    info = ctx.info()
    _emit(args, info, f"{info['descriptor']}  q={info['q']} n={info['n']} N={info['N']} modulus={info['modulus']}")
    return EXIT_OK


def cmd_params(args) -> int:
    c = _code(args)
    k_formula, k_rank = _formula_dimension(c), c.rank_dimension
    payload = {"code": c.label(), "length": c.length, "dimension": k_formula, "rank": k_rank}
    status = EXIT_OK if k_formula == k_rank else EXIT_MISMATCH
    try:
        rep = analysis.min_distance(c, args.strategy, args.budget, args.threads)
    except BudgetExceeded as exc:
        rep = exc.report
        status = EXIT_BUDGET if status == EXIT_OK else status
    payload["distance"] = None if rep is None else rep.to_dict()
    d = "?" if rep is None or rep.exact is None else rep.exact
    text = f"{c.label()}: [{c.length},{k_formula},{d}]"
    if k_formula != k_rank:
        text += f"  DIMENSION MISMATCH (rank {k_rank})"
    if rep is not None and rep.exact is None:
        text += f"  bounds {rep.lower_bound}..{rep.upper_bound}"
    _emit(args, payload, text)
    return status


def cmd_dual(args) -> int:
    c = _code(args)
    d = dual(c, verify=True)
    payload = {"code": c.descriptor(), "dual": d.descriptor(), "dimensions": [c.dimension, d.dimension]}
    _emit(args, payload, f"{c.label()}^perp = {d.label()}  dims {c.dimension} + {d.dimension} = {c.length}")
    return EXIT_OK


def cmd_mindist(args) -> int:
    c = _code(args)
    try:
        rep = analysis.min_distance(c, args.strategy, args.budget, args.threads)
        status = EXIT_OK
    except BudgetExceeded as exc:
        rep, status = exc.report, EXIT_BUDGET
    if rep is None:
        _emit(args, {"code": c.label(), "exact": None}, f"{c.label()}: budget exhausted")
        return status
    text = (
        f"{c.label()}: d = {rep.exact if rep.exact is not None else '?'}"
        f"  (lower {rep.lower_bound} via {rep.lower_method}, upper {rep.upper_bound}, {rep.strategy}, {rep.nodes} nodes)"
    )
    _emit(args, rep.to_dict(), text)
    return status


def _minvecs(args, c):
    w = getattr(args, "weight", None)
    if w is None:
        w = analysis.min_distance(c, "auto", args.budget).exact
    return w, analysis.min_weight_codewords(c, w, budget=args.budget)


def cmd_minvecs(args) -> int:
    c = _code(args)
    try:
        w, words = _minvecs(args, c)
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    pred = analysis.predicted_min_vectors(c, with_words=True, check=False)
    key = "extended_set" if c.kind == EXTENDED else "punctured_set"
    predicted = {x.tobytes() for x in pred.get(key, [])}
    found = {x.tobytes() for x in words}
    payload = {
        "code": c.label(),
        "weight": w,
        "count": len(words),
        "case": pred["case"],
        "predicted_count": len(predicted) if pred["case"] != "none" else None,
        "matches_prediction": (found == predicted) if pred["case"] != "none" else None,
        "words": [to_digits(x) for x in words],
    }
    if args.format == "csv":
        print("\n".join(payload["words"]))
    else:
        text = f"{c.label()}: {len(words)} codewords of weight {w}; case {pred['case']}"
        if pred["case"] != "none":
            text += f"; matches prediction: {payload['matches_prediction']}"
        _emit(args, payload, text)
    if pred["case"] != "none" and found != predicted:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args) -> int:
    kwargs = {"budget": args.budget}
    if getattr(args, "samples", None) is not None:
        kwargs["samples"] = args.samples
    kwargs["seed"] = getattr(args, "seed", 0)
    try:
        checks = verify.run_suite(args.suite, **kwargs)
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    passed = all(ch["ok"] for ch in checks)
    payload = {"suite": args.suite, "passed": passed, "checks": checks}
    lines = [f"{'PASS' if ch['ok'] else 'FAIL'}  {ch['name']}: expected {ch['expected']}, computed {ch['computed']}" for ch in checks]
    lines.append(f"{args.suite}: {sum(ch['ok'] for ch in checks)}/{len(checks)} checks passed")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if passed else EXIT_MISMATCH


def _matrix_csv(M) -> str:
    return "\n".join(",".join(str(int(v)) for v in row) for row in M)


def cmd_export(args) -> int:
    c = _code(args)
    if args.what == "generator":
        body = _matrix_csv(c.generator_matrix)
    elif args.what == "parity":
        body = _matrix_csv(c.parity_matrix)
    elif args.what == "defset":
        body = json.dumps(list(c.defining_set.elements))
    else:
        try:
            _, words = _minvecs(args, c)
        except BudgetExceeded as exc:
            print(f"budget exhausted: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        body = "\n".join(to_digits(x) for x in words)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body + "\n")
    else:
        print(body)
    return EXIT_OK


COMMANDS = {
    ("field", "info"): cmd_field_info,
    ("code", "params"): cmd_params,
    ("code", "dual"): cmd_dual,
    ("code", "mindist"): cmd_mindist,
    ("code", "minvecs"): cmd_minvecs,
    ("verify", None): cmd_verify,
    ("export", None): cmd_export,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    handler = COMMANDS[(args.command, getattr(args, "action", None))]
    try:
        args = _apply_config(args)
        return handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except SandwichRMError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end (``foxh``).

Exit codes: 0 success, 1 a verified property failed, 2 bad input (parse
error, missing file, unknown theorem), 3 evaluation or constraint error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import warnings

from . import __version__
from .errors import FoxHError, PreconditionError, SpecError, UnknownTheoremError
from .evaluate import evaluate
from .foxwright import classify, eval_fw, mittag_leffler
from .spec import (
    FoxWrightSpec,
    HFunctionSpec,
    convergence_params,
    from_fox_wright,
    invert_argument,
    load_spec,
    reduce_matching_pair,
    scale_argument,
    shift_power,
)
from .theorems import get_theorem, list_theorems, run_theorem_suite
from .transforms import hankel_of_h, laplace_of_h

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_EVAL = 0, 1, 2, 3


class InputError(Exception):
    """Raised for user input problems that map to exit code 2."""


def _num(x) -> str:
    if x is None:
        return "None"
    if isinstance(x, bool):
        return str(x)
    if isinstance(x, int):
        return str(x)
    return f"{x:.10g}"


def _emit(args, rows: dict, doc: dict | None = None):
    text = json.dumps(doc if doc is not None else rows, sort_keys=True, indent=2) if args.json else "\n".join(
        f"{k}: {_num(v) if not isinstance(v, str) else v}" for k, v in rows.items()
    )
    if getattr(args, "out", None) and args.command != "verify":
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)


def _load(args):
    if not args.spec:
        raise InputError("--spec PATH is required")
    try:
        return load_spec(args.spec)
    except FileNotFoundError:
        raise InputError(f"spec file not found: {args.spec}") from None
    except (SpecError, TypeError, ValueError) as exc:
        raise InputError(f"cannot parse spec {args.spec}: {exc}") from None


def _load_h(args) -> HFunctionSpec:
    spec = _load(args)
    if isinstance(spec, FoxWrightSpec):
        return from_fox_wright(spec)
    return spec


def _need_z(args) -> float:
    if args.z is None:
        raise InputError("--z REAL is required")
    return args.z


# ---------------------------------------------------------------------------
# commands


def cmd_eval(args) -> int:
    z = _need_z(args)
    if args.kind == "ml":
        if None in (args.alpha, args.beta, args.gamma):
            raise InputError("eval ml needs --alpha, --beta and --gamma")
        val, info = mittag_leffler(args.alpha, args.beta, args.gamma, z, tol=min(args.tol, 1e-15), full_output=True)
        rows = {"value": val, "method": info["method"], "terms": info["terms"], "tolerance": args.tol}
    elif args.kind == "fw":
        spec = _load(args)
        if not isinstance(spec, FoxWrightSpec):
            raise InputError("eval fw needs a spec with convention 'fox-wright'")
        if any(w <= 0 for _, w in spec.upper + spec.lower):
            raise PreconditionError("positive weights required", "every A and B must be > 0")
        val, info = eval_fw(spec, z, tol=min(args.tol, 1e-15), full_output=True)
        rows = {"value": val, "method": info["method"], "terms": info["terms"], "tolerance": args.tol}
    else:
        spec = _load_h(args)
        val, info = evaluate(spec, z, tol=args.tol, full_output=True)
        rows = {"value": val, "method": info["method"]}
        if info["method"] == "contour":
            rows.update(error=info["error"], nodes=info["nodes"], converged=info["converged"])
        else:
            rows.update(terms=info["terms"], tolerance=args.tol)
    _emit(args, rows)
    return EXIT_OK


def cmd_classify(args) -> int:
    spec = _load(args)
    rep = classify(spec) if isinstance(spec, FoxWrightSpec) else convergence_params(spec)
    rows = rep.as_dict()
    _emit(args, rows)
    return EXIT_OK


def cmd_transform(args) -> int:
    spec = _load_h(args)
    coef = "1"
    arg = "x"
    if args.op == "laplace":
        img = laplace_of_h(spec)
        out, coef, arg = img.spec, "1/x", "1/x"
        value_fn = img
    elif args.op == "hankel":
        if args.rho is None or args.nu is None:
            raise InputError("transform hankel needs --rho and --nu")
        img = hankel_of_h(spec, args.rho, args.nu, args.sigma, args.b)
        out = img.spec
        coef = f"2^({_num(args.rho)}-1) / x^{_num(args.rho)}"
        arg = f"{_num(args.b)} * (2/x)^{_num(args.sigma)}"
        value_fn = img
    elif args.op == "invert":
        out = invert_argument(spec)
        arg = "1/x"
        value_fn = lambda x: evaluate(out, 1.0 / x, tol=args.tol)  # noqa: E731
    elif args.op == "scale":
        out, k = scale_argument(spec, args.k)
        coef, arg = _num(k), f"x^{_num(k)}"
        value_fn = lambda x: k * evaluate(out, x**k, tol=args.tol)  # noqa: E731
    elif args.op == "shift":
        out = shift_power(spec, args.shift)
        coef = f"x^{_num(-args.shift)}"
        value_fn = lambda x: x ** (-args.shift) * evaluate(out, x, tol=args.tol)  # noqa: E731
    else:
        out = reduce_matching_pair(spec)
        value_fn = lambda x: evaluate(out, x, tol=args.tol)  # noqa: E731
    doc = {"spec": out.to_json(), "coefficient": coef, "argument": arg}
    rows = {"m": out.m, "n": out.n, "upper": json.dumps([list(p) for p in out.upper]),
            "lower": json.dumps([list(p) for p in out.lower]), "coefficient": coef, "argument": arg}
    if args.z is not None:
        v = value_fn(args.z)
        doc["value"] = v
        rows["value"] = v
    _emit(args, rows, doc)
    return EXIT_OK


def cmd_verify(args) -> int:
    get_theorem(args.theorem)
    config = {"tol": args.tol}
    rep = run_theorem_suite(args.theorem, samples=args.samples, seed=args.seed, config=config)
    out = args.out or f"{rep.theoremId}-report.json"
    base, _ = os.path.splitext(out)
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(rep.to_json(seed=args.seed, config=config))
    with open(base + ".csv", "w", encoding="utf-8") as fh:
        fh.write(rep.to_csv())
    if args.json:
        print(rep.to_json(seed=args.seed, config=config), end="")
    else:
        for s in rep.samples:
            extra = ""
            if "eta1" in s["info"]:
                extra = f" eta1={_num(s['info']['eta1'])}"
            if "error" in s["info"]:
                extra += f" error={s['info']['error']}"
            print(f"sample {s['index']}: margin={_num(s['margin'])} {'pass' if s['passed'] else 'FAIL'}{extra}")
        print(f"{rep.theoremId}: {'PASS' if rep.passed else 'FAIL'} "
              f"({rep.samplesTested} samples, worst margin {_num(rep.worstMargin)})")
        print(f"report: {out}, {base}.csv")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_list(args) -> int:
    rows = []
    for t in list_theorems():
        rows.append({"id": t.id, "aliases": list(t.aliases), "hypothesis": t.hypothesis, "claim": t.claim})
    if args.json:
        print(json.dumps(rows, indent=2, sort_keys=True))
    else:
        for r in rows:
            alias = f" ({', '.join(r['aliases'])})" if r["aliases"] else ""
            print(f"{r['id']}{alias}: {r['claim']}")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", metavar="PATH", help="spec JSON file")
    common.add_argument("--z", type=float, help="evaluation point")
    common.add_argument("--tol", type=float, default=1e-8, help="target tolerance (default 1e-8)")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--samples", type=int, default=10)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", metavar="PATH", help="output file")

    p = argparse.ArgumentParser(prog="foxh", description="Fox H-function, Fox-Wright and Mittag-Leffler toolkit")
    p.add_argument("--version", action="version", version=f"foxh {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common], help="evaluate a function")
    e.add_argument("kind", choices=["h", "fw", "ml"])
    e.add_argument("--alpha", type=float)
    e.add_argument("--beta", type=float)
    e.add_argument("--gamma", type=float)
    e.set_defaults(func=cmd_eval)

    c = sub.add_parser("classify", parents=[common], help="convergence parameters of a spec")
    c.set_defaults(func=cmd_classify)

    t = sub.add_parser("transform", parents=[common], help="rewrite a spec")
    t.add_argument("op", choices=["laplace", "hankel", "invert", "scale", "shift", "reduce"])
    t.add_argument("--rho", type=float, help="Hankel power")
    t.add_argument("--nu", type=float, help="Bessel order")
    t.add_argument("--sigma", type=float, default=1.0, help="Hankel argument exponent")
    t.add_argument("--b", type=float, default=1.0, help="Hankel argument scale")
    t.add_argument("--k", type=float, default=1.0, help="scale factor")
    t.add_argument("--shift", type=float, default=0.0, help="power shift")
    t.set_defaults(func=cmd_transform)

    v = sub.add_parser("verify", parents=[common], help="run a theorem suite")
    v.add_argument("theorem")
    v.set_defaults(func=cmd_verify)

    ls = sub.add_parser("list-theorems", parents=[common], help="list registered theorems")
    ls.set_defaults(func=cmd_list)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not (args.tol > 0 and math.isfinite(args.tol)):
        print("error: --tol must be positive", file=sys.stderr)
        return EXIT_INPUT
    if args.samples < 1:
        print("error: --samples must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            code = args.func(args)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        return code
    except (InputError, UnknownTheoremError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (FoxHError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

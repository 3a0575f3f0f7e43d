"""Command-line front end.

Subcommands: entropy, curve, surface, maxent, minxent, check.  Problems
(weights, order parameters, constraints, prior, solver overrides) are
read from a JSON file; scalars come in through flags.  All numeric
output is printed with fixed 12 significant digits so identical inputs
produce byte-identical output.

Exit codes: 0 ok, 2 validation error, 3 solver non-convergence (the
best attempt is still printed), 4 infeasible constraints.  Set
LNE_LOG=debug|info|quiet to control diagnostics on standard error.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys

import numpy as np
from scipy.stats import binom

from .numkit import EntropyParams, as_weights
from .entropy import (
    aczel_daroczy,
    kapur,
    lne,
    lne_min_entropy_limit,
    norm_entropy,
    renyi,
    shannon,
    tsallis,
)
from .optimize import (
    ConstraintSet,
    ConvergenceError,
    InfeasibleError,
    SolverConfig,
    solve_maxent,
    solve_minxent,
)
from .checks import run_checks

log = logging.getLogger("lne")

FAMILIES = (
    "shannon",
    "renyi",
    "tsallis",
    "kapur",
    "norm",
    "aczel_daroczy",
    "lne",
    "min_entropy_scaled",
)


class ProblemError(ValueError):
    """Problem-file validation failure; the message names the field."""


def _fmt(v) -> str:
    """Fixed 12-significant-digit decimal, scientific outside [1e-6, 1e12)."""
    v = float(v)
    if v == 0.0:
        return "0.00000000000"
    if not math.isfinite(v):
        return str(v)
    exp = math.floor(math.log10(abs(v)))
    dec = 11 - exp
    if 0 <= dec <= 17:
        return f"{v:.{dec}f}"
    return f"{v:.11e}"


def _err(msg):
    sys.stderr.write(f"error: {msg}\n")


def _write(text, output):
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(output, "w") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# Problem file


def _number(x, field):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise ProblemError(f"{field}: expected a number, got {x!r}")
    return float(x)


def _number_list(x, field):
    if not isinstance(x, list) or not x:
        raise ProblemError(f"{field}: expected a nonempty list of numbers")
    return [_number(v, f"{field}[{i}]") for i, v in enumerate(x)]


_SOLVER_FIELDS = ("tol_residual", "max_iter", "damping", "fd_step", "restarts", "seed")


def load_problem(path):
    """Parse and validate a problem file into plain Python values."""
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise ProblemError(f"cannot read {path}: {e}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ProblemError(f"{path}: line {e.lineno} column {e.colno}: {e.msg}") from e
    if not isinstance(data, dict):
        raise ProblemError("problem file must be a JSON object")
    known = {"weights", "params", "constraints", "prior", "solver"}
    for key in data:
        if key not in known:
            raise ProblemError(f"unknown field {key!r}")

    out = {"alpha": None, "beta": None, "prior": None, "constraints": None, "solver": {}}
    if "weights" not in data:
        raise ProblemError("missing field 'weights'")
    out["weights"] = _number_list(data["weights"], "weights")

    if "params" in data:
        params = data["params"]
        if not isinstance(params, dict):
            raise ProblemError("params: expected an object with alpha and beta")
        for key in params:
            if key not in ("alpha", "beta"):
                raise ProblemError(f"params.{key}: unknown field")
        if "alpha" in params:
            out["alpha"] = _number(params["alpha"], "params.alpha")
        if "beta" in params:
            out["beta"] = _number(params["beta"], "params.beta")

    if "prior" in data:
        out["prior"] = _number_list(data["prior"], "prior")

    if "constraints" in data:
        cons = data["constraints"]
        if not isinstance(cons, list):
            raise ProblemError("constraints: expected a list")
        rows, targets = [], []
        for i, c in enumerate(cons):
            if not isinstance(c, dict) or set(c) != {"g", "G"}:
                raise ProblemError(f"constraints[{i}]: expected an object with fields g and G")
            rows.append(_number_list(c["g"], f"constraints[{i}].g"))
            targets.append(_number(c["G"], f"constraints[{i}].G"))
            if len(rows[-1]) != len(out["weights"]):
                raise ProblemError(
                    f"constraints[{i}].g: length {len(rows[-1])} does not match "
                    f"weights length {len(out['weights'])}"
                )
        out["constraints"] = (rows, targets)

    if "solver" in data:
        sv = data["solver"]
        if not isinstance(sv, dict):
            raise ProblemError("solver: expected an object")
        for key, val in sv.items():
            if key not in _SOLVER_FIELDS:
                raise ProblemError(f"solver.{key}: unknown field")
            out["solver"][key] = _number(val, f"solver.{key}")
    return out


def _resolve_orders(problem, args, need_alpha=True, need_beta=True):
    alpha = args.alpha if args.alpha is not None else problem["alpha"]
    beta = args.beta if args.beta is not None else problem["beta"]
    if need_alpha and alpha is None:
        raise ProblemError("params.alpha: missing (set it in the file or pass --alpha)")
    if need_beta and beta is None:
        raise ProblemError("params.beta: missing (set it in the file or pass --beta)")
    return alpha, beta


def _solver_config(problem, args):
    fields = dict(problem["solver"])
    if args.tol is not None:
        fields["tol_residual"] = args.tol
    if args.seed is not None:
        fields["seed"] = args.seed
    for key in ("max_iter", "restarts", "seed"):
        if key in fields:
            fields[key] = int(fields[key])
    return SolverConfig(**fields)


# ---------------------------------------------------------------------------
# Subcommands


def cmd_entropy(args):
    problem = load_problem(args.input)
    w = as_weights(problem["weights"], "weights")
    family = args.family
    needs = {
        "shannon": (False, False),
        "renyi": (True, False),
        "tsallis": (True, False),
        "kapur": (True, True),
        "norm": (True, True),
        "aczel_daroczy": (False, True),
        "lne": (True, True),
        "min_entropy_scaled": (False, True),
    }[family]
    alpha, beta = _resolve_orders(problem, args, *needs)
    alpha = 1.0 if alpha is None else alpha
    beta = 1.0 if beta is None else beta
    log.info("evaluating %s entropy on %d states", family, w.size)
    if family == "shannon":
        val = shannon(w)
    elif family == "renyi":
        val = renyi(w, alpha)
    elif family == "tsallis":
        val = tsallis(w, alpha)
    elif family == "kapur":
        val = kapur(w, alpha, beta)
    elif family == "norm":
        val = norm_entropy(w, alpha, beta)
    elif family == "aczel_daroczy":
        val = aczel_daroczy(w, beta)
    elif family == "min_entropy_scaled":
        val = lne_min_entropy_limit(w, beta)
    else:
        val = lne(w, EntropyParams(alpha, beta))
    lines = [
        f"family {family}",
        f"alpha {_fmt(alpha)}",
        f"beta {_fmt(beta)}",
        f"value {_fmt(val)}",
    ]
    _write("\n".join(lines) + "\n", args.output)
    return 0


def cmd_curve(args):
    if not (0.0 < args.step <= 0.5):
        raise ProblemError(f"--step must lie in (0, 0.5], got {args.step}")
    if args.alpha is None or not args.betas:
        raise ProblemError("--alpha and --beta are required")
    betas = [EntropyParams(args.alpha, b).beta for b in args.betas]
    k = round(1.0 / args.step)
    log.info("bernoulli sweep: alpha=%s betas=%s grid=%d", args.alpha, betas, k + 1)
    rows = ["p,beta,value"]
    for i in range(k + 1):
        p = i / k
        w = np.array([p, 1.0 - p])
        for b in betas:
            rows.append(f"{_fmt(p)},{_fmt(b)},{_fmt(lne(w, EntropyParams(args.alpha, b)))}")
    _write("\n".join(rows) + "\n", args.output)
    return 0


def cmd_surface(args):
    if args.n is None or args.n < 1:
        raise ProblemError("--n must be a positive integer")
    if args.p is None or not (0.0 <= args.p <= 1.0):
        raise ProblemError("--p must lie in [0, 1]")
    if not args.alphas or not args.betas:
        raise ProblemError("--alpha and --beta grids are required")
    alphas = [EntropyParams(a, 1.0).alpha for a in args.alphas]
    betas = [EntropyParams(1.0, b).beta for b in args.betas]
    w = binom.pmf(np.arange(args.n + 1), args.n, args.p)
    log.info("binomial surface: n=%d p=%s grid=%dx%d", args.n, args.p, len(alphas), len(betas))
    rows = ["alpha,beta,value"]
    for a in alphas:
        for b in betas:
            rows.append(f"{_fmt(a)},{_fmt(b)},{_fmt(lne(w, EntropyParams(a, b)))}")
    _write("\n".join(rows) + "\n", args.output)
    return 0


def _solution_record(sol):
    lines = [
        "p " + " ".join(_fmt(v) for v in sol.p),
        ("lambda " + " ".join(_fmt(v) for v in sol.lambdas)).rstrip(),
        f"Z {_fmt(sol.Z)}",
        f"branch {sol.branch}",
        f"iterations {sol.report.iterations}",
        f"restarts_used {sol.report.restarts_used}",
        ("clamped_states " + " ".join(str(i) for i in sol.report.clamped_states)).rstrip(),
        f"residual_norm {_fmt(sol.report.final_residual_norm)}",
        f"converged {'true' if sol.report.converged else 'false'}",
    ]
    return "\n".join(lines) + "\n"


def _run_solver(args, minxent):
    problem = load_problem(args.input)
    alpha, beta = _resolve_orders(problem, args)
    params = EntropyParams(alpha, beta)
    cfg = _solver_config(problem, args)
    cset = None
    if problem["constraints"] is not None:
        rows, targets = problem["constraints"]
        cset = ConstraintSet(rows, targets)
    log.info(
        "solving %s: n=%d m=%d alpha=%s beta=%s",
        "minxent" if minxent else "maxent",
        len(problem["weights"]),
        0 if cset is None else cset.m,
        alpha,
        beta,
    )
    try:
        if minxent:
            if problem["prior"] is None:
                raise ProblemError("prior: required for minxent")
            if len(problem["prior"]) != len(problem["weights"]):
                raise ProblemError("prior: length does not match weights")
            sol = solve_minxent(np.asarray(problem["prior"]), cset, params, cfg)
        else:
            sol = solve_maxent(len(problem["weights"]), cset, params, cfg)
    except ConvergenceError as e:
        log.info("no convergence: %s", e)
        _write(_solution_record(e.best), args.output)
        _err(str(e))
        return 3
    _write(_solution_record(sol), args.output)
    return 0


def cmd_maxent(args):
    return _run_solver(args, minxent=False)


def cmd_minxent(args):
    return _run_solver(args, minxent=True)


def cmd_check(args):
    seed = 0 if args.seed is None else args.seed
    tol = 1e-10 if args.tol is None else args.tol
    for name, ok, detail in run_checks(seed=seed, tol=tol):
        if not ok:
            _write(f"FAIL {name}: {detail}\n", args.output)
            return 1
        _write(f"ok {name}: {detail}\n", args.output)
    return 0


# ---------------------------------------------------------------------------
# Parser and entry points


def _float_list(text):
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated number list: {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="lne",
        description="Scale-invariant logarithmic norm entropy toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, output=True):
        if output:
            p.add_argument("--output", default="-", metavar="FILE|-", help="output target")

    p = sub.add_parser("entropy", help="evaluate one entropy family on a weight vector")
    p.add_argument("--input", required=True, help="problem file (JSON)")
    p.add_argument("--family", choices=FAMILIES, default="lne")
    p.add_argument("--alpha", type=float, help="order (overrides the file)")
    p.add_argument("--beta", type=float, help="type/order (overrides the file)")
    common(p)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("curve", help="Bernoulli entropy curves over p in [0, 1] (CSV)")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", dest="betas", type=_float_list, required=True, metavar="B1,B2,...")
    p.add_argument("--step", type=float, default=0.01)
    common(p)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("surface", help="binomial entropy over an (alpha, beta) grid (CSV)")
    p.add_argument("--n", type=int, required=True, help="binomial trial count (n+1 states)")
    p.add_argument("--p", type=float, required=True, help="success probability")
    p.add_argument("--alpha", dest="alphas", type=_float_list, required=True, metavar="A1,A2,...")
    p.add_argument("--beta", dest="betas", type=_float_list, required=True, metavar="B1,B2,...")
    common(p)
    p.set_defaults(func=cmd_surface)

    for name, help_text in (
        ("maxent", "constrained entropy maximization"),
        ("minxent", "constrained cross-entropy minimization against a prior"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", required=True, help="problem file (JSON)")
        p.add_argument("--alpha", type=float, help="order (overrides the file)")
        p.add_argument("--beta", type=float, help="order (overrides the file)")
        p.add_argument("--seed", type=int, help="multi-start seed (overrides the file)")
        p.add_argument("--tol", type=float, help="residual tolerance (overrides the file)")
        common(p)
        p.set_defaults(func=cmd_maxent if name == "maxent" else cmd_minxent)

    p = sub.add_parser("check", help="run the invariant suite; nonzero exit on first failure")
    p.add_argument("--seed", type=int, help="randomness seed (default 0)")
    p.add_argument("--tol", type=float, help="solver tolerance used inside checks")
    common(p)
    p.set_defaults(func=cmd_check)
    return parser


def _configure_logging():
    level = {"debug": logging.DEBUG, "info": logging.INFO, "quiet": logging.CRITICAL}.get(
        os.environ.get("LNE_LOG", "").lower(), logging.WARNING
    )
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("lne: %(message)s"))
    log.handlers[:] = [handler]
    log.propagate = False
    log.setLevel(level)


def main(argv=None) -> int:
    _configure_logging()
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except InfeasibleError as e:
        _err(str(e))
        return 4
    except (ProblemError, ValueError) as e:
        _err(str(e))
        return 2


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()

"""Command-line interface.

Subcommands:
  transform      forward-transform a named test function, emit spectral CSV
  modulus-check  evaluate the Zygmund conditions of a modulus family
  indices        estimate the Matuszewska-Orlicz growth indices
  titchmarsh     run one theorem verification, emit a report (CSV/JSON)
  synth          synthesize spectral data from a tail target, emit CSV

Exit codes: 0 completed, 1 usage error, 2 precondition failed (e.g. a
Zygmund condition the requested run needs does not hold).

Identical configurations produce bit-identical report files: grids are
deterministic, nothing is timestamped, floats are written with repr.
The environment variable HL_THREADS caps BLAS/OpenMP parallelism.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from pathlib import Path


def _cap_threads() -> None:
    n = os.environ.get("HL_THREADS")
    if n:
        for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS",
                    "MKL_NUM_THREADS", "NUMEXPR_NUM_THREADS"):
            os.environ.setdefault(var, n)


_cap_threads()

import numpy as np  # noqa: E402  (thread caps must precede numpy)

from .modulus import (ConstructionError, estimate_indices, parse_family,
                      zygmund_Z0_constant, zygmund_Z1_constant)
from .specfun import DomainError  # noqa: E402
from .titchmarsh import (PreconditionError, SynthesisSpec, dyadic_h_grid,
                         make_resolved_grids, make_tail_grid, restrict_h_grid,
                         synthesize_from_tail, verify_equivalence,
                         verify_fourier_Lnu, verify_inclusion_Womega,
                         verify_main1_part1, verify_main1_part2, verify_main2)
from .transform import FunctionSpec, SpectralData, forward  # noqa: E402
from .quadrature import build_weighted_grid  # noqa: E402

USAGE_ERROR, PRECONDITION_ERROR = 1, 2

MODULUS_GRAMMAR = ("modulus grammar: power:gamma=0.5 | "
                   "power_log:gamma=0.5,theta=1.0 | log_inverse:beta=2.0 | "
                   "power_logexponent:gamma=0.5,C=1.0,lambda=2.0 | "
                   "power_loglog:gamma=0.5,lambda=1.0")


@dataclass(frozen=True)
class RunConfig:
    alpha: float = 0.5
    p: float = 2.0
    radius_x: float = 20.0
    radius_lambda: float = 64.0
    panels: int = 64
    order: int = 16
    modulus_string: str = "power:gamma=0.5"
    theorem: str = "main1_part1"
    h_max_exp: int = 3
    h_min_exp: int = 10
    output_path: str = ""
    format: str = "csv"

    def __post_init__(self):
        if not self.alpha > 0.25:
            raise DomainError("alpha must exceed 1/4")
        if not 1.0 < self.p <= 2.0:
            raise DomainError("p must lie in (1, 2]")
        if not self.h_max_exp < self.h_min_exp:
            raise DomainError("h-max-exp must be smaller than h-min-exp")
        if self.format not in ("csv", "json"):
            raise DomainError("format must be csv or json")


TEST_FUNCTIONS = {
    "sqrt_gauss_annulus": lambda x: np.exp(-((np.sqrt(np.abs(x)) - 2.0) / 0.5) ** 2),
    "gauss": lambda x: np.exp(-x * x),
    "x2_gauss": lambda x: x * x * np.exp(-x * x),
}


def _test_function(name: str) -> FunctionSpec:
    try:
        ev = TEST_FUNCTIONS[name]
    except KeyError:
        raise DomainError(f"unknown test function {name!r}; "
                          f"choose from {sorted(TEST_FUNCTIONS)}")
    return FunctionSpec(evaluator=ev, support_radius=16.0,
                        smoothness_tag="smooth_compact")


def _write(path: str, text: str) -> None:
    if path:
        Path(path).write_text(text, newline="")
        print(f"wrote {path}")
    else:
        sys.stdout.write(text)


def _cmd_transform(ns) -> int:
    f = _test_function(ns.function)
    xg = build_weighted_grid(ns.alpha, ns.radius_x, ns.panels, ns.order)
    lg = build_weighted_grid(ns.alpha, ns.radius_lambda, ns.panels, ns.order)
    spec = forward(f, xg, lg)
    _write(ns.output, spec.to_csv())
    return 0


def _cmd_modulus_check(ns) -> int:
    w = parse_family(ns.modulus, ns.delta0)
    failed = False
    conditions = {"Z0": zygmund_Z0_constant, "Z1": zygmund_Z1_constant}
    wanted = ["Z0", "Z1"] if ns.condition == "both" else [ns.condition]
    for name in wanted:
        c = conditions[name](w)
        if c == float("inf"):
            print(f"{name}=divergent")
            failed = True
        else:
            print(f"{name}={c:.6g}")
    return PRECONDITION_ERROR if failed else 0


def _cmd_indices(ns) -> int:
    w = parse_family(ns.modulus, ns.delta0)
    est = estimate_indices(w)
    print(f"m={est.m_lower:.2f} M={est.M_upper:.2f} converged={est.converged}")
    return 0


def _cmd_synth(ns) -> int:
    w = parse_family(ns.modulus, ns.delta0)
    lg = make_tail_grid(ns.alpha, ns.radius_lambda, ns.order)
    spec = SynthesisSpec(modulus=w, alpha=ns.alpha,
                         lambda_radius=ns.radius_lambda, profile=ns.profile)
    g = synthesize_from_tail(spec, lg)
    _write(ns.output, g.to_csv())
    return 0


def _cmd_titchmarsh(ns) -> int:
    cfg = RunConfig(alpha=ns.alpha, p=ns.p, radius_x=ns.radius_x,
                    radius_lambda=ns.radius_lambda, panels=ns.panels,
                    order=ns.order, modulus_string=ns.modulus,
                    theorem=ns.theorem, h_max_exp=ns.h_max_exp,
                    h_min_exp=ns.h_min_exp, output_path=ns.output or "",
                    format=ns.format)
    w = parse_family(cfg.modulus_string, ns.delta0)
    h_all = dyadic_h_grid(w.delta0, cfg.h_max_exp, cfg.h_min_exp)

    needs_x = ns.synth.startswith("function:") or ns.route_check
    if needs_x:
        xg, lg = make_resolved_grids(cfg.alpha, cfg.radius_x, cfg.radius_lambda,
                                     cfg.order)
    else:
        xg, lg = None, make_tail_grid(cfg.alpha, cfg.radius_lambda, cfg.order)
    h_grid = restrict_h_grid(h_all, lg)
    if h_grid.size == 0:
        raise DomainError("no usable h: raise --radius-lambda or --h-max-exp")
    if h_grid.size < h_all.size:
        print(f"note: {h_all.size - h_grid.size} h value(s) dropped "
              f"(tail 1/h beyond radius_lambda/4)", file=sys.stderr)

    profile = "smooth_tail" if ns.route_check else "sharp_tail"
    if ns.synth == "matched":
        src = synthesize_from_tail(
            SynthesisSpec(w, cfg.alpha, cfg.radius_lambda, profile), lg)
    elif ns.synth.startswith("mismatched:"):
        w_tail = parse_family(ns.synth.split(":", 1)[1], ns.delta0)
        src = synthesize_from_tail(
            SynthesisSpec(w_tail, cfg.alpha, cfg.radius_lambda, profile), lg)
    elif ns.synth.startswith("function:"):
        src = _test_function(ns.synth.split(":", 1)[1])
    else:
        raise DomainError(f"unknown --synth {ns.synth!r}; use matched, "
                          "mismatched:<modulus>, or function:<name>")

    theorem = cfg.theorem
    if theorem == "main1_part1":
        rep = verify_main1_part1(src, w, cfg.p, h_grid, xgrid=xg, lgrid=lg)
    elif theorem == "main1_part2":
        g = src if isinstance(src, SpectralData) else forward(src, xg, lg)
        rep = verify_main1_part2(g, w, h_grid, xgrid=xg)
    elif theorem == "equivalence":
        g = src if isinstance(src, SpectralData) else forward(src, xg, lg)
        rep = verify_equivalence(g, w, h_grid, xgrid=xg)
    elif theorem == "fourier_Lnu":
        rep = verify_fourier_Lnu(src, w, cfg.p, ns.nu, xgrid=xg, lgrid=lg,
                                 h_grid=h_grid)
    elif theorem in ("main2_part1", "main2_part2"):
        mode = theorem.split("_")[1]
        data = src
        if mode == "part2" and not isinstance(src, SpectralData):
            data = forward(src, xg, lg)
        rep = verify_main2(data, w, mode, h_grid, xgrid=xg, lgrid=lg)
    elif theorem == "inclusion_Womega":
        rep = verify_inclusion_Womega(src, w, cfg.p, h_grid, xgrid=xg, lgrid=lg)
    else:
        raise DomainError(f"unknown theorem {theorem!r}")

    rep.extra["config"] = {
        "alpha": cfg.alpha, "p": cfg.p, "radius_x": cfg.radius_x,
        "radius_lambda": cfg.radius_lambda, "panels": cfg.panels,
        "order": cfg.order, "modulus": cfg.modulus_string,
        "theorem": cfg.theorem, "h_max_exp": cfg.h_max_exp,
        "h_min_exp": cfg.h_min_exp, "synth": ns.synth,
    }
    text = rep.to_json() if cfg.format == "json" else rep.to_csv()
    if cfg.output_path:
        _write(cfg.output_path, text)
    print(f"VERDICT={rep.verdict}")
    return 0


def _add_modulus_args(p) -> None:
    p.add_argument("--modulus", required=True, help=MODULUS_GRAMMAR)
    p.add_argument("--delta0", type=float, default=None,
                   help="domain endpoint (family default when omitted)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dhankel",
        description="Deformed Hankel transform and Titchmarsh-type verification")
    sub = parser.add_subparsers(dest="cmd", required=True)

    tr = sub.add_parser("transform", help="forward-transform a test function")
    tr.add_argument("--function", default="sqrt_gauss_annulus",
                    choices=sorted(TEST_FUNCTIONS))
    tr.add_argument("--alpha", type=float, default=0.5)
    tr.add_argument("--radius-x", type=float, default=20.0)
    tr.add_argument("--radius-lambda", type=float, default=64.0)
    tr.add_argument("--panels", type=int, default=64)
    tr.add_argument("--order", type=int, default=16)
    tr.add_argument("--output", default="")
    tr.set_defaults(func=_cmd_transform)

    mc = sub.add_parser("modulus-check", help="Zygmund condition constants")
    _add_modulus_args(mc)
    mc.add_argument("--condition", default="both", choices=["Z0", "Z1", "both"])
    mc.set_defaults(func=_cmd_modulus_check)

    ix = sub.add_parser("indices", help="Matuszewska-Orlicz index estimates")
    _add_modulus_args(ix)
    ix.set_defaults(func=_cmd_indices)

    sy = sub.add_parser("synth", help="synthesize spectral data from a tail")
    _add_modulus_args(sy)
    sy.add_argument("--alpha", type=float, default=0.5)
    sy.add_argument("--radius-lambda", type=float, default=64.0)
    sy.add_argument("--order", type=int, default=16)
    sy.add_argument("--profile", default="sharp_tail",
                    choices=["sharp_tail", "smooth_tail"])
    sy.add_argument("--output", default="")
    sy.set_defaults(func=_cmd_synth)

    tm = sub.add_parser("titchmarsh", help="run one theorem verification")
    _add_modulus_args(tm)
    tm.add_argument("--theorem", default="main1_part1",
                    choices=["main1_part1", "main1_part2", "equivalence",
                             "fourier_Lnu", "main2_part1", "main2_part2",
                             "inclusion_Womega"])
    tm.add_argument("--alpha", type=float, default=0.5)
    tm.add_argument("--p", type=float, default=2.0)
    tm.add_argument("--nu", type=float, default=2.0, help="fourier_Lnu only")
    tm.add_argument("--radius-x", type=float, default=20.0)
    tm.add_argument("--radius-lambda", type=float, default=64.0)
    tm.add_argument("--panels", type=int, default=64)
    tm.add_argument("--order", type=int, default=16)
    tm.add_argument("--h-max-exp", type=int, default=3)
    tm.add_argument("--h-min-exp", type=int, default=10)
    tm.add_argument("--synth", default="matched",
                    help="matched | mismatched:<modulus> | function:<name>")
    tm.add_argument("--route-check", action="store_true",
                    help="use resolved x/frequency grids and report the "
                         "two-route difference-norm agreement")
    tm.add_argument("--output", default="")
    tm.add_argument("--format", default="csv", choices=["csv", "json"])
    tm.set_defaults(func=_cmd_titchmarsh)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return ns.func(ns)
    except PreconditionError as exc:
        print(f"precondition failed [{exc.condition}]: {exc}", file=sys.stderr)
        return PRECONDITION_ERROR
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(MODULUS_GRAMMAR, file=sys.stderr)
        return USAGE_ERROR
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Run the full theorem-verification matrix and write reports.

For each modulus in the sweep this runs the forward tail estimate, the p = 2
converse (with the two-route difference-norm consistency check), the
equivalence, the transform-integrability criterion, and the cumulative-weight
variants, writing one JSON report per cell into --outdir and printing a
verdict table.  Everything is deterministic; rerunning reproduces identical
report bytes.
"""

import argparse
import sys
import time
from pathlib import Path

import dhankel as dh

MODULI = [
    "power:gamma=0.3",
    "power:gamma=0.5",
    "power:gamma=0.7",
    "power_log:gamma=0.5,theta=1.0",
    "power_log:gamma=0.5,theta=-1.0",
    "log_inverse:beta=2.0",
]

ALPHA = 0.5


def run_cell(name, fn, outdir, rows):
    start = time.perf_counter()
    try:
        rep = fn()
        verdict = rep.verdict
        (outdir / f"{name}.json").write_text(rep.to_json(), newline="")
    except dh.PreconditionError as exc:
        verdict = f"precondition:{exc.condition}"
    rows.append((name, verdict, time.perf_counter() - start))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", type=Path, default=Path("out"))
    ap.add_argument("--radius-lambda", type=float, default=8192.0)
    ns = ap.parse_args(argv)
    ns.outdir.mkdir(parents=True, exist_ok=True)

    lg_tail = dh.make_tail_grid(ALPHA, ns.radius_lambda)
    xg_route, lg_route = dh.make_resolved_grids(ALPHA, 40.0, 512.0)
    h_full = dh.dyadic_h_grid(0.5, 3, 10)
    h_route = dh.dyadic_h_grid(0.5, 3, 6)

    rows = []
    for text in MODULI:
        w = dh.parse_family(text)
        tag = text.replace(":", "_").replace(",", "_").replace("=", "")
        g = dh.synthesize_from_tail(
            dh.SynthesisSpec(w, ALPHA, ns.radius_lambda, "sharp_tail"), lg_tail)

        run_cell(f"{tag}__main1_part1",
                 lambda: dh.verify_main1_part1(g, w, 2.0, h_full),
                 ns.outdir, rows)
        run_cell(f"{tag}__main1_part2",
                 lambda: dh.verify_main1_part2(g, w, h_full),
                 ns.outdir, rows)
        run_cell(f"{tag}__equivalence",
                 lambda: dh.verify_equivalence(g, w, h_full),
                 ns.outdir, rows)
        run_cell(f"{tag}__fourier_nu1.5",
                 lambda: dh.verify_fourier_Lnu(g, w, 2.0, 1.5),
                 ns.outdir, rows)
        run_cell(f"{tag}__main2_part2",
                 lambda: dh.verify_main2(g, w, "part2", h_full),
                 ns.outdir, rows)
        run_cell(f"{tag}__inclusion",
                 lambda: dh.verify_inclusion_Womega(g, w, 2.0, h_full),
                 ns.outdir, rows)

        g_smooth = dh.synthesize_from_tail(
            dh.SynthesisSpec(w, ALPHA, lg_route.radius, "smooth_tail"),
            lg_route)
        run_cell(f"{tag}__part2_route_check",
                 lambda: dh.verify_main1_part2(g_smooth, w, h_route,
                                               xgrid=xg_route),
                 ns.outdir, rows)

    width = max(len(r[0]) for r in rows)
    print(f"\n{'run'.ljust(width)}  verdict                 time")
    for name, verdict, dt in rows:
        print(f"{name.ljust(width)}  {verdict:22s}  {dt:6.1f}s")
    print(f"\nreports in {ns.outdir}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Walk through the full measurement pipeline for one function family.

Computes certified lower bounds and midpoint estimates of the graph
area of sin(e^z) over a ladder of radii, fits the three growth models,
and prints the winning classification with its floored witness
constants.

Run:  python3 demos/area_growth_walkthrough.py
"""

import time

from graphgrowth import (
    GraphFamily,
    GrowthModel,
    GrowthSample,
    QuadConfig,
    QuadMode,
    SampleSource,
    SublevelDomain,
    classify_growth,
    fit_growth,
    graph_area,
    witness_constants,
)

RADII = [2.0, 2.4, 2.8, 3.2, 3.6, 4.0]

print("family sin(e^z), quadtree depth 12")
print(f"{'r':>5} {'lower':>12} {'estimate':>12} {'inside':>7} {'bdry':>7} {'sec':>5}")

samples = []
for r in RADII:
    cfg = QuadConfig(mode=QuadMode.ESTIMATE, max_depth=12)
    t0 = time.perf_counter()
    res = graph_area(SublevelDomain(GraphFamily.SIN_EXP, r), cfg)
    dt = time.perf_counter() - t0
    print(f"{r:>5.1f} {res.lower:>12.4f} {res.estimate:>12.4f}"
          f" {res.cells_inside:>7d} {res.cells_boundary:>7d} {dt:>5.2f}")
    samples.append(GrowthSample(r=r, area_lower=res.lower,
                                area_estimate=res.estimate,
                                source=SampleSource.QUADRATURE))

print()
for model in GrowthModel:
    fit = fit_growth(samples, model)
    print(f"{model.value:<12} rate={fit.rate:.4f}  rms={fit.residual_rms:.4f}")

best = classify_growth(samples)
c, r0 = witness_constants(samples, best.model)
print()
print(f"winner: {best.model.value} with rate {best.rate:.4f}")
print(f"witness: area(r) >= {c} * model({best.rate:.4f} * r) for r >= {r0}")

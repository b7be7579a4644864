"""Emit SVG growth charts for the three families.

Writes one chart per family into demos/out/.  The chart title carries
the least-squares slope in the transformed coordinates, so a semilog-y
chart of exponential data shows the growth rate directly and a log-log
chart of polynomial data shows the degree.

Run:  python3 demos/plot_growth_curves.py
"""

import pathlib

from graphgrowth import (
    GraphFamily,
    QuadConfig,
    QuadMode,
    SublevelDomain,
    graph_area,
    packet_growth_lower_bound,
)
from graphgrowth.svgplot import render_line_chart

out = pathlib.Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

# e^z: log-log slope recovers the polynomial degree (about 2)
rs = [2.0, 3.0, 4.0, 5.0, 6.0]
areas = [graph_area(SublevelDomain(GraphFamily.EXP, r),
                    QuadConfig(mode=QuadMode.ESTIMATE, max_depth=11)).estimate
         for r in rs]
svg = render_line_chart(rs, areas, "log-log", label="e^z graph area")
(out / "exp_loglog.svg").write_text(svg)

# sin(e^z): semilog-y slope recovers the exponential rate (about 1)
rs = [float(r) for r in range(6, 15)]
areas = [packet_growth_lower_bound(GraphFamily.SIN_EXP, r) for r in rs]
svg = render_line_chart(rs, areas, "semilog-y", label="sin(e^z) packet bound")
(out / "sinexp_semilog.svg").write_text(svg)

# sin(e^(z^2)): semilog-y against r^2 recovers the Gaussian rate
# (slope = rate / ln 10 in the chart's base-10 coordinates)
rs = [2.5, 3.0, 3.5, 4.0, 4.5]
areas = [packet_growth_lower_bound(GraphFamily.SIN_EXP_SQ, r, delta=1e-2)
         for r in rs]
svg = render_line_chart([r * r for r in rs], areas, "semilog-y",
                        label="sin(e^(z^2)) packet bound vs r^2")
(out / "sinexpsq_logr2.svg").write_text(svg)

for p in sorted(out.glob("*.svg")):
    title = p.read_text().split("<title>")[1].split("</title>")[0]
    print(f"{p.name}: {title}")

"""Inductive parameter schedules for shell-by-shell surface assembly.

A schedule is a finite table of stages n = 1..N.  Stage n carries a
target radius r_n (two variants: theta*log(n+n0) growing like log, or
sqrt(log(n+n0)/d) growing like the Gaussian counting radii), the gap
mu_n = r_{n+1} - r_n to the next stage, and three smallness parameters
a_n = b_n = eps_n, defaulting to (n+n0)^-3 for the log radii and to
(n+n0)^-3 / (n*sqrt(log(n+2))) for the Gaussian radii (whose
inter-radius gaps shrink faster, so the parameters must too).

Two scalar conditions drive each stage:

  sigma equation    sqrt((r+a)^2 + (2*sigma+a)^2) - r + eps_next = mu/2
                    solved in closed form for sigma; infeasible when no
                    positive sigma exists.

  hypothesis check  sqrt((a+r)^2 + a^2) - r + eps < dist/2
                    evaluated in a cancellation-free form.

The properness budget eta_n = 2*(a_n + b_{n+1}) + sum_{k>=n} eps_k uses
the full infinite tail: the cube series beyond stage N is bounded
analytically by the integral remainder 1/2 * (N+n0)^-2, so finite
tables still honor the infinite-sum definition.

Diagnostics count how many stages fit below a query radius R
(N_of_R, via the thickened outer radii r_{n+1} + eta_n), convert counts
into certified area lower bounds a0 * N(R), and track the partial sums
of sigma plus a power-law trend of sigma against n (a divergent sigma
series is the completeness indicator for the limiting surface).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

__all__ = [
    "RadiiVariant",
    "ScheduleConfig",
    "ScheduleRow",
    "ScheduleDiagnostics",
    "InsufficientRowsError",
    "solve_sigma",
    "sigma_residual",
    "check_hyp2",
    "build_schedule",
    "diagnostics",
    "completeness_trend",
]


class RadiiVariant(Enum):
    EXP_RADII = "ExpRadii"
    GAUSSIAN_RADII = "GaussianRadii"

    @classmethod
    def parse(cls, text: str) -> "RadiiVariant":
        key = text.strip().lower()
        if key in ("exp", "expradii"):
            return cls.EXP_RADII
        if key in ("gaussian", "gauss", "gaussianradii"):
            return cls.GAUSSIAN_RADII
        raise ValueError(f"unknown radii variant {text!r}")


class InsufficientRowsError(ValueError):
    """Too few feasible rows for the requested trend analysis."""


@dataclass(frozen=True)
class ScheduleConfig:
    variant: RadiiVariant
    N: int
    n0: int = 1
    d: float = 1.0
    theta: float = 1.0
    a0: float = math.pi / 4096.0

    def __post_init__(self) -> None:
        if self.n0 < 1:
            raise ValueError("n0 must be >= 1")
        if self.N < 1:
            raise ValueError("N must be >= 1")
        if not (self.d > 0):
            raise ValueError("d must be > 0")
        if not (self.theta > 0):
            raise ValueError("theta must be > 0")
        if not (self.a0 > 0):
            raise ValueError("a0 must be > 0")


@dataclass(frozen=True)
class ScheduleRow:
    n: int
    r_n: float
    mu_n: float
    a_n: float
    b_n: float
    eps_n: float
    sigma_n: float | None
    eta_n: float
    hyp2_ok: bool
    sigma_feasible: bool


@dataclass(frozen=True)
class ScheduleDiagnostics:
    sigma_partial_sums: tuple[float, ...]
    eta_max_tail: float
    N_of_R: dict[float, int]
    area_lower_of_R: dict[float, float]
    all_hyp2_ok: bool
    all_sigma_feasible: bool


def _radius(cfg: ScheduleConfig, n: int) -> float:
    if cfg.variant is RadiiVariant.EXP_RADII:
        return cfg.theta * math.log(n + cfg.n0)
    return math.sqrt(math.log(n + cfg.n0) / cfg.d)


def _smallness(cfg: ScheduleConfig, n: int) -> float:
    cube = float(n + cfg.n0) ** -3
    if cfg.variant is RadiiVariant.EXP_RADII:
        return cube
    return cube / (n * math.sqrt(math.log(n + 2)))


def solve_sigma(r: float, a: float, eps_next: float, half_dist: float) -> float | None:
    """Solve sqrt((r+a)^2 + (2s+a)^2) = r + half_dist - eps_next for s > 0.

    Returns None when the stage is infeasible (no positive solution).
    Closed form: with h = half_dist - eps_next the squared equation gives
    (2s+a)^2 = (r+h)^2 - (r+a)^2 = (2r+h+a)*(h-a), so a positive root
    needs that product to exceed a^2.
    """
    if not (r > 0 and math.isfinite(r)):
        raise ValueError("r must be positive and finite")
    if a < 0 or eps_next < 0 or half_dist <= 0:
        raise ValueError("need a >= 0, eps_next >= 0, half_dist > 0")
    h = half_dist - eps_next
    if h <= a:
        return None
    q = (2.0 * r + h + a) * (h - a)
    if q <= a * a:
        return None
    return 0.5 * (math.sqrt(q) - a)


def sigma_residual(r: float, a: float, eps_next: float, half_dist: float,
                   sigma: float) -> float:
    """Relative defect of sigma in the squared stage equation.

    The linear form of the equation subtracts two nearly equal large
    numbers and cannot resolve below roughly sqrt-epsilon relative to
    half_dist, so the residual contract is stated on the squared form:

        |(r+a)^2 + (2*sigma+a)^2 - (r+h)^2| / (r+h)^2
    """
    h = half_dist - eps_next
    lhs = (r + a) ** 2 + (2.0 * sigma + a) ** 2
    rhs = (r + h) ** 2
    return abs(lhs - rhs) / rhs


def check_hyp2(r: float, a: float, eps: float, dist: float) -> bool:
    """Stage hypothesis sqrt((a+r)^2 + a^2) - r + eps < dist/2.

    Evaluated as (2*a*r + 2*a^2)/(sqrt((a+r)^2 + a^2) + r) + eps, which
    avoids the catastrophic cancellation of the direct form when a is
    many orders below r.
    """
    if not (r > 0 and math.isfinite(r)):
        raise ValueError("r must be positive and finite")
    if a < 0 or eps < 0 or dist <= 0:
        raise ValueError("need a >= 0, eps >= 0, dist > 0")
    lhs = (2.0 * a * r + 2.0 * a * a) / (math.sqrt((a + r) ** 2 + a * a) + r) + eps
    return lhs < dist / 2.0


def _eps_tail_sums(cfg: ScheduleConfig) -> np.ndarray:
    """suffix[n-1] = sum_{k>=n} eps_k including the analytic remainder
    for k > N.

    The cube series tail obeys the integral comparison
    sum_{k>N} (k+n0)^-3 <= 1/2 * (N+n0)^-2; the Gaussian variant's extra
    factor 1/(k*sqrt(log(k+2))) is decreasing, so the same bound scaled
    by its value at k=N dominates that tail.
    """
    ns = np.arange(1, cfg.N + 1, dtype=float)
    eps = (ns + cfg.n0) ** -3
    remainder = 0.5 * float(cfg.N + cfg.n0) ** -2
    if cfg.variant is RadiiVariant.GAUSSIAN_RADII:
        eps = eps / (ns * np.sqrt(np.log(ns + 2.0)))
        remainder /= cfg.N * math.sqrt(math.log(cfg.N + 2))
    suffix = np.cumsum(eps[::-1])[::-1] + remainder
    return suffix


def build_schedule(cfg: ScheduleConfig) -> list[ScheduleRow]:
    """Emit rows for stages 1..N; flags record infeasibility, rows are
    never suppressed (the table is an audit log, not a gatekeeper)."""
    suffix = _eps_tail_sums(cfg)
    rows: list[ScheduleRow] = []
    r_next = _radius(cfg, 1)
    for n in range(1, cfg.N + 1):
        r_n = r_next
        r_next = _radius(cfg, n + 1)
        mu_n = r_next - r_n
        a_n = _smallness(cfg, n)
        b_n = a_n
        eps_n = a_n
        eps_next = _smallness(cfg, n + 1)
        b_next = eps_next
        sigma = solve_sigma(r_n, a_n, eps_next, mu_n / 2.0)
        eta_n = 2.0 * (a_n + b_next) + float(suffix[n - 1])
        rows.append(ScheduleRow(
            n=n,
            r_n=r_n,
            mu_n=mu_n,
            a_n=a_n,
            b_n=b_n,
            eps_n=eps_n,
            sigma_n=sigma,
            eta_n=eta_n,
            hyp2_ok=check_hyp2(r_n, a_n, eps_n, mu_n),
            sigma_feasible=sigma is not None,
        ))
    return rows


def _thickened_outer_radii(rows: Sequence[ScheduleRow], cfg: ScheduleConfig) -> np.ndarray:
    """T_n = r_{n+1} + eta_n, the radius certainly containing stage n.

    Usually increasing, but for tiny n0 the eta drop can outrun the
    radius growth over the first few stages, so no order is assumed."""
    return np.array([_radius(cfg, row.n + 1) + row.eta_n for row in rows])


def _count_stages_below(T: np.ndarray, R: float) -> int:
    """max{n : T_n <= R} (stages indexed from 1), 0 when none qualify."""
    hits = np.flatnonzero(T <= R)
    return int(hits[-1]) + 1 if hits.size else 0


def queryable_range(rows: Sequence[ScheduleRow], cfg: ScheduleConfig) -> tuple[float, float]:
    """Radii between which stage counting is informative (1 <= N(R) <= N)."""
    T = _thickened_outer_radii(rows, cfg)
    return float(np.min(T)), float(T[-1])


def diagnostics(rows: Sequence[ScheduleRow], cfg: ScheduleConfig,
                radii_query: Sequence[float] | None = None) -> ScheduleDiagnostics:
    """Audit summary of a built schedule.

    N_of_R maps each query radius R to the largest n whose thickened
    outer radius r_{n+1} + eta_n stays below R (0 when even the first
    stage does not fit); area_lower_of_R multiplies the count by the
    per-stage area quantum a0.  The default query grid is 16 evenly
    spaced radii across the queryable range.  eta_max_tail is the
    largest eta over the last quarter of the table.
    """
    if not rows:
        raise ValueError("diagnostics needs at least one row")
    T = _thickened_outer_radii(rows, cfg)
    if radii_query is None:
        radii_query = np.linspace(np.min(T), T[-1], 16).tolist()

    sigma_vals = np.array(
        [row.sigma_n if row.sigma_n is not None else 0.0 for row in rows]
    )
    partial = tuple(np.cumsum(sigma_vals).tolist())
    tail_start = (3 * len(rows)) // 4
    eta_max_tail = max(row.eta_n for row in rows[tail_start:])

    n_of_r: dict[float, int] = {}
    area_of_r: dict[float, float] = {}
    for R in radii_query:
        count = _count_stages_below(T, R)
        n_of_r[float(R)] = count
        area_of_r[float(R)] = cfg.a0 * count

    return ScheduleDiagnostics(
        sigma_partial_sums=partial,
        eta_max_tail=float(eta_max_tail),
        N_of_R=n_of_r,
        area_lower_of_R=area_of_r,
        all_hyp2_ok=all(row.hyp2_ok for row in rows),
        all_sigma_feasible=all(row.sigma_feasible for row in rows),
    )


def completeness_trend(rows: Sequence[ScheduleRow],
                       cfg: ScheduleConfig | None = None,
                       min_rows: int = 20) -> tuple[float, bool]:
    """Power-law exponent of sigma against the stage index.

    Fits log(sigma) = p*log(stage) + const by least squares and reports
    (p, p > -1): exponents above -1 mean the sigma series diverges,
    the evidence needed for completeness of the limiting surface.

    The stage index is n + n0 when cfg is given: row numbering restarts
    at 1 for every schedule, but the construction's own stage counter is
    offset by n0, and the expected -1/2 law holds in that counter.  With
    no cfg the raw row number is used (apt for synthetic rows).
    """
    offset = cfg.n0 if cfg is not None else 0
    feas = [(row.n + offset, row.sigma_n) for row in rows
            if row.sigma_feasible and row.sigma_n is not None and row.sigma_n > 0]
    if len(feas) < min_rows:
        raise InsufficientRowsError(
            f"need at least {min_rows} feasible rows, got {len(feas)}"
        )
    x = np.log(np.array([n for n, _ in feas], dtype=float))
    y = np.log(np.array([s for _, s in feas], dtype=float))
    xbar = float(np.mean(x))
    ybar = float(np.mean(y))
    exponent = float(np.sum((x - xbar) * (y - ybar)) / np.sum((x - xbar) ** 2))
    return exponent, exponent > -1.0

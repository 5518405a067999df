"""Empirical optimality checks and fidelity sweeps.

Maximizes the single-outcome negativity over the Schmidt simplex (coarse
sorted-simplex grid plus derivative-free refinement), locates
strategy-crossing fidelities by bisection, and sweeps the fidelity axis to
tabulate the per-strategy negativity curves.
"""

from dataclasses import dataclass

import numpy as np

from .analytic import (
    negativity_bell,
    negativity_closed,
    negativity_pair,
)
from .states import IsoParams, SchmidtVector

DEFAULT_REFINE_ITERS = 200
SIMPLEX_DIAMETER_TOL = 1e-9


@dataclass(frozen=True)
class SearchReport:
    """Result of a single-outcome negativity maximization."""

    best_lambda: SchmidtVector
    best_value: float
    evaluations: int
    converged: bool


@dataclass(frozen=True)
class ScanRecord:
    """One row of a fidelity sweep."""

    F: float
    n_bell: float
    n_pair: float
    avg_bell: float
    avg_mixed: float


def default_grid_step(d):
    """Coarse simplex resolution: 0.02 up to d=4, 0.05 for d in {5, 6}."""
    return 0.02 if d <= 4 else 0.05


def sorted_simplex_grid(d, step):
    """All nonincreasing probability vectors with entries on a 1/n grid.

    Only descending-sorted points are generated; measurement outcomes with
    permuted Schmidt weights are equivalent, so nothing is lost.
    """
    if not 0.0 < step <= 0.5:
        raise ValueError(f"grid step must lie in (0, 0.5], got {step}")
    n = round(1.0 / step)
    points = []

    def descend(prefix, remaining, cap, slots):
        if slots == 1:
            if remaining <= cap:
                points.append(prefix + [remaining])
            return
        lo = -(-remaining // slots)  # ceil: keep the sequence nonincreasing
        for head in range(min(cap, remaining), lo - 1, -1):
            descend(prefix + [head], remaining - head, head, slots - 1)

    descend([], n, n, d)
    return [np.array(pt, dtype=float) / n for pt in points]


def _project(x):
    """Map an arbitrary vector to a valid sorted Schmidt weight vector."""
    y = np.maximum(x, 0.0)
    s = y.sum()
    if s <= 0.0:
        y = np.ones_like(y)
        s = y.size
    y = np.sort(y / s)[::-1]
    return y


def maximize_outcome(p, grid_step=None, refine_iters=DEFAULT_REFINE_ITERS):
    """Maximize the single-outcome negativity over Schmidt vectors.

    Probes the uniform spectra of every rank and a coarse sorted-simplex
    grid, then polishes the best grid point with Nelder-Mead style
    reflect/expand/contract steps (candidates projected back to the sorted
    simplex).  Deterministic for fixed inputs.
    """
    d = p.d
    if grid_step is None:
        grid_step = default_grid_step(d)
    evals = 0

    def value_of(weights):
        nonlocal evals
        evals += 1
        return negativity_closed(p, SchmidtVector(tuple(weights)))

    # Uniform spectra first: the distinguished candidates of the theory.
    best_w = SchmidtVector.uniform(d).padded(d)
    best_v = value_of(best_w)
    for r in range(1, d):
        w = SchmidtVector.uniform(r, pad_to=d).padded(d)
        v = value_of(w)
        if v > best_v:
            best_v, best_w = v, w

    grid_best_w, grid_best_v = best_w, best_v
    for w in sorted_simplex_grid(d, grid_step):
        v = value_of(w)
        if v > grid_best_v:
            grid_best_v, grid_best_w = v, w
        if v > best_v:
            best_v, best_w = v, w

    # Nelder-Mead refinement seeded at the best grid point.
    alpha, gamma, rho, sigma = 1.0, 2.0, 0.5, 0.5
    verts = [_project(grid_best_w)]
    for i in range(d):
        delta = np.zeros(d)
        delta[i] = grid_step / 2.0
        verts.append(_project(grid_best_w + delta))
    vals = [value_of(w) for w in verts]

    converged = False
    for _ in range(refine_iters):
        order = np.argsort(vals)[::-1]  # maximizing: best first
        verts = [verts[i] for i in order]
        vals = [vals[i] for i in order]
        diameter = max(np.abs(w - verts[0]).max() for w in verts[1:])
        if diameter < SIMPLEX_DIAMETER_TOL:
            converged = True
            break
        centroid = np.mean(verts[:-1], axis=0)
        reflected = _project(centroid + alpha * (centroid - verts[-1]))
        f_r = value_of(reflected)
        if f_r > vals[0]:
            expanded = _project(centroid + gamma * (reflected - centroid))
            f_e = value_of(expanded)
            if f_e > f_r:
                verts[-1], vals[-1] = expanded, f_e
            else:
                verts[-1], vals[-1] = reflected, f_r
        elif f_r > vals[-2]:
            verts[-1], vals[-1] = reflected, f_r
        else:
            contracted = _project(centroid + rho * (verts[-1] - centroid))
            f_c = value_of(contracted)
            if f_c > vals[-1]:
                verts[-1], vals[-1] = contracted, f_c
            else:
                for i in range(1, len(verts)):
                    verts[i] = _project(verts[0] + sigma * (verts[i] - verts[0]))
                    vals[i] = value_of(verts[i])

    i_best = int(np.argmax(vals))
    if vals[i_best] > best_v:
        best_v, best_w = vals[i_best], verts[i_best]

    lam = SchmidtVector(tuple(best_w))
    return SearchReport(
        best_lambda=lam,
        best_value=negativity_closed(p, lam),
        evaluations=evals,
        converged=converged,
    )


def bisect_boundary(f, left, right, tol):
    """Root of f by bisection; f(x) = 0 counts as the non-positive side, so
    onset boundaries of clipped curves (0 -> positive) are locatable."""
    if tol < 1e-12:
        raise ValueError("tolerance below 1e-12 is not supported")
    fa, fb = f(left), f(right)
    if (fa > 0.0) == (fb > 0.0):
        raise ValueError(
            f"bracket invalid: f({left}) = {fa:.3e}, f({right}) = {fb:.3e}"
        )
    lo, hi = left, right
    lo_pos = fa > 0.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if (f(mid) > 0.0) == lo_pos:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def find_crossing(d, left, right, tol=1e-12):
    """Fidelity at which the pair-outcome negativity crosses the Bell-outcome
    negativity, by bisection on their difference over [left, right]."""

    def gap(F):
        p = IsoParams(d, F)
        return negativity_pair(p) - negativity_bell(p)

    return bisect_boundary(gap, left, right, tol)


def scan(d, f_lo, f_hi, steps):
    """Uniform fidelity sweep tabulating the per-strategy negativities.

    avg_mixed uses the exact outcome census of the pair/Fourier ensemble:
    d(d-1) pair outcomes and d Bell-spectrum outcomes, each with
    probability 1/d^2.
    """
    if not 0.0 <= f_lo < f_hi <= 1.0:
        raise ValueError(f"need 0 <= f_lo < f_hi <= 1, got [{f_lo}, {f_hi}]")
    if steps < 2:
        raise ValueError("steps must be >= 2")
    records = []
    for F in np.linspace(f_lo, f_hi, steps):
        p = IsoParams(d, float(F))
        n_bell = negativity_bell(p)
        n_pair = negativity_pair(p)
        records.append(
            ScanRecord(
                F=float(F),
                n_bell=n_bell,
                n_pair=n_pair,
                avg_bell=n_bell,
                avg_mixed=((d - 1) * n_pair + n_bell) / d,
            )
        )
    return records

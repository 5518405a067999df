"""Cross-route verification suites behind the ``verify`` CLI command.

Each suite pits an independent computation path against another: closed
forms vs the brute-force oracle, inequality-chain predicates vs sampled
negativities, ensemble algebra vs Born-rule bookkeeping.
"""

from dataclasses import dataclass

import numpy as np

from . import analytic, oracle
from .oracle import MAX_ORACLE_DIM
from .states import (
    IsoParams,
    SchmidtVector,
    bell_measurement,
    mixed_measurement,
    schmidt_state,
)

ORACLE_ATOL = 1e-10
SPECTRUM_ATOL = 1e-10
PROB_ATOL = 1e-12
CHAIN_SLACK = 1e-12


@dataclass(frozen=True)
class SuiteResult:
    name: str
    checks: int
    failures: int

    @property
    def passed(self):
        return self.failures == 0


def random_schmidt(rng, d, full_rank=False):
    """Random descending Schmidt vector; rank drawn uniformly unless forced."""
    r = d if full_rank else int(rng.integers(1, d + 1))
    w = np.sort(rng.exponential(size=r))[::-1]
    w /= w.sum()
    return SchmidtVector(tuple(w) + (0.0,) * (d - r))


def suite_oracle_equivalence(d_max, samples, rng):
    """Closed-form negativity and PT spectrum vs the numeric oracle route."""
    checks = failures = 0
    for d in range(2, min(d_max, 4) + 1):
        for _ in range(samples):
            p = IsoParams(d, float(rng.random()))
            lam = random_schmidt(rng, d)
            joint = oracle.build_joint(p)
            _, rho24 = oracle.measure_outcome(joint, schmidt_state(lam, d), d)
            checks += 1
            if abs(
                analytic.negativity_closed(p, lam)
                - oracle.negativity_numeric(rho24, d)
            ) > ORACLE_ATOL:
                failures += 1
            checks += 1
            closed = analytic.pt_spectrum_closed(p, lam).all_values()
            numeric = oracle.pt_spectrum_numeric(rho24, d)
            if np.abs(closed - numeric).max() > SPECTRUM_ATOL:
                failures += 1
    return SuiteResult("oracle-equivalence", checks, failures)


def suite_born_probability(d_max, samples, rng):
    """Every rank-one outcome on the joint state has probability 1/d^2."""
    checks = failures = 0
    for d in range(2, min(d_max, MAX_ORACLE_DIM) + 1):
        p = IsoParams(d, float(rng.random()))
        joint = oracle.build_joint(p)
        probes = [schmidt_state(random_schmidt(rng, d), d) for _ in range(samples)]
        probes += list(bell_measurement(d).vectors)
        probes += list(mixed_measurement(d).vectors)
        for psi in probes:
            prob, _ = oracle.measure_outcome(joint, psi, d)
            checks += 1
            if abs(prob - 1.0 / d**2) > PROB_ATOL:
                failures += 1
    return SuiteResult("born-probability", checks, failures)


def suite_completeness(d_max):
    """Both named ensembles resolve the identity and average consistently."""
    checks = failures = 0
    for d in range(2, d_max + 1):
        for ens in (bell_measurement(d), mixed_measurement(d)):
            checks += 1
            if not ens.is_complete():
                failures += 1
        # Bell ensemble average must collapse to the single-outcome value.
        p = IsoParams(d, 0.9)
        checks += 1
        if abs(
            analytic.average_negativity(p, bell_measurement(d))
            - analytic.negativity_bell(p)
        ) > ORACLE_ATOL:
            failures += 1
    return SuiteResult("completeness", checks, failures)


def suite_chain_property(d_max, samples, rng):
    """The inequality chain linking arbitrary outcomes to uniform spectra."""
    checks = failures = 0
    for d in range(2, d_max + 1):
        for _ in range(samples):
            p = IsoParams(d, float(rng.random()))
            lam = random_schmidt(rng, d)
            n = analytic.negativity_closed(p, lam)
            checks += 1
            if n > analytic.negativity_upper_bound(p, lam) + CHAIN_SLACK:
                failures += 1
            r = lam.R
            if analytic.condition_R(p, r):
                checks += 1
                if n > analytic.negativity_uniform_rank(p, r) + CHAIN_SLACK:
                    failures += 1
            if analytic.condition_final(p):
                checks += 1
                if n > analytic.negativity_bell(p) + CHAIN_SLACK:
                    failures += 1
    return SuiteResult("chain-property", checks, failures)


def run_suites(d_max=4, samples=100, seed=42):
    """Run every verification suite; returns the list of SuiteResults."""
    rng = np.random.default_rng(seed)
    return [
        suite_oracle_equivalence(d_max, samples, rng),
        suite_born_probability(d_max, min(samples, 25), rng),
        suite_completeness(d_max),
        suite_chain_property(d_max, samples, rng),
    ]

"""Seeded samplers and Monte-Carlo estimators for random numerical semigroups.

Three models:

* bernoulli-generator ("er"): each integer 1..M joins the generating set
  independently with probability p;
* multiplicity-pinned ("mult"): the multiplicity m is forced in, a random
  subset of [m+1, M] joins, and everything past M is adjoined;
* intersection ("inter"): each coprime pair 2 <= a < b <= N contributes the
  semigroup <a, b> to an intersection with probability p.

Seed contract (fixed for reproducibility across runs and any degree of
parallelism): all randomness derives from the splitmix64 finalizer

    mix64(z) = xor-shift/multiply finalizer of splitmix64

    trial_seed(master_seed, t)   = mix64(master_seed + (t+1) * GAMMA)
    decision_bits(trial_seed, j) = mix64(trial_seed xor ((j+1) * GAMMA))
    include  <=>  decision_bits < floor(p * 2^64)

where GAMMA = 0x9E3779B97F4A7C15 and all arithmetic is mod 2^64.  Decision
index j counts the model's candidate stream in its documented order
(ascending integers, or lexicographic coprime pairs).  The threshold form
makes p = 0 and p = 1 exact and inclusion monotone in p under common
random numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParams
from .semigroup import NumericalSemigroup, closure_members

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15

TRIVIAL = "trivial"
NON_COFINITE = "non_cofinite"
COFINITE = "cofinite"


def mix64(z):
    """splitmix64 finalizer: a fixed 64-bit bijective mixing function."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return (z ^ (z >> 31)) & MASK64


def trial_seed(master_seed, trial_index):
    return mix64(master_seed + (trial_index + 1) * GAMMA)


def decision_bits(seed, decision_index):
    return mix64(seed ^ ((decision_index + 1) * GAMMA & MASK64))


def _threshold(p):
    return int(p * 2**64)


@dataclass(frozen=True)
class ErParams:
    """Candidate ceiling M and inclusion probability p."""

    M: int
    p: float

    def __post_init__(self):
        if self.M < 1 or not 0 <= self.p <= 1:
            raise InvalidParams(f"need M >= 1 and 0 <= p <= 1, got {self}")


@dataclass(frozen=True)
class MultiplicityParams:
    """Forced multiplicity m, candidate ceiling M, inclusion probability p."""

    M: int
    m: int
    p: float

    def __post_init__(self):
        if not 2 <= self.m <= self.M or not 0 <= self.p <= 1:
            raise InvalidParams(f"need 2 <= m <= M and 0 <= p <= 1, got {self}")


@dataclass(frozen=True)
class IntersectionParams:
    """Pair ceiling N and inclusion probability p."""

    N: int
    p: float

    def __post_init__(self):
        if self.N < 3 or not 0 <= self.p <= 1:
            raise InvalidParams(f"need N >= 3 and 0 <= p <= 1, got {self}")


@dataclass(frozen=True)
class TrialReport:
    """One model draw: the selection, its classification, and the invariants
    of the resulting semigroup when it is cofinite."""

    selected: tuple
    classification: str
    min_gens: tuple | None = None
    embedding_dim: int | None = None
    genus: int | None = None
    frobenius: int | None = None


def classify_selection(selected):
    """Classify a drawn generating set and compute invariants if cofinite."""
    A = tuple(sorted(set(selected)))
    if not A:
        return TrialReport(A, TRIVIAL)
    if math.gcd(*A) > 1:
        return TrialReport(A, NON_COFINITE)
    S = NumericalSemigroup.from_generators(A)
    return TrialReport(A, COFINITE, S.min_gens, S.embedding_dim, S.genus, S.frobenius)


def sample_er(params, seed):
    """One bernoulli-generator draw: A = {n in 1..M : coin(n) < p}."""
    thr = _threshold(params.p)
    A = [n for n in range(1, params.M + 1) if decision_bits(seed, n - 1) < thr]
    return classify_selection(A)


def sample_multiplicity_model(params, seed):
    """One multiplicity-pinned draw.

    S = <{m} union A> union [M+1, oo) with A a Bernoulli subset of
    [m+1, M].  S equals the closure of {m} union A union [M+1, M+m], so the
    invariants come from an ordinary construction over that finite set;
    the result is always cofinite with multiplicity m and gaps inside
    [1, M].
    """
    M, m = params.M, params.m
    thr = _threshold(params.p)
    A = [n for j, n in enumerate(range(m + 1, M + 1)) if decision_bits(seed, j) < thr]
    gens = [m, *A, *range(M + 1, M + m + 1)]
    S = NumericalSemigroup.from_generators(gens)
    assert S.multiplicity == m and (not S.gaps or S.gaps[-1] <= M)
    return TrialReport(
        tuple(A), COFINITE, S.min_gens, S.embedding_dim, S.genus, S.frobenius
    )


def _coprime_pairs(N):
    return [
        (a, b)
        for a in range(2, N + 1)
        for b in range(a + 1, N + 1)
        if math.gcd(a, b) == 1
    ]


def sample_intersection_model(params, seed):
    """One intersection draw over the coprime pairs 2 <= a < b <= N.

    A non-member of the intersection is a non-member of some selected
    <a, b>, so the gap set is the union of the pairs' gap sets (each finite
    by the two-generator Frobenius formula).  The empty selection yields
    the full semigroup.  The selected field holds (a, b) pairs here.
    """
    thr = _threshold(params.p)
    pairs = _coprime_pairs(params.N)
    chosen = tuple(
        pair for j, pair in enumerate(pairs) if decision_bits(seed, j) < thr
    )
    gap_union = set()
    for a, b in chosen:
        frob = a * b - a - b
        member = closure_members((a, b), frob)
        gap_union.update(int(v) for v in np.flatnonzero(~member))
    if not gap_union:
        return TrialReport(chosen, COFINITE, (1,), 1, 0, -1)
    frob = max(gap_union)
    mult = min(v for v in range(1, frob + 2) if v not in gap_union)
    gens = [v for v in range(1, frob + mult + 1) if v > frob or v not in gap_union]
    S = NumericalSemigroup.from_generators(gens)
    assert S.frobenius == frob and S.genus == len(gap_union)
    return TrialReport(
        chosen, COFINITE, S.min_gens, S.embedding_dim, S.genus, S.frobenius
    )


_SAMPLERS = {
    ErParams: ("er", sample_er),
    MultiplicityParams: ("mult", sample_multiplicity_model),
    IntersectionParams: ("inter", sample_intersection_model),
}


def sample(params, seed):
    """Dispatch one draw by parameter type."""
    return _SAMPLERS[type(params)][1](params, seed)


def model_name(params):
    return _SAMPLERS[type(params)][0]


@dataclass(frozen=True)
class SampleStats:
    """Aggregated Monte-Carlo estimates over one parameter point.

    mean_e and mean_g are conditional on cofinite trials; ratio_lhs and
    ratio_rhs report mean_e against (p / (1-p)) * mean_g without any
    pass/fail judgement (the identity they mirror is a limit in M).
    """

    model: str
    params: tuple
    trials: int
    seed: int
    p_cofinite: float
    mean_e: float | None
    mean_g: float | None
    ratio_lhs: float | None
    ratio_rhs: float | None


def run_trials(params, trials, master_seed):
    """The independent trial reports, indexed 0..trials-1."""
    if trials < 1:
        raise InvalidParams("trials must be >= 1")
    return [sample(params, trial_seed(master_seed, t)) for t in range(trials)]


def aggregate(params, reports, master_seed):
    """Reduce trial reports to SampleStats.

    The reduction is a plain integer sum over the index-ordered reports, so
    the outcome is identical however the trials were executed.
    """
    cofinite = [r for r in reports if r.classification == COFINITE]
    p_cof = len(cofinite) / len(reports)
    mean_e = mean_g = ratio_rhs = None
    if cofinite:
        mean_e = sum(r.embedding_dim for r in cofinite) / len(cofinite)
        mean_g = sum(r.genus for r in cofinite) / len(cofinite)
        if params.p < 1:
            ratio_rhs = params.p / (1 - params.p) * mean_g
    return SampleStats(
        model=model_name(params),
        params=tuple(
            (name, getattr(params, name)) for name in type(params).__dataclass_fields__
        ),
        trials=len(reports),
        seed=master_seed,
        p_cofinite=p_cof,
        mean_e=mean_e,
        mean_g=mean_g,
        ratio_lhs=mean_e,
        ratio_rhs=ratio_rhs,
    )


def monte_carlo(params, trials, master_seed):
    """Aggregated estimates over seeded independent trials."""
    return aggregate(params, run_trials(params, trials, master_seed), master_seed)


def threshold_scan(M, p_values, trials, master_seed):
    """One SampleStats row per p, sharing the seed stream across the grid.

    Common random numbers make p_cofinite non-decreasing along an ascending
    grid, which turns the threshold statement into a testable property.
    """
    if list(p_values) != sorted(p_values):
        raise InvalidParams("p_values must be ascending")
    return [monte_carlo(ErParams(M, p), trials, master_seed) for p in p_values]


def model_sweep(param_grid, trials, master_seed):
    """Batch driver over any mix of model parameter points."""
    return [monte_carlo(params, trials, master_seed) for params in param_grid]

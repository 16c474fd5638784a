"""Factorization sets and every length-based invariant of semigroup elements.

Factorizations of n are the non-negative integer solutions of
sum_i x_i * n_i = n over the minimal generators.  Length sets, delta sets,
elasticities, norm extremes and length-multiset statistics are all derived
from them; closed-form recurrences replace enumeration wherever the extreme
lengths of large elements are eventually periodic.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import (
    BoundTooLarge,
    InsufficientData,
    NotMember,
    NotThreeGenerated,
    Overflow,
    ZeroElement,
)
from .semigroup import WORKING_RANGE, NumericalSemigroup

# Scans refuse to visit more candidate elements than this unless the caller
# raises the budget explicitly.
DEFAULT_BUDGET = 100_000_000

# Cap on value x length cells for the counting DP (keeps memory in the
# hundreds of MB at worst).
_MAX_TABLE_CELLS = 50_000_000


def _budget(budget):
    return DEFAULT_BUDGET if budget is None else budget


def _require_member(S, n):
    if n < 0 or not S.contains(n):
        raise NotMember(f"{n} is not an element of {S!r}", element=n)


# ---------------------------------------------------------------------------
# Factorization enumeration


def factorizations(S, n):
    """All exponent vectors over min_gens summing to n, in descending
    lexicographic order."""
    _require_member(S, n)
    gens = S.min_gens
    k = len(gens)
    out = []
    vec = [0] * k

    def descend(i, remaining):
        if i == k - 1:
            q, r = divmod(remaining, gens[i])
            if r == 0:
                vec[i] = q
                out.append(tuple(vec))
                vec[i] = 0
            return
        g = gens[i]
        for c in range(remaining // g, -1, -1):
            rest = remaining - c * g
            if not S.contains(rest):
                # rest cannot be covered by the remaining (larger) generators
                continue
            vec[i] = c
            descend(i + 1, rest)
        vec[i] = 0

    descend(0, n)
    return out


# ---------------------------------------------------------------------------
# Length presence DP (which lengths occur, without multiplicity)


def _presence_rows(gens, limit):
    """Yield (n, row) for n = 0..limit where row[l] is True iff n has a
    factorization of length l over gens.

    Rows live in a rolling ring buffer and are only valid until the
    iterator advances; callers needing persistence must copy.
    """
    width = limit // gens[0] + 2
    span = gens[-1] + 1
    ring = np.zeros((span, width), dtype=bool)
    ring[0, 0] = True
    yield 0, ring[0]
    for n in range(1, limit + 1):
        row = ring[n % span]
        row[:] = False
        for g in gens:
            if g <= n:
                np.logical_or(row[1:], ring[(n - g) % span][:-1], out=row[1:])
        yield n, row


def _final_presence_row(S, n, budget):
    if n + 1 > _budget(budget):
        raise BoundTooLarge(f"scan over {n + 1} candidates exceeds the budget")
    for v, row in _presence_rows(S.min_gens, n):
        if v == n:
            return row.copy()
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class LengthData:
    """Sorted length set of one element with its successive differences."""

    element: int
    lengths: tuple
    min_len: int
    max_len: int
    delta: tuple


def _deltas_of(lengths):
    return tuple(sorted({b - a for a, b in zip(lengths, lengths[1:])}))


def length_set(S, n, budget=None):
    """Distinct factorization lengths of n, ascending, with delta set."""
    _require_member(S, n)
    row = _final_presence_row(S, n, budget)
    lengths = tuple(int(v) for v in np.flatnonzero(row))
    return LengthData(n, lengths, lengths[0], lengths[-1], _deltas_of(lengths))


def length_sets_up_to(S, n_max, budget=None):
    """Yield (n, LengthData) for every member 0 < n <= n_max in one DP sweep.

    Equivalent to calling length_set per member but linear instead of
    quadratic in n_max.
    """
    if n_max + 1 > _budget(budget):
        raise BoundTooLarge(f"scan over {n_max + 1} candidates exceeds the budget")
    for n, row in _presence_rows(S.min_gens, n_max):
        if n == 0 or not S.contains(n):
            continue
        lengths = tuple(int(v) for v in np.flatnonzero(row))
        yield n, LengthData(n, lengths, lengths[0], lengths[-1], _deltas_of(lengths))


# ---------------------------------------------------------------------------
# Extreme lengths: windowed DP plus the shift recurrences for large elements


def _minmax_tables(gens, top):
    lo = [None] * (top + 1)
    hi = [None] * (top + 1)
    lo[0] = hi[0] = 0
    for v in range(1, top + 1):
        best_lo = best_hi = None
        for g in gens:
            if g > v or lo[v - g] is None:
                continue
            cand_lo, cand_hi = lo[v - g] + 1, hi[v - g] + 1
            if best_lo is None or cand_lo < best_lo:
                best_lo = cand_lo
            if best_hi is None or cand_hi > best_hi:
                best_hi = cand_hi
        lo[v], hi[v] = best_lo, best_hi
    return lo, hi


@lru_cache(maxsize=256)
def _length_window(S):
    # Beyond n_{k-1} * n_k the extreme lengths grow by exactly one per step
    # of n_k (minimum) resp. n_1 (maximum), so a window one step wide past
    # that threshold suffices.
    gens = S.min_gens
    top = gens[-2] * gens[-1] + gens[-1]
    lo, hi = _minmax_tables(gens, top)
    return lo, hi, top


def min_length(S, n):
    """Least factorization length of n."""
    _require_member(S, n)
    if S.embedding_dim == 1:
        return n  # the only one-generator semigroup is <1>
    lo, _, top = _length_window(S)
    if n <= top:
        return lo[n]
    nk = S.min_gens[-1]
    steps = (n - top + nk - 1) // nk
    return lo[n - steps * nk] + steps


def max_length(S, n):
    """Greatest factorization length of n."""
    _require_member(S, n)
    if S.embedding_dim == 1:
        return n
    _, hi, top = _length_window(S)
    if n <= top:
        return hi[n]
    n1 = S.min_gens[0]
    steps = (n - top + n1 - 1) // n1
    return hi[n - steps * n1] + steps


# ---------------------------------------------------------------------------
# Elasticity


@dataclass(frozen=True)
class ElasticityValue:
    """Exact ratio max length / min length of one element."""

    numerator: int
    denominator: int
    value: Fraction


def element_elasticity(S, n):
    _require_member(S, n)
    if n == 0:
        raise ZeroElement("elasticity is undefined for 0")
    hi, lo = max_length(S, n), min_length(S, n)
    return ElasticityValue(hi, lo, Fraction(hi, lo))


def semigroup_elasticity(S):
    """n_k / n_1, re-verified against the accepting element n_1 * n_k."""
    rho = Fraction(S.min_gens[-1], S.min_gens[0])
    witness = element_elasticity(S, S.min_gens[0] * S.min_gens[-1])
    if witness.value != rho:
        raise AssertionError(
            f"accepted-elasticity witness failed: rho({S.min_gens[0] * S.min_gens[-1]})"
            f" = {witness.value} != {rho}"
        )
    return rho


def elasticity_profile(S, n_max):
    """Ascending list of (n, elasticity) over members 0 < n <= n_max."""
    if n_max < S.multiplicity:
        raise ValueError("n_max below the multiplicity gives an empty profile")
    out = []
    for n in range(1, n_max + 1):
        if S.contains(n):
            out.append((n, element_elasticity(S, n).value))
    return out


# ---------------------------------------------------------------------------
# Delta sets


def delta_set(S, n, budget=None):
    """Successive differences of the length set of n (empty if unique length)."""
    return length_set(S, n, budget).delta


def _delta_scan_horizon(S):
    gens = S.min_gens
    k = len(gens)
    return 2 * k * gens[1] * gens[-1] ** 2 + gens[0] * gens[-1]


def semigroup_delta_set(S, budget=None):
    """Union of the per-element delta sets over the whole semigroup.

    The union over elements below N = 2k * n_2 * n_k^2 + n_1 * n_k is the
    full delta set because the per-element sets repeat with period
    n_1 * n_k from N on; that periodicity is re-checked on the band
    [N, N + n_1 * n_k) and a mismatch aborts loudly.
    """
    if S.embedding_dim == 1:
        return ()
    gens = S.min_gens
    period = gens[0] * gens[-1]
    horizon = _delta_scan_horizon(S)
    if horizon > WORKING_RANGE:
        raise Overflow(f"delta scan horizon {horizon} exceeds the working range")
    limit = horizon + period - 1
    if limit + 1 > _budget(budget):
        raise BoundTooLarge(
            f"delta scan over {limit + 1} candidates exceeds the budget "
            f"({_budget(budget)}); raise it explicitly to proceed"
        )
    union = set()
    band = {}
    for n, row in _presence_rows(gens, limit):
        if n == 0 or not S.contains(n):
            continue
        idx = np.flatnonzero(row)
        deltas = tuple(int(d) for d in np.unique(np.diff(idx))) if len(idx) > 1 else ()
        if n < horizon:
            union.update(deltas)
        if n >= horizon - period:
            band[n] = deltas
    for n in range(horizon, horizon + period):
        if S.contains(n) and band[n] != band[n - period]:
            raise AssertionError(
                f"delta periodicity self-check failed at {n}: "
                f"{band[n]} != {band[n - period]}"
            )
    return tuple(sorted(union))


def delta_sequence(S, n_max, budget=None):
    """Plot-ready list of (n, delta set of n) over members up to n_max."""
    if n_max < S.multiplicity:
        raise ValueError("n_max below the multiplicity gives an empty sequence")
    if n_max + 1 > _budget(budget):
        raise BoundTooLarge(f"scan over {n_max + 1} candidates exceeds the budget")
    out = []
    for n, row in _presence_rows(S.min_gens, n_max):
        if n == 0 or not S.contains(n):
            continue
        idx = np.flatnonzero(row)
        deltas = tuple(int(d) for d in np.unique(np.diff(idx))) if len(idx) > 1 else ()
        out.append((n, deltas))
    return out


# ---------------------------------------------------------------------------
# Norm extremes


def _bounded_reachable(gens, n, cap):
    # Is n a sum of generators with every exponent <= cap?  Binary-split
    # bounded knapsack over a bitset.
    mask = (1 << (n + 1)) - 1
    bits = 1
    for g in gens:
        remaining = cap
        part = 1
        while remaining > 0:
            take = min(part, remaining)
            bits |= (bits << (take * g)) & mask
            remaining -= take
            part <<= 1
    return bool((bits >> n) & 1)


def _sup_norm_min(S, n):
    if n == 0:
        return 0
    gens = S.min_gens
    lo = -(-n // sum(gens))
    hi = n // gens[0]
    while lo < hi:
        mid = (lo + hi) // 2
        if _bounded_reachable(gens, n, mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def _sup_norm_max(S, n):
    best = 0
    for g in S.min_gens:
        for t in range(n // g, -1, -1):
            if S.contains(n - t * g):
                best = max(best, t)
                break
    return best


def norm_extremes(S, n, r):
    """(min, max) over factorizations of n of the r-th power sum of the
    exponents, or of the largest exponent when r is math.inf."""
    _require_member(S, n)
    if r == math.inf:
        return _sup_norm_min(S, n), _sup_norm_max(S, n)
    if not isinstance(r, int) or r < 1:
        raise ValueError("r must be an integer >= 1 or math.inf")
    gens = S.min_gens
    k = len(gens)
    memo = {}

    def extremes(i, remaining):
        if i == k - 1:
            q, rem = divmod(remaining, gens[i])
            return (q**r, q**r) if rem == 0 else None
        key = (i, remaining)
        if key in memo:
            return memo[key]
        best = None
        for c in range(remaining // gens[i] + 1):
            sub = extremes(i + 1, remaining - c * gens[i])
            if sub is None:
                continue
            lo, hi = c**r + sub[0], c**r + sub[1]
            best = (lo, hi) if best is None else (min(best[0], lo), max(best[1], hi))
        memo[key] = best
        return best

    result = extremes(0, n)
    assert result is not None
    return result


# ---------------------------------------------------------------------------
# Counting elements by length


def count_by_length(S, length, budget=None):
    """Number of members whose length set contains the given length.

    Any such member lies in [n_1 * length, n_k * length], so one DP sweep
    over that range answers the query.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    gens = S.min_gens
    limit = gens[-1] * length
    if limit + 1 > _budget(budget):
        raise BoundTooLarge(f"scan over {limit + 1} candidates exceeds the budget")
    lower = gens[0] * length
    count = 0
    for n, row in _presence_rows(gens, limit):
        if n >= lower and row[length]:
            count += 1
    return count


# ---------------------------------------------------------------------------
# Length multisets and their statistics


@dataclass(frozen=True)
class LengthMultiset:
    """Factorization lengths of one element counted with multiplicity."""

    element: int
    counts: dict
    total: int


def length_multiset(S, n, budget=None):
    """Histogram length -> number of factorizations of n with that length."""
    _require_member(S, n)
    gens = S.min_gens
    if n + 1 > _budget(budget):
        raise BoundTooLarge(f"scan over {n + 1} candidates exceeds the budget")
    width = n // gens[0] + 2
    if (n + 1) * width > _MAX_TABLE_CELLS:
        raise BoundTooLarge(
            f"counting table of {(n + 1) * width} cells exceeds the cap"
        )
    crude = 1
    for g in gens:
        crude *= n // g + 1
    if crude >= WORKING_RANGE:
        raise Overflow("factorization counts may exceed the 64-bit working range")
    table = np.zeros((n + 1, width), dtype=np.int64)
    table[0, 0] = 1
    for g in gens:
        for v in range(g, n + 1):
            table[v, 1:] += table[v - g, :-1]
    counts = {int(l): int(table[n, l]) for l in np.flatnonzero(table[n])}
    return LengthMultiset(n, counts, sum(counts.values()))


def mean_length(S, n, budget=None):
    """Exact mean of the length multiset of n."""
    if n == 0:
        raise ZeroElement("mean length is undefined for 0")
    ms = length_multiset(S, n, budget)
    return Fraction(sum(l * c for l, c in ms.counts.items()), ms.total)


def median_length(S, n, budget=None):
    """Exact median of the length multiset (midpoint average on ties)."""
    if n == 0:
        raise ZeroElement("median length is undefined for 0")
    ms = length_multiset(S, n, budget)
    total = ms.total
    lower_pos = (total + 1) // 2
    upper_pos = total // 2 + 1
    seen = 0
    lower = upper = None
    for l in sorted(ms.counts):
        seen += ms.counts[l]
        if lower is None and seen >= lower_pos:
            lower = l
        if upper is None and seen >= upper_pos:
            upper = l
            break
    return Fraction(lower + upper, 2)


def mean_length_slope(S):
    """Limit of mean length / n: the average of the generator reciprocals."""
    gens = S.min_gens
    return Fraction(sum(Fraction(1, g) for g in gens), len(gens))


def fulcrum_constant(S):
    """n_1(n_3 - n_2) / (n_2(n_3 - n_1)) for a 3-generated semigroup."""
    if S.embedding_dim != 3:
        raise NotThreeGenerated(
            f"fulcrum constant needs embedding dimension 3, got {S.embedding_dim}"
        )
    n1, n2, n3 = S.min_gens
    return Fraction(n1 * (n3 - n2), n2 * (n3 - n1))


def median_length_slope(S):
    """Limit of median length / n for a 3-generated semigroup.

    The fulcrum constant selects the branch; the two branches agree at 1/2.
    The value is irrational in general, so this is the one invariant
    returned as a float.
    """
    f = fulcrum_constant(S)
    n1, n3 = S.min_gens[0], S.min_gens[2]
    if f <= Fraction(1, 2):
        s = math.sqrt((1 - f) / 2)
        return (1 - s) / n1 + s / n3
    s = math.sqrt(f / 2)
    return s / n1 + (1 - s) / n3


# ---------------------------------------------------------------------------
# Empirical quasilinearity probe


@dataclass(frozen=True)
class QuasilinearProbe:
    """Outcome of fitting value(n) = slope*n + a periodic residual table."""

    periodic: bool
    onset: int
    residuals: dict
    residual_series: tuple


def probe_quasilinear(sequence, period, degree):
    """Check whether a sampled integer sequence is eventually quasilinear.

    For degree 1 the fitted slope is 1/period (one unit of growth per
    period, the shape every length invariant here takes); degree 0 fits a
    constant.  The residual value(n) - slope*n is grouped by n mod period;
    the probe reports the smallest n from which every class's residual has
    stabilized, plus the stabilized residual table.
    """
    if period < 1:
        raise ValueError("period must be >= 1")
    if degree not in (0, 1):
        raise ValueError("degree must be 0 or 1")
    if not sequence:
        raise ValueError("sequence must be non-empty")
    points = list(sequence)
    if any(b[0] <= a[0] for a, b in zip(points, points[1:])):
        raise ValueError("sequence must be strictly ascending in n")
    slope = Fraction(1, period) if degree == 1 else Fraction(0)
    residuals = [(n, Fraction(v) - slope * n) for n, v in points]
    by_class = defaultdict(list)
    for n, r in residuals:
        by_class[n % period].append((n, r))
    onset = 0
    for items in by_class.values():
        last = items[-1][1]
        stable_from = items[-1][0]
        for n, r in reversed(items):
            if r != last:
                break
            stable_from = n
        onset = max(onset, stable_from)
    if residuals[-1][0] - onset < 3 * period:
        raise InsufficientData(
            f"need 3 full periods beyond the detected onset {onset}, "
            f"have data up to {residuals[-1][0]}"
        )
    table = {c: by_class[c][-1][1] for c in sorted(by_class)}
    return QuasilinearProbe(True, onset, table, tuple(residuals))

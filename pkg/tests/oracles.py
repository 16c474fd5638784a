"""Independent brute-force oracles used to cross-check the library.

Everything here is deliberately naive (plain loops, itertools, no bitsets,
no recurrences) so that agreement with the library is meaningful.
"""

import itertools
import math


def brute_members(gens, limit):
    """Reachability by the textbook one-cell-at-a-time DP."""
    reachable = [False] * (limit + 1)
    reachable[0] = True
    for v in range(1, limit + 1):
        reachable[v] = any(g <= v and reachable[v - g] for g in gens)
    return reachable


def brute_factorizations(gens, n):
    """Exhaustive product over exponent boxes, filtered by the defining sum."""
    ranges = [range(n // g + 1) for g in gens]
    return sorted(
        (vec for vec in itertools.product(*ranges)
         if sum(c * g for c, g in zip(vec, gens)) == n),
        reverse=True,
    )


def brute_length_set(gens, n):
    return sorted({sum(vec) for vec in brute_factorizations(gens, n)})


def brute_length_multiset(gens, n):
    counts = {}
    for vec in brute_factorizations(gens, n):
        counts[sum(vec)] = counts.get(sum(vec), 0) + 1
    return counts


def brute_min_max_lengths(gens, limit):
    """Coin-change DP arrays (None where unreachable), written from scratch."""
    lo = [None] * (limit + 1)
    hi = [None] * (limit + 1)
    lo[0] = hi[0] = 0
    for v in range(1, limit + 1):
        for g in gens:
            if g <= v and lo[v - g] is not None:
                if lo[v] is None or lo[v - g] + 1 < lo[v]:
                    lo[v] = lo[v - g] + 1
                if hi[v] is None or hi[v - g] + 1 > hi[v]:
                    hi[v] = hi[v - g] + 1
    return lo, hi


def brute_minimal_generators(gens):
    """Drop g iff it lies in the closure of the remaining generators."""
    vals = sorted(set(gens))
    kept = []
    for g in vals:
        others = [h for h in vals if h != g]
        if others and brute_members(others, g)[g]:
            continue
        kept.append(g)
    return kept


def brute_delta_set(gens, n_bound):
    """Union of per-element delta sets over members up to n_bound."""
    union = set()
    for n in range(1, n_bound + 1):
        lengths = brute_length_set(gens, n)
        union.update(b - a for a, b in zip(lengths, lengths[1:]))
    return sorted(union)


def random_semigroup_gens(rng, max_k=4, max_gen=25):
    """A random generator tuple with gcd 1 (by rejection)."""
    while True:
        k = rng.randint(2, max_k)
        gens = sorted(rng.sample(range(2, max_gen + 1), k))
        if math.gcd(*gens) == 1:
            return gens

"""Numerical semigroups: construction, membership, and basic invariants.

A numerical semigroup is an additively closed subset of the non-negative
integers with finite complement.  Construction reduces any generating set
to the unique minimal one and caches the residue-minima table (least
positive element in each class mod the multiplicity), which makes
membership and the Frobenius number O(1) lookups.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import GcdNotOne, NotCoprime, Overflow

# Derived bounds (notably the delta-set scan horizon) must stay inside the
# signed 64-bit range so downstream array indexing cannot wrap.
WORKING_RANGE = 1 << 62


def _closure_bitset(gens, limit):
    # Reachability DP on [0, limit]: bit v of the result is set iff v is a
    # non-negative combination of gens.  Doubling the shift per generator
    # covers any multiple up to limit in O(log(limit/g)) big-int ops.
    mask = (1 << (limit + 1)) - 1
    bits = 1
    for g in gens:
        shift = g
        while shift <= limit:
            bits |= (bits << shift) & mask
            shift <<= 1
    return bits


def closure_members(gens, limit):
    """Boolean array a of length limit+1 with a[v] = True iff v in <gens>."""
    gens = sorted(set(gens))
    if not gens or min(gens) < 1:
        raise ValueError("generators must be integers >= 1")
    bits = _closure_bitset(gens, limit)
    raw = np.frombuffer(bits.to_bytes(limit // 8 + 1, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[: limit + 1].astype(bool)


def minimal_generators(values):
    """Reduce a generating set to the unique minimal one (sorted ascending).

    Duplicates and ordering are normalized away.  gcd > 1 is allowed here:
    the result still minimally generates the same additive closure.
    """
    vals = sorted(set(values))
    if not vals:
        raise ValueError("generator list must be non-empty")
    if vals[0] < 1:
        raise ValueError("generators must be integers >= 1")
    member = closure_members(vals, vals[-1])
    kept = []
    for g in vals:
        # g is redundant iff it splits as a sum of two positive members.
        if g >= 2 and bool(np.any(member[1:g] & member[g - 1 : 0 : -1])):
            continue
        kept.append(g)
    return kept


def sylvester_frobenius(a, b):
    """Frobenius number ab - a - b of <a, b> without building the semigroup."""
    if not (2 <= a < b):
        raise ValueError("need 2 <= a < b")
    if math.gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) = {math.gcd(a, b)}")
    return a * b - a - b


@dataclass(frozen=True)
class NumericalSemigroup:
    """Immutable numerical semigroup with cached invariants.

    min_gens       -- strictly increasing minimal generators n_1 < ... < n_k
    multiplicity   -- n_1, the least positive element
    embedding_dim  -- k, the number of minimal generators
    residue_minima -- entry i is the least positive element congruent to
                      i mod multiplicity (entry 0 is the multiplicity itself)
    frobenius      -- largest non-member, -1 when the semigroup is all of Z>=0
    gaps           -- sorted non-members; genus is their count
    """

    min_gens: tuple
    multiplicity: int
    embedding_dim: int
    residue_minima: tuple
    frobenius: int
    gaps: tuple
    genus: int

    @classmethod
    def from_generators(cls, values):
        vals = sorted(set(values))
        if not vals or vals[0] < 1:
            raise ValueError("generators must be integers >= 1")
        # Guard before any DP allocation, then again on the reduced set
        # (reduction can move the second-smallest generator either way).
        pre = (
            2 * len(vals) * vals[1] * vals[-1] ** 2 + vals[0] * vals[-1]
            if len(vals) >= 2
            else vals[-1] ** 2
        )
        if pre > WORKING_RANGE:
            raise Overflow(f"derived bound {pre} exceeds the working range")
        gens = tuple(minimal_generators(vals))
        if math.gcd(*gens) != 1:
            raise GcdNotOne(
                f"generators {vals} have gcd {math.gcd(*gens)}; "
                "the complement would be infinite"
            )
        m, k = gens[0], len(gens)
        bound = 2 * k * gens[1] * gens[-1] ** 2 + m * gens[-1] if k >= 2 else m
        if bound > WORKING_RANGE:
            raise Overflow(f"derived bound {bound} exceeds the working range")
        if m == 1:
            return cls((1,), 1, 1, (1,), -1, (), 0)
        member = closure_members(gens, m * gens[-1])
        minima = [m] * m
        for i in range(1, m):
            first = np.flatnonzero(member[i :: m])[0]
            minima[i] = i + int(first) * m
        frob = max(minima) - m
        gaps = tuple(int(v) for v in np.flatnonzero(~member[: frob + 1]))
        assert k <= m and len(gaps) > 0 and gaps[-1] == frob
        return cls(gens, m, k, tuple(minima), frob, gaps, len(gaps))

    def contains(self, n):
        """Membership test via the residue-minima table."""
        if n < 0:
            raise ValueError("membership is defined for n >= 0")
        return n == 0 or n >= self.residue_minima[n % self.multiplicity]

    def members_up_to(self, limit):
        """Sorted list of all members in [0, limit]."""
        return [n for n in range(limit + 1) if self.contains(n)]

    def __repr__(self):
        return f"NumericalSemigroup<{', '.join(map(str, self.min_gens))}>"

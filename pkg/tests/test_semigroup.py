import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from numsgps import (
    GcdNotOne,
    NotCoprime,
    NumericalSemigroup,
    Overflow,
    closure_members,
    minimal_generators,
    sylvester_frobenius,
)
from oracles import brute_members, brute_minimal_generators

gen_lists = st.lists(st.integers(1, 40), min_size=1, max_size=6)


def test_minimal_generators_known_reductions():
    assert minimal_generators([5, 8, 16, 24, 32]) == [5, 8]
    assert minimal_generators([2, 3, 4]) == [2, 3]
    assert minimal_generators([6, 9, 20]) == [6, 9, 20]
    assert minimal_generators([7]) == [7]


def test_minimal_generators_normalizes_input():
    assert minimal_generators([20, 9, 6, 9, 20]) == [6, 9, 20]
    assert minimal_generators([4, 2, 2]) == [2]


def test_minimal_generators_rejects_bad_input():
    with pytest.raises(ValueError):
        minimal_generators([])
    with pytest.raises(ValueError):
        minimal_generators([0, 3])


@given(gen_lists)
def test_minimal_generators_idempotent_and_order_insensitive(gens):
    reduced = minimal_generators(gens)
    assert minimal_generators(reduced) == reduced
    shuffled = list(reversed(gens))
    assert minimal_generators(shuffled) == reduced


@given(gen_lists)
@settings(max_examples=60)
def test_minimal_generators_matches_oracle(gens):
    assert minimal_generators(gens) == brute_minimal_generators(gens)


def test_construction_mcnugget():
    S = NumericalSemigroup.from_generators([6, 9, 20])
    assert S.frobenius == 43
    assert S.multiplicity == 6
    assert S.embedding_dim == 3
    assert S.genus == 22
    assert S.residue_minima[2] == 20
    assert S.residue_minima[0] == 6
    assert all(v % 6 == i for i, v in enumerate(S.residue_minima))


def test_construction_rejects_gcd():
    with pytest.raises(GcdNotOne):
        NumericalSemigroup.from_generators([2, 4])
    with pytest.raises(GcdNotOne):
        NumericalSemigroup.from_generators([7])


def test_construction_rejects_oversized_bounds():
    with pytest.raises(Overflow):
        NumericalSemigroup.from_generators([2, 3 * 10**20 + 1])


def test_full_semigroroup_conventions():
    S = NumericalSemigroup.from_generators([1])
    assert S.frobenius == -1
    assert S.gaps == ()
    assert S.genus == 0
    assert (S.multiplicity, S.embedding_dim) == (1, 1)
    assert S.contains(0) and S.contains(1) and S.contains(10**9)


def test_membership_examples():
    McN = NumericalSemigroup.from_generators([6, 9, 20])
    assert not McN.contains(43)
    assert McN.contains(44)
    assert McN.contains(0)
    S = NumericalSemigroup.from_generators([3, 7])
    assert not S.contains(11)
    assert all(S.contains(n) for n in range(12, 40))


def test_gaps_examples():
    assert NumericalSemigroup.from_generators([2, 3]).gaps == (1,)
    S = NumericalSemigroup.from_generators([3, 7])
    assert S.gaps == (1, 2, 4, 5, 8, 11)
    assert S.genus == 6
    assert S.gaps == tuple(
        n for n in range(1, 12) if not brute_members([3, 7], 11)[n]
    )


def test_residue_minima_two_generators():
    S = NumericalSemigroup.from_generators([5, 8])
    assert S.residue_minima == (5, 16, 32, 8, 24)
    assert S.frobenius == 27
    assert NumericalSemigroup.from_generators([2, 3]).residue_minima == (2, 3)


def test_multiplicity_embedding_dim():
    assert NumericalSemigroup.from_generators([2, 3, 4]).min_gens == (2, 3)
    S = NumericalSemigroup.from_generators([6, 9, 20])
    assert (S.multiplicity, S.embedding_dim) == (6, 3)


def test_sylvester_formula_values():
    assert sylvester_frobenius(2, 3) == 1
    assert sylvester_frobenius(3, 7) == 11
    assert sylvester_frobenius(5, 8) == 27
    with pytest.raises(NotCoprime):
        sylvester_frobenius(4, 6)
    with pytest.raises(ValueError):
        sylvester_frobenius(3, 3)


@given(st.integers(2, 30), st.integers(2, 30))
def test_sylvester_matches_construction(a, b):
    if a >= b or math.gcd(a, b) != 1:
        return
    S = NumericalSemigroup.from_generators([a, b])
    assert S.frobenius == sylvester_frobenius(a, b)


@given(gen_lists)
@settings(max_examples=60)
def test_membership_matches_dp_oracle(gens):
    if math.gcd(*gens) != 1:
        return
    S = NumericalSemigroup.from_generators(gens)
    limit = max(S.frobenius, 0) + 2 * S.multiplicity
    oracle = brute_members(S.min_gens, limit)
    for n in range(limit + 1):
        assert S.contains(n) == oracle[n]


@given(gen_lists)
def test_embedding_dim_at_most_multiplicity(gens):
    if math.gcd(*gens) != 1:
        return
    S = NumericalSemigroup.from_generators(gens)
    assert S.embedding_dim <= S.multiplicity
    assert len(set(g % S.multiplicity for g in S.min_gens)) == S.embedding_dim


def test_frobenius_consistency_with_gaps():
    rng = random.Random(7)
    for _ in range(25):
        gens = sorted(rng.sample(range(2, 30), rng.randint(2, 4)))
        if math.gcd(*gens) != 1:
            continue
        S = NumericalSemigroup.from_generators(gens)
        assert S.frobenius == max(S.gaps)
        assert S.frobenius == max(S.residue_minima) - S.multiplicity
        assert all(S.contains(n) for n in range(S.frobenius + 1, S.frobenius + 50))


def test_closure_members_prefix():
    arr = closure_members([3, 7], 15)
    expected = [True, False, False, True, False, False, True, True,
                False, True, True, False, True, True, True, True]
    assert arr.tolist() == expected
    assert isinstance(arr, np.ndarray)


def test_members_up_to():
    S = NumericalSemigroup.from_generators([7, 10, 12])
    members = S.members_up_to(30)
    assert members == [0, 7, 10, 12, 14, 17, 19, 20, 21, 22, 24, 26, 27, 28, 29, 30]

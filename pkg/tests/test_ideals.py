from __future__ import annotations

from functools import reduce
from itertools import combinations

import pytest

from semiring_lab import catalog
from semiring_lab.core import FiniteSemiring
from semiring_lab.ideals import (
    DEFAULT_IDEAL_CAP,
    Ideal,
    NotAnIdeal,
    ParentMismatchError,
    ResourceLimitError,
    all_ideals,
    hasse_dot,
    ideal_generated_by,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    is_local,
    is_maximal,
    is_prime,
    is_radical,
    maximal_ideals,
    nonunits,
    prime_ideals,
    radical_via_krull,
    radical_via_primes,
    variety,
    whole,
    zero_ideal,
)


def _ideal(S: FiniteSemiring, members) -> Ideal:
    mask = 0
    for m in members:
        mask |= 1 << m
    return Ideal(S, mask)


def _sets(ideals):
    return {frozenset(a.members) for a in ideals}


# ---- independent oracles: everything below works on plain Python sets


def oracle_ideals(S):
    out = set()
    E = list(S.elements)
    for k in range(1, S.order + 1):
        for sub in combinations(E, k):
            s = set(sub)
            if all(S.add[x][y] in s for x in s for y in s) and all(S.mul[r][x] in s for r in E for x in s):
                out.add(frozenset(s))
    return out


def oracle_is_prime(S, p):
    if len(p) == S.order:
        return False
    return all(a in p or b in p for a in S.elements for b in S.elements if S.mul[a][b] in p)


def oracle_radical(S, a):
    out = set()
    for s in S.elements:
        p = s
        for _ in range(S.order + 1):
            if p in a:
                out.add(s)
                break
            p = S.mul[p][s]
    return frozenset(out)


# ---- worked examples


def test_generated_examples():
    Z4, Z6 = catalog.integers_mod(4), catalog.integers_mod(6)
    assert ideal_generated_by(Z4, {2}).members == {0, 2}
    assert ideal_generated_by(Z6, {2, 3}).members == set(range(6))
    for S in catalog.load_catalog():
        assert ideal_generated_by(S, {S.zero}).members == {S.zero}
        assert ideal_generated_by(S, ()).members == {S.zero}


def test_all_ideals_examples():
    assert _sets(all_ideals(catalog.boolean())) == {frozenset({0}), frozenset({0, 1})}
    assert [a.sorted_members() for a in all_ideals(catalog.integers_mod(4))] == [(0,), (0, 2), (0, 1, 2, 3)]
    assert _sets(all_ideals(catalog.integers_mod(6))) == {
        frozenset({0}), frozenset({0, 2, 4}), frozenset({0, 3}), frozenset(range(6))
    }


def test_all_ideals_cap():
    big = catalog.integers_mod(11)
    with pytest.raises(ResourceLimitError):
        all_ideals(big)
    assert len(all_ideals(big, cap=11)) == 2
    assert DEFAULT_IDEAL_CAP == 10


def test_arithmetic_examples():
    Z6 = catalog.integers_mod(6)
    a, b = _ideal(Z6, {0, 2, 4}), _ideal(Z6, {0, 3})
    assert ideal_intersection(a, b).members == {0}
    assert ideal_product(a, b).members == {0}
    assert ideal_sum(a, b) == whole(Z6)
    for S in catalog.load_catalog():
        for c in all_ideals(S):
            assert ideal_product(zero_ideal(S), c) == zero_ideal(S)


def test_parent_mismatch():
    with pytest.raises(ParentMismatchError):
        ideal_sum(whole(catalog.integers_mod(4)), whole(catalog.integers_mod(6)))


def test_prime_examples():
    Z4, Z6, C3 = catalog.integers_mod(4), catalog.integers_mod(6), catalog.c3()
    assert is_prime(_ideal(Z6, {0, 3}))
    assert not is_prime(_ideal(Z4, {0}))
    a = C3.labels.index("a")
    assert is_prime(_ideal(C3, {C3.zero, a}))
    assert not is_prime(whole(Z6))


def test_maximal_examples():
    Z6, B = catalog.integers_mod(6), catalog.boolean()
    assert is_maximal(_ideal(Z6, {0, 2, 4}))
    assert not is_maximal(_ideal(Z6, {0}))
    assert is_maximal(_ideal(B, {0}))


def test_variety_examples():
    Z4, Z6 = catalog.integers_mod(4), catalog.integers_mod(6)
    assert _sets(variety(_ideal(Z6, {0}))) == {frozenset({0, 2, 4}), frozenset({0, 3})}
    assert _sets(variety(_ideal(Z4, {0, 2}))) == {frozenset({0, 2})}
    for S in catalog.load_catalog():
        assert variety(whole(S)) == ()


def test_radical_examples():
    Z4, Z6 = catalog.integers_mod(4), catalog.integers_mod(6)
    for route in (radical_via_primes, radical_via_krull):
        assert route(_ideal(Z4, {0})).members == {0, 2}
        assert route(_ideal(Z6, {0})).members == {0}
        for S in catalog.load_catalog():
            assert route(whole(S)) == whole(S)


def test_nonunits_examples():
    assert nonunits(catalog.integers_mod(4)).members == {0, 2}
    n6 = nonunits(catalog.integers_mod(6))
    assert isinstance(n6, NotAnIdeal) and n6.witness == (2, 3)
    assert nonunits(catalog.boolean()).members == {0}


# ---- oracle agreement over the corpus


def test_all_ideals_match_subset_oracle(corpus):
    for S in corpus:
        assert _sets(all_ideals(S)) == oracle_ideals(S), S.name


def test_all_ideals_each_once_and_sorted(corpus):
    for S in corpus:
        ideals = all_ideals(S)
        assert len(set(ideals)) == len(ideals)
        assert list(ideals) == sorted(ideals, key=Ideal.sort_key)
        assert ideals[0] == zero_ideal(S) and ideals[-1] == whole(S)
        assert all(S.zero in a for a in ideals)


def test_primes_match_oracle(corpus):
    for S in corpus:
        expected = {a for a in oracle_ideals(S) if oracle_is_prime(S, a)}
        assert _sets(prime_ideals(S)) == expected, S.name


def test_maximal_match_oracle(corpus):
    for S in corpus:
        ideals = oracle_ideals(S)
        full = frozenset(S.elements)
        expected = {m for m in ideals if m != full and not any(m < c < full for c in ideals)}
        assert _sets(maximal_ideals(S)) == expected


def test_radical_routes_match_oracle(corpus):
    for S in corpus:
        for a in all_ideals(S):
            expected = oracle_radical(S, a.members)
            assert radical_via_krull(a).members == expected
            assert radical_via_primes(a).members == expected


def test_intersections_of_primes_are_radical(corpus):
    for S in corpus:
        P = prime_ideals(S)
        for k in range(1, len(P) + 1):
            for combo in combinations(P, k):
                assert is_radical(reduce(ideal_intersection, combo))


def test_products_of_primes_counterexamples():
    """A product of primes need not be radical; these are the smallest cases in the corpus."""
    Z4 = catalog.integers_mod(4)
    p = _ideal(Z4, {0, 2})
    assert is_prime(p)
    sq = ideal_product(p, p)
    assert sq.members == {0} and radical_via_krull(sq).members == {0, 2}


def test_products_of_incomparable_primes_radical(corpus):
    for S in corpus:
        P = prime_ideals(S)
        for k in range(1, len(P) + 1):
            for combo in combinations(P, k):
                if all(not a.comparable(b) for a, b in combinations(combo, 2)):
                    assert is_radical(reduce(ideal_product, combo)), (S.name, combo)


def test_prime_over_product_contains_a_factor(corpus):
    for S in corpus:
        ideals = all_ideals(S)
        for p in prime_ideals(S):
            for a in ideals:
                for b in ideals:
                    if ideal_product(a, b) <= p:
                        assert a <= p or b <= p


def test_product_inside_intersection(corpus):
    for S in corpus:
        ideals = all_ideals(S)
        for a in ideals:
            for b in ideals:
                assert ideal_product(a, b) <= ideal_intersection(a, b)


def test_is_local_matches_nonunits(corpus):
    for S in corpus:
        assert is_local(S).holds == isinstance(nonunits(S), Ideal)


def test_hasse_dot_shapes():
    z4 = hasse_dot(catalog.integers_mod(4))
    assert z4.count("[label=") == 3 and z4.count("->") == 2
    z6 = hasse_dot(catalog.integers_mod(6))
    assert z6.count("[label=") == 4 and z6.count("->") == 4
    b = hasse_dot(catalog.boolean())
    assert b.count("[label=") == 2 and b.count("->") == 1
    primes = hasse_dot(catalog.integers_mod(6), primes_only=True)
    assert primes.count("[label=") == 2 and "->" not in primes
    assert z4.startswith("digraph") and z4.rstrip().endswith("}")

from __future__ import annotations

import pytest

from semiring_lab import catalog
from semiring_lab.ideals import all_ideals, is_prime, zero_ideal
from semiring_lab.semifield import (
    build_fraction_semifield,
    finite_collapse,
    is_pvs,
    is_pvs_char1,
    is_strongly_prime,
    lemma_xinverse_check,
    subsetlocal_check,
    thmlop_hypothesis_check,
)
from semiring_lab.verdict import PreconditionError


def oracle_class_count(S) -> int:
    """Number of classes of a/b ~ c/d iff ad = cb, by union-find over all pairs."""
    pairs = [(a, b) for a in S.elements for b in S.elements if b != S.zero]
    parent = {p: p for p in pairs}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    for a, b in pairs:
        for c, d in pairs:
            if S.mul[a][d] == S.mul[c][b]:
                parent[find((a, b))] = find((c, d))
    return len({find(p) for p in pairs})


def test_examples_sizes():
    assert build_fraction_semifield(catalog.boolean()).size == 2
    F3 = build_fraction_semifield(catalog.integers_mod(3))
    assert F3.size == 3 and sorted(F3.embed) == list(F3.classes)
    with pytest.raises(PreconditionError):
        build_fraction_semifield(catalog.integers_mod(4))


def test_class_count_matches_oracle(semidomains):
    for S in semidomains:
        assert build_fraction_semifield(S).size == oracle_class_count(S)


def test_representatives_are_lex_smallest(semidomains):
    for S in semidomains:
        F = build_fraction_semifield(S)
        for (a, b), c in F.class_of.items():
            r = F.reps[c]
            assert (r.num, r.den) <= (a, b)


def test_arithmetic_is_representative_independent(semidomains):
    for S in semidomains:
        F = build_fraction_semifield(S)
        M, A = S.mul, S.add
        for (a, b), x in F.class_of.items():
            for (c, d), y in F.class_of.items():
                assert F.mul[x][y] == F.of(M[a][c], M[b][d])
                assert F.add[x][y] == F.of(A[M[a][d]][M[c][b]], M[b][d])


def test_semifield_and_embedding(semidomains):
    for S in semidomains:
        F = build_fraction_semifield(S)
        for c in F.classes:
            if c != F.zero:
                assert F.mul[c][F.inverse(c)] == F.one
        assert len(set(F.embed)) == S.order
        for a in S.elements:
            for b in S.elements:
                assert F.embed[S.mul[a][b]] == F.mul[F.embed[a]][F.embed[b]]
                assert F.embed[S.add[a][b]] == F.add[F.embed[a]][F.embed[b]]


def test_strongly_prime_examples():
    B, Z5 = catalog.boolean(), catalog.integers_mod(5)
    assert is_strongly_prime(build_fraction_semifield(B), zero_ideal(B)).holds
    assert is_strongly_prime(build_fraction_semifield(Z5), zero_ideal(Z5)).holds


def test_pvs_routes(semidomains):
    for S in semidomains:
        assert is_pvs(S).holds
        assert is_pvs_char1(S).holds


def test_local_hypotheses_examples():
    for S in (catalog.integers_mod(3), catalog.boolean()):
        assert subsetlocal_check(S).holds
        assert thmlop_hypothesis_check(S).holds


def test_xinverse_vacuous():
    for S in (catalog.integers_mod(5), catalog.boolean()):
        v = lemma_xinverse_check(S)
        assert v.holds and v.vacuous


def test_collapse_everywhere(semidomains):
    for S in semidomains:
        assert finite_collapse(S).holds
        F = build_fraction_semifield(S)
        for a in all_ideals(S):
            if a.is_proper:
                assert is_prime(a) == is_strongly_prime(F, a).holds


def test_non_semidomain_rejected():
    for check in (is_pvs, subsetlocal_check, thmlop_hypothesis_check, finite_collapse):
        with pytest.raises(PreconditionError):
            check(catalog.c3())


def test_labels():
    F = build_fraction_semifield(catalog.integers_mod(5))
    assert F.label(F.of(2, 3)) == F.label(F.of(4, 1))
    assert "/" in F.label(F.one)

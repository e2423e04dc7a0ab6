from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semiring_lab import catalog
from semiring_lab.core import (
    AxiomError,
    FiniteSemiring,
    SemiringStructureError,
    are_associates,
    divides,
    has_zero_divisors,
    is_semidomain,
    power_orbit,
    units,
    validate_axioms,
)
from semiring_lab.ideals import principal_ideal

B_ADD = [[0, 1], [1, 1]]
B_MUL = [[0, 0], [0, 1]]


def test_boolean_tables_valid():
    report = validate_axioms(B_ADD, B_MUL, 0, 1)
    assert report.valid and report.violations == ()


def test_z6_valid():
    Z6 = catalog.integers_mod(6)
    assert validate_axioms(Z6.add, Z6.mul, 0, 1).valid


def test_one_sided_patch_breaks_commutativity():
    # the only off-diagonal cell of B's addition is (0,1)/(1,0); patch one side
    add = [[0, 1], [0, 1]]
    report = validate_axioms(add, B_MUL, 0, 1)
    assert not report.valid
    assert ("commutativity of +", (0, 1)) in report.violations


def test_diagonal_patch_cannot_break_commutativity():
    add = [[0, 1], [1, 0]]  # 1+1 := 0 is Z/2, still a semiring
    assert validate_axioms(add, B_MUL, 0, 1).valid


def _single_entry_mutants():
    for which, (i, j), v in product(("add", "mul"), product(range(2), repeat=2), range(2)):
        add = [row[:] for row in B_ADD]
        mul = [row[:] for row in B_MUL]
        table = add if which == "add" else mul
        if table[i][j] == v:
            continue
        table[i][j] = v
        yield which, (i, j), add, mul


def _oracle_is_semiring(add, mul, zero, one):
    n = len(add)
    r = range(n)
    return (
        all(add[zero][a] == a == add[a][zero] and mul[one][a] == a == mul[a][one] for a in r)
        and all(add[a][b] == add[b][a] and mul[a][b] == mul[b][a] for a in r for b in r)
        and all(mul[a][zero] == zero for a in r)
        and all(
            add[add[a][b]][c] == add[a][add[b][c]]
            and mul[mul[a][b]][c] == mul[a][mul[b][c]]
            and mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]]
            for a in r for b in r for c in r
        )
    )


@pytest.mark.parametrize("which,cell,add,mul", list(_single_entry_mutants()))
def test_boolean_single_entry_mutants(which, cell, add, mul):
    report = validate_axioms(add, mul, 0, 1)
    assert report.valid == _oracle_is_semiring(add, mul, 0, 1)
    if not report.valid:
        with pytest.raises(AxiomError):
            FiniteSemiring(add, mul, 0, 1)


def test_catalog_all_valid():
    for S in catalog.load_catalog():
        assert validate_axioms(S.add, S.mul, S.zero, S.one).valid, S.name


@pytest.mark.parametrize(
    "add,mul,zero,one",
    [
        ([[0, 1], [1]], B_MUL, 0, 1),
        (B_ADD, [[0, 0], [0, 2]], 0, 1),
        (B_ADD, B_MUL, 0, 0),
        (B_ADD, B_MUL, 0, 2),
        ([], [], 0, 1),
        ([[0, 1.0], [1, 1]], B_MUL, 0, 1),
    ],
)
def test_structural_errors_are_distinct(add, mul, zero, one):
    with pytest.raises(SemiringStructureError):
        validate_axioms(add, mul, zero, one)
    assert not issubclass(SemiringStructureError, AxiomError)


def test_witness_is_lexicographically_smallest():
    # break associativity of + in several places; report the first cell
    add = [[0, 1, 2], [1, 2, 2], [2, 2, 1]]
    mul = [[0, 0, 0], [0, 1, 2], [0, 2, 2]]
    report = validate_axioms(add, mul, 0, 1)
    name_to_w = dict(report.violations)
    brute = min(
        (a, b, c) for a, b, c in product(range(3), repeat=3)
        if add[add[a][b]][c] != add[a][add[b][c]]
    )
    assert name_to_w["associativity of +"] == brute


def test_is_semidomain_examples():
    assert is_semidomain(catalog.boolean()).holds
    v = is_semidomain(catalog.integers_mod(6))
    assert v.fails and v.witness == (2, 0, 3)
    C3 = catalog.c3()
    v = is_semidomain(C3)
    assert v.fails and tuple(C3.label(i) for i in v.witness) == ("a", "a", "1")


def test_divides_examples():
    B = catalog.boolean()
    assert divides(B, 1, 0) and not divides(B, 0, 1)
    assert divides(catalog.integers_mod(4), 3, 2)
    assert not divides(catalog.integers_mod(6), 2, 3)


def test_units_examples():
    assert units(catalog.boolean()) == {1}
    assert units(catalog.integers_mod(4)) == {1, 3}
    C3 = catalog.c3()
    assert units(C3) == {C3.one}


def test_power_orbit_examples():
    assert power_orbit(catalog.integers_mod(4), 2) == (2, 0)
    assert power_orbit(catalog.integers_mod(6), 3) == (3,)
    for S in catalog.load_catalog():
        assert power_orbit(S, S.one) == (S.one,)


def test_associates_examples():
    Z4, Z6 = catalog.integers_mod(4), catalog.integers_mod(6)
    assert are_associates(Z4, 1, 3)
    assert not are_associates(Z6, 2, 3)
    for S in catalog.load_catalog():
        assert all(are_associates(S, x, x) for x in S.elements)


def test_divides_agrees_with_principal_ideals(corpus):
    for S in corpus:
        for a in S.elements:
            for b in S.elements:
                assert divides(S, b, a) == (principal_ideal(S, a) <= principal_ideal(S, b)), (S.name, a, b)


def test_power_orbit_bounds(corpus):
    for S in corpus:
        for x in S.elements:
            orbit = power_orbit(S, x)
            assert len(orbit) <= S.order and orbit[0] == x
            # oracle: the set of x^1..x^(n+1)
            powers, p = set(), x
            for _ in range(S.order + 1):
                powers.add(p)
                p = S.mul[p][x]
            assert set(orbit) == powers


def test_semidomains_have_no_zero_divisors(corpus):
    for S in corpus:
        if is_semidomain(S).holds:
            assert has_zero_divisors(S) is None


def test_semidomain_oracle(corpus):
    for S in corpus:
        cancellative = all(
            S.mul[a][b] != S.mul[a][c]
            for a in S.elements if a != S.zero
            for b in S.elements for c in S.elements if b != c
        )
        assert is_semidomain(S).holds == cancellative


def test_zero_and_one_anywhere():
    # B stored with zero at index 1 and one at index 0
    S = FiniteSemiring([[0, 0], [0, 1]], [[0, 1], [1, 1]], 1, 0)
    assert S.label(1) == "0" and S.label(0) == "1"
    assert is_semidomain(S).holds and units(S) == {0}


@settings(max_examples=30, deadline=None)
@given(st.permutations(range(4)))
def test_relabel_preserves_axioms(perm):
    S = catalog.integers_mod(4).relabel(perm)
    assert validate_axioms(S.add, S.mul, S.zero, S.one).valid
    assert units(S) == {perm[1], perm[3]}

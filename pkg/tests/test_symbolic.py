from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semiring_lab.symbolic import (
    INF,
    SYMBOLIC_CHECKS,
    Bound,
    Naturals,
    Tropical,
    bounded_gcd,
    bounded_lop_cond5,
    bounded_strongly_prime,
    bounded_subsetlocal,
    bounded_thmlop_hypothesis,
    instance,
    symbolic_profile,
)
from semiring_lab.verdict import Status

N, T = Naturals(), Tropical()
SMALL = Bound(6, 6)


def _frac(text: str) -> Fraction:
    return Fraction(text)


# ---- naturals: exact witnesses, re-derived with plain rational arithmetic


def test_naturals_lop_cond5_witness():
    v = bounded_lop_cond5(N)
    assert v.fails and v.witness == ("2", "3")
    # 2 never divides 3^n and 3 never divides 2^n (parity / mod 3 of powers)
    assert all(3**n % 2 == 1 and 2**n % 3 != 0 for n in range(1, 40))


def test_naturals_valuation_and_divided():
    assert SYMBOLIC_CHECKS["valuation"](N).witness == ("2", "3")
    assert SYMBOLIC_CHECKS["divided_cond4"](N).witness == ("2", "3")


@pytest.mark.parametrize("bound", [Bound(4, 4), SMALL, Bound()])
def test_naturals_not_strongly_prime(bound):
    v = bounded_strongly_prime(N, None, bound)
    assert v.fails and v.witness == ("4/3", "3/2")
    x, y = map(_frac, v.witness)
    prod = x * y
    assert prod.denominator == 1 and prod != 1  # inside m = N - {1}
    assert x.denominator != 1 and y.denominator != 1


def test_naturals_not_strongly_prime_below_four():
    assert bounded_strongly_prime(N, None, Bound(3, 3)).is_unknown


def test_naturals_subsetlocal_and_thmlop():
    for check in (bounded_subsetlocal, bounded_thmlop_hypothesis):
        v = check(N)
        assert v.fails and v.witness == "2/3"
    x = Fraction(2, 3)
    # xS is not inside m: x*1 is not a natural number
    assert (x * 1).denominator != 1
    # m is not inside xS: 3 = x*s forces s = 9/2
    assert (Fraction(3) / x).denominator != 1
    # thmlop: x*2 = 4/3 leaves m, and 3 = x*s has no s in m
    assert (x * 2).denominator != 1


def test_naturals_pvs_and_gcd():
    prof = symbolic_profile(N)
    assert prof["pvs"].fails
    assert prof["gcd"].holds
    assert bounded_gcd(N, 4, 6) == 2
    assert prof["xinverse"].fails


def test_naturals_powers_of_two_unknown():
    v = bounded_lop_cond5(N, Bound(64, 64), elements=[2**k for k in range(1, 7)])
    assert v.status is Status.UNKNOWN and v.bound_note


def test_naturals_zero_ideal_strongly_prime():
    assert bounded_strongly_prime(N, N.zero_ideal(), SMALL).holds
    # without the generic justification the scan finds nothing, and says so
    assert bounded_strongly_prime(N, N.zero_ideal(), SMALL, analytic=False).is_unknown


def test_vasconcelos_direction_on_naturals():
    prof = symbolic_profile(N)
    right = prof["gcd"].holds and prof["lop_cond5"].holds
    assert prof["valuation"].fails and not right


# ---- tropical: analytic deciders, and scans that cannot contradict them


@pytest.mark.parametrize("key", ["valuation", "strongly_prime_m", "subsetlocal", "lop_cond5",
                                 "divided_cond4", "pvs", "thmlop", "xinverse", "gcd"])
def test_tropical_holds_analytically(key):
    v = SYMBOLIC_CHECKS[key](T)
    assert v.holds and v.note


@pytest.mark.parametrize("key", ["valuation", "strongly_prime_m", "subsetlocal", "lop_cond5",
                                 "divided_cond4", "thmlop", "xinverse"])
def test_tropical_scan_finds_no_counterexample(key):
    v = SYMBOLIC_CHECKS[key](T, Bound(12, 12), analytic=False)
    assert v.is_unknown, v


def test_tropical_arithmetic():
    assert T.add(INF, 3) == 3 and T.mul(INF, 3) is INF
    assert T.divides(2, 5) and not T.divides(5, 2) and T.divides(7, INF)
    assert T.is_unit(0) and not T.is_unit(INF)
    assert T.frac_inv(-1) == 1 and T.to_element(-1) is None
    # x = -1 outside T; x^-1 scales m = [1, inf) into [2, inf), inside m
    assert all(T.in_maximal(T.frac_mul(T.frac_inv(-1), t)) for t in range(1, 20))


# ---- oracle consistency and bound monotonicity


def test_naturals_divides_matches_search():
    for b in range(0, 13):
        for a in range(0, 13):
            found = any(b * x == a for x in range(0, 13))
            assert N.divides(b, a) == found


@pytest.mark.parametrize("D", [N, T], ids=["naturals", "tropical"])
def test_inclusion_deciders_match_search(D):
    els = D.elements(Bound(80, 80))  # covers t <= 10 for every x of height <= 6
    m = [t for t in els if D.in_maximal(t)]
    for x in D.fractions(Bound(6, 6)):
        xs = [D.frac_mul(x, D.embed(s)) for s in els]
        xm = [D.frac_mul(x, D.embed(s)) for s in m]
        small_m = [t for t in m if D.height(t) <= 10]

        def inside(vals):
            return all(D.to_element(v) is not None and D.in_maximal(D.to_element(v)) for v in vals)

        def covers(vals):
            return all(D.embed(t) in vals for t in small_m)

        assert D.inclusion("xS<=m", x) == inside(xs), x
        assert D.inclusion("xm<=m", x) == inside(xm), x
        assert D.inclusion("m<=xS", x) == covers(xs), x
        assert D.inclusion("m<=xm", x) == covers(xm), x


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 10), st.integers(1, 10), st.sampled_from(sorted(SYMBOLIC_CHECKS)))
def test_bound_monotonicity(a, b, key):
    lo, hi = sorted((a, b))
    v1 = SYMBOLIC_CHECKS[key](N, Bound(lo, lo))
    v2 = SYMBOLIC_CHECKS[key](N, Bound(hi, hi))
    if v1.fails:
        assert v2.fails
    if v1.holds:
        assert v2.holds


def test_instance_lookup():
    assert isinstance(instance("naturals"), Naturals)
    with pytest.raises(KeyError):
        instance("integers")


def test_bound_validation():
    with pytest.raises(ValueError):
        Bound(0, 5)

"""Infinite semidomains described by oracles: the naturals and the tropical semiring.

Conditions quantified over infinitely many elements cannot be confirmed by
search.  Every check here returns

* FAILS only with a witness that has been re-verified against the oracles
  (and, where an unbounded quantifier is involved, a checked certificate);
* HOLDS only from a hand-written analytic decider, whose justification is
  carried in the verdict note;
* UNKNOWN otherwise, with a note describing the bound searched.

Search order is graded: candidates are visited by increasing height (the
size of an element or of a fraction's numerator/denominator), then by value,
so the reported witness is stable as the bound grows.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterator

from .verdict import PreconditionError, Verdict


@dataclass(frozen=True)
class Bound:
    max_element: int = 64
    max_fraction: int = 64
    max_exponent: int | None = None

    def __post_init__(self) -> None:
        if self.max_element < 1 or self.max_fraction < 1:
            raise ValueError("bounds must be positive")
        if self.max_exponent is not None and self.max_exponent < 1:
            raise ValueError("bounds must be positive")

    @property
    def exponent(self) -> int:
        return self.max_exponent or self.max_element

    def describe(self) -> str:
        return f"elements <= {self.max_element}, fractions <= {self.max_fraction}, exponents <= {self.exponent}"


DEFAULT_BOUND = Bound()


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "∞"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


@dataclass(frozen=True)
class PrimeOracle:
    """A prime ideal of a symbolic semidomain, given by membership."""

    name: str
    contains: Callable[[Any], bool]


class SymbolicSemidomain(ABC):
    """Oracle contract for an infinite semidomain and its semifield of fractions."""

    name: str
    zero: Any
    one: Any
    local: bool = True
    # condition name -> justification, for conditions proven to hold outright
    analytic: dict[str, str] = {}

    @abstractmethod
    def add(self, a, b): ...

    @abstractmethod
    def mul(self, a, b): ...

    def power(self, x, n: int):
        out = x
        for _ in range(n - 1):
            out = self.mul(out, x)
        return out

    @abstractmethod
    def divides(self, b, a) -> bool:
        """``b | a``."""

    @abstractmethod
    def is_unit(self, a) -> bool: ...

    @abstractmethod
    def in_maximal(self, a) -> bool:
        """Membership in the declared maximal ideal (the nonunits)."""

    @abstractmethod
    def elements(self, bound: Bound) -> list:
        """Elements up to the bound in graded order."""

    @abstractmethod
    def height(self, a) -> int: ...

    @abstractmethod
    def fractions(self, bound: Bound) -> list:
        """Fractions up to the bound in graded order."""

    @abstractmethod
    def frac_height(self, x) -> int: ...

    @abstractmethod
    def frac_key(self, x) -> tuple: ...

    @abstractmethod
    def embed(self, a): ...

    @abstractmethod
    def frac_mul(self, x, y): ...

    @abstractmethod
    def frac_inv(self, x): ...

    @abstractmethod
    def to_element(self, x):
        """The element equal to fraction ``x``, or None when ``x`` is outside ``S``."""

    def fmt(self, x) -> str:
        return str(x)

    # unbounded refutations -------------------------------------------------

    def no_power_certificate(self, x, y) -> dict | None:
        """Evidence that ``x`` divides no power ``y^n``, ``n >= 1``."""
        if self.mul(y, y) == y and not self.divides(x, y):
            return {"kind": "idempotent"}
        return None

    def check_no_power_certificate(self, cert: dict, x, y) -> bool:
        if cert.get("kind") == "idempotent":
            return self.mul(y, y) == y and not self.divides(x, y)
        return False

    def inclusion(self, kind: str, x) -> bool | None:
        """Exact answer for an inclusion between fraction-scaled sets, if known.

        ``kind`` is one of ``"xS<=m"``, ``"m<=xS"``, ``"xm<=m"``, ``"m<=xm"``.
        """
        return None

    # derived helpers -------------------------------------------------------

    def maximal_ideal(self) -> PrimeOracle:
        return PrimeOracle("m", self.in_maximal)

    def zero_ideal(self) -> PrimeOracle:
        return PrimeOracle("zero", lambda a: a == self.zero)

    def frac_in(self, p: PrimeOracle, x) -> bool:
        a = self.to_element(x)
        return a is not None and p.contains(a)

    def power_divides(self, x, y, bound: Bound) -> bool:
        """Search ``n <= bound`` for ``x | y^n``."""
        p = y
        for _ in range(bound.exponent):
            if self.divides(x, p):
                return True
            nxt = self.mul(p, y)
            if nxt == p:
                return False
            p = nxt
        return False

    def decider(self, key: str, analytic: bool) -> str | None:
        if not analytic:
            return None
        if key == "strongly_prime:zero":
            return "F(S) is a semifield, so a product of nonzero fractions is nonzero"
        return self.analytic.get(key)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


# ------------------------------------------------------------------- naturals


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class Naturals(SymbolicSemidomain):
    """``(ℕ, +, ×)``; local with maximal ideal ``ℕ - {1}``; fractions are nonnegative rationals."""

    name = "naturals"
    zero = 0
    one = 1
    analytic = {"gcd": "Euclid: every pair not both zero has a greatest common divisor"}

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def power(self, x, n):
        return x**n

    def divides(self, b, a) -> bool:
        return a == 0 if b == 0 else a % b == 0

    def is_unit(self, a) -> bool:
        return a == 1

    def in_maximal(self, a) -> bool:
        return a != 1

    def elements(self, bound):
        return list(range(bound.max_element + 1))

    def height(self, a):
        return a

    def fractions(self, bound):
        F = bound.max_fraction
        fr = {Fraction(a, b) for a in range(F + 1) for b in range(1, F + 1)}
        return sorted(fr, key=self.frac_key)

    def frac_height(self, x):
        return max(x.numerator, x.denominator)

    def frac_key(self, x):
        return (self.frac_height(x), x)

    def embed(self, a):
        return Fraction(a)

    def frac_mul(self, x, y):
        return x * y

    def frac_inv(self, x):
        return 1 / x

    def to_element(self, x):
        return x.numerator if x.denominator == 1 else None

    def fmt(self, x) -> str:
        return str(x)

    def no_power_certificate(self, x, y):
        """A prime dividing ``x`` but not ``y`` (so not ``y^n``), or ``x = 0 != y``."""
        if x == 0 and y != 0:
            return {"kind": "zero"}
        if x > 1 and y > 0:
            for p in _prime_factors(x):
                if y % p:
                    return {"kind": "prime", "p": p}
        return super().no_power_certificate(x, y)

    def check_no_power_certificate(self, cert, x, y):
        kind = cert.get("kind")
        if kind == "zero":
            return x == 0 and y != 0
        if kind == "prime":
            p = cert["p"]
            # Euclid: p prime and p not dividing y means p divides no y^n
            return _is_prime(p) and x % p == 0 and y % p != 0
        return super().check_no_power_certificate(cert, x, y)

    def inclusion(self, kind, x):
        a, b = x.numerator, x.denominator
        if kind == "xS<=m":
            return b == 1 and a != 1
        if kind == "m<=xS":
            return a == 1
        if kind == "xm<=m":
            return b == 1
        if kind == "m<=xm":
            return a == 1
        return None


# ------------------------------------------------------------------- tropical


class Tropical(SymbolicSemidomain):
    """``(ℕ ∪ {∞}, min, +)``: zero is ∞, one is 0; fractions form ``(ℤ ∪ {∞}, min, +)``."""

    name = "tropical"
    zero = INF
    one = 0
    analytic = {
        "valuation": "x | y iff y = ∞ or y >= x, a total order",
        "lop_cond5": "divisibility is total, so n = 1 always works",
        "divided_cond4": "divisibility is total, so x | y or y | x",
        "gcd": "gcd(a, b) = min(a, b)",
        "strongly_prime:m": "x + y >= 1 over the integers forces x >= 1 or y >= 1; ∞ lies in m",
        "subsetlocal": "x >= 1 gives x + T inside m; x <= 1 gives m inside x + T",
        "thmlop": "x >= 0 gives x + m inside m; x <= 0 gives m inside x + m",
        "xinverse:m": "x < 0 means -x > 0, and -x + m lies inside m",
    }

    def add(self, a, b):
        if a is INF:
            return b
        if b is INF:
            return a
        return min(a, b)

    def mul(self, a, b):
        if a is INF or b is INF:
            return INF
        return a + b

    def power(self, x, n):
        return INF if x is INF else n * x

    def divides(self, b, a) -> bool:
        if a is INF:
            return True
        if b is INF:
            return False
        return a >= b

    def is_unit(self, a) -> bool:
        return a is not INF and a == 0

    def in_maximal(self, a) -> bool:
        return a is INF or a >= 1

    def elements(self, bound):
        return [INF] + list(range(bound.max_element + 1))

    def height(self, a):
        return 0 if a is INF else a

    def fractions(self, bound):
        F = bound.max_fraction
        vals = [INF] + list(range(-F, F + 1))
        return sorted(vals, key=self.frac_key)

    def frac_height(self, x):
        return 0 if x is INF else abs(x)

    def frac_key(self, x):
        return (0, -1) if x is INF else (abs(x), x)

    def embed(self, a):
        return a

    def frac_mul(self, x, y):
        return self.mul(x, y)

    def frac_inv(self, x):
        if x is INF:
            raise ZeroDivisionError("∞ is the zero")
        return -x

    def to_element(self, x):
        if x is INF or x >= 0:
            return x
        return None

    def fmt(self, x) -> str:
        return "∞" if x is INF else str(x)

    def inclusion(self, kind, x):
        if kind == "xS<=m":
            return x is INF or x >= 1
        if kind == "m<=xS":
            return x is not INF and x <= 1
        if kind == "xm<=m":
            return x is INF or x >= 0
        if kind == "m<=xm":
            return x is not INF and x <= 0
        return None


INSTANCES: dict[str, Callable[[], SymbolicSemidomain]] = {"naturals": Naturals, "tropical": Tropical}


def instance(name: str) -> SymbolicSemidomain:
    try:
        return INSTANCES[name]()
    except KeyError:
        raise KeyError(f"unknown symbolic instance {name!r}; choose from {sorted(INSTANCES)}") from None


# -------------------------------------------------------------- enumeration


def _unordered_pairs(items: list) -> Iterator[tuple]:
    for k in range(len(items)):
        for i in range(k):
            yield items[i], items[k]


def _ordered_pairs(items: list) -> Iterator[tuple]:
    for k in range(len(items)):
        for i in range(k):
            yield items[i], items[k]
        for i in range(k + 1):
            yield items[k], items[i]


def _fraction_pairs(D: SymbolicSemidomain, bound: Bound) -> Iterator[tuple]:
    fr = D.fractions(bound)
    levels = sorted({D.frac_height(x) for x in fr})
    for h in levels:
        low = [x for x in fr if D.frac_height(x) <= h]
        pairs = [(x, y) for x in low for y in low if max(D.frac_height(x), D.frac_height(y)) == h]
        pairs.sort(key=lambda xy: (D.frac_key(xy[0])[1:], D.frac_key(xy[1])[1:]))
        yield from pairs


def _unknown(what: str, bound: Bound, scope: str = "") -> Verdict:
    return Verdict.unknown(f"no counterexample to {what} with {scope or bound.describe()}; no analytic decider")


def _fmt(D: SymbolicSemidomain, w: Any) -> Any:
    if isinstance(w, tuple):
        return tuple(_fmt(D, x) for x in w)
    return D.fmt(w)


# ------------------------------------------------------------ re-verification


def verify_power_failure(D: SymbolicSemidomain, x, y, cert: dict) -> bool:
    """``x`` divides no ``y^n``: the certificate must check and small powers must agree."""
    if not D.check_no_power_certificate(cert, x, y):
        return False
    return not any(D.divides(x, D.power(y, n)) for n in range(1, 9))


def verify_valuation_witness(D, a, b) -> bool:
    return not D.divides(a, b) and not D.divides(b, a)


def verify_strongly_prime_witness(D, p: PrimeOracle, x, y) -> bool:
    return D.frac_in(p, D.frac_mul(x, y)) and not D.frac_in(p, x) and not D.frac_in(p, y)


def _outside_scaled_by(D, x, s, target: Callable[[Any], bool]) -> bool:
    """``x*s`` falls outside the target set (a set of elements given by membership)."""
    a = D.to_element(D.frac_mul(x, D.embed(s)))
    return a is None or not target(a)


def _not_in_scaled(D, t, x, source: Callable[[Any], bool]) -> bool:
    """``t`` is not ``x*s`` for any ``s`` in the source set."""
    if x == D.embed(D.zero):
        return t != D.zero
    a = D.to_element(D.frac_mul(D.embed(t), D.frac_inv(x)))
    return a is None or not source(a)


def _whole(_a) -> bool:
    return True


# ------------------------------------------------------------- bounded checks


def bounded_lop_cond5(D: SymbolicSemidomain, bound: Bound = DEFAULT_BOUND, analytic: bool = True,
                      elements: list | None = None) -> Verdict:
    """For all ``x, y`` some ``n >= 1`` has ``x | y^n`` or ``y | x^n``."""
    if elements is None:
        just = D.decider("lop_cond5", analytic)
        if just:
            return Verdict.hold(note=just)
    items = D.elements(bound) if elements is None else list(elements)
    for x, y in _unordered_pairs(items):
        if D.power_divides(x, y, bound) or D.power_divides(y, x, bound):
            continue
        c1, c2 = D.no_power_certificate(x, y), D.no_power_certificate(y, x)
        if c1 and c2 and verify_power_failure(D, x, y, c1) and verify_power_failure(D, y, x, c2):
            return Verdict.fail(_fmt(D, (x, y)), note=f"certificates {c1} and {c2}")
    return _unknown("the power-divisibility condition", bound,
                    "" if elements is None else f"{len(items)} given elements")


def bounded_valuation_check(D: SymbolicSemidomain, bound: Bound = DEFAULT_BOUND, analytic: bool = True,
                            elements: list | None = None) -> Verdict:
    """``a | b`` or ``b | a`` for every pair."""
    if elements is None:
        just = D.decider("valuation", analytic)
        if just:
            return Verdict.hold(note=just)
    items = D.elements(bound) if elements is None else list(elements)
    for a, b in _unordered_pairs(items):
        if not (D.divides(a, b) or D.divides(b, a)):
            if verify_valuation_witness(D, a, b):
                return Verdict.fail(_fmt(D, (a, b)))
    return _unknown("total divisibility", bound)


def bounded_divided_cond4(D: SymbolicSemidomain, bound: Bound = DEFAULT_BOUND, analytic: bool = True,
                          elements: list | None = None) -> Verdict:
    """``x | y`` or ``y | x^n`` for some ``n >= 1``."""
    if elements is None:
        just = D.decider("divided_cond4", analytic)
        if just:
            return Verdict.hold(note=just)
    items = D.elements(bound) if elements is None else list(elements)
    for x, y in _ordered_pairs(items):
        if D.divides(x, y) or D.power_divides(y, x, bound):
            continue
        cert = D.no_power_certificate(y, x)
        if cert and verify_power_failure(D, y, x, cert):
            return Verdict.fail(_fmt(D, (x, y)), note=f"certificate {cert}")
    return _unknown("the divided condition", bound)


def bounded_strongly_prime(D: SymbolicSemidomain, prime: PrimeOracle | None = None,
                           bound: Bound = DEFAULT_BOUND, analytic: bool = True) -> Verdict:
    """Fractions ``x, y`` with ``xy`` in ``p`` have ``x`` or ``y`` in ``p``."""
    p = D.maximal_ideal() if prime is None else prime
    just = D.decider(f"strongly_prime:{p.name}", analytic)
    if just:
        return Verdict.hold(note=just)
    for x, y in _fraction_pairs(D, bound):
        if D.frac_in(p, x) or D.frac_in(p, y):
            continue
        if D.frac_in(p, D.frac_mul(x, y)) and verify_strongly_prime_witness(D, p, x, y):
            return Verdict.fail(_fmt(D, (x, y)))
    return _unknown(f"strong primality of {p.name}", bound)


def bounded_pvs(D: SymbolicSemidomain, bound: Bound = DEFAULT_BOUND, analytic: bool = True) -> Verdict:
    """PVS through the local characterisation: the maximal ideal must be strongly prime."""
    if not D.local:
        raise PreconditionError(f"{D.name} is not declared local")
    v = bounded_strongly_prime(D, D.maximal_ideal(), bound, analytic)
    if v.fails:
        return Verdict.fail(("m", v.witness), note="maximal ideal is not strongly prime")
    if v.holds:
        return Verdict.hold(note=f"local and m strongly prime: {v.note}")
    return v


def _two_inclusions(D: SymbolicSemidomain, key: str, bound: Bound, analytic: bool,
                    left: str, right: str, scale_set, target) -> Verdict:
    """For each fraction ``x``: ``x*A`` inside ``B`` or ``B`` inside ``x*A``.

    ``scale_set``/``target`` are membership predicates for ``A``/``B``.
    """
    just = D.decider(key, analytic)
    if just:
        return Verdict.hold(note=just)
    els = D.elements(bound)
    A = [s for s in els if scale_set(s)]
    B = [t for t in els if target(t)]
    undecided = 0
    for x in D.fractions(bound):
        s_bad = next((s for s in A if _outside_scaled_by(D, x, s, target)), None)
        t_bad = next((t for t in B if _not_in_scaled(D, t, x, scale_set)), None)
        first = False if s_bad is not None else (D.inclusion(left, x) if analytic else None)
        second = False if t_bad is not None else (D.inclusion(right, x) if analytic else None)
        if s_bad is not None and t_bad is not None:
            note = f"{D.fmt(x)}*{D.fmt(s_bad)} is outside; {D.fmt(t_bad)} has no preimage"
            return Verdict.fail(D.fmt(x), note=note)
        if not (first or second):
            undecided += 1
    scope = bound.describe() + (f"; {undecided} fractions undecided" if undecided else "")
    return _unknown(key, bound, scope)


def bounded_subsetlocal(D: SymbolicSemidomain, bound: Bound = DEFAULT_BOUND, analytic: bool = True) -> Verdict:
    """For every fraction ``x``: ``xS`` inside ``m`` or ``m`` inside ``xS``."""
    if not D.local:
        raise PreconditionError(f"{D.name} is not declared local")
    return _two_inclusions(D, "subsetlocal", bound, analytic, "xS<=m", "m<=xS", _whole, D.in_maximal)


def bounded_thmlop_hypothesis(D: SymbolicSemidomain, bound: Bound = DEFAULT_BOUND, analytic: bool = True) -> Verdict:
    """For every fraction ``x``: ``xm`` inside ``m`` or ``m`` inside ``xm``."""
    if not D.local:
        raise PreconditionError(f"{D.name} is not declared local")
    return _two_inclusions(D, "thmlop", bound, analytic, "xm<=m", "m<=xm", D.in_maximal, D.in_maximal)


def bounded_lemma_xinverse(D: SymbolicSemidomain, prime: PrimeOracle | None = None,
                           bound: Bound = DEFAULT_BOUND, analytic: bool = True) -> Verdict:
    """For fractions ``x`` outside ``S``: ``x^-1 p`` inside ``p``."""
    p = D.maximal_ideal() if prime is None else prime
    just = D.decider(f"xinverse:{p.name}", analytic)
    if just:
        return Verdict.hold(note=just)
    members = [t for t in D.elements(bound) if p.contains(t)]
    for x in D.fractions(bound):
        if D.to_element(x) is not None:
            continue
        inv = D.frac_inv(x)
        for t in members:
            if not D.frac_in(p, D.frac_mul(inv, D.embed(t))):
                return Verdict.fail(_fmt(D, (x, t)))
    return _unknown(f"inverse scaling of {p.name}", bound)


def bounded_gcd(D: SymbolicSemidomain, a, b, bound: Bound = DEFAULT_BOUND):
    """Greatest common divisor among the elements within the bound, or None."""
    if a == D.zero and b == D.zero:
        raise PreconditionError("gcd(0, 0) is not defined")
    common = [d for d in D.elements(bound) if D.divides(d, a) and D.divides(d, b)]
    for d in common:
        if all(D.divides(c, d) for c in common):
            return d
    return None


def bounded_gcd_semidomain(D: SymbolicSemidomain, bound: Bound = DEFAULT_BOUND, analytic: bool = True) -> Verdict:
    just = D.decider("gcd", analytic)
    if just:
        return Verdict.hold(note=just)
    return Verdict.unknown(f"gcd existence cannot be refuted by search ({bound.describe()})")


SYMBOLIC_CHECKS: dict[str, Callable[..., Verdict]] = {
    "lop_cond5": bounded_lop_cond5,
    "valuation": bounded_valuation_check,
    "gcd": bounded_gcd_semidomain,
    "divided_cond4": bounded_divided_cond4,
    "strongly_prime_m": lambda D, bound=DEFAULT_BOUND, analytic=True: bounded_strongly_prime(D, None, bound, analytic),
    "pvs": bounded_pvs,
    "subsetlocal": bounded_subsetlocal,
    "thmlop": bounded_thmlop_hypothesis,
    "xinverse": lambda D, bound=DEFAULT_BOUND, analytic=True: bounded_lemma_xinverse(D, None, bound, analytic),
}


def symbolic_profile(D: SymbolicSemidomain, bound: Bound = DEFAULT_BOUND,
                     checks: dict[str, Callable[..., Verdict]] | None = None) -> dict[str, Verdict]:
    c = SYMBOLIC_CHECKS if checks is None else checks
    return {key: c[key](D, bound) for key in SYMBOLIC_CHECKS}

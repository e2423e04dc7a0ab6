"""Property predicates for finite semirings.

Every condition of every characterisation is decided separately, by a direct
scan, so that the equivalences between them can be tested rather than
assumed.  Witnesses are the lexicographically smallest violating tuples,
with ideals ordered by size and then by members.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable

from . import semifield
from .core import FiniteSemiring, is_semidomain
from .ideals import (
    Ideal,
    all_ideals,
    ideal_product,
    is_local,
    is_maximal,
    is_prime,
    is_radical,
    nonunit_set,
    nonunits,
    prime_ideals,
    principal_ideal,
    radical,
)
from .verdict import PreconditionError, Verdict


def _div(S: FiniteSemiring, b: int, a: int) -> bool:
    return bool(S.multiples[b] >> a & 1)


def _divides_some_power(S: FiniteSemiring, x: int, y: int) -> bool:
    """``x | y^n`` for some ``n >= 1``; the power orbit of ``y`` is exactly its set of powers."""
    return any(_div(S, x, p) for p in S.orbits[y])


def _chain(items) -> Verdict:
    for a, b in combinations(items, 2):
        if not a.comparable(b):
            return Verdict.fail((a, b))
    return Verdict.hold()


def _require_semidomain(S: FiniteSemiring) -> None:
    if not is_semidomain(S).holds:
        raise PreconditionError(f"{S.name or 'S'} is not a semidomain")


def lop_cond1(S: FiniteSemiring) -> Verdict:
    """Prime ideals pairwise comparable."""
    return _chain(prime_ideals(S))


def lop_cond2(S: FiniteSemiring) -> Verdict:
    """Radical ideals pairwise comparable."""
    return _chain([a for a in all_ideals(S) if is_radical(a)])


def lop_cond3(S: FiniteSemiring) -> Verdict:
    """Every proper radical ideal is prime."""
    for a in all_ideals(S):
        if a.is_proper and is_radical(a) and not is_prime(a):
            return Verdict.fail(a)
    return Verdict.hold()


def lop_cond4(S: FiniteSemiring) -> Verdict:
    """Radicals of principal ideals pairwise comparable."""
    rads = [radical(principal_ideal(S, x)) for x in S.elements]
    for x, y in combinations(S.elements, 2):
        if not rads[x].comparable(rads[y]):
            return Verdict.fail((x, y))
    return Verdict.hold()


def lop_cond5(S: FiniteSemiring) -> Verdict:
    """For all ``x, y`` some ``n >= 1`` has ``x | y^n`` or ``y | x^n``."""
    for x, y in combinations(S.elements, 2):
        if not (_divides_some_power(S, x, y) or _divides_some_power(S, y, x)):
            return Verdict.fail((x, y))
    return Verdict.hold()


def is_uniserial(S: FiniteSemiring) -> Verdict:
    return _chain(all_ideals(S))


def is_valuation(S: FiniteSemiring) -> Verdict:
    """Divisibility is total: ``a | b`` or ``b | a`` for every pair."""
    _require_semidomain(S)
    for a, b in combinations(S.elements, 2):
        if not (_div(S, a, b) or _div(S, b, a)):
            return Verdict.fail((a, b))
    return Verdict.hold()


def gcd(S: FiniteSemiring, a: int, b: int) -> int | None:
    """Smallest-index greatest common divisor, or None when no gcd exists."""
    _require_semidomain(S)
    if a == S.zero and b == S.zero:
        raise PreconditionError("gcd(0, 0) is not defined")
    common = [d for d in S.elements if _div(S, d, a) and _div(S, d, b)]
    for d in common:
        if all(_div(S, c, d) for c in common):
            return d
    return None


def is_gcd_semidomain(S: FiniteSemiring) -> Verdict:
    _require_semidomain(S)
    for a in S.elements:
        for b in range(a, S.order):
            if a == S.zero and b == S.zero:
                continue
            if gcd(S, a, b) is None:
                return Verdict.fail((a, b))
    return Verdict.hold()


def vasconcelos_check(S: FiniteSemiring) -> Verdict:
    """Valuation exactly when GCD with linearly ordered primes."""
    v = is_valuation(S)
    g = is_gcd_semidomain(S)
    lop = lop_cond1(S)
    if v.holds == (g.holds and lop.holds):
        return Verdict.hold()
    return Verdict.fail({"valuation": v, "gcd": g, "lop": lop})


def is_divided(S: FiniteSemiring) -> Verdict:
    """Every prime ``p`` lies inside ``(x)`` for each ``x`` outside ``p``."""
    _require_semidomain(S)
    for p in prime_ideals(S):
        for x in S.elements:
            if x not in p and not p <= principal_ideal(S, x):
                return Verdict.fail((p, x))
    return Verdict.hold()


def divided_cond2(S: FiniteSemiring) -> Verdict:
    """Every ideal is comparable with the radical of every ideal."""
    _require_semidomain(S)
    ideals = all_ideals(S)
    rads = [radical(b) for b in ideals]
    for a in ideals:
        for b, rb in zip(ideals, rads):
            if not a.comparable(rb):
                return Verdict.fail((a, b))
    return Verdict.hold()


def divided_cond3(S: FiniteSemiring) -> Verdict:
    """``(x)`` and the radical of ``(y)`` are comparable."""
    _require_semidomain(S)
    principals = [principal_ideal(S, x) for x in S.elements]
    rads = [radical(p) for p in principals]
    for x in S.elements:
        for y in S.elements:
            if not principals[x].comparable(rads[y]):
                return Verdict.fail((x, y))
    return Verdict.hold()


def divided_cond4(S: FiniteSemiring) -> Verdict:
    """``x | y`` or ``y | x^n`` for some ``n >= 1``."""
    _require_semidomain(S)
    for x in S.elements:
        for y in S.elements:
            if not (_div(S, x, y) or _divides_some_power(S, y, x)):
                return Verdict.fail((x, y))
    return Verdict.hold()


def divided_mirror(S: FiniteSemiring) -> Verdict:
    """``x | y^n`` for some ``n >= 1`` or ``y | x``: the swapped reading of the previous condition."""
    _require_semidomain(S)
    for x in S.elements:
        for y in S.elements:
            if not (_divides_some_power(S, x, y) or _div(S, y, x)):
                return Verdict.fail((x, y))
    return Verdict.hold()


def _nonunits_list(S: FiniteSemiring) -> list[int]:
    return sorted(nonunit_set(S))


def pvschar2_cond1(S: FiniteSemiring) -> Verdict:
    """PVS whose maximal ideal is the nonunit set."""
    _require_semidomain(S)
    N = nonunits(S)
    if not isinstance(N, Ideal):
        return Verdict.fail(("nonunits not an ideal", N.witness))
    if not is_maximal(N):
        return Verdict.fail(("nonunits not maximal", N))
    return semifield.is_pvs(S)


def pvschar2_cond2(S: FiniteSemiring) -> Verdict:
    """``b`` inside ``a``, or ``ac`` inside ``b`` for every proper ideal ``c``."""
    _require_semidomain(S)
    ideals = all_ideals(S)
    proper = [c for c in ideals if c.is_proper]
    for a in ideals:
        for b in ideals:
            if b <= a:
                continue
            for c in proper:
                if not ideal_product(a, c) <= b:
                    return Verdict.fail((a, b, c))
    return Verdict.hold()


def pvschar2_cond3(S: FiniteSemiring) -> Verdict:
    """``yS`` inside ``xS``, or ``xzS`` inside ``yS`` for every nonunit ``z``."""
    _require_semidomain(S)
    N = _nonunits_list(S)
    P = S.multiples
    for x in S.elements:
        for y in S.elements:
            if P[y] & ~P[x] == 0:
                continue
            for z in N:
                if P[S.mul[x][z]] & ~P[y]:
                    return Verdict.fail((x, y, z))
    return Verdict.hold()


def pvschar2_cond4(S: FiniteSemiring) -> Verdict:
    """``x | y``, or ``y | xz`` for every nonunit ``z``."""
    _require_semidomain(S)
    N = _nonunits_list(S)
    for x in S.elements:
        for y in S.elements:
            if _div(S, x, y):
                continue
            for z in N:
                if not _div(S, y, S.mul[x][z]):
                    return Verdict.fail((x, y, z))
    return Verdict.hold()


def _scaled(S: FiniteSemiring, x: int, items) -> int:
    m = 0
    for n in items:
        m |= 1 << S.mul[x][n]
    return m


def pvschar2_cond5(S: FiniteSemiring) -> Verdict:
    """``yS`` inside ``xS``, or ``xN`` inside ``yS``."""
    _require_semidomain(S)
    N = _nonunits_list(S)
    P = S.multiples
    for x in S.elements:
        for y in S.elements:
            if P[y] & ~P[x] and _scaled(S, x, N) & ~P[y]:
                return Verdict.fail((x, y))
    return Verdict.hold()


def pvschar2_cond6(S: FiniteSemiring) -> Verdict:
    """``yN`` inside ``xS``, or ``xS`` inside ``yN``."""
    _require_semidomain(S)
    N = _nonunits_list(S)
    P = S.multiples
    for x in S.elements:
        for y in S.elements:
            yN = _scaled(S, y, N)
            if yN & ~P[x] and P[x] & ~yN:
                return Verdict.fail((x, y))
    return Verdict.hold()


def _pvs_local(fn: Callable[[FiniteSemiring], Verdict]) -> Callable[[FiniteSemiring], Verdict]:
    def run(S: FiniteSemiring) -> Verdict:
        _require_semidomain(S)
        if not is_local(S).holds:
            raise PreconditionError(f"{S.name or 'S'} is not local")
        return fn(S)

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


def _xinverse(S: FiniteSemiring) -> Verdict:
    return semifield.lemma_xinverse_check(S, require_pvs=False)


# name -> predicate; the theorem harness looks conditions up here, which is
# also where mutation runs swap in negated versions.
FINITE_CHECKS: dict[str, Callable[[FiniteSemiring], Verdict]] = {
    "semidomain": is_semidomain,
    "local": is_local,
    "uniserial": is_uniserial,
    "lop_cond1": lop_cond1,
    "lop_cond2": lop_cond2,
    "lop_cond3": lop_cond3,
    "lop_cond4": lop_cond4,
    "lop_cond5": lop_cond5,
    "valuation": is_valuation,
    "gcd": is_gcd_semidomain,
    "divided_cond1": is_divided,
    "divided_cond2": divided_cond2,
    "divided_cond3": divided_cond3,
    "divided_cond4": divided_cond4,
    "divided_mirror": divided_mirror,
    "pvs": semifield.is_pvs,
    "pvs_char1": semifield.is_pvs_char1,
    "subsetlocal": _pvs_local(semifield.subsetlocal_check),
    "thmlop": _pvs_local(semifield.thmlop_hypothesis_check),
    "xinverse": _xinverse,
    "pvschar2_cond1": pvschar2_cond1,
    "pvschar2_cond2": pvschar2_cond2,
    "pvschar2_cond3": pvschar2_cond3,
    "pvschar2_cond4": pvschar2_cond4,
    "pvschar2_cond5": pvschar2_cond5,
    "pvschar2_cond6": pvschar2_cond6,
    "finite_collapse": semifield.finite_collapse,
}


# ---------------------------------------------------------------- rendering


def render_json(w: Any, S: FiniteSemiring | None = None) -> Any:
    """Witness as JSON data: elements become their labels, ideals ``"{...}"`` strings."""
    if isinstance(w, Verdict):
        return w.status.value
    if isinstance(w, Ideal):
        return w.label()
    if isinstance(w, bool) or w is None:
        return w
    if isinstance(w, int):
        return S.label(w) if S is not None else str(w)
    if isinstance(w, (tuple, list)):
        return [render_json(x, S) for x in w]
    if isinstance(w, dict):
        return {str(k): render_json(v, S) for k, v in w.items()}
    return str(w)


def render_text(w: Any, S: FiniteSemiring | None = None) -> str:
    if isinstance(w, (tuple, list)):
        return "(" + ",".join(render_text(x, S) for x in w) + ")"
    if isinstance(w, dict):
        return ", ".join(f"{k}={render_text(v, S)}" for k, v in w.items())
    data = render_json(w, S)
    return data if isinstance(data, str) else str(data)


def verdict_json(v: Verdict | None, S: FiniteSemiring | None = None) -> dict[str, Any] | None:
    if v is None:
        return None
    return {
        "status": v.status.value,
        "witness": render_json(v.witness, S),
        "bound_note": v.bound_note,
        "note": v.note,
    }


def verdict_text(v: Verdict | None, S: FiniteSemiring | None = None) -> str:
    if v is None:
        return "n/a"
    out = v.status.value
    if v.fails:
        out += " " + render_text(v.witness, S)
    if v.bound_note:
        out += f" [{v.bound_note}]"
    if v.note and not v.fails:
        out += f" ({v.note})"
    return out


# ------------------------------------------------------------------ profile

LOP_KEYS = ("cond1", "cond2", "cond3", "cond4", "cond5")
DIVIDED_KEYS = ("cond1", "cond2", "cond3", "cond4")
PVSCHAR2_KEYS = ("cond1", "cond2", "cond3", "cond4", "cond5", "cond6")


@dataclass(frozen=True)
class PropertyProfile:
    """Classification record of one finite semiring.

    Semidomain-only properties are None when ``S`` is not a semidomain.
    """

    name: str
    order: int
    semidomain: Verdict
    local: Verdict
    uniserial: Verdict
    lop: dict[str, Verdict]
    valuation: Verdict | None = None
    gcd: Verdict | None = None
    divided: dict[str, Verdict] | None = None
    pvs: Verdict | None = None
    pvschar2: dict[str, Verdict] | None = None
    semiring: FiniteSemiring | None = field(default=None, compare=False, repr=False)

    def statuses(self) -> dict[str, Any]:
        """Status-only view, independent of element labelling."""

        def st(v):
            return None if v is None else v.status.value

        def group(d):
            return None if d is None else {k: st(v) for k, v in d.items()}

        return {
            "semidomain": st(self.semidomain),
            "local": st(self.local),
            "uniserial": st(self.uniserial),
            "lop": group(self.lop),
            "valuation": st(self.valuation),
            "gcd": st(self.gcd),
            "divided": group(self.divided),
            "pvs": st(self.pvs),
            "pvschar2": group(self.pvschar2),
        }

    def to_json(self) -> dict[str, Any]:
        S = self.semiring

        def group(d):
            return None if d is None else {k: verdict_json(v, S) for k, v in d.items()}

        return {
            "name": self.name,
            "order": self.order,
            "semidomain": verdict_json(self.semidomain, S),
            "local": verdict_json(self.local, S),
            "uniserial": verdict_json(self.uniserial, S),
            "lop": group(self.lop),
            "valuation": verdict_json(self.valuation, S),
            "gcd": verdict_json(self.gcd, S),
            "divided": group(self.divided),
            "pvs": verdict_json(self.pvs, S),
            "pvschar2": group(self.pvschar2),
        }

    def to_text(self) -> str:
        S = self.semiring
        lines = [f"{self.name or 'S'} (order {self.order})"]
        for key, value in self.to_items():
            lines.append(f"  {key:<16} {verdict_text(value, S)}")
        return "\n".join(lines) + "\n"

    def to_items(self) -> list[tuple[str, Verdict | None]]:
        items: list[tuple[str, Verdict | None]] = [
            ("semidomain", self.semidomain),
            ("local", self.local),
            ("uniserial", self.uniserial),
        ]
        items += [(f"lop.{k}", v) for k, v in self.lop.items()]
        items += [("valuation", self.valuation), ("gcd", self.gcd)]
        for k in DIVIDED_KEYS:
            items.append((f"divided.{k}", None if self.divided is None else self.divided[k]))
        items.append(("pvs", self.pvs))
        for k in PVSCHAR2_KEYS:
            items.append((f"pvschar2.{k}", None if self.pvschar2 is None else self.pvschar2[k]))
        return items


def profile(S: FiniteSemiring, checks: dict[str, Callable] | None = None) -> PropertyProfile:
    c = FINITE_CHECKS if checks is None else checks
    sd = c["semidomain"](S)
    lop = {k: c[f"lop_{k}"](S) for k in LOP_KEYS}
    base = dict(name=S.name, order=S.order, semidomain=sd, local=c["local"](S),
                uniserial=c["uniserial"](S), lop=lop, semiring=S)
    if not is_semidomain(S).holds:
        return PropertyProfile(**base)
    return PropertyProfile(
        **base,
        valuation=c["valuation"](S),
        gcd=c["gcd"](S),
        divided={k: c[f"divided_{k}"](S) for k in DIVIDED_KEYS},
        pvs=c["pvs"](S),
        pvschar2={k: c[f"pvschar2_{k}"](S) for k in PVSCHAR2_KEYS},
    )


PROPERTY_ALIASES = {
    "semidomain": "semidomain",
    "local": "local",
    "uniserial": "uniserial",
    "valuation": "valuation",
    "gcd": "gcd",
    "pvs": "pvs",
    "pvs-char1": "pvs_char1",
    "subsetlocal": "subsetlocal",
    "thmlop": "thmlop",
    "xinverse": "xinverse",
    "divided": "divided_cond1",
    "divided-mirror": "divided_mirror",
    **{f"lop-cond{i}": f"lop_cond{i}" for i in range(1, 6)},
    **{f"divided-cond{i}": f"divided_cond{i}" for i in range(1, 5)},
    **{f"pvschar2-cond{i}": f"pvschar2_cond{i}" for i in range(1, 7)},
}

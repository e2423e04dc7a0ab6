"""Ideals of finite semirings, the ideal lattice, primes and radicals.

Ideals are stored as bitmasks over element indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .core import FiniteSemiring
from .verdict import Verdict

DEFAULT_IDEAL_CAP = 10


class ResourceLimitError(RuntimeError):
    """Refused to run an exhaustive computation above its size guard."""


class ParentMismatchError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Ideal:
    parent: FiniteSemiring
    mask: int

    @property
    def members(self) -> frozenset[int]:
        return frozenset(i for i in self.parent.elements if self.mask >> i & 1)

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(i for i in self.parent.elements if self.mask >> i & 1)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __le__(self, other: Ideal) -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: Ideal) -> bool:
        return self <= other and self.mask != other.mask

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.mask == other.mask and (self.parent is other.parent or self.parent == other.parent)

    def __hash__(self) -> int:
        return hash(self.mask)

    @property
    def is_proper(self) -> bool:
        return self.mask != self.parent.full_mask

    def comparable(self, other: Ideal) -> bool:
        return self <= other or other <= self

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self), self.sorted_members())

    def label(self) -> str:
        return "{" + ",".join(self.parent.label(i) for i in self.sorted_members()) + "}"

    def __repr__(self) -> str:
        return f"Ideal({self.label()})"


def _check_parent(a: Ideal, b: Ideal) -> FiniteSemiring:
    if a.parent is not b.parent and a.parent != b.parent:
        raise ParentMismatchError("ideals belong to different semirings")
    return a.parent


def _close(S: FiniteSemiring, mask: int) -> int:
    """Least ideal mask containing ``mask`` and zero."""
    mask |= 1 << S.zero
    while True:
        members = [i for i in S.elements if mask >> i & 1]
        new = mask
        for x in members:
            new |= S.multiples[x]
            row = S.add[x]
            for y in members:
                new |= 1 << row[y]
        if new == mask:
            return mask
        mask = new


def ideal_generated_by(S: FiniteSemiring, gens: Iterable[int]) -> Ideal:
    """Least ideal containing ``gens``; the empty set generates ``{0}``."""
    mask = 0
    for g in gens:
        mask |= 1 << g
    return Ideal(S, _close(S, mask))


def principal_ideal(S: FiniteSemiring, x: int) -> Ideal:
    return ideal_generated_by(S, (x,))


def zero_ideal(S: FiniteSemiring) -> Ideal:
    return Ideal(S, 1 << S.zero)


def whole(S: FiniteSemiring) -> Ideal:
    return Ideal(S, S.full_mask)


@lru_cache(maxsize=4096)
def _ideal_masks(S: FiniteSemiring) -> tuple[int, ...]:
    principals = {_close(S, 1 << x) for x in S.elements}
    found = set(principals)
    frontier = list(found)
    while frontier:
        nxt = []
        for m in frontier:
            for p in principals:
                s = _close(S, m | p)
                if s not in found:
                    found.add(s)
                    nxt.append(s)
        frontier = nxt
    found.add(1 << S.zero)
    return tuple(found)


def all_ideals(S: FiniteSemiring, cap: int = DEFAULT_IDEAL_CAP) -> tuple[Ideal, ...]:
    """Every ideal of ``S`` once, sorted by size then members.

    Every ideal is the sum of the principal ideals of its elements, so closing
    the principal ideals under pairwise sums reaches all of them.
    """
    if S.order > cap:
        raise ResourceLimitError(f"order {S.order} exceeds the ideal enumeration cap {cap}")
    ideals = [Ideal(S, m) for m in _ideal_masks(S)]
    return tuple(sorted(ideals, key=Ideal.sort_key))


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    S = _check_parent(a, b)
    mask = 0
    for x in a.sorted_members():
        for y in b.sorted_members():
            mask |= 1 << S.add[x][y]
    return Ideal(S, _close(S, mask))


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    S = _check_parent(a, b)
    mask = 0
    for x in a.sorted_members():
        for y in b.sorted_members():
            mask |= 1 << S.mul[x][y]
    return Ideal(S, _close(S, mask))


def ideal_intersection(a: Ideal, b: Ideal) -> Ideal:
    S = _check_parent(a, b)
    return Ideal(S, a.mask & b.mask)


def is_ideal_mask(S: FiniteSemiring, mask: int) -> bool:
    return mask != 0 and _close(S, mask) == mask


def prime_witness(p: Ideal) -> tuple[int, int] | None:
    """Smallest ``(a, b)`` with ``ab`` in ``p`` but neither factor in ``p``."""
    S = p.parent
    outside = [i for i in S.elements if i not in p]
    for a in outside:
        for b in outside:
            if S.mul[a][b] in p:
                return (a, b)
    return None


def is_prime(p: Ideal) -> bool:
    """Proper and ``ab in p`` implies ``a in p`` or ``b in p``.  ``S`` itself is not prime."""
    return p.is_proper and prime_witness(p) is None


def prime_ideals(S: FiniteSemiring) -> tuple[Ideal, ...]:
    return tuple(p for p in all_ideals(S) if is_prime(p))


def is_maximal(m: Ideal) -> bool:
    if not m.is_proper:
        return False
    return not any(m < a and a.is_proper for a in all_ideals(m.parent))


def maximal_ideals(S: FiniteSemiring) -> tuple[Ideal, ...]:
    return tuple(m for m in all_ideals(S) if is_maximal(m))


def variety(a: Ideal) -> tuple[Ideal, ...]:
    return tuple(p for p in prime_ideals(a.parent) if a <= p)


def radical_via_primes(a: Ideal) -> Ideal:
    """Intersection of the primes over ``a``; the empty intersection is ``S``."""
    mask = a.parent.full_mask
    for p in variety(a):
        mask &= p.mask
    return Ideal(a.parent, mask)


def radical_via_krull(a: Ideal) -> Ideal:
    """Elements with some positive power inside ``a``."""
    S = a.parent
    mask = 0
    for s in S.elements:
        if any(x in a for x in S.orbits[s]):
            mask |= 1 << s
    return Ideal(S, mask)


radical = radical_via_krull


def is_radical(a: Ideal) -> bool:
    return radical(a) == a


@dataclass(frozen=True)
class NotAnIdeal:
    """Why the nonunit set fails to be an ideal."""

    reason: str
    witness: tuple[int, ...]


def nonunit_set(S: FiniteSemiring) -> frozenset[int]:
    return frozenset(S.elements) - S.unit_set


def nonunits(S: FiniteSemiring) -> Ideal | NotAnIdeal:
    """The set ``S - U(S)`` as an ideal, or the pair/element that breaks closure."""
    N = sorted(nonunit_set(S))
    for x in N:
        for y in N:
            if S.add[x][y] in S.unit_set:
                return NotAnIdeal("sum of nonunits is a unit", (x, y))
    for s in S.elements:
        for x in N:
            if S.mul[s][x] in S.unit_set:
                return NotAnIdeal("multiple of a nonunit is a unit", (s, x))
    mask = 0
    for x in N:
        mask |= 1 << x
    return Ideal(S, mask)


def covering_pairs(ideals: Iterable[Ideal]) -> list[tuple[Ideal, Ideal]]:
    items = sorted(ideals, key=Ideal.sort_key)
    edges = []
    for a in items:
        for b in items:
            if a < b and not any(a < c < b for c in items):
                edges.append((a, b))
    return edges


def hasse_dot(S: FiniteSemiring, primes_only: bool = False) -> str:
    """DOT text for the Hasse diagram of the ideal lattice (or the prime sub-poset)."""
    ideals = prime_ideals(S) if primes_only else all_ideals(S)
    ids = {a: f"I{k}" for k, a in enumerate(ideals)}
    title = (S.name or "S") + (" primes" if primes_only else " ideals")
    lines = [f'digraph "{title}" {{', "  rankdir=BT;", "  node [shape=box];"]
    for a, ident in ids.items():
        lines.append(f'  {ident} [label="{a.label()}"];')
    for a, b in covering_pairs(ideals):
        lines.append(f"  {ids[a]} -> {ids[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def is_local(S: FiniteSemiring) -> Verdict:
    """Exactly one maximal ideal; the witness is the first two maximal ideals otherwise."""
    ms = maximal_ideals(S)
    if len(ms) == 1:
        return Verdict.hold()
    return Verdict.fail(tuple(ms[:2]))

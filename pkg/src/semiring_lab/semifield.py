"""Semifield of fractions of a finite semidomain and the checks quantified over it.

Fractions ``a/b`` (``b != 0``) are identified when ``ad = cb``; each class is
represented by its lexicographically smallest ``(num, den)`` pair.  A subset
``p`` of ``S`` is read inside ``F(S)`` through the embedding ``s -> s/1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .core import FiniteSemiring, is_semidomain
from .ideals import Ideal, all_ideals, is_local, is_prime, maximal_ideals, prime_ideals
from .verdict import PreconditionError, Verdict


@dataclass(frozen=True)
class Fraction:
    num: int
    den: int


@dataclass(frozen=True, eq=False)
class FractionSemifield:
    parent: FiniteSemiring
    reps: tuple[Fraction, ...]
    class_of: dict[tuple[int, int], int] = field(repr=False)
    add: tuple[tuple[int, ...], ...] = field(repr=False)
    mul: tuple[tuple[int, ...], ...] = field(repr=False)
    embed: tuple[int, ...] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.reps)

    @property
    def classes(self) -> range:
        return range(len(self.reps))

    @property
    def zero(self) -> int:
        return self.embed[self.parent.zero]

    @property
    def one(self) -> int:
        return self.embed[self.parent.one]

    def of(self, num: int, den: int) -> int:
        return self.class_of[(num, den)]

    def preimage(self, c: int) -> int | None:
        """Element of ``S`` whose image is class ``c``, or None when ``c`` lies outside ``S``."""
        try:
            return self.embed.index(c)
        except ValueError:
            return None

    def in_image(self, c: int) -> bool:
        return c in self.embed

    def inverse(self, c: int) -> int:
        if c == self.zero:
            raise ZeroDivisionError("zero has no inverse")
        r = self.reps[c]
        return self.class_of[(r.den, r.num)]

    def contains(self, p: Ideal, c: int) -> bool:
        """``c`` lies in the embedded image of ``p``."""
        s = self.preimage(c)
        return s is not None and s in p

    def image(self, members) -> frozenset[int]:
        return frozenset(self.embed[s] for s in members)

    def scale(self, c: int, classes) -> frozenset[int]:
        return frozenset(self.mul[c][d] for d in classes)

    def label(self, c: int) -> str:
        r = self.reps[c]
        S = self.parent
        return f"{S.label(r.num)}/{S.label(r.den)}"


@lru_cache(maxsize=1024)
def build_fraction_semifield(S: FiniteSemiring) -> FractionSemifield:
    if not is_semidomain(S).holds:
        raise PreconditionError(f"{S.name or 'S'} is not a semidomain")
    M, A = S.mul, S.add
    nonzero = [b for b in S.elements if b != S.zero]
    pairs = [(a, b) for a in S.elements for b in nonzero]
    reps: list[Fraction] = []
    class_of: dict[tuple[int, int], int] = {}
    for a, b in pairs:  # lexicographic, so the first member of each class is its representative
        if (a, b) in class_of:
            continue
        k = len(reps)
        reps.append(Fraction(a, b))
        for c, d in pairs:
            if M[a][d] == M[c][b]:
                class_of[(c, d)] = k

    def cls(a: int, b: int) -> int:
        return class_of[(a, b)]

    add = tuple(
        tuple(cls(A[M[x.num][y.den]][M[y.num][x.den]], M[x.den][y.den]) for y in reps) for x in reps
    )
    mul = tuple(tuple(cls(M[x.num][y.num], M[x.den][y.den]) for y in reps) for x in reps)
    embed = tuple(cls(s, S.one) for s in S.elements)
    return FractionSemifield(S, tuple(reps), class_of, add, mul, embed)


def _semidomain(S: FiniteSemiring) -> FractionSemifield:
    return build_fraction_semifield(S)


def is_strongly_prime(F: FractionSemifield, p: Ideal) -> Verdict:
    """``xy in p`` with ``x, y in F(S)`` forces ``x in p`` or ``y in p``."""
    for x in F.classes:
        if F.contains(p, x):
            continue
        for y in F.classes:
            if not F.contains(p, y) and F.contains(p, F.mul[x][y]):
                return Verdict.fail((F.label(x), F.label(y)))
    return Verdict.hold()


def is_pvs(S: FiniteSemiring) -> Verdict:
    """Every prime ideal is strongly prime."""
    F = _semidomain(S)
    for p in prime_ideals(S):
        v = is_strongly_prime(F, p)
        if v.fails:
            return Verdict.fail((p, v.witness))
    return Verdict.hold()


def is_pvs_char1(S: FiniteSemiring) -> Verdict:
    """Local with a strongly prime maximal ideal."""
    F = _semidomain(S)
    local = is_local(S)
    if local.fails:
        return Verdict.fail(("not local", local.witness))
    (m,) = maximal_ideals(S)
    v = is_strongly_prime(F, m)
    return v if v.holds else Verdict.fail((m, v.witness))


def _local_maximal(S: FiniteSemiring) -> Ideal:
    _semidomain(S)
    if not is_local(S).holds:
        raise PreconditionError(f"{S.name or 'S'} is not local")
    return maximal_ideals(S)[0]


def subsetlocal_check(S: FiniteSemiring) -> Verdict:
    """For every fraction ``x``: ``xS`` inside ``m`` or ``m`` inside ``xS``."""
    m = _local_maximal(S)
    F = _semidomain(S)
    whole = F.image(S.elements)
    m_img = F.image(m.members)
    for x in F.classes:
        xs = F.scale(x, whole)
        if not (xs <= m_img or m_img <= xs):
            return Verdict.fail(F.label(x))
    return Verdict.hold()


def thmlop_hypothesis_check(S: FiniteSemiring) -> Verdict:
    """For every fraction ``x``: ``xm`` inside ``m`` or ``m`` inside ``xm``."""
    m = _local_maximal(S)
    F = _semidomain(S)
    m_img = F.image(m.members)
    for x in F.classes:
        xm = F.scale(x, m_img)
        if not (xm <= m_img or m_img <= xm):
            return Verdict.fail(F.label(x))
    return Verdict.hold()


def lemma_xinverse_check(S: FiniteSemiring, require_pvs: bool = True) -> Verdict:
    """For fractions ``x`` outside ``S`` and primes ``p``: ``x^-1 p`` inside ``p``."""
    F = _semidomain(S)
    if require_pvs and not is_pvs(S).holds:
        raise PreconditionError("the inverse-scaling lemma assumes a PVS")
    outside = [c for c in F.classes if not F.in_image(c)]
    if not outside:
        return Verdict.hold(note="vacuous")
    for p in prime_ideals(S):
        p_img = F.image(p.members)
        for x in outside:
            if not F.scale(F.inverse(x), p_img) <= p_img:
                return Verdict.fail((p, F.label(x)))
    return Verdict.hold()


def finite_collapse(S: FiniteSemiring) -> Verdict:
    """``|F(S)| = |S|`` and strongly prime coincides with prime for every ideal."""
    F = _semidomain(S)
    if F.size != S.order or sorted(F.embed) != list(F.classes):
        return Verdict.fail((f"|F(S)|={F.size}", f"|S|={S.order}"))
    for a in all_ideals(S):
        if a.is_proper and is_prime(a) != is_strongly_prime(F, a).holds:
            return Verdict.fail(("strongly prime differs on", a))
    return Verdict.hold()

"""Finite commutative semirings given by Cayley tables.

Elements are the indices ``0 .. order-1``.  The additive and multiplicative
identities may sit at any index; ``zero`` and ``one`` record where.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Any, Iterable, Sequence

from .verdict import Verdict

Table = tuple[tuple[int, ...], ...]


class SemiringStructureError(ValueError):
    """Raw table data is malformed (shape, range, or zero == one)."""


class AxiomError(ValueError):
    """Well-formed tables that violate at least one semiring axiom."""

    def __init__(self, report: AxiomReport) -> None:
        self.report = report
        first = report.violations[0]
        super().__init__(f"{first[0]} fails at {first[1]}")


@dataclass(frozen=True)
class AxiomReport:
    valid: bool
    violations: tuple[tuple[str, tuple[int, ...]], ...] = ()

    def names(self) -> list[str]:
        return [name for name, _ in self.violations]


def _as_table(raw: Any, order: int, what: str) -> Table:
    if not isinstance(raw, Sequence) or len(raw) != order:
        raise SemiringStructureError(f"{what} must have {order} rows")
    rows = []
    for i, row in enumerate(raw):
        if not isinstance(row, Sequence) or len(row) != order:
            raise SemiringStructureError(f"{what}[{i}] must have {order} entries")
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int):
                raise SemiringStructureError(f"{what}[{i}][{j}] is not an integer")
            if not 0 <= v < order:
                raise SemiringStructureError(f"{what}[{i}][{j}] = {v} is out of range")
        rows.append(tuple(row))
    return tuple(rows)


def _check_structure(add: Any, mul: Any, zero: Any, one: Any) -> tuple[int, Table, Table]:
    if not isinstance(add, Sequence) or len(add) == 0:
        raise SemiringStructureError("add table must be a non-empty list of rows")
    order = len(add)
    add_t = _as_table(add, order, "add")
    mul_t = _as_table(mul, order, "mul")
    for name, v in (("zero", zero), ("one", one)):
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < order:
            raise SemiringStructureError(f"{name} must be an element index in [0, {order})")
    if zero == one:
        raise SemiringStructureError("zero and one must be distinct")
    return order, add_t, mul_t


def _first(cells: Iterable[tuple[int, ...]], bad) -> tuple[int, ...] | None:
    for cell in cells:
        if bad(*cell):
            return cell
    return None


def validate_axioms(add: Any, mul: Any, zero: int, one: int) -> AxiomReport:
    """Scan the tables for every semiring axiom.

    Each violated axiom is reported once, with the lexicographically smallest
    witness tuple.  Malformed input raises :class:`SemiringStructureError`.
    """
    n, A, M = _check_structure(add, mul, zero, one)
    rng = range(n)
    singles = [(a,) for a in rng]
    pairs = [(a, b) for a in rng for b in rng if a < b]
    triples = list(product(rng, repeat=3))
    checks = [
        ("additive identity", singles, lambda a: A[zero][a] != a or A[a][zero] != a),
        ("commutativity of +", pairs, lambda a, b: A[a][b] != A[b][a]),
        ("associativity of +", triples, lambda a, b, c: A[A[a][b]][c] != A[a][A[b][c]]),
        ("multiplicative identity", singles, lambda a: M[one][a] != a or M[a][one] != a),
        ("commutativity of ·", pairs, lambda a, b: M[a][b] != M[b][a]),
        ("associativity of ·", triples, lambda a, b, c: M[M[a][b]][c] != M[a][M[b][c]]),
        ("distributivity", triples, lambda a, b, c: M[a][A[b][c]] != A[M[a][b]][M[a][c]]),
        ("absorption", singles, lambda a: M[a][zero] != zero or M[zero][a] != zero),
    ]
    violations = []
    for name, cells, bad in checks:
        w = _first(cells, bad)
        if w is not None:
            violations.append((name, w))
    return AxiomReport(not violations, tuple(violations))


def default_labels(order: int, zero: int, one: int) -> tuple[str, ...]:
    labels = []
    for i in range(order):
        if i == zero:
            labels.append("0")
        elif i == one:
            labels.append("1")
        elif i in (0, 1):
            labels.append(f"e{i}")
        else:
            labels.append(str(i))
    return tuple(labels)


@dataclass(frozen=True)
class FiniteSemiring:
    """A commutative semiring of small order given by its operation tables.

    Construction validates every axiom; use :func:`validate_axioms` to inspect
    violations without raising.
    """

    add: Table
    mul: Table
    zero: int
    one: int
    name: str = ""
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        report = validate_axioms(self.add, self.mul, self.zero, self.one)
        if not report.valid:
            raise AxiomError(report)
        # normalise lists to tuples so instances hash
        object.__setattr__(self, "add", tuple(tuple(r) for r in self.add))
        object.__setattr__(self, "mul", tuple(tuple(r) for r in self.mul))
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(self.order, self.zero, self.one))
        elif len(self.labels) != self.order or len(set(self.labels)) != self.order:
            raise SemiringStructureError("labels must be distinct and one per element")
        else:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def order(self) -> int:
        return len(self.add)

    @property
    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def plus(self, a: int, b: int) -> int:
        return self.add[a][b]

    def times(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def label(self, a: int) -> str:
        return self.labels[a]

    @cached_property
    def multiples(self) -> tuple[int, ...]:
        """Bitmask of ``{bx : x in S}`` for each ``b``."""
        return tuple(_mask(self.mul[b][x] for x in self.elements) for b in self.elements)

    @cached_property
    def unit_set(self) -> frozenset[int]:
        return frozenset(u for u in self.elements if any(self.mul[u][v] == self.one for v in self.elements))

    @cached_property
    def orbits(self) -> tuple[tuple[int, ...], ...]:
        return tuple(_orbit(self, x) for x in self.elements)

    def relabel(self, perm: Sequence[int], name: str | None = None) -> FiniteSemiring:
        """Return the isomorphic copy in which element ``i`` becomes ``perm[i]``."""
        n = self.order
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        add = tuple(tuple(perm[self.add[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
        mul = tuple(tuple(perm[self.mul[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
        labels = tuple(self.labels[inv[i]] for i in range(n))
        return FiniteSemiring(add, mul, perm[self.zero], perm[self.one],
                              name=self.name if name is None else name, labels=labels)

    def __repr__(self) -> str:
        return f"FiniteSemiring({self.name or '?'}, order={self.order})"


def _mask(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


def _orbit(S: FiniteSemiring, x: int) -> tuple[int, ...]:
    seen: list[int] = []
    p = x
    while p not in seen:
        seen.append(p)
        p = S.mul[p][x]
    return tuple(seen)


def from_tables(add, mul, zero: int, one: int, name: str = "", labels=()) -> FiniteSemiring:
    return FiniteSemiring(add, mul, zero, one, name=name, labels=tuple(labels))


def is_semidomain(S: FiniteSemiring) -> Verdict:
    """Multiplicative cancellation: ``ab = ac`` with ``a != 0`` forces ``b = c``.

    The witness ``(a, b, c)`` is the lexicographically smallest with ``b < c``.
    """
    for a in S.elements:
        if a == S.zero:
            continue
        row = S.mul[a]
        for b in S.elements:
            for c in range(b + 1, S.order):
                if row[b] == row[c]:
                    return Verdict.fail((a, b, c))
    return Verdict.hold()


def divides(S: FiniteSemiring, b: int, a: int) -> bool:
    """True iff ``b | a``, i.e. ``a = bx`` for some ``x``."""
    return any(S.mul[b][x] == a for x in S.elements)


def units(S: FiniteSemiring) -> frozenset[int]:
    return S.unit_set


def power_orbit(S: FiniteSemiring, x: int) -> tuple[int, ...]:
    """Distinct values of ``x, x^2, x^3, ...`` in order of first appearance."""
    return S.orbits[x]


def are_associates(S: FiniteSemiring, a: int, b: int) -> bool:
    return any(S.mul[u][b] == a for u in S.unit_set)


def has_zero_divisors(S: FiniteSemiring) -> tuple[int, int] | None:
    for a in S.elements:
        for b in S.elements:
            if a != S.zero and b != S.zero and S.mul[a][b] == S.zero:
                return (a, b)
    return None

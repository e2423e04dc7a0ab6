"""Exhaustive generation of small semirings up to isomorphism.

Two independent strategies are provided:

``backtrack``
    Place zero at 0 and one at 1, enumerate commutative addition monoids
    (one per orbit under relabelling of the remaining elements), then fill
    the multiplication table row by row, rejecting a row as soon as it breaks
    distributivity.
``bruteforce``
    Vectorised scan of every commutative table on ``n`` labelled elements,
    with no positions fixed, keeping monoid pairs that distribute.

Both dedupe by :func:`canonical_form`, and output is sorted by it.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from itertools import permutations, product
from typing import Callable, Iterable, Iterator

import numpy as np

from .core import FiniteSemiring

DEFAULT_ORDER_CAP = 4
ORDER_CAP_ENV = "SEMIRING_LAB_ORDER_CAP"


class OrderGuardError(ValueError):
    """Requested order exceeds the enumeration guard."""


def order_cap() -> int:
    raw = os.environ.get(ORDER_CAP_ENV)
    if raw is None:
        return DEFAULT_ORDER_CAP
    try:
        return int(raw)
    except ValueError:
        raise OrderGuardError(f"{ORDER_CAP_ENV}={raw!r} is not an integer") from None


def _relabelled(add, mul, zero: int, one: int, perm: tuple[int, ...]) -> tuple[int, ...]:
    n = len(add)
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    code = [perm[zero], perm[one]]
    code += [perm[add[inv[i]][inv[j]]] for i in range(n) for j in range(n)]
    code += [perm[mul[inv[i]][inv[j]]] for i in range(n) for j in range(n)]
    return tuple(code)


def canonical_form(S: FiniteSemiring) -> bytes:
    """Minimum encoding of ``(zero, one, add, mul)`` over all ``n!`` relabellings."""
    best = min(_relabelled(S.add, S.mul, S.zero, S.one, p) for p in permutations(range(S.order)))
    return bytes(best)


def from_canonical(code: bytes, name: str = "") -> FiniteSemiring:
    n = int(round(((len(code) - 2) / 2) ** 0.5))
    flat = list(code[2:])
    add = [flat[i * n:(i + 1) * n] for i in range(n)]
    mul = [flat[n * n + i * n:n * n + (i + 1) * n] for i in range(n)]
    return FiniteSemiring(add, mul, code[0], code[1], name=name)


def canonical_representative(S: FiniteSemiring, name: str | None = None) -> FiniteSemiring:
    return from_canonical(canonical_form(S), S.name if name is None else name)


def is_isomorphic(S: FiniteSemiring, T: FiniteSemiring) -> bool:
    return S.order == T.order and canonical_form(S) == canonical_form(T)


# ---------------------------------------------------------------- backtrack


def _assoc_ok(T: list[list[int | None]], n: int) -> bool:
    for a in range(n):
        for b in range(n):
            ab = T[a][b]
            if ab is None:
                continue
            for c in range(n):
                bc = T[b][c]
                if bc is None:
                    continue
                left, right = T[ab][c], T[a][bc]
                if left is not None and right is not None and left != right:
                    return False
    return True


def addition_monoids(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Commutative monoid tables with identity 0, one per orbit under relabelling ``2..n-1``."""
    cells = [(i, j) for i in range(1, n) for j in range(i, n)]
    T: list[list[int | None]] = [[None] * n for _ in range(n)]
    for i in range(n):
        T[0][i] = T[i][0] = i
    found: list[tuple[tuple[int, ...], ...]] = []

    def rec(k: int) -> None:
        if k == len(cells):
            found.append(tuple(tuple(r) for r in T))  # type: ignore[arg-type]
            return
        i, j = cells[k]
        for v in range(n):
            T[i][j] = T[j][i] = v
            if _assoc_ok(T, n):
                rec(k + 1)
        T[i][j] = T[j][i] = None

    rec(0)
    perms = [(0, 1) + p for p in permutations(range(2, n))] if n > 2 else [tuple(range(n))]

    def key(A, p):
        inv = [0] * n
        for i, q in enumerate(p):
            inv[q] = i
        return tuple(p[A[inv[i]][inv[j]]] for i in range(n) for j in range(n))

    reps = []
    for A in found:
        own = tuple(v for row in A for v in row)
        if all(key(A, p) >= own for p in perms):
            reps.append(A)
    return reps


def _multiplications(A: tuple[tuple[int, ...], ...]) -> list[tuple[tuple[int, ...], ...]]:
    """Multiplication tables (zero 0, one 1) distributing over ``A``."""
    n = len(A)
    M: list[list[int]] = [[0] * n for _ in range(n)]
    for i in range(n):
        M[1][i] = M[i][1] = i
    M[0] = [0] * n
    for i in range(n):
        M[i][0] = 0
    out = []

    def row_distributes(i: int) -> bool:
        row = M[i]
        for b in range(n):
            for c in range(b, n):
                if row[A[b][c]] != A[row[b]][row[c]]:
                    return False
        return True

    def rec(i: int) -> None:
        if i == n:
            if _assoc_ok(M, n):  # type: ignore[arg-type]
                out.append(tuple(tuple(r) for r in M))
            return
        free = list(range(i, n))
        for vals in product(range(n), repeat=len(free)):
            for j, v in zip(free, vals):
                M[i][j] = M[j][i] = v
            if row_distributes(i):
                rec(i + 1)

    if n <= 2:
        if row_distributes(0) and (n < 2 or row_distributes(1)) and _assoc_ok(M, n):  # type: ignore[arg-type]
            out.append(tuple(tuple(r) for r in M))
        return out
    rec(2)
    return out


def _semirings_over(A: tuple[tuple[int, ...], ...]) -> list[bytes]:
    out = []
    for M in _multiplications(A):
        S = FiniteSemiring(A, M, 0, 1)
        out.append(canonical_form(S))
    return out


def _backtrack_forms(n: int, workers: int) -> set[bytes]:
    adds = addition_monoids(n)
    forms: set[bytes] = set()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for chunk in ex.map(_semirings_over, adds):
                forms.update(chunk)
    else:
        for A in adds:
            forms.update(_semirings_over(A))
    return forms


# --------------------------------------------------------------- bruteforce


def _commutative_monoids(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All commutative associative tables with an identity; returns (tables, identities)."""
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    count = n ** len(cells)
    codes = np.arange(count, dtype=np.int64)
    T = np.empty((count, n, n), dtype=np.int8)
    for i, j in cells:
        digit = (codes % n).astype(np.int8)
        codes //= n
        T[:, i, j] = digit
        T[:, j, i] = digit
    ar = np.arange(n, dtype=np.int8)
    ident = np.full(count, -1, dtype=np.int64)
    for e in range(n - 1, -1, -1):
        ident[np.all(T[:, e, :] == ar, axis=1)] = e
    keep = ident >= 0
    T, ident = T[keep], ident[keep]
    idx = np.arange(len(T))
    ok = np.ones(len(T), dtype=bool)
    for a, b, c in product(range(n), repeat=3):
        ab = T[:, a, b].astype(np.int64)
        bc = T[:, b, c].astype(np.int64)
        ok &= T[idx, ab, c] == T[idx, a, bc]
    return T[ok], ident[ok]


def _bruteforce_forms(n: int) -> set[bytes]:
    T, ident = _commutative_monoids(n)
    forms: set[bytes] = set()
    for z in range(n):
        adds = T[ident == z]
        absorbing = np.all(T[:, z, :] == z, axis=1) & (ident != z)
        muls, units = T[absorbing], ident[absorbing]
        if len(muls) == 0:
            continue
        for A in adds:
            ok = np.ones(len(muls), dtype=bool)
            for a, b, c in product(range(n), repeat=3):
                left = muls[:, a, A[b, c]]
                right = A[muls[:, a, b], muls[:, a, c]]
                ok &= left == right
            for M, u in zip(muls[ok], units[ok]):
                S = FiniteSemiring(A.tolist(), M.tolist(), z, int(u))
                forms.add(canonical_form(S))
    return forms


# -------------------------------------------------------------------- public

STRATEGIES = ("backtrack", "bruteforce")


def canonical_forms(order: int, strategy: str = "backtrack", workers: int = 1,
                    cap: int | None = None) -> list[bytes]:
    limit = order_cap() if cap is None else cap
    if order > limit:
        raise OrderGuardError(f"order {order} exceeds the enumeration guard {limit} (set {ORDER_CAP_ENV})")
    if order < 2:
        return []
    if strategy == "backtrack":
        forms = _backtrack_forms(order, workers)
    elif strategy == "bruteforce":
        forms = _bruteforce_forms(order)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return sorted(forms)


def enumerate_semirings(order: int, filter: Callable[[FiniteSemiring], bool] | None = None,
                        strategy: str = "backtrack", workers: int = 1,
                        cap: int | None = None) -> Iterator[FiniteSemiring]:
    """One representative per isomorphism class, in canonical-form order.

    Representatives are the canonical relabellings (zero at 0, one at 1) and
    are named ``E<order>-<index>`` by their position in the full, unfiltered list.
    """
    for k, code in enumerate(canonical_forms(order, strategy, workers, cap)):
        S = from_canonical(code, name=f"E{order}-{k:03d}")
        if filter is None or filter(S):
            yield S


def corpus(max_order: int, workers: int = 1, cap: int | None = None) -> list[FiniteSemiring]:
    out: list[FiniteSemiring] = []
    for n in range(2, max_order + 1):
        out.extend(enumerate_semirings(n, workers=workers, cap=cap))
    return out


def count(order: int, strategy: str = "backtrack") -> int:
    return len(canonical_forms(order, strategy))


def dedupe(semirings: Iterable[FiniteSemiring]) -> list[FiniteSemiring]:
    seen: dict[bytes, FiniteSemiring] = {}
    for S in semirings:
        seen.setdefault(canonical_form(S), S)
    return [seen[k] for k in sorted(seen)]

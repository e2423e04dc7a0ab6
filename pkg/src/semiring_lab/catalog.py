"""Named example semirings.

The shipped corpus lives as JSON under ``catalog/``; the builders here
regenerate it and are handy in tests.
"""

from __future__ import annotations

from importlib import resources

from . import serialize
from .core import FiniteSemiring

CATALOG_FILES = ("b", "z2", "z3", "z4", "z5", "z6", "z7", "c3", "c5")


def boolean() -> FiniteSemiring:
    add = [[0, 1], [1, 1]]
    mul = [[0, 0], [0, 1]]
    return FiniteSemiring(add, mul, 0, 1, name="B")


def integers_mod(n: int) -> FiniteSemiring:
    if n < 2:
        raise ValueError("Z/n needs n >= 2")
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    mul = [[(i * j) % n for j in range(n)] for i in range(n)]
    return FiniteSemiring(add, mul, 0, 1, name=f"Z{n}")


def chain(labels: list[str], name: str) -> FiniteSemiring:
    """Totally ordered set with max as sum and min as product; bottom is zero, top is one."""
    n = len(labels)
    add = [[max(i, j) for j in range(n)] for i in range(n)]
    mul = [[min(i, j) for j in range(n)] for i in range(n)]
    return FiniteSemiring(add, mul, 0, n - 1, name=name, labels=tuple(labels))


def c3() -> FiniteSemiring:
    return chain(["0", "a", "1"], "C3")


def c5() -> FiniteSemiring:
    # discretised fuzzy semiring ([0,1], max, min)
    return chain(["0", "1/4", "1/2", "3/4", "1"], "C5")


def builders() -> dict[str, FiniteSemiring]:
    out = {"b": boolean(), "c3": c3(), "c5": c5()}
    for n in range(2, 8):
        out[f"z{n}"] = integers_mod(n)
    return {k: out[k] for k in CATALOG_FILES}


def catalog_path(key: str):
    return resources.files("semiring_lab") / "catalog" / f"{key}.json"


def load(key: str) -> FiniteSemiring:
    return serialize.loads(catalog_path(key).read_text(encoding="utf-8"))


def load_catalog() -> list[FiniteSemiring]:
    return [load(k) for k in CATALOG_FILES]

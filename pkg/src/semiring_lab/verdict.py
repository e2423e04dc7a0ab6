"""Tri-state outcome of a property check."""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Any


class Status(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    """Outcome of deciding a property.

    ``witness`` is present exactly when the status is FAILS.  ``bound_note``
    describes the search bound and is only set on UNKNOWN.  ``note`` carries
    free-form annotations such as ``"vacuous"`` or an analytic justification.
    """

    status: Status
    witness: Any = None
    bound_note: str | None = None
    note: str | None = None

    def __post_init__(self) -> None:
        if self.status is Status.FAILS and self.witness is None:
            raise ValueError("a failing verdict needs a witness")
        if self.status is Status.UNKNOWN and not self.bound_note:
            raise ValueError("an unknown verdict needs a bound note")

    @classmethod
    def hold(cls, note: str | None = None) -> Verdict:
        return cls(Status.HOLDS, note=note)

    @classmethod
    def fail(cls, witness: Any, note: str | None = None) -> Verdict:
        return cls(Status.FAILS, witness=witness, note=note)

    @classmethod
    def unknown(cls, bound_note: str, note: str | None = None) -> Verdict:
        return cls(Status.UNKNOWN, bound_note=bound_note, note=note)

    @classmethod
    def of(cls, holds: bool, witness: Any = None) -> Verdict:
        return cls.hold() if holds else cls.fail(witness)

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def fails(self) -> bool:
        return self.status is Status.FAILS

    @property
    def is_unknown(self) -> bool:
        return self.status is Status.UNKNOWN

    @property
    def vacuous(self) -> bool:
        return self.holds and self.note == "vacuous"

    def negated(self) -> Verdict:
        """Swap HOLDS and FAILS; UNKNOWN is left alone.  Used for mutation runs."""
        if self.status is Status.HOLDS:
            return Verdict.fail("mutant", note="negated")
        if self.status is Status.FAILS:
            return Verdict.hold(note="negated")
        return self

    def with_note(self, note: str) -> Verdict:
        return replace(self, note=note)

    def __repr__(self) -> str:
        parts = [self.status.value]
        if self.witness is not None:
            parts.append(f"witness={self.witness!r}")
        if self.bound_note:
            parts.append(f"bound={self.bound_note!r}")
        if self.note:
            parts.append(f"note={self.note!r}")
        return f"Verdict({', '.join(parts)})"


class PreconditionError(ValueError):
    """Raised when a check is applied outside its hypotheses (e.g. a non-semidomain)."""

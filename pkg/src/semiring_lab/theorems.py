"""Cross-checking theorem statements against independently computed verdicts.

Every check combines verdicts of separately implemented predicates (looked up by
name in a registry) and reports ``pass``, ``fail``, ``skipped`` or
``inconclusive``.  Swapping a registry entry for its negation is how mutation
runs confirm that the suite actually exercises each predicate.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from . import classify, symbolic
from .core import FiniteSemiring, is_semidomain
from .ideals import (
    Ideal,
    all_ideals,
    ideal_product,
    is_local,
    nonunits,
    prime_ideals,
    radical_via_krull,
    radical_via_primes,
)
from .verdict import Status, Verdict

PASS, FAIL, SKIPPED, INCONCLUSIVE = "pass", "fail", "skipped", "inconclusive"

FiniteChecks = dict[str, Callable[[FiniteSemiring], Verdict]]
SymbolicChecks = dict[str, Callable[..., Verdict]]


@dataclass(frozen=True)
class CheckResult:
    label: str
    outcome: str
    detail: str = ""

    def to_json(self) -> dict[str, str]:
        return {"label": self.label, "outcome": self.outcome, "detail": self.detail}


@dataclass(frozen=True)
class TheoremReport:
    structure: str
    kind: str  # "finite" or "symbolic"
    results: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return not self.failures()

    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(r for r in self.results if r.outcome == FAIL)

    def outcome(self, label: str) -> str | None:
        for r in self.results:
            if r.label == label:
                return r.outcome
        return None

    def to_json(self) -> dict[str, Any]:
        return {"structure": self.structure, "kind": self.kind,
                "results": [r.to_json() for r in self.results]}

    def to_text(self) -> str:
        lines = [f"{self.structure} [{self.kind}]"]
        for r in self.results:
            tail = f"  {r.detail}" if r.detail else ""
            lines.append(f"  {r.label:<26} {r.outcome}{tail}")
        return "\n".join(lines) + "\n"


# -------------------------------------------------------------- combinators


def _show(name: str, v: Verdict, S: FiniteSemiring | None) -> str:
    if v.holds:
        return f"{name} holds"
    if v.fails:
        return f"{name} fails {classify.render_text(v.witness, S)}"
    return f"{name} unknown ({v.bound_note})"


def _equivalent(label: str, named: list[tuple[str, Verdict]], S: FiniteSemiring | None = None) -> CheckResult:
    if any(v.is_unknown for _, v in named):
        return CheckResult(label, INCONCLUSIVE, "; ".join(_show(n, v, S) for n, v in named))
    if len({v.holds for _, v in named}) == 1:
        return CheckResult(label, PASS, "all hold" if named[0][1].holds else "all fail")
    return CheckResult(label, FAIL, "; ".join(_show(n, v, S) for n, v in named))


def _implies(label: str, a: tuple[str, Verdict], b: tuple[str, Verdict],
             S: FiniteSemiring | None = None) -> CheckResult:
    (na, va), (nb, vb) = a, b
    if va.fails or vb.holds:
        return CheckResult(label, PASS, "")
    if va.holds and vb.fails:
        return CheckResult(label, FAIL, f"{_show(na, va, S)}; {_show(nb, vb, S)}")
    return CheckResult(label, INCONCLUSIVE, f"{_show(na, va, S)}; {_show(nb, vb, S)}")


def _conj(a: Verdict, b: Verdict) -> Verdict:
    if a.fails:
        return a
    if b.fails:
        return b
    if a.is_unknown:
        return a
    return b


def _fact(label: str, witness: Any, what: str, S: FiniteSemiring) -> CheckResult:
    if witness is None:
        return CheckResult(label, PASS, "")
    return CheckResult(label, FAIL, f"{what} {classify.render_text(witness, S)}")


# --------------------------------------------------------------- finite side


def krull_witness(S: FiniteSemiring) -> Ideal | None:
    """First ideal whose two radical computations differ."""
    for a in all_ideals(S):
        if radical_via_primes(a) != radical_via_krull(a):
            return a
    return None


def prime_product_witness(S: FiniteSemiring) -> tuple[Ideal, Ideal, Ideal] | None:
    """A prime ``p`` over ``ab`` containing neither ``a`` nor ``b``."""
    ideals = all_ideals(S)
    for p in prime_ideals(S):
        for a in ideals:
            if a <= p:
                continue
            for b in ideals:
                if not b <= p and ideal_product(a, b) <= p:
                    return (p, a, b)
    return None


def _local_check(S: FiniteSemiring, c: FiniteChecks) -> CheckResult:
    loc = c["local"](S)
    N = nonunits(S)
    ideal = isinstance(N, Ideal)
    if loc.holds == ideal:
        return CheckResult("Local", PASS, "")
    shown = "nonunits form an ideal" if ideal else f"nonunits not an ideal: {N.reason}"
    return CheckResult("Local", FAIL, f"{_show('local', loc, S)}; {shown}")


def cross_check_theorems(S: FiniteSemiring, checks: FiniteChecks | None = None) -> TheoremReport:
    """Run every applicable theorem check on ``S``; results are sorted by label."""
    c = classify.FINITE_CHECKS if checks is None else checks
    lop = [(f"lop_cond{i}", c[f"lop_cond{i}"](S)) for i in range(1, 6)]
    lop1 = lop[0]
    uni = ("uniserial", c["uniserial"](S))
    out = [
        _equivalent("LOPmain", lop, S),
        _fact("Krull", krull_witness(S), "radicals differ on", S),
        _fact("PrimeProduct", prime_product_witness(S), "prime over a product misses both factors", S),
        _implies("Uniserial", uni, lop1, S),
        _local_check(S, c),
    ]
    semidomain_labels = ("ValuationChain", "GCDvaluationvasconcelos", "valuationPVS", "PVSLOP",
                         "PVSchar1", "subsetlocal", "LOP", "xinverse", "dividedchar",
                         "dividedchar-mirror", "dividedLO", "PVSchar2", "FiniteCollapse")
    if not is_semidomain(S).holds:
        out += [CheckResult(lbl, SKIPPED, "not a semidomain") for lbl in semidomain_labels]
    else:
        val = ("valuation", c["valuation"](S))
        pvs = ("pvs", c["pvs"](S))
        local = c["local"](S).holds and is_local(S).holds
        divided = [(f"divided_cond{i}", c[f"divided_cond{i}"](S)) for i in range(1, 5)]
        out += [
            _equivalent("ValuationChain", [val, uni], S),
            _equivalent("GCDvaluationvasconcelos",
                        [val, ("gcd and lop_cond1", _conj(c["gcd"](S), lop1[1]))], S),
            _implies("valuationPVS", val, pvs, S),
            _implies("PVSLOP", pvs, lop1, S),
            _equivalent("PVSchar1", [pvs, ("pvs_char1", c["pvs_char1"](S))], S),
            _implies("xinverse", pvs, ("xinverse", c["xinverse"](S)), S),
            _equivalent("dividedchar", divided, S),
            _equivalent("dividedchar-mirror", [divided[3], ("divided_mirror", c["divided_mirror"](S))], S),
            _implies("dividedLO", divided[0], lop1, S),
            _equivalent("PVSchar2", [(f"pvschar2_cond{i}", c[f"pvschar2_cond{i}"](S)) for i in range(1, 7)], S),
            CheckResult("FiniteCollapse", *_collapse(c["finite_collapse"](S), S)),
        ]
        if local:
            out += [
                _equivalent("subsetlocal", [pvs, ("subsetlocal", c["subsetlocal"](S))], S),
                _implies("LOP", ("thmlop", c["thmlop"](S)), lop1, S),
            ]
        else:
            # a PVS is always local, so the subset characterisation reduces to "pvs fails"
            out += [
                _implies("subsetlocal", pvs, ("local", Verdict.fail("not local")), S),
                CheckResult("LOP", SKIPPED, "hypothesis needs a local semidomain"),
            ]
    return TheoremReport(S.name or "S", "finite", tuple(sorted(out, key=lambda r: r.label)))


def _collapse(v: Verdict, S: FiniteSemiring) -> tuple[str, str]:
    if v.holds:
        return PASS, ""
    return FAIL, _show("finite_collapse", v, S)


# ------------------------------------------------------------- symbolic side


def cross_check_symbolic(D: symbolic.SymbolicSemidomain, bound: symbolic.Bound = symbolic.DEFAULT_BOUND,
                         checks: SymbolicChecks | None = None) -> TheoremReport:
    """Theorem checks on a symbolic semidomain; ``lop_cond5`` stands in for linearly ordered primes."""
    c = symbolic.SYMBOLIC_CHECKS if checks is None else checks
    v = {k: fn(D, bound) for k, fn in c.items()}
    lop = ("lop_cond5", v["lop_cond5"])
    pvs = ("pvs", v["pvs"])
    out = [
        _equivalent("GCDvaluationvasconcelos",
                    [("valuation", v["valuation"]), ("gcd and lop_cond5", _conj(v["gcd"], v["lop_cond5"]))]),
        _implies("valuationPVS", ("valuation", v["valuation"]), pvs),
        _implies("PVSLOP", pvs, lop),
        _equivalent("PVSchar1", [pvs, ("strongly_prime_m", v["strongly_prime_m"])]),
        _equivalent("subsetlocal", [pvs, ("subsetlocal", v["subsetlocal"])]),
        _implies("LOP", ("thmlop", v["thmlop"]), lop),
        _implies("dividedLO", ("divided_cond4", v["divided_cond4"]), lop),
        _implies("xinverse", pvs, ("xinverse", v["xinverse"])),
    ]
    return TheoremReport(D.name, "symbolic", tuple(sorted(out, key=lambda r: r.label)))


# ------------------------------------------------------------------ mutation

# predicate name -> theorem check expected to catch its negation
MUTATION_TARGETS: dict[str, str] = {
    **{f"lop_cond{i}": "LOPmain" for i in range(1, 6)},
    "uniserial": "Uniserial",
    "local": "Local",
    "valuation": "ValuationChain",
    "gcd": "GCDvaluationvasconcelos",
    **{f"divided_cond{i}": "dividedchar" for i in range(1, 5)},
    "divided_mirror": "dividedchar-mirror",
    "pvs": "PVSchar1",
    "pvs_char1": "PVSchar1",
    "subsetlocal": "subsetlocal",
    "thmlop": "LOP",
    "xinverse": "xinverse",
    **{f"pvschar2_cond{i}": "PVSchar2" for i in range(1, 7)},
    "finite_collapse": "FiniteCollapse",
}

_SYMBOLIC_NAME = {"pvs_char1": "strongly_prime_m"}


def _negate(fn: Callable[..., Verdict]) -> Callable[..., Verdict]:
    def mutant(*args, **kwargs) -> Verdict:
        return fn(*args, **kwargs).negated()

    mutant.__name__ = f"not_{getattr(fn, '__name__', 'check')}"
    return mutant


def mutated_checks(name: str | None) -> tuple[FiniteChecks, SymbolicChecks]:
    """Registries with the named predicate negated (unchanged when ``name`` is None)."""
    finite = dict(classify.FINITE_CHECKS)
    sym = dict(symbolic.SYMBOLIC_CHECKS)
    if name is None:
        return finite, sym
    if name not in finite:
        raise KeyError(f"unknown predicate {name!r}; choose from {', '.join(sorted(finite))}")
    finite[name] = _negate(finite[name])
    skey = _SYMBOLIC_NAME.get(name, name)
    if skey in sym:
        sym[skey] = _negate(sym[skey])
    return finite, sym


# --------------------------------------------------------------------- suite


@dataclass
class SuiteReport:
    reports: list[TheoremReport] = field(default_factory=list)
    mutation: str | None = None
    bound: str = ""

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    def failing_labels(self) -> list[str]:
        return sorted({f.label for r in self.reports for f in r.failures()})

    def tally(self) -> dict[str, dict[str, int]]:
        table: dict[str, dict[str, int]] = {}
        for rep in self.reports:
            for res in rep.results:
                row = table.setdefault(res.label, {PASS: 0, FAIL: 0, SKIPPED: 0, INCONCLUSIVE: 0})
                row[res.outcome] += 1
        return dict(sorted(table.items()))

    def to_json(self) -> dict[str, Any]:
        return {
            "structures": len(self.reports),
            "mutation": self.mutation,
            "bound": self.bound,
            "ok": self.ok,
            "failing": self.failing_labels(),
            "summary": self.tally(),
            "reports": [r.to_json() for r in self.reports],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"structures: {len(self.reports)}"]
        if self.mutation:
            lines.append(f"mutation: {self.mutation} negated")
        if self.bound:
            lines.append(f"symbolic bound: {self.bound}")
        if not self.reports:
            lines.append("warning: empty corpus")
        lines.append("")
        lines.append(f"{'theorem':<26} {'pass':>5} {'fail':>5} {'skip':>5} {'open':>5}")
        for label, row in self.tally().items():
            lines.append(f"{label:<26} {row[PASS]:>5} {row[FAIL]:>5} {row[SKIPPED]:>5} {row[INCONCLUSIVE]:>5}")
        failures = [(r.structure, f) for r in self.reports for f in r.failures()]
        if failures:
            lines.append("")
            lines.append("failures:")
            for name, f in failures:
                lines.append(f"  {f.label} on {name}: {f.detail}")
        lines.append("")
        lines.append("result: " + ("PASS" if self.ok else "FAIL " + ", ".join(self.failing_labels())))
        return "\n".join(lines) + "\n"


def _finite_job(args: tuple[FiniteSemiring, str | None]) -> TheoremReport:
    S, mutate = args
    finite, _ = mutated_checks(mutate)
    return cross_check_theorems(S, finite)


def run_suite(structures: Iterable[FiniteSemiring],
              symbolic_instances: Iterable[symbolic.SymbolicSemidomain] = (),
              bound: symbolic.Bound = symbolic.DEFAULT_BOUND,
              mutate: str | None = None, workers: int = 1) -> SuiteReport:
    """Cross-check every structure; the report order follows the input order."""
    finite, sym = mutated_checks(mutate)
    items = list(structures)
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            reports = list(ex.map(_finite_job, [(S, mutate) for S in items], chunksize=4))
    else:
        reports = [cross_check_theorems(S, finite) for S in items]
    sym_items = list(symbolic_instances)
    reports += [cross_check_symbolic(D, bound, sym) for D in sym_items]
    return SuiteReport(reports, mutate, bound.describe() if sym_items else "")


__all__ = [
    "CheckResult", "TheoremReport", "SuiteReport", "cross_check_theorems", "cross_check_symbolic",
    "krull_witness", "prime_product_witness", "mutated_checks", "MUTATION_TARGETS", "run_suite",
    "PASS", "FAIL", "SKIPPED", "INCONCLUSIVE", "Status",
]

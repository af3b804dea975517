"""Connective verification and classification of abstract logics.

Each connective condition is a biconditional quantified over the totally
prime theories; a condition whose table is absent is reported as not
applicable rather than silently true.  Witnesses are minimal in the
canonical theory-then-index order, so failures are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .core import (
    AbstractLogic,
    ExprSet,
    _check_universe,
    consequence,
    is_consistent,
    set_key,
    sorted_sets,
    theory_spectrum,
)
from .errors import (
    MissingJoin,
    NotDistributive,
    PreconditionViolated,
    PrimalityFailure,
)

CONDITION_ORDER = ("join", "meet", "neg", "impl", "top", "bottom")


@dataclass(frozen=True)
class ConditionCheck:
    """Outcome of one connective condition.

    ``status`` is None when the connective is absent (not applicable),
    otherwise the truth of the condition.  ``witness`` is the first
    failing (theory, indices...) tuple in canonical order.
    """

    connective: str
    status: bool | None
    witness: tuple | None = None


@dataclass(frozen=True)
class ClassificationReport:
    conditions: tuple[ConditionCheck, ...]
    classification: str
    maximals_equal_totally_primes: bool
    has_valid_formula: bool
    has_inconsistent_formula: bool

    def condition(self, connective: str) -> ConditionCheck:
        for c in self.conditions:
            if c.connective == connective:
                return c
        raise KeyError(connective)

    def _ok(self, *names: str) -> bool:
        return all(self.condition(n).status is True for n in names)

    @property
    def is_distributive(self) -> bool:
        return self._ok("join", "meet")

    @property
    def is_bounded_distributive(self) -> bool:
        return self.is_distributive and self._ok("top", "bottom")

    @property
    def is_intuitionistic(self) -> bool:
        return self._ok("join", "meet", "neg", "impl")

    @property
    def is_classical(self) -> bool:
        return self.is_intuitionistic and self.maximals_equal_totally_primes


def _tp_sorted(logic: AbstractLogic) -> list[ExprSet]:
    return sorted_sets(theory_spectrum(logic).totally_primes)


def _check_join(logic: AbstractLogic) -> ConditionCheck:
    c = logic.connectives
    if c is None:
        return ConditionCheck("join", None)
    for t in _tp_sorted(logic):
        for a in logic.exprs:
            for b in logic.exprs:
                if (c.join[a][b] in t) != (a in t or b in t):
                    return ConditionCheck("join", False, (t, a, b))
    return ConditionCheck("join", True)


def _check_meet(logic: AbstractLogic) -> ConditionCheck:
    c = logic.connectives
    if c is None or c.meet is None:
        return ConditionCheck("meet", None)
    for t in _tp_sorted(logic):
        for a in logic.exprs:
            for b in logic.exprs:
                if (c.meet[a][b] in t) != (a in t and b in t):
                    return ConditionCheck("meet", False, (t, a, b))
    return ConditionCheck("meet", True)


def _check_neg(logic: AbstractLogic) -> ConditionCheck:
    # negation of a holds in t exactly when t together with a is inconsistent
    c = logic.connectives
    if c is None or c.neg is None:
        return ConditionCheck("neg", None)
    for t in _tp_sorted(logic):
        for a in logic.exprs:
            if (c.neg[a] in t) != (not is_consistent(logic, t | {a})):
                return ConditionCheck("neg", False, (t, a))
    return ConditionCheck("neg", True)


def _check_impl(logic: AbstractLogic) -> ConditionCheck:
    # a->b holds in t exactly when every totally prime extension of t
    # containing a also contains b
    c = logic.connectives
    if c is None or c.impl is None:
        return ConditionCheck("impl", None)
    tps = _tp_sorted(logic)
    for t in tps:
        for a in logic.exprs:
            for b in logic.exprs:
                entails = all(b in u for u in tps if t <= u and a in u)
                if (c.impl[a][b] in t) != entails:
                    return ConditionCheck("impl", False, (t, a, b))
    return ConditionCheck("impl", True)


def _check_top(logic: AbstractLogic) -> ConditionCheck:
    c = logic.connectives
    if c is None or c.top is None:
        return ConditionCheck("top", None)
    for t in sorted_sets(logic.theories.theories):
        if c.top not in t:
            return ConditionCheck("top", False, (t,))
    return ConditionCheck("top", True)


def _check_bottom(logic: AbstractLogic) -> ConditionCheck:
    c = logic.connectives
    if c is None or c.bottom is None:
        return ConditionCheck("bottom", None)
    for t in sorted_sets(logic.theories.theories):
        if c.bottom in t:
            return ConditionCheck("bottom", False, (t,))
    return ConditionCheck("bottom", True)


@lru_cache(maxsize=None)
def verify_connectives(logic: AbstractLogic) -> ClassificationReport:
    """Check every applicable connective condition and classify the logic.

    The class ladder is none, distributive (join and meet conditions),
    bounded-distributive (adds designated top and bottom), intuitionistic
    (join, meet, neg, impl), classical (intuitionistic with maximal and
    totally prime theories coinciding).  An absent connective never
    upgrades a verdict.
    """
    checks = (
        _check_join(logic),
        _check_meet(logic),
        _check_neg(logic),
        _check_impl(logic),
        _check_top(logic),
        _check_bottom(logic),
    )
    by_name = {c.connective: c for c in checks}

    def ok(*names: str) -> bool:
        return all(by_name[n].status is True for n in names)

    spectrum = theory_spectrum(logic)
    mtp = spectrum.maximals == spectrum.totally_primes
    if ok("join", "meet", "neg", "impl") and mtp:
        label = "classical"
    elif ok("join", "meet", "neg", "impl"):
        label = "intuitionistic"
    elif ok("join", "meet", "top", "bottom"):
        label = "bounded-distributive"
    elif ok("join", "meet"):
        label = "distributive"
    else:
        label = "none"
    return ClassificationReport(
        conditions=checks,
        classification=label,
        maximals_equal_totally_primes=mtp,
        has_valid_formula=bool(consequence(logic, frozenset())),
        has_inconsistent_formula=any(not is_consistent(logic, {a}) for a in logic.exprs),
    )


def join_stable_theories(logic: AbstractLogic) -> frozenset[ExprSet]:
    """Theories t with: a join b in t implies a in t or b in t, for all a, b.

    In a distributive logic this family coincides with the prime theories;
    the degenerate-prime check asserts that coincidence.
    """
    c = logic.connectives
    if c is None:
        raise MissingJoin("logic has no join table")
    out = set()
    for t in logic.theories.theories:
        if all((c.join[a][b] not in t) or (a in t or b in t)
               for a in logic.exprs for b in logic.exprs):
            out.add(t)
    return frozenset(out)


@dataclass(frozen=True)
class DegeneratePrimeReport:
    no_valid_formula: bool
    empty_is_prime: bool
    no_inconsistent_formula: bool
    full_set_is_prime: bool


def check_degenerate_primes(logic: AbstractLogic) -> DegeneratePrimeReport:
    """The two degenerate-prime biconditionals, evaluated and asserted.

    No valid formula exists iff the empty set is a prime theory, and no
    inconsistent formula exists iff the full expression set is one.
    Primality of the two extreme sets is taken in the join-stability
    reading, which both satisfy vacuously, so each reduces to family
    membership; the coincidence of join-stable and intersection-prime
    theories is asserted as a side condition.
    """
    report = verify_connectives(logic)
    if not report.is_distributive:
        raise NotDistributive(f"degenerate-prime check needs a distributive logic, got {report.classification}")

    assert join_stable_theories(logic) == theory_spectrum(logic).primes, \
        "join-stable theories diverge from intersection-prime theories"

    ths = logic.theories.theories
    no_valid = not consequence(logic, frozenset())
    empty_prime = frozenset() in ths
    no_inconsistent = all(is_consistent(logic, {a}) for a in logic.exprs)
    full_prime = logic.full_set in ths

    assert no_valid == empty_prime, "valid-formula biconditional failed"
    assert no_inconsistent == full_prime, "inconsistent-formula biconditional failed"
    return DegeneratePrimeReport(
        no_valid_formula=no_valid,
        empty_is_prime=empty_prime,
        no_inconsistent_formula=no_inconsistent,
        full_set_is_prime=full_prime,
    )


def disjunctive_closure(logic: AbstractLogic, B: Iterable[int]) -> ExprSet:
    """Least superset of B closed under the join table (pairwise fixpoint)."""
    c = logic.connectives
    if c is None:
        raise MissingJoin("disjunctive closure needs a join table")
    b = _check_universe(logic.universe_size, B, "B")
    if not b:
        raise PreconditionViolated("disjunctive closure of the empty set is not defined")
    out = set(b)
    changed = True
    while changed:
        changed = False
        for x in list(out):
            for y in list(out):
                j = c.join[x][y]
                if j not in out:
                    out.add(j)
                    changed = True
    return frozenset(out)


def prime_extension(logic: AbstractLogic, T: Iterable[int], S: Iterable[int]) -> ExprSet:
    """Extend the theory T to a prime theory avoiding the join-closed set S.

    Greedy maximalization inside W = {theories containing T and disjoint
    from S}: repeatedly step to the canonically smallest strictly larger
    member of W.  A maximal member of W is prime whenever the logic is
    distributive; if the final theory fails the primality check the input
    was not distributive and PrimalityFailure reports it.
    """
    c = logic.connectives
    if c is None:
        raise MissingJoin("prime extension needs a join table to test S")
    t = _check_universe(logic.universe_size, T, "T")
    s = _check_universe(logic.universe_size, S, "S")
    if t not in logic.theories.theories:
        raise PreconditionViolated(f"T={set_key(t)} is not a theory", witness=t)
    if not s:
        raise PreconditionViolated("S must be non-empty")
    for x in s:
        for y in s:
            if c.join[x][y] not in s:
                raise PreconditionViolated(f"S is not join-closed: {x} join {y} escapes", witness=(x, y))
    if t & s:
        raise PreconditionViolated(f"T and S intersect in {set_key(t & s)}", witness=t & s)

    admissible = [u for u in logic.theories.theories if t <= u and not (u & s)]
    current = t
    while True:
        bigger = sorted_sets(u for u in admissible if current < u)
        if not bigger:
            break
        current = bigger[0]

    primes = theory_spectrum(logic).primes
    if current not in primes:
        raise PrimalityFailure(
            f"maximal extension {set_key(current)} is not prime; logic is not distributive",
            witness=current,
        )
    return current

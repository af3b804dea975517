"""Finite abstract logics as intersection structures.

An abstract logic here is a finite expression universe (indices 0..n-1)
together with a non-empty family of subsets, the theories, closed under
intersections of non-empty subfamilies.  Consequence, consistency and the
primality hierarchy are all derived from the family by exhaustive set
algebra; nothing is ever axiomatic or lazy.

Expressions are plain ints and expression sets are frozensets of ints.
Every public operation accepts any iterable of indices and normalizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import EmptyGeneratorSet, NotTheories

ExprSet = frozenset[int]


def exprset(members: Iterable[int]) -> ExprSet:
    return frozenset(members)


def set_key(s: Iterable[int]) -> tuple[int, ...]:
    """Canonical sort key for expression sets (and point sets alike)."""
    return tuple(sorted(s))


def sorted_sets(sets: Iterable[ExprSet]) -> list[ExprSet]:
    """Deterministic enumeration order used for witnesses and emission."""
    return sorted(sets, key=set_key)


def _check_universe(universe_size: int, s: Iterable[int], what: str) -> ExprSet:
    out = frozenset(s)
    for i in out:
        if not isinstance(i, int) or i < 0 or i >= universe_size:
            raise ValueError(f"{what} contains index {i!r} outside universe of size {universe_size}")
    return out


@dataclass(frozen=True)
class TheoryFamily:
    """A non-empty, intersection-closed family of expression sets.

    Closure under intersections of arbitrary non-empty subfamilies is
    equivalent, for a finite family, to closure under pairwise
    intersections; the constructor checks the pairwise form.
    """

    universe_size: int
    theories: frozenset[ExprSet]

    def __post_init__(self):
        fixed = frozenset(frozenset(t) for t in self.theories)
        object.__setattr__(self, "theories", fixed)
        if not fixed:
            raise ValueError("theory family must be non-empty")
        for t in fixed:
            _check_universe(self.universe_size, t, "theory")
        for a in fixed:
            for b in fixed:
                if a & b not in fixed:
                    raise ValueError(f"family not intersection-closed: {set_key(a)} ∩ {set_key(b)} missing")

    def __iter__(self) -> Iterator[ExprSet]:
        return iter(sorted_sets(self.theories))

    def __len__(self) -> int:
        return len(self.theories)

    def __contains__(self, s: object) -> bool:
        return s in self.theories


@dataclass(frozen=True)
class ConnectiveTables:
    """Total lookup tables for the abstract connectives.

    ``join`` is required; the rest are optional and their absence simply
    makes the matching classification condition inapplicable.  ``top`` and
    ``bottom`` are designated expression indices, not tables.
    """

    join: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...] | None = None
    impl: tuple[tuple[int, ...], ...] | None = None
    neg: tuple[int, ...] | None = None
    top: int | None = None
    bottom: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "join", tuple(tuple(row) for row in self.join))
        if self.meet is not None:
            object.__setattr__(self, "meet", tuple(tuple(row) for row in self.meet))
        if self.impl is not None:
            object.__setattr__(self, "impl", tuple(tuple(row) for row in self.impl))
        if self.neg is not None:
            object.__setattr__(self, "neg", tuple(self.neg))

    def validate(self, n: int) -> None:
        for name in ("join", "meet", "impl"):
            table = getattr(self, name)
            if table is None:
                continue
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError(f"{name} table is not {n}x{n}")
            for row in table:
                for v in row:
                    if not 0 <= v < n:
                        raise ValueError(f"{name} table entry {v} outside universe")
        if self.neg is not None:
            if len(self.neg) != n or any(not 0 <= v < n for v in self.neg):
                raise ValueError("neg table malformed")
        for name in ("top", "bottom"):
            v = getattr(self, name)
            if v is not None and not 0 <= v < n:
                raise ValueError(f"{name} index {v} outside universe")


@dataclass(frozen=True)
class AbstractLogic:
    """Expression names, a theory family, and optional connective tables."""

    expr_names: tuple[str, ...]
    theories: TheoryFamily
    connectives: ConnectiveTables | None = None

    def __post_init__(self):
        object.__setattr__(self, "expr_names", tuple(str(s) for s in self.expr_names))
        n = len(self.expr_names)
        if n != self.theories.universe_size:
            raise ValueError(f"{n} expression names for universe of size {self.theories.universe_size}")
        if len(set(self.expr_names)) != n:
            raise ValueError("expression names must be distinct")
        if self.connectives is not None:
            self.connectives.validate(n)

    @property
    def universe_size(self) -> int:
        return self.theories.universe_size

    @property
    def exprs(self) -> range:
        return range(self.universe_size)

    @property
    def full_set(self) -> ExprSet:
        return frozenset(self.exprs)

    @property
    def is_regular(self) -> bool:
        """True when the full expression set is not itself a theory."""
        return self.full_set not in self.theories

    def expr_index(self, name: str) -> int:
        return self.expr_names.index(name)

    def theories_with(self, a: int) -> frozenset[ExprSet]:
        """Membership column of an expression: all theories containing it."""
        return frozenset(t for t in self.theories.theories if a in t)


@dataclass(frozen=True)
class TheorySpectrum:
    """The primality hierarchy of a theory family.

    ``minimal_generators`` equals ``totally_primes``: finite families are
    trivially chain-closed, so the totally prime theories form the least
    generator set.
    """

    primes: frozenset[ExprSet]
    totally_primes: frozenset[ExprSet]
    maximals: frozenset[ExprSet]
    minimal_generators: frozenset[ExprSet]


def close_under_intersection(universe_size: int, generators: Iterable[Iterable[int]]) -> TheoryFamily:
    """Smallest intersection-closed family containing the generators.

    Pairwise fixpoint: on a finite family, closing under binary
    intersections already closes under all non-empty subfamilies.
    """
    gens = [_check_universe(universe_size, g, "generator") for g in generators]
    if not gens:
        raise EmptyGeneratorSet("no generators given")
    family = set(gens)
    changed = True
    while changed:
        changed = False
        snapshot = list(family)
        for i, a in enumerate(snapshot):
            for b in snapshot[i + 1:]:
                c = a & b
                if c not in family:
                    family.add(c)
                    changed = True
    return TheoryFamily(universe_size, frozenset(family))


def is_consistent(logic: AbstractLogic, A: Iterable[int]) -> bool:
    """A set is consistent when some theory contains it."""
    a = _check_universe(logic.universe_size, A, "A")
    return any(a <= t for t in logic.theories.theories)


def consequence(logic: AbstractLogic, A: Iterable[int]) -> ExprSet:
    """Intersection of all theories containing A.

    An inconsistent premise set is contained in no theory; by the ex falso
    convention the intersection over the empty subfamily is the full
    expression set, so inconsistent sets entail everything.
    """
    a = _check_universe(logic.universe_size, A, "A")
    out = logic.full_set
    covered = False
    for t in logic.theories.theories:
        if a <= t:
            out &= t
            covered = True
    return out if covered else logic.full_set


def is_theory(logic: AbstractLogic, S: Iterable[int]) -> bool:
    """Membership in the family, cross-checked against the closure reading.

    For intersection structures the two characterizations coincide:
    S is a theory iff S is consistent and equals its own consequence set.
    Both are computed and compared on every call.
    """
    s = _check_universe(logic.universe_size, S, "S")
    member = s in logic.theories.theories
    closed = is_consistent(logic, s) and consequence(logic, s) == s
    assert member == closed, f"family membership and closure reading disagree on {set_key(s)}"
    return member


def _is_prime(t: ExprSet, theories: frozenset[ExprSet]) -> bool:
    """Intersection-irreducibility of one member of a finite family.

    T fails to be prime exactly when some non-empty family excluding T
    intersects to T.  Any witnessing family consists of strict supersets
    of T, and then the set of all strict supersets also intersects to T,
    so checking that single largest candidate family is exact.  No
    distributivity is needed for this reduction.
    """
    strict = [u for u in theories if t < u]
    if not strict:
        return True
    acc = strict[0]
    for u in strict[1:]:
        acc &= u
    return acc != t


@lru_cache(maxsize=None)
def theory_spectrum(logic: AbstractLogic) -> TheorySpectrum:
    """Primes, totally primes, maximal theories, and the least generator set.

    On a finite family every intersecting subfamily is finite, so the
    prime and totally prime notions coincide; both fields are populated
    from the same criterion and the collapse is part of the contract.
    """
    ths = logic.theories.theories
    primes = frozenset(t for t in ths if _is_prime(t, ths))
    maximals = frozenset(t for t in ths if not any(t < u for u in ths))
    return TheorySpectrum(
        primes=primes,
        totally_primes=primes,
        maximals=maximals,
        minimal_generators=primes,
    )


def is_generator_set(logic: AbstractLogic, G: Iterable[Iterable[int]]) -> bool:
    """True when every theory is an intersection of a non-empty subset of G.

    For a fixed theory T the only candidate worth trying is the subfamily
    of all members of G containing T: its intersection is the smallest
    reachable superset of T.
    """
    gs = [frozenset(g) for g in G]
    for g in gs:
        if g not in logic.theories.theories:
            raise NotTheories(f"generator candidate {set_key(g)} is not a theory", witness=g)
    for t in logic.theories.theories:
        above = [g for g in gs if t <= g]
        if not above:
            return False
        acc = above[0]
        for g in above[1:]:
            acc &= g
        if acc != t:
            return False
    return True


def logically_equivalent(logic: AbstractLogic, a: int, b: int) -> bool:
    """Mutual consequence, cross-checked against membership-column equality."""
    if not (0 <= a < logic.universe_size and 0 <= b < logic.universe_size):
        raise ValueError(f"expression index out of range: {(a, b)}")
    mutual = b in consequence(logic, {a}) and a in consequence(logic, {b})
    same_column = logic.theories_with(a) == logic.theories_with(b)
    assert mutual == same_column, f"equivalence characterizations disagree on {(a, b)}"
    return mutual


def quotient_logic(logic: AbstractLogic) -> tuple[AbstractLogic, tuple[int, ...]]:
    """Collapse logically equivalent expressions to one representative each.

    Representatives are the smallest index of each equivalence class, kept
    in ascending order.  Theories are unions of whole classes (equivalent
    expressions share every theory) so transporting them through the
    projection is well defined; connective tables are transported through
    the representatives.  The projection is a normal, stable and
    surjective logic map; the duality module's analyzer confirms that.
    """
    n = logic.universe_size
    column_to_rep: dict[frozenset[ExprSet], int] = {}
    rep_of: list[int] = []
    for a in range(n):
        col = logic.theories_with(a)
        if col not in column_to_rep:
            column_to_rep[col] = a
        rep_of.append(column_to_rep[col])

    reps = sorted(set(rep_of))
    new_index = {rep: i for i, rep in enumerate(reps)}
    projection = tuple(new_index[rep_of[a]] for a in range(n))

    names = tuple(logic.expr_names[rep] for rep in reps)
    theories = TheoryFamily(
        len(reps),
        frozenset(frozenset(projection[a] for a in t) for t in logic.theories.theories),
    )

    tables = None
    if logic.connectives is not None:
        c = logic.connectives

        def move(table):
            if table is None:
                return None
            return tuple(tuple(projection[table[i][j]] for j in reps) for i in reps)

        tables = ConnectiveTables(
            join=move(c.join),
            meet=move(c.meet),
            impl=move(c.impl),
            neg=tuple(projection[c.neg[i]] for i in reps) if c.neg is not None else None,
            top=projection[c.top] if c.top is not None else None,
            bottom=projection[c.bottom] if c.bottom is not None else None,
        )

    return AbstractLogic(names, theories, tables), projection

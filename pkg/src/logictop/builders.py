"""Constructors for the instance corpus.

Frames give upset algebras, lattices give filter logics, topologies give
open-set logics; alongside these sit an exact enumerator for small
posets, a seeded random intersection structure, and the double-negation
witness showing why the Godel translation cannot preserve primes.

Lattice elements produced here are ordered by size first and contents
second, so the bottom sits at index 0 and the top at the last index.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator

from .core import AbstractLogic, ConnectiveTables, close_under_intersection, set_key
from .errors import BoundExceeded, NotDistributiveLattice, NotHeyting
from .topology import FiniteSpace, opens as space_opens

LeqMatrix = tuple[tuple[bool, ...], ...]


def _check_order(leq: LeqMatrix) -> None:
    n = len(leq)
    if any(len(row) != n for row in leq):
        raise ValueError("order matrix must be square")
    for i in range(n):
        if not leq[i][i]:
            raise ValueError(f"order not reflexive at {i}")
        for j in range(n):
            if i != j and leq[i][j] and leq[j][i]:
                raise ValueError(f"order not antisymmetric at {i},{j}")
            if leq[i][j]:
                for k in range(n):
                    if leq[j][k] and not leq[i][k]:
                        raise ValueError(f"order not transitive at {i},{j},{k}")


@dataclass(frozen=True)
class FinitePoset:
    """A partial order on named elements, as a full boolean matrix."""

    element_names: tuple[str, ...]
    leq: LeqMatrix

    def __post_init__(self):
        object.__setattr__(self, "element_names", tuple(str(s) for s in self.element_names))
        object.__setattr__(self, "leq", tuple(tuple(bool(v) for v in row) for row in self.leq))
        if len(set(self.element_names)) != len(self.element_names):
            raise ValueError("element names must be distinct")
        if len(self.leq) != len(self.element_names):
            raise ValueError("one matrix row per element")
        _check_order(self.leq)

    @classmethod
    def from_pairs(cls, element_names: Iterable[str], pairs: Iterable[tuple[str, str]]) -> "FinitePoset":
        """Build from covering pairs of names, closing reflexively and transitively."""
        names = tuple(str(s) for s in element_names)
        index = {s: i for i, s in enumerate(names)}
        n = len(names)
        leq = [[i == j for j in range(n)] for i in range(n)]
        for lo, hi in pairs:
            if lo not in index:
                raise ValueError(f"unknown element {lo!r}")
            if hi not in index:
                raise ValueError(f"unknown element {hi!r}")
            leq[index[lo]][index[hi]] = True
        changed = True
        while changed:
            changed = False
            for i in range(n):
                for j in range(n):
                    if leq[i][j]:
                        for k in range(n):
                            if leq[j][k] and not leq[i][k]:
                                leq[i][k] = True
                                changed = True
        return cls(names, tuple(tuple(row) for row in leq))

    @property
    def n(self) -> int:
        return len(self.element_names)

    def upset(self, i: int) -> frozenset[int]:
        return frozenset(j for j in range(self.n) if self.leq[i][j])

    def downset(self, i: int) -> frozenset[int]:
        return frozenset(j for j in range(self.n) if self.leq[j][i])

    def covers(self) -> tuple[tuple[int, int], ...]:
        """Pairs (i, j) with j directly above i; the Hasse diagram edges."""
        out = []
        for i in range(self.n):
            for j in range(self.n):
                if i == j or not self.leq[i][j]:
                    continue
                if any(k != i and k != j and self.leq[i][k] and self.leq[k][j] for k in range(self.n)):
                    continue
                out.append((i, j))
        return tuple(out)


@dataclass(frozen=True)
class FiniteLattice:
    """A finite lattice with explicit operation tables.

    join and meet are validated as least upper and greatest lower bounds
    for the order; impl and the bounds are optional extras that builders
    fill in when the lattice genuinely has them and the caller wants
    them visible (a lattice may leave its order-theoretic bounds
    undeclared to model the unbounded setting).
    """

    element_names: tuple[str, ...]
    leq: LeqMatrix
    join: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...]
    impl: tuple[tuple[int, ...], ...] | None = None
    top: int | None = None
    bottom: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "element_names", tuple(str(s) for s in self.element_names))
        object.__setattr__(self, "leq", tuple(tuple(bool(v) for v in row) for row in self.leq))
        object.__setattr__(self, "join", tuple(tuple(int(v) for v in row) for row in self.join))
        object.__setattr__(self, "meet", tuple(tuple(int(v) for v in row) for row in self.meet))
        if self.impl is not None:
            object.__setattr__(self, "impl", tuple(tuple(int(v) for v in row) for row in self.impl))
        if len(set(self.element_names)) != len(self.element_names):
            raise ValueError("element names must be distinct")
        n = self.n
        if len(self.leq) != n:
            raise ValueError("one matrix row per element")
        _check_order(self.leq)
        for table, name in ((self.join, "join"), (self.meet, "meet"), (self.impl, "impl")):
            if table is None:
                continue
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError(f"{name} table must be {n}x{n}")
            for row in table:
                for v in row:
                    if not 0 <= v < n:
                        raise ValueError(f"{name} value {v} out of range")
        leq = self.leq
        for a in range(n):
            for b in range(n):
                j, m = self.join[a][b], self.meet[a][b]
                if not (leq[a][j] and leq[b][j]):
                    raise ValueError(f"join({a},{b}) is not an upper bound")
                if any(leq[a][c] and leq[b][c] and not leq[j][c] for c in range(n)):
                    raise ValueError(f"join({a},{b}) is not least")
                if not (leq[m][a] and leq[m][b]):
                    raise ValueError(f"meet({a},{b}) is not a lower bound")
                if any(leq[c][a] and leq[c][b] and not leq[c][m] for c in range(n)):
                    raise ValueError(f"meet({a},{b}) is not greatest")
        if self.top is not None and any(not leq[i][self.top] for i in range(n)):
            raise ValueError("declared top is not greatest")
        if self.bottom is not None and any(not leq[self.bottom][i] for i in range(n)):
            raise ValueError("declared bottom is not least")

    @classmethod
    def from_leq(
        cls,
        element_names: Iterable[str],
        leq: LeqMatrix,
        *,
        impl: tuple[tuple[int, ...], ...] | None = None,
        bounded: bool = True,
    ) -> "FiniteLattice":
        """Derive join and meet tables from an order, failing if either bound is missing."""
        names = tuple(element_names)
        leq = tuple(tuple(bool(v) for v in row) for row in leq)
        _check_order(leq)
        n = len(leq)

        def lub(a: int, b: int) -> int:
            ubs = [c for c in range(n) if leq[a][c] and leq[b][c]]
            least = [c for c in ubs if all(leq[c][d] for d in ubs)]
            if len(least) != 1:
                raise ValueError(f"no least upper bound for {a},{b}")
            return least[0]

        def glb(a: int, b: int) -> int:
            lbs = [c for c in range(n) if leq[c][a] and leq[c][b]]
            greatest = [c for c in lbs if all(leq[d][c] for d in lbs)]
            if len(greatest) != 1:
                raise ValueError(f"no greatest lower bound for {a},{b}")
            return greatest[0]

        join = tuple(tuple(lub(a, b) for b in range(n)) for a in range(n))
        meet = tuple(tuple(glb(a, b) for b in range(n)) for a in range(n))
        top = bottom = None
        if bounded and n:
            top = next(i for i in range(n) if all(leq[j][i] for j in range(n)))
            bottom = next(i for i in range(n) if all(leq[i][j] for j in range(n)))
        return cls(names, leq, join, meet, impl=impl, top=top, bottom=bottom)

    @property
    def n(self) -> int:
        return len(self.element_names)

    def distributivity_witness(self) -> tuple[int, int, int] | None:
        for a in range(self.n):
            for b in range(self.n):
                for c in range(self.n):
                    if self.meet[a][self.join[b][c]] != self.join[self.meet[a][b]][self.meet[a][c]]:
                        return (a, b, c)
        return None

    @property
    def is_distributive(self) -> bool:
        return self.distributivity_witness() is None

    @property
    def is_heyting(self) -> bool:
        """Implication and bottom present, and the adjunction actually holds."""
        if self.impl is None or self.bottom is None:
            return False
        n = self.n
        return all(
            self.leq[z][self.impl[x][y]] == self.leq[self.meet[z][x]][y]
            for x in range(n) for y in range(n) for z in range(n)
        )

    def poset(self) -> FinitePoset:
        return FinitePoset(self.element_names, self.leq)


def _graded_sets(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    return sorted(sets, key=lambda s: (len(s), set_key(s)))


def _set_name(names: tuple[str, ...], s: frozenset[int]) -> str:
    return "{" + ",".join(names[i] for i in sorted(s)) + "}"


def heyting_from_upsets(frame: FinitePoset) -> FiniteLattice:
    """The Heyting algebra of upsets of a frame.

    Join is union, meet is intersection, and A -> B collects the points
    whose upset meets A inside B.  The defining adjunction is asserted
    on every triple before returning.
    """
    n = frame.n
    universe = frozenset(range(n))
    upsets = []
    for mask in range(1 << n):
        s = frozenset(i for i in range(n) if mask >> i & 1)
        if all(frame.upset(i) <= s for i in s):
            upsets.append(s)
    elements = _graded_sets(upsets)
    index = {s: i for i, s in enumerate(elements)}
    m = len(elements)
    names = tuple(_set_name(frame.element_names, s) for s in elements)
    leq = tuple(tuple(elements[i] <= elements[j] for j in range(m)) for i in range(m))
    join = tuple(tuple(index[elements[i] | elements[j]] for j in range(m)) for i in range(m))
    meet = tuple(tuple(index[elements[i] & elements[j]] for j in range(m)) for i in range(m))
    impl_sets = [
        [frozenset(t for t in range(n) if frame.upset(t) & elements[i] <= elements[j]) for j in range(m)]
        for i in range(m)
    ]
    impl = tuple(tuple(index[s] for s in row) for row in impl_sets)
    out = FiniteLattice(
        names, leq, join, meet,
        impl=impl, top=index[universe], bottom=index[frozenset()],
    )
    assert out.is_heyting, "upset algebra must satisfy the adjunction"
    return out


def logic_from_lattice_filters(lattice: FiniteLattice, *, proper: bool = True) -> AbstractLogic:
    """The logic whose expressions are lattice elements and theories its filters.

    Filters on a finite lattice are the upsets of single elements; the
    one generated by the least element is the whole carrier and is
    dropped by default, which keeps the logic regular.  Passing
    proper=False keeps it and yields the singular variant.  Connective
    tables are copied from the lattice; negation is implication into the
    declared bottom when both exist.
    """
    witness = lattice.distributivity_witness()
    if witness is not None:
        raise NotDistributiveLattice(f"distributivity fails at {witness}", witness=witness)
    n = lattice.n
    least = next(i for i in range(n) if all(lattice.leq[i][j] for j in range(n)))
    theories = [
        frozenset(h for h in range(n) if lattice.leq[g][h])
        for g in range(n)
        if proper is False or g != least
    ]
    neg = None
    if lattice.impl is not None and lattice.bottom is not None:
        neg = tuple(lattice.impl[a][lattice.bottom] for a in range(n))
    tables = ConnectiveTables(
        join=lattice.join,
        meet=lattice.meet,
        impl=lattice.impl,
        neg=neg,
        top=lattice.top,
        bottom=lattice.bottom,
    )
    return AbstractLogic(lattice.element_names, close_under_intersection(n, theories), tables)


def open_set_lattice(space: FiniteSpace) -> FiniteLattice:
    """All opens of a finite space as a Heyting algebra.

    Implication is the interior of complement-or: the largest open whose
    intersection with the antecedent stays inside the consequent.
    """
    ops = _graded_sets(space_opens(space))
    index = {s: i for i, s in enumerate(ops)}
    m = len(ops)
    carrier = space.carrier
    names = tuple(_set_name(space.point_names, s) for s in ops)
    leq = tuple(tuple(ops[i] <= ops[j] for j in range(m)) for i in range(m))
    join = tuple(tuple(index[ops[i] | ops[j]] for j in range(m)) for i in range(m))
    meet = tuple(tuple(index[ops[i] & ops[j]] for j in range(m)) for i in range(m))

    def interior(s: frozenset[int]) -> frozenset[int]:
        out = frozenset()
        for o in ops:
            if o <= s:
                out |= o
        return out

    impl = tuple(
        tuple(index[interior((carrier - ops[i]) | ops[j])] for j in range(m))
        for i in range(m)
    )
    out = FiniteLattice(
        names, leq, join, meet,
        impl=impl, top=index[frozenset().union(*ops)], bottom=index[frozenset()],
    )
    assert out.is_heyting, "open-set algebra must satisfy the adjunction"
    return out


def logic_from_topology(space: FiniteSpace) -> AbstractLogic:
    """The filter logic of a space's full open-set algebra."""
    return logic_from_lattice_filters(open_set_lattice(space))


def is_strongly_connected(frame: FinitePoset) -> bool:
    """Whether elements above a common point are always comparable."""
    n = frame.n
    return all(
        frame.leq[b][c] or frame.leq[c][b]
        for a in range(n)
        for b in range(n) if frame.leq[a][b]
        for c in range(n) if frame.leq[a][c]
    )


def _canonical_matrix(matrix: LeqMatrix) -> LeqMatrix:
    n = len(matrix)
    best_enc = None
    best_perm = None
    for p in permutations(range(n)):
        enc = tuple(matrix[p[i]][p[j]] for i in range(n) for j in range(n))
        if best_enc is None or enc < best_enc:
            best_enc, best_perm = enc, p
    p = best_perm
    return tuple(tuple(matrix[p[i]][p[j]] for j in range(n)) for i in range(n))


POSET_ENUMERATION_BOUND = 5


def enumerate_posets(n: int, *, max_size: int = POSET_ENUMERATION_BOUND) -> Iterator[FinitePoset]:
    """All posets on n unlabeled elements, each isomorphism class once.

    Built by repeatedly attaching a new maximal element above a downset,
    with duplicates removed through a minimal-relabeling canonical form;
    exact because every poset loses some maximal element gracefully.
    The factorial canonicalization is why the size bound is small.
    """
    if not 1 <= n <= max_size:
        raise BoundExceeded(f"poset enumeration supports 1..{max_size}, got {n}")
    mats: set[LeqMatrix] = {((True,),)}
    for size in range(2, n + 1):
        grown: set[LeqMatrix] = set()
        for leq in mats:
            k = size - 1
            downsets = []
            for mask in range(1 << k):
                s = frozenset(i for i in range(k) if mask >> i & 1)
                if all(frozenset(j for j in range(k) if leq[j][i]) <= s for i in s):
                    downsets.append(s)
            for d in downsets:
                new = tuple(
                    tuple(leq[i][j] for j in range(k)) + (i in d,)
                    for i in range(k)
                ) + ((False,) * k + (True,),)
                grown.add(_canonical_matrix(new))
        mats = grown
    names = tuple(f"x{i}" for i in range(n))
    for leq in sorted(mats):
        yield FinitePoset(names, leq)


RANDOM_LOGIC_BOUND = 12


def random_logic(n: int, seed: int, *, max_size: int = RANDOM_LOGIC_BOUND) -> AbstractLogic:
    """A reproducible random intersection structure on n expressions."""
    if not 1 <= n <= max_size:
        raise BoundExceeded(f"random logics support 1..{max_size} expressions, got {n}")
    rng = random.Random(seed)
    count = rng.randint(1, max(2, n))
    generators = [
        frozenset(a for a in range(n) if rng.random() < 0.5)
        for _ in range(count)
    ]
    theories = close_under_intersection(n, generators)
    return AbstractLogic(tuple(f"e{i}" for i in range(n)), theories)


def godel_witness(algebra: FiniteLattice) -> tuple[int, int, int, int] | None:
    """First pair where negation fails to carry meets to joins classically.

    Scans (p, q) in index order for ~(~p & ~q) differing from ~~p v ~~q,
    with ~x read as x -> bottom.  Boolean algebras return nothing; the
    first hit is the obstruction to translating classical disjunction
    into a prime-preserving map.
    """
    if not algebra.is_heyting:
        raise NotHeyting("the double-negation scan needs implication and bottom")
    neg = [algebra.impl[x][algebra.bottom] for x in range(algebra.n)]
    for p in range(algebra.n):
        for q in range(algebra.n):
            lhs = neg[algebra.meet[neg[p]][neg[q]]]
            rhs = algebra.join[neg[neg[p]]][neg[neg[q]]]
            if lhs != rhs:
                return (p, q, lhs, rhs)
    return None

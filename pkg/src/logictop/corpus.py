"""The built-in instance corpus and the acceptance checks that run over it.

Instances: the three worked logics (a 3-chain, a 4-element Boolean
lattice, the V-frame upset logic), every upset filter logic of every
poset on up to four points, a quartet of hand-built logics realizing
each combination of having or lacking valid and inconsistent formulas,
and a few small hand-built spaces.

Each acceptance check returns a CriterionResult rather than asserting,
so the command line and the test suite share one implementation; the
test suite turns each result into a hard pass/fail.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from functools import lru_cache

from .builders import (
    FinitePoset,
    enumerate_posets,
    godel_witness,
    heyting_from_upsets,
    logic_from_lattice_filters,
)
from .connectives import check_degenerate_primes, verify_connectives
from .core import (
    AbstractLogic,
    ConnectiveTables,
    TheoryFamily,
    consequence,
    is_consistent,
    sorted_sets,
    theory_spectrum,
)
from .duality import logic_space, roundtrip_logic, roundtrip_space, stable_iff_disjunction, LogicMap
from .errors import PreconditionViolated
from .topology import (
    FiniteSpace,
    analyze_space,
    check_adjunction,
    closure,
    constructible_topology,
    generic_point,
    has_implication,
    irreducible_closed_sets,
    is_distributive_space,
    is_heyting_basis,
    opens,
    prime_filters_on_basis,
)
from .connectives import disjunctive_closure, prime_extension

POSET_COUNTS = (1, 2, 5, 16)  # unlabeled posets on 1..4 points


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str


# worked instances


@lru_cache(maxsize=None)
def chain(n: int) -> FinitePoset:
    names = tuple(f"t{i}" for i in range(n))
    return FinitePoset.from_pairs(names, [(f"t{i}", f"t{i + 1}") for i in range(n - 1)])


@lru_cache(maxsize=None)
def antichain(n: int) -> FinitePoset:
    return FinitePoset.from_pairs(tuple(f"t{i}" for i in range(n)), [])


@lru_cache(maxsize=None)
def v_frame() -> FinitePoset:
    return FinitePoset.from_pairs(("r", "b", "c"), [("r", "b"), ("r", "c")])


@lru_cache(maxsize=None)
def l3() -> AbstractLogic:
    """The 3-chain filter logic; bottom, a middle value, top."""
    built = logic_from_lattice_filters(heyting_from_upsets(chain(2)))
    return replace(built, expr_names=("bot", "m", "top"))


@lru_cache(maxsize=None)
def l22() -> AbstractLogic:
    """The filter logic of the 4-element Boolean lattice; classical."""
    built = logic_from_lattice_filters(heyting_from_upsets(antichain(2)))
    return replace(built, expr_names=("bot", "a", "b", "top"))


@lru_cache(maxsize=None)
def lv3() -> AbstractLogic:
    """The upset filter logic of the V frame; intuitionistic, not classical."""
    return logic_from_lattice_filters(heyting_from_upsets(v_frame()))


@lru_cache(maxsize=None)
def sierpinski() -> FiniteSpace:
    return FiniteSpace(("s0", "s1"), (frozenset(), frozenset({1}), frozenset({0, 1})))


@lru_cache(maxsize=None)
def discrete_two() -> FiniteSpace:
    return FiniteSpace(
        ("x", "y"),
        (frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1})),
    )


@lru_cache(maxsize=None)
def one_point() -> FiniteSpace:
    return FiniteSpace(("o",), (frozenset({0}),))


@lru_cache(maxsize=None)
def indiscrete_two() -> FiniteSpace:
    return FiniteSpace(("x", "y"), (frozenset(), frozenset({0, 1})))


def _logic(names, theories, join, meet) -> AbstractLogic:
    family = TheoryFamily(len(names), frozenset(frozenset(t) for t in theories))
    return AbstractLogic(tuple(names), family, ConnectiveTables(join=join, meet=meet))


@lru_cache(maxsize=None)
def degenerate_quartet() -> tuple[tuple[str, AbstractLogic, tuple[bool, bool, bool, bool]], ...]:
    """Distributive logics hitting all four valid/inconsistent combinations.

    The expected tuple is (no_valid_formula, empty_is_prime,
    no_inconsistent_formula, full_set_is_prime).  Tables were derived by
    hand from the connective conditions over each family's primes.
    """
    no_valid = _logic(
        ("p", "pq", "dead"),
        [set(), {0}, {0, 1}],
        join=((0, 0, 0), (0, 1, 1), (0, 1, 2)),
        meet=((0, 1, 2), (1, 1, 2), (2, 2, 2)),
    )
    singular = logic_from_lattice_filters(heyting_from_upsets(chain(2)), proper=False)
    neither = _logic(
        ("p", "pq"),
        [set(), {0}, {0, 1}],
        join=((0, 0), (0, 1)),
        meet=((0, 1), (1, 1)),
    )
    return (
        ("valid-and-inconsistent", l3(), (False, False, False, False)),
        ("no-valid", no_valid, (True, True, False, False)),
        ("no-inconsistent", singular, (False, False, True, True)),
        ("neither", neither, (True, True, True, True)),
    )


@lru_cache(maxsize=None)
def corpus_frames(max_points: int = 4) -> tuple[tuple[str, FinitePoset], ...]:
    out = []
    for n in range(1, max_points + 1):
        for i, frame in enumerate(enumerate_posets(n)):
            out.append((f"frame{n}.{i}", frame))
    return tuple(out)


@lru_cache(maxsize=None)
def corpus_logics(max_points: int = 4) -> tuple[tuple[str, AbstractLogic], ...]:
    """Every corpus logic with a printable name, filter logics first."""
    out = [
        (name, logic_from_lattice_filters(heyting_from_upsets(frame)))
        for name, frame in corpus_frames(max_points)
    ]
    out += [(name, logic) for name, logic, _ in degenerate_quartet()]
    return tuple(out)


def _distributive_logics(max_points: int = 4) -> tuple[tuple[str, AbstractLogic], ...]:
    return tuple(
        (name, logic)
        for name, logic in corpus_logics(max_points)
        if verify_connectives(logic).is_distributive
    )


@lru_cache(maxsize=None)
def corpus_spaces(max_points: int = 4) -> tuple[tuple[str, FiniteSpace], ...]:
    out = [
        (f"spectrum({name})", logic_space(logic).space)
        for name, logic in _distributive_logics(max_points)
    ]
    out += [
        ("sierpinski", sierpinski()),
        ("discrete2", discrete_two()),
        ("point", one_point()),
        ("indiscrete2", indiscrete_two()),
    ]
    return tuple(out)


def _spectral_spaces(max_points: int = 4) -> tuple[tuple[str, FiniteSpace], ...]:
    return tuple(
        (name, space)
        for name, space in corpus_spaces(max_points)
        if analyze_space(space).is_spectral
    )


# acceptance checks


def _roundtrip_logic_ok(named: tuple[str, AbstractLogic]) -> tuple[str, bool]:
    name, logic = named
    return name, roundtrip_logic(logic).iso_ok


def _roundtrip_space_ok(named: tuple[str, AbstractLogic]) -> tuple[str, bool]:
    name, logic = named
    return name, roundtrip_space(logic_space(logic).space).iso_ok


def _pmap(fn, items, jobs: int | None):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def criterion_logic_roundtrip(max_points: int = 4, jobs: int | None = None) -> CriterionResult:
    """Every upset filter logic returns isomorphic from its spectrum."""
    counts = tuple(len(tuple(enumerate_posets(n))) for n in range(1, max_points + 1))
    counts_ok = counts == POSET_COUNTS[:max_points]
    frames = [
        (name, logic_from_lattice_filters(heyting_from_upsets(frame)))
        for name, frame in corpus_frames(max_points)
    ]
    results = _pmap(_roundtrip_logic_ok, frames, jobs)
    bad = sorted(name for name, ok in results if not ok)
    passed = counts_ok and not bad
    detail = f"{len(results)} logics, poset counts {counts}"
    if not counts_ok:
        detail += f" (expected {POSET_COUNTS[:max_points]})"
    if bad:
        detail += f"; failing: {', '.join(bad)}"
    return CriterionResult(1, "logic-roundtrip", passed, detail)


def criterion_space_roundtrip(max_points: int = 4, jobs: int | None = None) -> CriterionResult:
    """Every spectrum returns homeomorphic from its dual logic."""
    frames = [
        (name, logic_from_lattice_filters(heyting_from_upsets(frame)))
        for name, frame in corpus_frames(max_points)
    ]
    results = _pmap(_roundtrip_space_ok, frames, jobs)
    bad = sorted(name for name, ok in results if not ok)
    detail = f"{len(results)} spaces"
    if bad:
        detail += f"; failing: {', '.join(bad)}"
    return CriterionResult(2, "space-roundtrip", not bad, detail)


def criterion_spectrality(max_points: int = 4) -> CriterionResult:
    """Bounded distributive logics have spectral spectra; extents mirror
    valid and inconsistent formulas on every distributive corpus logic."""
    failures = []
    bounded = spectral = 0
    for name, logic in _distributive_logics(max_points):
        pres = logic_space(logic)
        space = pres.space
        basic = set(space.basis)
        report = analyze_space(space)
        if verify_connectives(logic).is_bounded_distributive:
            bounded += 1
            if report.is_spectral:
                spectral += 1
            else:
                failures.append(f"{name}: not spectral")
            if basic | {frozenset()} != opens(space):
                failures.append(f"{name}: extents miss an open")
        if (space.carrier in basic) != bool(consequence(logic, frozenset())):
            failures.append(f"{name}: carrier-extent vs valid formula")
        has_inconsistent = any(not is_consistent(logic, {a}) for a in logic.exprs)
        if (frozenset() in basic) != has_inconsistent:
            failures.append(f"{name}: empty-extent vs inconsistent formula")
    detail = f"{bounded} bounded logics, {spectral} spectral"
    if failures:
        detail += f"; {'; '.join(failures[:4])}"
    return CriterionResult(3, "spectrality", not failures, detail)


def criterion_generic_points(max_points: int = 4) -> CriterionResult:
    """Irreducible closed sets of spectra are closures of their unions."""
    failures = []
    checked = 0
    for name, logic in _distributive_logics(max_points):
        pres = logic_space(logic)
        primes = set(pres.points)
        for f in irreducible_closed_sets(pres.space):
            checked += 1
            union = frozenset().union(*(pres.points[i] for i in f))
            if union not in primes:
                failures.append(f"{name}: union of {sorted(f)} not prime")
                continue
            x = pres.points.index(union)
            point, unique = generic_point(pres.space, f)
            if point != x or not unique or closure(pres.space, {x}) != f:
                failures.append(f"{name}: generic point mismatch on {sorted(f)}")
    detail = f"{checked} irreducible closed sets"
    if failures:
        detail += f"; {'; '.join(failures[:4])}"
    return CriterionResult(4, "generic-points", not failures, detail)


def criterion_prime_extension(max_points: int = 4, seed: int = 0, samples: int = 1000) -> CriterionResult:
    """Random admissible (theory, join-closed set) pairs extend to primes,
    cross-checked against the enumerated primes."""
    failures = []
    checked = 0
    for name, logic in _distributive_logics(max_points):
        if logic.universe_size > 10:
            continue
        if logic.connectives is None or logic.connectives.join is None:
            continue
        rng = random.Random((seed, name).__repr__())
        theories = sorted_sets(logic.theories)
        primes = theory_spectrum(logic).primes
        for _ in range(samples):
            t = theories[rng.randrange(len(theories))]
            rest = sorted(set(logic.exprs) - t)
            if not rest:
                continue
            b = frozenset(rng.sample(rest, rng.randint(1, len(rest))))
            s = disjunctive_closure(logic, b)
            if s & t:
                continue
            checked += 1
            try:
                p = prime_extension(logic, t, s)
            except PreconditionViolated:
                failures.append(f"{name}: precondition rejected a valid pair")
                continue
            oracle = {q for q in primes if t <= q and not (q & s)}
            if not oracle or p not in oracle or not (t <= p) or (p & s):
                failures.append(f"{name}: extension disagrees with enumeration")
                break
    detail = f"{checked} sampled pairs"
    if failures:
        detail += f"; {'; '.join(failures[:4])}"
    return CriterionResult(5, "prime-extension", not failures, detail)


def criterion_stability_lemma(max_points: int = 4, seed: int = 0, samples: int = 500) -> CriterionResult:
    """Stability coincides with join preservation on sampled logic maps."""
    small = [
        (name, logic)
        for name, logic in _distributive_logics(max_points)
        if logic.universe_size <= 6
        and logic.connectives is not None and logic.connectives.join is not None
    ]
    failures = []
    logic_maps = sampled = 0
    for src_name, src in small:
        for tgt_name, tgt in small:
            rng = random.Random((seed, src_name, tgt_name).__repr__())
            for _ in range(samples):
                mapping = tuple(rng.randrange(tgt.universe_size) for _ in src.exprs)
                check = stable_iff_disjunction(LogicMap(src, tgt, mapping))
                sampled += 1
                if check.stable and not check.is_logic_map:
                    failures.append(f"{src_name}->{tgt_name}: stable non-logic-map {mapping}")
                    break
                if check.is_logic_map:
                    logic_maps += 1
                    if not check.agree:
                        failures.append(f"{src_name}->{tgt_name}: lemma fails at {mapping}")
                        break
    passed = not failures and logic_maps > 0
    detail = f"{sampled} samples over {len(small)}^2 logic pairs, {logic_maps} logic maps"
    if failures:
        detail += f"; {'; '.join(failures[:4])}"
    return CriterionResult(6, "stability-lemma", passed, detail)


def criterion_spectral_distributive(max_points: int = 4) -> CriterionResult:
    """Spectral corpus spaces are distributive with matching filters and
    a working implication adjunction."""
    failures = []
    names = []
    for name, space in _spectral_spaces(max_points):
        names.append(name)
        verdict = is_distributive_space(space)
        if not verdict.distributive:
            failures.append(f"{name}: {verdict.witness}")
            continue
        filters = prime_filters_on_basis(space)
        if len(filters) != space.n_points:
            failures.append(f"{name}: {len(filters)} filters for {space.n_points} points")
        ok, witness = check_adjunction(space)
        if not ok:
            failures.append(f"{name}: adjunction fails at {witness}")
    detail = f"{len(names)} spectral spaces"
    if failures:
        detail += f"; {'; '.join(failures[:4])}"
    return CriterionResult(7, "spectral-distributive", not failures, detail)


def criterion_heyting_agreement(max_points: int = 4) -> CriterionResult:
    """Spatial implication and algebraic pseudo-complements agree on
    covering bases; Boolean spaces have complemented bases.

    Agreement is a theorem only when the basic opens cover the carrier:
    a point inside no basic open (the empty prime of a logic with no
    valid formula) blocks the spatial implication while leaving the
    basis lattice Heyting, so non-covering spaces are counted and
    skipped rather than compared.
    """
    failures = []
    checked = skipped = 0
    for name, space in corpus_spaces(max_points):
        if frozenset().union(*space.basis, frozenset()) != space.carrier:
            skipped += 1
            continue
        checked += 1
        spatial = has_implication(space)[0]
        algebraic = is_heyting_basis(space)
        if spatial != algebraic:
            failures.append(f"{name}: spatial {spatial} vs algebraic {algebraic}")
        if analyze_space(space).is_boolean:
            basic = set(space.basis)
            carrier = space.carrier
            for u in basic:
                if carrier - u not in basic:
                    failures.append(f"{name}: no complement for {sorted(u)}")
                    break
    detail = f"{checked} covering spaces, {skipped} non-covering skipped"
    if failures:
        detail += f"; {'; '.join(failures[:4])}"
    return CriterionResult(8, "heyting-agreement", not failures, detail)


def criterion_godel_witness() -> CriterionResult:
    """The V-frame algebra refutes double-negation distribution at the
    first off-diagonal pair; Boolean algebras never do."""
    failures = []
    algebra = heyting_from_upsets(v_frame())
    got = godel_witness(algebra)
    expected = (
        algebra.element_names.index("{b}"),
        algebra.element_names.index("{c}"),
        algebra.element_names.index("{r,b,c}"),
        algebra.element_names.index("{b,c}"),
    )
    if got != expected:
        failures.append(f"V-frame witness {got}, expected {expected}")
    for k in range(5):
        if godel_witness(heyting_from_upsets(antichain(k))) is not None:
            failures.append(f"Boolean algebra on {2 ** k} elements yielded a witness")
    detail = f"V-frame witness {got}; Boolean algebras up to 16 elements clean"
    if failures:
        detail = "; ".join(failures)
    return CriterionResult(9, "godel-witness", not failures, detail)


def criterion_constructible(max_points: int = 4) -> CriterionResult:
    """Constructible refinements of spectral spaces are Boolean; the
    two-point chain space refines to the discrete space."""
    failures = []
    count = 0
    for name, space in _spectral_spaces(max_points):
        count += 1
        fine = constructible_topology(space)
        if not analyze_space(fine).is_boolean:
            failures.append(f"{name}: refinement not Boolean")
    fine = constructible_topology(sierpinski())
    if set(fine.basis) != {frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1})}:
        failures.append("chain space did not refine to the discrete space")
    detail = f"{count} spectral spaces refined"
    if failures:
        detail += f"; {'; '.join(failures[:4])}"
    return CriterionResult(10, "constructible-topology", not failures, detail)


def criterion_degenerate_primes() -> CriterionResult:
    """The four flag combinations appear exactly as designed."""
    failures = []
    for name, logic, expected in degenerate_quartet():
        report = check_degenerate_primes(logic)
        got = (
            report.no_valid_formula,
            report.empty_is_prime,
            report.no_inconsistent_formula,
            report.full_set_is_prime,
        )
        if got != expected:
            failures.append(f"{name}: {got} expected {expected}")
    detail = "4 logics, all flag combinations"
    if failures:
        detail = "; ".join(failures)
    return CriterionResult(11, "degenerate-primes", not failures, detail)


def run_all(max_points: int = 4, seed: int = 0, jobs: int | None = None) -> tuple[CriterionResult, ...]:
    return (
        criterion_logic_roundtrip(max_points, jobs),
        criterion_space_roundtrip(max_points, jobs),
        criterion_spectrality(max_points),
        criterion_generic_points(max_points),
        criterion_prime_extension(max_points, seed),
        criterion_stability_lemma(max_points, seed),
        criterion_spectral_distributive(max_points),
        criterion_heyting_agreement(max_points),
        criterion_godel_witness(),
        criterion_constructible(max_points),
        criterion_degenerate_primes(),
    )

"""Intersection structures, consequence, and the primality hierarchy."""

import pytest

from logictop.core import (
    AbstractLogic,
    TheoryFamily,
    close_under_intersection,
    consequence,
    is_consistent,
    is_generator_set,
    is_theory,
    logically_equivalent,
    quotient_logic,
    set_key,
    sorted_sets,
    theory_spectrum,
)
from logictop.duality import LogicMap, analyze_logic_map
from logictop.errors import NotTheories
from logictop.builders import random_logic

from oracles import (
    oracle_close,
    oracle_consequence,
    oracle_generates,
    oracle_maximals,
    oracle_primes,
    oracle_totally_primes,
    subfamilies,
)


def all_subsets(n):
    for mask in range(1 << n):
        yield frozenset(i for i in range(n) if mask >> i & 1)


def test_theory_family_rejects_unclosed():
    with pytest.raises(ValueError):
        TheoryFamily(2, frozenset({frozenset({0}), frozenset({1})}))


def test_theory_family_rejects_empty_family():
    with pytest.raises(ValueError):
        TheoryFamily(2, frozenset())


def test_theory_family_rejects_out_of_range():
    with pytest.raises(ValueError):
        TheoryFamily(2, frozenset({frozenset({5})}))


def test_close_under_intersection_matches_oracle():
    seeds = [
        [{0, 1}, {1, 2}],
        [{0, 1, 2}, {1, 2, 3}, {2, 3, 0}],
        [{0}, {0, 1}, {2, 3}],
        [set(), {1}],
    ]
    for sets in seeds:
        got = close_under_intersection(4, sets)
        assert got.theories == oracle_close(4, sets)


def test_close_under_intersection_on_random_logics():
    for seed in range(25):
        logic = random_logic(6, seed)
        ths = logic.theories.theories
        # already closed: closing again changes nothing
        assert close_under_intersection(6, ths).theories == ths
        for sub in subfamilies(sorted_sets(ths)):
            acc = sub[0]
            for s in sub[1:]:
                acc &= s
            assert acc in ths


def test_consequence_exhaustive(chain3_logic, boolean4_logic, vframe_logic):
    for logic in (chain3_logic, boolean4_logic, vframe_logic):
        for a in all_subsets(logic.universe_size):
            assert consequence(logic, a) == oracle_consequence(logic, a)


def test_consequence_of_inconsistent_is_everything(chain3_logic):
    # bot sits in no theory, so it entails the whole language
    assert consequence(chain3_logic, {0}) == chain3_logic.full_set


def test_consequence_is_monotone_and_idempotent(small_logics):
    for _, logic in small_logics:
        if logic.universe_size > 5:
            continue
        for a in all_subsets(logic.universe_size):
            ca = consequence(logic, a)
            assert a <= ca or not is_consistent(logic, a)
            assert consequence(logic, ca) == ca or ca == logic.full_set


def test_is_theory_and_consistency(chain3_logic):
    assert is_theory(chain3_logic, {2})
    assert is_theory(chain3_logic, {1, 2})
    assert not is_theory(chain3_logic, {1})
    assert not is_theory(chain3_logic, set())
    assert is_consistent(chain3_logic, {1})
    assert not is_consistent(chain3_logic, {0})


def test_full_set_is_not_a_theory_in_regular_logics(chain3_logic, boolean4_logic):
    for logic in (chain3_logic, boolean4_logic):
        assert logic.is_regular
        assert not is_theory(logic, logic.full_set)


def test_spectrum_matches_definition_oracles(small_logics):
    for name, logic in small_logics:
        spectrum = theory_spectrum(logic)
        ths = logic.theories.theories
        assert spectrum.primes == oracle_primes(ths), name
        assert spectrum.totally_primes == oracle_totally_primes(ths), name
        assert spectrum.maximals == oracle_maximals(ths), name


def test_spectrum_chain_of_inclusions(small_logics):
    for name, logic in small_logics:
        spectrum = theory_spectrum(logic)
        assert spectrum.maximals <= spectrum.totally_primes, name
        assert spectrum.totally_primes <= spectrum.primes, name
        assert spectrum.minimal_generators == spectrum.totally_primes, name


def test_primes_equal_totally_primes_on_finite_instances(small_logics):
    # the finite collapse: intersection-irreducible members are already
    # totally prime when every descending chain stabilizes
    for name, logic in small_logics:
        spectrum = theory_spectrum(logic)
        assert spectrum.primes == spectrum.totally_primes, name


def test_worked_spectra(chain3_logic, boolean4_logic, vframe_logic):
    assert sorted_sets(theory_spectrum(chain3_logic).primes) == [
        frozenset({1, 2}),
        frozenset({2}),
    ]
    assert sorted_sets(theory_spectrum(boolean4_logic).primes) == [
        frozenset({1, 3}),
        frozenset({2, 3}),
    ]
    # the principal filter over the join of the two atoms is an
    # intersection of the two filters above it, hence not prime
    assert sorted_sets(theory_spectrum(vframe_logic).primes) == [
        frozenset({1, 3, 4}),
        frozenset({2, 3, 4}),
        frozenset({4}),
    ]
    assert frozenset({3, 4}) in vframe_logic.theories.theories


def test_generator_sets(boolean4_logic):
    spectrum = theory_spectrum(boolean4_logic)
    assert is_generator_set(boolean4_logic, spectrum.totally_primes)
    assert oracle_generates(boolean4_logic.theories.theories, spectrum.totally_primes)
    # dropping either prime loses the theory it alone recovers
    for g in spectrum.totally_primes:
        rest = spectrum.totally_primes - {g}
        assert not is_generator_set(boolean4_logic, rest)


def test_generator_set_rejects_non_theories(chain3_logic):
    with pytest.raises(NotTheories):
        is_generator_set(chain3_logic, [frozenset({0})])


def test_minimal_generators_are_minimal(small_logics):
    for name, logic in small_logics:
        gens = theory_spectrum(logic).minimal_generators
        assert is_generator_set(logic, gens), name
        for g in gens:
            assert not is_generator_set(logic, gens - {g}), name


def test_logically_equivalent(chain3_logic):
    for a in chain3_logic.exprs:
        for b in chain3_logic.exprs:
            expected = chain3_logic.theories_with(a) == chain3_logic.theories_with(b)
            assert logically_equivalent(chain3_logic, a, b) == expected


def test_quotient_collapses_duplicate_columns():
    # expressions 1 and 2 are interchangeable in every theory
    family = close_under_intersection(3, [{1, 2}, {0, 1, 2}])
    logic = AbstractLogic(("a", "b", "c"), family)
    small, projection = quotient_logic(logic)
    assert small.universe_size == 2
    assert projection == (0, 1, 1)
    analysis = analyze_logic_map(LogicMap(logic, small, projection))
    assert analysis.is_logic_map and analysis.is_stable and analysis.is_normal
    assert analysis.is_L_surjective


def test_quotient_is_identity_like_when_columns_differ(vframe_logic):
    small, projection = quotient_logic(vframe_logic)
    assert small.universe_size == vframe_logic.universe_size
    assert projection == tuple(range(vframe_logic.universe_size))


def test_set_key_and_sorted_sets():
    sets = [frozenset({2}), frozenset({1, 2}), frozenset()]
    assert set_key(frozenset({2, 1})) == (1, 2)
    assert sorted_sets(sets) == [frozenset(), frozenset({1, 2}), frozenset({2})]


def test_random_logic_is_reproducible():
    assert random_logic(6, 3) == random_logic(6, 3)
    assert random_logic(6, 3) != random_logic(6, 4)

"""Posets, lattices, upset algebras, and the poset enumerator."""

import pytest

from logictop.builders import (
    FiniteLattice,
    FinitePoset,
    POSET_ENUMERATION_BOUND,
    enumerate_posets,
    godel_witness,
    heyting_from_upsets,
    is_strongly_connected,
    logic_from_lattice_filters,
    logic_from_topology,
    open_set_lattice,
    random_logic,
)
from logictop.corpus import antichain, chain, discrete_two, indiscrete_two, sierpinski, v_frame
from logictop.core import sorted_sets
from logictop.errors import BoundExceeded, NotDistributiveLattice, NotHeyting

from oracles import canonical_form, oracle_poset_count, oracle_upsets, order_isomorphic


def test_poset_validation():
    with pytest.raises(ValueError):
        FinitePoset(("a", "b"), ((True, True), (True, True)))  # not antisymmetric
    with pytest.raises(ValueError):
        FinitePoset(("a", "b"), ((False, False), (False, True)))  # not reflexive
    with pytest.raises(ValueError):
        FinitePoset(
            ("a", "b", "c"),
            ((True, True, False), (False, True, True), (False, False, True)),
        )  # not transitive


def test_from_pairs_takes_transitive_closure():
    p = FinitePoset.from_pairs(("a", "b", "c"), [("a", "b"), ("b", "c")])
    assert p.leq[0][2]
    assert p.upset(0) == frozenset({0, 1, 2})
    assert p.downset(2) == frozenset({0, 1, 2})


def test_covers_drop_composites():
    p = FinitePoset.from_pairs(("a", "b", "c"), [("a", "b"), ("b", "c")])
    assert set(p.covers()) == {(0, 1), (1, 2)}


def test_upsets_of_vframe_match_mask_oracle(vframe):
    algebra = heyting_from_upsets(vframe)
    elements = sorted(oracle_upsets(vframe.leq), key=lambda s: (len(s), sorted(s)))
    assert algebra.n == len(elements) == 5
    assert algebra.element_names == ("{}", "{b}", "{c}", "{b,c}", "{r,b,c}")


def test_upset_algebra_of_chain_is_chain():
    algebra = heyting_from_upsets(chain(2))
    assert algebra.n == 3
    assert all(algebra.leq[i][j] == (i <= j) for i in range(3) for j in range(3))


def test_upset_algebra_of_antichain_is_boolean():
    algebra = heyting_from_upsets(antichain(2))
    assert algebra.n == 4
    neg = [algebra.impl[x][algebra.bottom] for x in range(4)]
    assert all(algebra.join[x][neg[x]] == algebra.top for x in range(4))
    assert all(algebra.meet[x][neg[x]] == algebra.bottom for x in range(4))


def test_vframe_negation_swaps_the_arms(vframe):
    algebra = heyting_from_upsets(vframe)
    b = algebra.element_names.index("{b}")
    c = algebra.element_names.index("{c}")
    assert algebra.impl[b][algebra.bottom] == c
    assert algebra.impl[c][algebra.bottom] == b


def test_heyting_adjunction_holds_on_upset_algebras(vframe):
    for frame in (chain(3), antichain(3), vframe):
        algebra = heyting_from_upsets(frame)
        assert algebra.is_heyting
        for x in range(algebra.n):
            for y in range(algebra.n):
                for z in range(algebra.n):
                    lhs = algebra.leq[z][algebra.impl[x][y]]
                    rhs = algebra.leq[algebra.meet[z][x]][y]
                    assert lhs == rhs


def test_lattice_rejects_missing_bounds():
    with pytest.raises(ValueError):
        FiniteLattice.from_leq(("a", "b"), ((True, False), (False, True)))


def test_filter_logic_of_chain_is_the_worked_three_valued(chain3_logic):
    built = logic_from_lattice_filters(heyting_from_upsets(chain(2)))
    assert built.theories == chain3_logic.theories
    assert built.connectives == chain3_logic.connectives
    assert built.expr_names != chain3_logic.expr_names  # only the labels differ


def test_filter_logic_theories_are_principal_filters(vframe_logic):
    algebra = heyting_from_upsets(v_frame())
    theories = sorted_sets(vframe_logic.theories.theories)
    expected = sorted_sets(
        frozenset(b for b in range(algebra.n) if algebra.leq[a][b])
        for a in range(algebra.n)
        if a != algebra.bottom
    )
    assert theories == expected


def test_improper_filter_switch_adds_the_full_set():
    proper = logic_from_lattice_filters(heyting_from_upsets(chain(2)))
    singular = logic_from_lattice_filters(heyting_from_upsets(chain(2)), proper=False)
    assert proper.is_regular
    assert not singular.is_regular
    assert singular.theories.theories == proper.theories.theories | {singular.full_set}


def test_filter_logic_rejects_non_distributive():
    # N5: bottom, a < c, b, top
    names = ("0", "a", "b", "c", "1")
    pairs = [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")]
    poset = FinitePoset.from_pairs(names, pairs)
    lattice = FiniteLattice.from_leq(names, poset.leq)
    with pytest.raises(NotDistributiveLattice) as err:
        logic_from_lattice_filters(lattice)
    assert err.value.witness is not None
    assert lattice.distributivity_witness() is not None
    assert not lattice.is_distributive


def test_open_set_lattice_of_sierpinski_is_chain():
    lattice = open_set_lattice(sierpinski())
    assert lattice.n == 3
    assert all(lattice.leq[i][j] == (i <= j) for i in range(3) for j in range(3))
    assert lattice.is_heyting


def test_logic_from_topology_matches_filter_route(chain3_logic):
    built = logic_from_topology(sierpinski())
    assert built.theories == chain3_logic.theories
    assert built.connectives == chain3_logic.connectives


def test_logic_from_discrete_pair_is_classical(boolean4_logic):
    built = logic_from_topology(discrete_two())
    assert built.theories == boolean4_logic.theories
    assert built.connectives == boolean4_logic.connectives


def test_logic_from_indiscrete_pair_is_singleton_theoried():
    built = logic_from_topology(indiscrete_two())
    assert built.universe_size == 2
    assert built.theories.theories == frozenset({frozenset({1})})


def test_strong_connectivity():
    assert is_strongly_connected(chain(3))
    assert not is_strongly_connected(v_frame())
    two_chains = FinitePoset.from_pairs(("a", "b", "c", "d"), [("a", "b"), ("c", "d")])
    assert is_strongly_connected(two_chains)


def test_poset_counts_match_relation_filter_oracle():
    for n in range(1, 5):
        got = len(tuple(enumerate_posets(n)))
        assert got == oracle_poset_count(n), n


def test_enumerated_posets_are_canonical_and_distinct():
    seen = set()
    for p in enumerate_posets(4):
        form = canonical_form(p.leq)
        assert form not in seen
        seen.add(form)


def test_every_labeled_poset_appears():
    from oracles import oracle_labeled_posets

    enumerated = {canonical_form(p.leq) for p in enumerate_posets(3)}
    brute = {canonical_form(m) for m in oracle_labeled_posets(3)}
    assert enumerated == brute


def test_enumeration_bound():
    assert POSET_ENUMERATION_BOUND == 5
    with pytest.raises(BoundExceeded):
        list(enumerate_posets(6))
    with pytest.raises(BoundExceeded):
        list(enumerate_posets(0))


def test_random_logic_bound():
    with pytest.raises(BoundExceeded):
        random_logic(13, 0)


def test_godel_witness_on_vframe(vframe):
    algebra = heyting_from_upsets(vframe)
    got = godel_witness(algebra)
    names = algebra.element_names
    assert got == (names.index("{b}"), names.index("{c}"),
                   names.index("{r,b,c}"), names.index("{b,c}"))
    # brute scan: the returned pair is the first failure in index order
    neg = [algebra.impl[x][algebra.bottom] for x in range(algebra.n)]
    scan = [
        (p, q)
        for p in range(algebra.n)
        for q in range(algebra.n)
        if neg[algebra.meet[neg[p]][neg[q]]] != algebra.join[neg[neg[p]]][neg[neg[q]]]
    ]
    assert scan and scan[0] == got[:2]


def test_godel_witness_absent_on_boolean_algebras():
    for k in range(5):
        assert godel_witness(heyting_from_upsets(antichain(k))) is None


def test_godel_witness_needs_heyting_structure():
    lattice = FiniteLattice.from_leq(("a", "b"), ((True, True), (False, True)))
    with pytest.raises(NotHeyting):
        godel_witness(lattice)


def test_frame_recovery_up_to_order_isomorphism(vframe):
    # the spectrum of an upset filter logic carries the original order
    from logictop.duality import logic_space
    from logictop.topology import specialization_order

    for frame in (chain(2), chain(3), v_frame(), antichain(3)):
        logic = logic_from_lattice_filters(heyting_from_upsets(frame))
        space = logic_space(logic).space
        order = specialization_order(space)
        assert order_isomorphic(order.matrix, frame.leq)

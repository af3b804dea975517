"""Edge cases: logics missing valid or inconsistent formulas, and the
double-negation obstruction that separates the V frame from Boolean algebras.

Run with: python demos/degenerate_corners.py
"""

from logictop import check_degenerate_primes, godel_witness, has_implication, is_heyting_basis, logic_space
from logictop.builders import heyting_from_upsets
from logictop.corpus import antichain, degenerate_quartet, v_frame


def main():
    print("degenerate prime flags across the four valid/inconsistent combinations:")
    for name, logic, _ in degenerate_quartet():
        r = check_degenerate_primes(logic)
        print(f"  {name:22s} no_valid={r.no_valid_formula!s:5s} empty_prime={r.empty_is_prime!s:5s}"
              f" no_inconsistent={r.no_inconsistent_formula!s:5s} full_prime={r.full_set_is_prime!s}")
    print()

    # without a valid formula the empty prime lies in no extent, so the
    # spectrum's basis does not cover the carrier and the two readings of
    # "the basis has implication" come apart
    _, no_valid, _ = degenerate_quartet()[1]
    space = logic_space(no_valid).space
    print("spectrum of the no-valid logic:")
    print(f"  basis covers carrier: {frozenset().union(*space.basis) == space.carrier}")
    print(f"  spatial implication:  {has_implication(space)[0]}")
    print(f"  basis lattice Heyting: {is_heyting_basis(space)}")
    print()

    # the classical translation obstruction: on the V-frame algebra the
    # double negation of a join is not the join of double negations
    algebra = heyting_from_upsets(v_frame())
    p, q, lhs, rhs = godel_witness(algebra)
    names = algebra.element_names
    print("double-negation witness on the V-frame upset algebra:")
    print(f"  p={names[p]} q={names[q]}: ~(~p & ~q) = {names[lhs]} but ~~p v ~~q = {names[rhs]}")
    print(f"  Boolean control (16-element cube): {godel_witness(heyting_from_upsets(antichain(4)))}")


if __name__ == "__main__":
    main()

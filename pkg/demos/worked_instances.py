"""Tour of the three worked logics and their dual spaces.

Run with: python demos/worked_instances.py
"""

from logictop import (
    analyze_space,
    logic_space,
    roundtrip_logic,
    sorted_sets,
    theory_spectrum,
    verify_connectives,
)
from logictop.corpus import l3, l22, lv3


def show(name, logic):
    print(f"=== {name}: {logic.universe_size} expressions,"
          f" {len(logic.theories.theories)} theories")
    report = verify_connectives(logic)
    print(f"classification: {report.classification}")

    spectrum = theory_spectrum(logic)
    named = lambda t: "{" + ",".join(logic.expr_names[i] for i in sorted(t)) + "}"
    print("prime theories:", " ".join(named(t) for t in sorted_sets(spectrum.primes)))
    print("maximal theories:", " ".join(named(t) for t in sorted_sets(spectrum.maximals)))

    pres = logic_space(logic)
    space_report = analyze_space(pres.space)
    print(f"spectrum: {pres.space.n_points} points, {len(pres.space.basis)} basic opens,"
          f" spectral={space_report.is_spectral}, boolean={space_report.is_boolean}")

    # going around the square: spectrum, dual logic, comparison map
    trip = roundtrip_logic(logic)
    print(f"double dual comparison: iso_ok={trip.iso_ok}, square_ok={trip.square_ok}")
    print()


def main():
    # a 3-chain: the smallest logic where negation is not involutive
    show("three-valued chain", l3())
    # the 4-element Boolean lattice: maximal and prime theories coincide
    show("two-atom Boolean", l22())
    # upsets of the V frame: intuitionistic but not classical, 3-point dual
    show("V-frame upsets", lv3())


if __name__ == "__main__":
    main()

"""Logic maps, stability, and the join-preservation lemma in action.

Run with: python demos/maps_and_stability.py
"""

from logictop import LogicMap, analyze_logic_map, dual_point_map, stable_iff_disjunction
from logictop.corpus import l22


def describe(label, mapping):
    logic = l22()
    m = LogicMap(logic, logic, mapping)
    names = logic.expr_names
    arrows = ", ".join(f"{names[a]}->{names[m(a)]}" for a in logic.exprs)
    print(f"--- {label}: {arrows}")
    analysis = analyze_logic_map(m)
    print(f"logic map: {analysis.is_logic_map}, stable: {analysis.is_stable},"
          f" normal: {analysis.is_normal}, iso: {analysis.is_isomorphism}")
    check = stable_iff_disjunction(m)
    print(f"preserves join: {check.preserves_join}, lemma agrees: {check.agree}")
    if analysis.is_stable:
        pm = dual_point_map(m)
        print(f"dual point map on the spectrum: {pm.mapping}")
    print()


def main():
    # the identity is everything at once
    describe("identity", (0, 1, 2, 3))
    # swapping the two atoms is an automorphism; its dual swaps the points
    describe("atom swap", (0, 2, 1, 3))
    # collapsing one atom breaks stability: the prime theory over the
    # surviving atom pulls back to the non-prime theory over top, and the
    # lemma pins the same failure on the join of the two atoms
    describe("atom collapse", (0, 2, 0, 3))


if __name__ == "__main__":
    main()

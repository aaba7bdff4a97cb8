"""
Set cover and minimum interval systems
======================================

Finding a smallest unbiased interval system is as hard as set cover.  The
reduction plants one red/blue pair per subset and pads the gaps with blue
dummies so that a balanced interval can only ever close around a single
pair.  Covering a coloring then means choosing the subset that contains
its element.
"""
from itertools import combinations

from gsur import (
    SetCoverInstance,
    build_coverage,
    enumerate_candidate_intervals,
    exact_cover,
    extract_set_cover,
    greedy_cover,
    reduce_from_set_cover,
    verify_certificate,
)

# A small cover instance: universe {0..4}, four subsets.
sc = SetCoverInstance(5, [[0, 1], [1, 2, 3], [3, 4], [0, 4]])
print("universe size:", sc.universe_size)
print("subsets      :", [list(s) for s in sc.subsets])

# The reduction yields 4m - 2 points: pairs at coordinates 4i, 4i+1 and
# two dummies in each gap.
red = reduce_from_set_cover(sc)
print("\npoints:", red.ps.xs().tolist())
print("element-0 coloring:", red.fam[0].colors)
print("pair of subset i sits at indices:", red.pair_index)

# Solve the interval problem exactly and pull the chosen subsets back out.
cm = build_coverage(red.ps, red.fam, enumerate_candidate_intervals(red.ps))
sol = exact_cover(cm)
chosen = extract_set_cover(red, sol)
print("\ninterval optimum:", sol.size)
print("extracted cover :", sorted(chosen))

# The optimum is preserved exactly: trying every subset combination
# directly gives the same number.
def smallest_direct_cover(inst):
    universe = set(range(inst.universe_size))
    for size in range(1, len(inst.subsets) + 1):
        for combo in combinations(range(len(inst.subsets)), size):
            if set().union(*(inst.subsets[i] for i in combo)) == universe:
                return size
    raise AssertionError("infeasible instance")

direct = smallest_direct_cover(sc)
print("direct set-cover optimum:", direct)
assert sol.size == direct

# Greedy gives the familiar H(d) guarantee and is often optimal anyway.
gg = greedy_cover(cm)
print("\ngreedy size:", gg.size, "| verified:", verify_certificate(red.ps, red.fam, gg))

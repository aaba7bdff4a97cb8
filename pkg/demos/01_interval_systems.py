"""
Interval systems on a line of bicolored points
==============================================

A range system is *unbiased* for a family of red/blue colorings when every
coloring in the family has at least one range with equally many red and
blue points inside (and at least one of each).  This walk-through builds
the three interval constructions and pokes at their tightness.
"""
from gsur import (
    BicoloringFamily,
    PointSet,
    build_coverage,
    consecutive_interval_gsur,
    enumerate_candidate_intervals,
    exact_cover,
    gen_2k_tightness,
    gen_prefix_family,
    m_restricted_gsur,
    size2k_interval_gsur,
    threshold_report,
    verify_certificate,
)

# Six points on a line.  Colorings are strings over {R, B}, one char per
# point, in coordinate order.
ps = PointSet([(float(i),) for i in range(1, 7)])
fam = BicoloringFamily(["RRBBRB", "BRRRRB", "RBBBBR"])

# Adjacent pairs always work: every valid coloring changes color somewhere,
# and that change is a balanced pair.
g = consecutive_interval_gsur(ps, fam)
print("adjacent pairs:", [(r.lo, r.hi) for r in g.ranges])
print("certificate   :", g.certificate)
print("verified      :", verify_certificate(ps, fam, g))

# n-1 ranges is also necessary in the worst case.  The prefix family
# (first i points red) pins every interval system to n-1 ranges: the
# exact solver over all 21 candidate intervals cannot do better.
inst = gen_prefix_family(6)
cm = build_coverage(inst.ps, inst.fam, enumerate_candidate_intervals(inst.ps))
print("\nprefix family optimum:", exact_cover(cm).size, "(n-1 = 5)")

# When every coloring has many points of both colors, windows of a fixed
# size 2k suffice.  The threshold grows with n: both colors must exceed
# (floor(n/2k) + 1) * (k - 1).
fam12 = BicoloringFamily(["RRRRRRBBBBBB", "RBRBRBRBRBRB"])
ps12 = PointSet([(float(i),) for i in range(1, 13)])
rep = threshold_report(fam12, 2)
print("\nsize-2k threshold for k=2, n=12:", rep.threshold)
print("per-coloring (red, blue):", list(rep.counts))
g12 = size2k_interval_gsur(ps12, fam12, 2)
used = sorted({g12.certificate[i] for i in range(len(fam12))})
print("windows used:", [(g12.ranges[u].lo, g12.ranges[u].hi) for u in used])

# The threshold is sharp: on 3k-1 points there is a coloring with blue
# count exactly at the threshold and no balanced window of size 2k at all.
tight = gen_2k_tightness(2)
print("\ntightness coloring for k=2:", tight.fam[0].colors)

# Restricting the family helps too: with at least m of each color, the
# n-m adjacent pairs on the first n-m+1 points are enough, and for
# m = n/2 a single interval covers everything.
ps9 = PointSet([(float(i),) for i in range(1, 10)])
fam9 = BicoloringFamily(["RRRBBBBBB", "BBRRRRRRB", "BBBBBBRRR"])
g9 = m_restricted_gsur(ps9, fam9, 3)
print("\nm-restricted (n=9, m=3) uses", g9.size, "ranges, all within the first 7 points")

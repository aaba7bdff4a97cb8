"""
Ball systems in the plane via the Gabriel graph
===============================================

In dimension two and up, axis-aligned boxes can fail: they need some axis
on which all coordinates are distinct, and point sets with ties on every
axis offer none.  Balls always work.  The diametral balls of a spanning
tree of the Gabriel graph give n - 1 balls that are unbiased for every
coloring with both colors present.
"""
import numpy as np

from gsur import (
    BicoloringFamily,
    NoSeparatingAxis,
    PointSet,
    ball_gsur,
    box_gsur,
    gabriel_graph,
    gen_embedded_line,
    spanning_tree,
    verify_certificate,
)

# Ties on both axes: boxes give up.
ps_bad = PointSet([(0.0, 0.0), (0.0, 1.0), (0.0, 2.0), (1.0, 2.0)])
try:
    box_gsur(ps_bad, BicoloringFamily(["RBRB"]))
except NoSeparatingAxis as e:
    print("boxes fail here:", e)

# Balls on the same points: one per spanning-tree edge of the Gabriel
# graph, each containing exactly its two endpoints.
fam = BicoloringFamily(["RBRB", "RRBB", "BRRB"])
g = ball_gsur(ps_bad, fam)
print("\nballs:", [(r.center, round(r.radius, 3)) for r in g.ranges])
print("verified:", verify_certificate(ps_bad, fam, g))

# The Gabriel graph itself: points u, v are adjacent when the ball with
# diameter uv contains no third point.  It is always connected, so a
# spanning tree exists.
rng = np.random.default_rng(7)
pts = PointSet(rng.uniform(0.0, 10.0, size=(12, 2)))
graph = gabriel_graph(pts)
tree = spanning_tree(graph)
print("\nrandom 12-point Gabriel graph:", len(graph.edges), "edges")
print("spanning tree edges:", sorted(tree.edges))

# n - 1 balls is tight: collinear points embedded in the plane reproduce
# the interval lower bound, so no ball system can be smaller.
inst = gen_embedded_line(5, 2, (1.0, 0.5))
g5 = ball_gsur(inst.ps, inst.fam)
print("\nembedded line, n=5:", g5.size, "balls (n-1 = 4)")

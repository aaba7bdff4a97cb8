"""
Balanced intervals under random coloring
========================================

Color a line of m + n points with m reds placed uniformly at random.  The
statistics of the balanced intervals concentrate hard as n grows: the
smallest one almost always has just 2 points, and with high probability
every balanced interval is a single red next to a single blue.  The event
behind that has an exact closed form to check Monte Carlo estimates
against.
"""
from gsur import (
    prob_e_closed_form,
    prob_e_exact,
    prob_e_lower_bound,
    run_experiment,
)

# Discrete model, m = 3 reds among n = 2000 blues.  T is the size of the
# smallest balanced interval; it is 2 as soon as some red is adjacent to
# a blue, which fails only when all reds clump at one end.
res = run_experiment("discrete", 3, 2000, trials=2000, seed=42)
print("discrete model, m=3, n=2000, 2000 trials")
print("  P(T = 2) empirical :", sum(t.t_stat == 2 for t in res.records) / 2000)
print("  P(S = 2) empirical :", res.p_s2)
print("  P(E)     empirical :", res.p_event_e)

# E is the event that every gap between consecutive reds (ends included)
# holds at least 3 blues.  Its probability is a ratio of two binomials,
# exact as a fraction for small inputs.
print("\n  P(E) exact         :", float(prob_e_exact(3, 2000)))
print("  P(E) closed form   :", prob_e_closed_form(3, 2000))
print("  P(E) lower bound   :", prob_e_lower_bound(3, 2000))

# The empirical estimate should sit within a few standard errors of the
# exact value; with p near 1 and 2000 trials that is a tight band.
p = prob_e_closed_form(3, 2000)
se = (p * (1 - p) / 2000) ** 0.5
print("  deviation          :", abs(res.p_event_e - p), "(1 se =", round(se, 5), ")")

# Continuous model: m red and n blue coordinates drawn uniformly on
# [0, 1].  With m fixed, a balanced interval holds at most m blues, so
# even the largest one spans a bounded number of gaps and shrinks like
# 1/n; the smallest shrinks faster still.
print("\ncontinuous model, m=3, 500 trials per n")
for n in (100, 1000, 10000):
    c = run_experiment("continuous", 3, n, trials=500, seed=7)
    print(f"  n={n:>6}: mean smallest {c.means['m_len']:.6f}   mean largest {c.means['l_len']:.6f}")

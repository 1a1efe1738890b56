"""Three scaling experiments at the edges of the multiplier bounds.

The ladder campaigns show flat ratios where the bounds hold.  This demo
runs the three experiments probing where and how they stop holding:

* sharpness: a symbol exactly on the weak-l_r boundary makes the ratio
  grow like a power of log N, so no smaller symbol norm can work;
* endpoint: at p = 1 the weak bound fails outright, witnessed by
  lacunary profiles whose L1 norms keep growing while their weak L2
  symbol norms stay pinned at 1;
* growth: on a free group the same symbol construction meets
  exponentially growing balls, and the profile check certifies with
  exact integer arithmetic that the growth condition fails.

Run with:  python3 demos/05_scaling_experiments.py
"""

from ncfourier import (
    endpoint_experiment,
    free_group_ball_sizes,
    growth_symbol_check,
    sharpness_experiment,
)

print("=== sharpness of the weak symbol norm ===")
rep = sharpness_experiment(4.0 / 3.0, 4.0, [64, 512, 4096], seed=0)
print(f"(p, q) = (4/3, 4), s = {rep.params['s']:g} (just outside r = {rep.params['r']:g}),"
      f" grid m = {rep.params['m']}")
for row in rep.series:
    print(f"  N = {row['N']:<5d} ratio ||m f_N||_q / ||f_N||_p = {row['ratio']:.4f}")
print(f"growth across the list {rep.max_ratio:.4f}, required >= {rep.threshold:.4f}: "
      f"{'ok' if rep.passed else 'FAIL'}")
print("the ratio climbs like (log N)^(1/q), so the weak norm is the right scale")

print()
print("=== failure of the p = 1 endpoint ===")
rep = endpoint_experiment(list(range(4, 13)), m=2**14, growth_window=(8, 12), min_growth=0.03)
print("lacunary profile with frequencies 2, 4, ..., 2^K and weights 1/sqrt(2k):")
print("  K    ||h_K||_L1   ||h_K||_L2   weak symbol norm")
for row in rep.series:
    print(f"  {row['K']:<4d} {row['l1']:.6f}     {row['l2']:.6f}     {row['weak_norm']:g}")
print(f"weak norms exactly 1: {rep.details['weak_norms_exactly_one']}")
print(f"L1 growth on window {rep.params['growth_window']}: "
      f"{rep.details['l1_growth_on_window']:.4f} (passed: {rep.passed})")
print("a bounded multiplier would force the L1 column to stay bounded;")
print("it grows like sqrt(log K) instead, slowly but without end")

print()
print("=== growth on the free group with two generators ===")
sizes = free_group_ball_sizes(2, 6)
print(f"ball sizes |B_n| up to depth 6: {sizes}")
ok = growth_symbol_check(2, 5, 4.0, depth=8, c=1.0)
print(f"M = 5 = 2N + 1: profile check {'passes' if ok.passed else 'fails'} "
      f"(max |B_n|/M^n = {ok.max_ratio:g})")
bad = growth_symbol_check(2, 4, 4.0, depth=8, c=1.0)
viol = [row["n"] for row in bad.series if row["violated"]]
print(f"M = 4 = 2N:     violated at radii {viol} (|B_n| outruns M^n immediately)")
print("the arithmetic is exact (integers and fractions), so these verdicts")
print("carry no floating point slack at all")

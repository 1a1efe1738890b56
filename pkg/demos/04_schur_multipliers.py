"""Entrywise (Schur) multipliers between Schatten classes.

A symbol a is an n x n matrix; the multiplier sends x to the entrywise
product (a_ij x_ij).  The block algebra is a single M_n with weight 1, so
L_p is the Schatten p-class.  For p <= 2 <= q the S_p -> S_q norm of the
multiplier is bounded by the plain little-l_r norm of the symbol entries
with constant 1, where 1/r = 1/p - 1/q; the interesting question,
explored by the campaign ladders, is the constant in front of the weaker
l_{r,inf} norm.

Run with:  python3 demos/04_schur_multipliers.py
"""

import numpy as np

from ncfourier import (
    check_schur_bound,
    difference_exponent,
    estimate_pq_norm,
    conjugate_exponent,
    loglog_slope,
    lp_norm,
    schatten_algebra,
    schur_map,
    symbol_sequence_norm,
)

p, q = 4.0 / 3.0, 4.0
r = difference_exponent(p, q)
print(f"(p, q) = ({p:.4g}, {q:g})  =>  1/r = 1/p - 1/q, r = {r:g}")

print()
print("=== one symbol, by hand ===")
n = 8
i = np.arange(n)
band = 1.0 / (1.0 + np.abs(i[:, None] - i[None, :])) ** 1.5
m = schur_map(band)
est = estimate_pq_norm(m, p, q, restarts=6, seed=1)
lr = symbol_sequence_norm(band, r)
weak = symbol_sequence_norm(band, r, np.inf)
print(f"band-decay symbol on M_{n}:")
print(f"  estimated ||A||_(S_p -> S_q) = {est.lower_bound:.6f}")
print(f"  ||a||_l_r                    = {lr:.6f}   (ratio {est.lower_bound / lr:.4f}, never above 1)")
print(f"  ||a||_l_(r,inf)              = {weak:.6f}   (ratio {est.lower_bound / weak:.4f})")

print()
print("=== a diagonal symbol acts as a pointwise multiplier ===")
# restricted to diagonal inputs this is a pointwise multiplier from l_p
# to l_q, and since p <= q under counting measure the norm is just the
# largest entry, attained at a rank-one atom
diag = np.diag([2.0, 1.0, 0.5, 0.25])
m = schur_map(diag)
est = estimate_pq_norm(m, p, q, restarts=8, seed=2)
print(f"  estimate {est.lower_bound:.6f}  vs  max entry {np.max(diag):.6f}")

print()
print("=== Schatten vs entrywise norms (matrix Hausdorff-Young) ===")
rng = np.random.default_rng(3)
for pp in (4.0 / 3.0, 1.5):
    pc = conjugate_exponent(pp)
    worst_fwd = worst_dual = 0.0
    alg = schatten_algebra(6)
    for _ in range(300):
        mat = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
        x = alg.element([mat])
        worst_fwd = max(worst_fwd, lp_norm(x, pc) / symbol_sequence_norm(mat, pp))
        worst_dual = max(worst_dual, symbol_sequence_norm(mat, pc) / lp_norm(x, pp))
    print(f"  p = {pp:.4g}: max ||x||_S_p' / ||x||_l_p = {worst_fwd:.6f},  "
          f"max ||x||_l_p' / ||x||_S_p = {worst_dual:.6f}")

print()
print("=== a ladder over matrix sizes ===")
sizes = []
ratios = []
for n in (2, 4, 8, 16):
    rep = check_schur_bound(n, p, q, trials=40, seed=4, estimator={"restarts": 3, "max_iters": 50, "tol": 1e-6})
    sizes.append(n)
    ratios.append(rep.max_ratio)
    print(f"  M_{n:<3d} hard l_r clause: {'ok' if rep.passed else 'FAIL'}   "
          f"max weak ratio {rep.max_ratio:.4f} over {rep.trials} symbols")
print(f"log-log slope of the weak ratio vs n: {loglog_slope(sizes, ratios):.4f}")
print("a flat ladder is the numerical signature of uniform boundedness")

"""Weighted block algebras and their Lorentz norms, from the ground up.

A tracial algebra here is a direct sum of complex matrix blocks M_{n_k},
each carrying a positive weight w_k; the trace of an element is the
weighted sum of its block traces.  Against that measure every element has
a decreasing step function of generalized singular values, and all the
L_p and Lorentz L_{p,q} norms are exact finite expressions in its steps.

Run with:  python3 demos/01_block_algebras_and_lorentz_norms.py
"""

import numpy as np

from ncfourier import (
    TracialAlgebra,
    distribution_function,
    lorentz_norm,
    lp_norm,
    random_element,
    singular_function,
    trace,
)

print("=== a three-block algebra ===")
alg = TracialAlgebra([2, 1, 3], [0.5, 2.0, 1.0])
print(f"blocks {alg.dims}, weights {np.asarray(alg.weights)}")
print(f"complex dimension {alg.complex_dim}, total mass tau(1) = {alg.total_weight}")

# an element with hand-picked spectra so every number below is checkable
x = alg.element(
    [
        np.diag([3.0, 1.0]).astype(complex),
        np.array([[2.0]], dtype=complex),
        np.diag([4.0, 2.0, 0.5]).astype(complex),
    ]
)
print(f"tau(x) = {trace(x).real:g}")

print()
print("=== singular value step function ===")
mu = singular_function(x)
left = 0.0
for t, v in zip(mu.breakpoints, mu.values):
    print(f"  mu = {v:<4g} on ({left:g}, {t:g}]")
    left = t
print("the 4.0 comes first (weight 1.0), then 3.0 (weight 0.5), and so on;")
print("each singular value occupies an interval of length equal to its weight")

print()
print("=== distribution function ===")
for s in (0.0, 1.5, 3.5):
    print(f"  lambda_{s:<4g} = tau(1_(s,inf)(|x|)) = {distribution_function(x, s):g}")

print()
print("=== norms in closed form ===")
for p in (1.0, 2.0, np.inf):
    print(f"  ||x||_{p:<3g} = {lp_norm(x, p):.6f}")
for p, q in ((2.0, 1.0), (2.0, 2.0), (2.0, np.inf), (3.0, 1.5)):
    print(f"  ||x||_({p:g},{q:<3g}) = {lorentz_norm(x, p, q):.6f}")
print("(p,q) = (2,2) reproduces the plain L_2 norm, and q = inf is the weak norm")

print()
print("=== the weak norm by hand ===")
# sup over t of t^(1/p) mu_t, attained at the right end of some step
p = 2.0
cands = mu.breakpoints ** (1.0 / p) * mu.values
k = int(np.argmax(cands))
print(f"  max_i T_i^(1/2) mu_i = {cands[k]:.6f} at step {k} (T = {mu.breakpoints[k]:g})")
print(f"  lorentz_norm(x, 2, inf)   = {lorentz_norm(x, 2, np.inf):.6f}")

print()
print("=== nesting of the q index (seeded random loop) ===")
# ||x||_{p,r} <= (q/p)^(1/q - 1/r) ||x||_{p,q} whenever q < r
rng = np.random.default_rng(20260814)
worst = 0.0
for i in range(200):
    nb = int(rng.integers(1, 4))
    a = TracialAlgebra(
        [int(rng.integers(1, 4)) for _ in range(nb)],
        np.exp(rng.uniform(-1.0, 1.0, nb)),
    )
    y = random_element(a, int(rng.integers(2**32)))
    p = float(rng.uniform(0.7, 3.0))
    q = float(rng.uniform(0.5, 2.0))
    r = q * float(rng.uniform(1.1, 4.0))
    lhs = lorentz_norm(y, p, r)
    rhs = (q / p) ** (1.0 / q - 1.0 / r) * lorentz_norm(y, p, q)
    worst = max(worst, lhs / rhs)
print(f"  200 random cases: max ||x||_(p,r) / bound = {worst:.12f}  (never above 1)")

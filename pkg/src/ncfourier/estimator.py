"""Lower-bound estimation of L_p -> L_q operator norms of linear maps.

The quantity of interest is

    ||M||_{p->q} = sup { ||M x||_q : x in domain, ||x||_p = 1 }

with weighted trace norms on both sides.  Everything here produces certified
lower bounds: the returned value is always the ratio ||M x||_q / ||x||_p at
a concrete witness x, so it can never exceed the true norm.

Three levels of effort:

* :func:`exact_l2_norm` - the p = q = 2 case is a weighted singular value,
  computed exactly.
* :func:`estimate_pq_norm` - projected gradient ascent on the unit p-sphere
  with backtracking line search and a deterministic ladder of restarts
  (Gaussian, rank-one atoms, and the L2 maximizer as warm start).
* :func:`brute_force_pq_norm` - a sampling oracle for tiny domains: at least
  1e5 uniform sphere points, every one polished by fixed-step ascent.  Slow
  and only allowed when the domain has at most 8 real dimensions, but it has
  no tunable convergence knobs, which is the point.

All inner loops run on batched coordinates with closed-form singular values
and Schatten gradients for 1x1 and 2x2 blocks, so commutative algebras never
touch LAPACK.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraElement, TracialAlgebra, random_element
from .errors import ParameterError
from .linmap import (
    LinearMap,
    complex_from_real,
    coordinate_weights,
    real_from_complex,
    stack_complex,
    unstack_complex,
)
from .lorentz import lp_norm

__all__ = [
    "NormEstimate",
    "exact_l2_norm",
    "schatten_gradient",
    "estimate_pq_norm",
    "brute_force_pq_norm",
]

_TINY = 1e-300
# singular values this far (relatively) below the block's largest are
# treated as exactly zero inside gradient formulas
_SV_FLOOR = 1e-100


@dataclass
class NormEstimate:
    """A certified lower bound for ||M||_{p->q} with its witness."""

    lower_bound: float
    witness: AlgebraElement
    p: float
    q: float
    restarts_used: int
    converged_fraction: float
    degenerate: bool = False

    def certificate_ratio(self, m: LinearMap) -> float:
        """Recompute ||M(witness)||_q / ||witness||_p from scratch."""
        denom = lp_norm(self.witness, self.p)
        if denom == 0.0:
            return 0.0
        return lp_norm(m.apply(self.witness), self.q) / denom


# ---------------------------------------------------------------------------
# batched blockwise norms and Schatten gradients


def _eigh2(h: np.ndarray):
    """Closed-form eigendecomposition of batched 2x2 Hermitian matrices.

    Returns (lam, v) with lam[..., 0] >= lam[..., 1] and v unitary columns.
    """
    a = h[..., 0, 0].real
    d = h[..., 1, 1].real
    b = h[..., 0, 1]
    mean = 0.5 * (a + d)
    radius = np.sqrt(np.maximum(0.25 * (a - d) ** 2 + np.abs(b) ** 2, 0.0))
    lam1 = mean + radius
    lam2 = mean - radius

    v1x = b
    v1y = (lam1 - a).astype(complex)
    norm1 = np.sqrt(np.abs(v1x) ** 2 + np.abs(v1y) ** 2)
    # fall back to a coordinate vector when (b, lam1 - a) degenerates,
    # which happens exactly when h is (numerically) diagonal
    scale = np.abs(a) + np.abs(d) + np.abs(b)
    bad = norm1 <= 1e-14 * np.maximum(scale, _TINY)
    a_top = a >= d
    v1x = np.where(bad, np.where(a_top, 1.0 + 0j, 0.0 + 0j), v1x)
    v1y = np.where(bad, np.where(a_top, 0.0 + 0j, 1.0 + 0j), v1y)
    norm1 = np.where(bad, 1.0, norm1)
    v1x = v1x / norm1
    v1y = v1y / norm1
    # orthonormal completion
    v2x = -np.conj(v1y)
    v2y = np.conj(v1x)

    lam = np.stack([lam1, lam2], axis=-1)
    v = np.stack(
        [np.stack([v1x, v2x], axis=-1), np.stack([v1y, v2y], axis=-1)], axis=-2
    )
    return lam, v


class _BlockOps:
    """Vectorized singular values / Schatten gradients for one algebra.

    Operates on batches of stacked complex coordinates, shape (S, D).
    Blocks are grouped by size: 1x1 entries are pure elementwise work, 2x2
    blocks use closed forms, anything larger goes through batched LAPACK.
    """

    def __init__(self, algebra: TracialAlgebra):
        self.algebra = algebra
        idx1, wts1 = [], []
        idx2, wts2 = [], []
        big = []
        for k, (n, w) in enumerate(zip(algebra.dims, algebra.weights)):
            o = algebra.block_offset(k)
            if n == 1:
                idx1.append(o)
                wts1.append(w)
            elif n == 2:
                idx2.append(np.arange(o, o + 4))
                wts2.append(w)
            else:
                big.append((o, n, w))
        self.idx1 = np.asarray(idx1, dtype=int)
        self.wts1 = np.asarray(wts1, dtype=float)
        self.idx2 = (
            np.stack(idx2) if idx2 else np.zeros((0, 4), dtype=int)
        )
        self.wts2 = np.asarray(wts2, dtype=float)
        self.big = big

    def singular_values(self, z: np.ndarray):
        """Per-row singular values and their weights; z has shape (S, D)."""
        parts = []
        wparts = []
        s_count = z.shape[0]
        if self.idx1.size:
            parts.append(np.abs(z[:, self.idx1]))
            wparts.append(self.wts1)
        if self.wts2.size:
            y = z[:, self.idx2.ravel()].reshape(s_count, -1, 2, 2)
            h = np.conj(y.transpose(0, 1, 3, 2)) @ y
            lam, _ = _eigh2(h)
            sv = np.sqrt(np.maximum(lam, 0.0)).reshape(s_count, -1)
            parts.append(sv)
            wparts.append(np.repeat(self.wts2, 2))
        for o, n, w in self.big:
            y = z[:, o : o + n * n].reshape(s_count, n, n)
            sv = np.linalg.svd(y, compute_uv=False)
            parts.append(sv)
            wparts.append(np.full(n, w))
        return np.concatenate(parts, axis=1), np.concatenate(wparts)

    def norm(self, z: np.ndarray, p: float) -> np.ndarray:
        sv, wts = self.singular_values(z)
        if np.isinf(p):
            return sv.max(axis=1)
        return (sv**p @ wts) ** (1.0 / p)

    def schatten_direction(self, z: np.ndarray, q: float) -> np.ndarray:
        """Blockwise U diag(s^(q-1)) V* of each row (gradient numerator)."""
        s_count = z.shape[0]
        g = np.zeros_like(z)
        if self.idx1.size:
            v = z[:, self.idx1]
            mag = np.abs(v)
            with np.errstate(divide="ignore", invalid="ignore"):
                scaled = np.where(mag > _TINY, v * mag ** (q - 2.0), 0.0)
            g[:, self.idx1] = scaled
        if self.wts2.size:
            y = z[:, self.idx2.ravel()].reshape(s_count, -1, 2, 2)
            h = np.conj(y.transpose(0, 1, 3, 2)) @ y
            lam, vmat = _eigh2(h)
            sv = np.sqrt(np.maximum(lam, 0.0))
            top = sv[..., :1]
            with np.errstate(divide="ignore", invalid="ignore"):
                scale = np.where(sv > _SV_FLOOR * np.maximum(top, _TINY), sv ** (q - 2.0), 0.0)
            w = y @ vmat
            gy = (w * scale[..., None, :]) @ np.conj(vmat.transpose(0, 1, 3, 2))
            g[:, self.idx2.ravel()] = gy.reshape(s_count, -1)
        for o, n, _ in self.big:
            y = z[:, o : o + n * n].reshape(s_count, n, n)
            u, sv, vh = np.linalg.svd(y)
            gy = (u * sv[..., None, :] ** (q - 1.0)) @ vh
            g[:, o : o + n * n] = gy.reshape(s_count, -1)
        return g


def schatten_gradient(x: AlgebraElement, q: float) -> AlgebraElement:
    """Gradient of y -> ||y||_q at x w.r.t. the weighted inner product Re trace(y* x).

    Blockwise U diag(sigma^(q-1)) V* / ||x||_q^(q-1).  Requires finite
    q > 1 and x != 0.
    """
    if not (1.0 < q < np.inf):
        raise ParameterError(f"Schatten gradient needs finite q > 1, got {q}")
    nrm = lp_norm(x, q)
    if nrm == 0.0:
        raise ParameterError("Schatten gradient is undefined at the zero element")
    blocks = []
    for b in x.blocks:
        u, sv, vh = np.linalg.svd(b)
        blocks.append((u * sv ** (q - 1.0)) @ vh)
    g = AlgebraElement(x.algebra, blocks)
    return g * (nrm ** (1.0 - q))


# ---------------------------------------------------------------------------
# exact L2 and warm starts


def _weighted_matrix(m: LinearMap) -> np.ndarray:
    sqrt_wd = np.sqrt(coordinate_weights(m.domain))
    sqrt_wc = np.sqrt(coordinate_weights(m.codomain))
    return sqrt_wc[:, None] * m.matrix / sqrt_wd[None, :]


def exact_l2_norm(m: LinearMap) -> float:
    """||M||_{2->2} with weighted norms: top singular value of D_c M D_d^{-1}."""
    a = _weighted_matrix(m)
    return float(np.linalg.svd(a, compute_uv=False)[0])


def _l2_maximizer(m: LinearMap, exact: bool):
    """(sigma, domain real coords of a unit-L2 near-maximizer)."""
    a = _weighted_matrix(m)
    sqrt_wd = np.sqrt(coordinate_weights(m.domain))
    if exact:
        _, svals, vh = np.linalg.svd(a)
        v = vh[0]
        sigma = float(svals[0])
    else:
        rng = np.random.default_rng(0x5EED)
        v = rng.standard_normal(a.shape[1])
        gram = a.T @ a
        for _ in range(40):
            v = gram @ v
            nrm = np.linalg.norm(v)
            if nrm <= _TINY:
                break
            v = v / nrm
        sigma = float(np.linalg.norm(a @ v))
    return sigma, v / sqrt_wd


# ---------------------------------------------------------------------------
# ascent


def _as_complex_batch(zr: np.ndarray) -> np.ndarray:
    d = zr.shape[1] // 2
    return zr[:, :d] + 1j * zr[:, d:]


def _as_real_batch(zc: np.ndarray) -> np.ndarray:
    return np.concatenate([zc.real, zc.imag], axis=1)


def _check_exponents(p: float, q: float) -> None:
    if not (1.0 <= p < np.inf and 1.0 <= q < np.inf):
        raise ParameterError(
            f"norm estimation supports finite exponents >= 1, got p={p}, q={q}"
        )


def _ratio_gradient(m, dom_ops, cod_ops, zr, q, f):
    """Ascent direction of z -> ||Mz||_q at unit-p z (real coords, batch)."""
    yc = _as_complex_batch(zr @ m.matrix.T)
    gc = cod_ops.schatten_direction(yc, q)
    gr = _as_real_batch(gc)
    with np.errstate(divide="ignore", invalid="ignore"):
        gr = np.where(f[:, None] > _TINY, gr / np.maximum(f, _TINY)[:, None] ** (q - 1.0), 0.0)
    return gr @ m.weighted_adjoint_matrix().T


def estimate_pq_norm(
    m: LinearMap,
    p: float,
    q: float,
    restarts: int = 8,
    max_iters: int = 200,
    tol: float = 1e-7,
    seed: int = 0,
) -> NormEstimate:
    """Certified lower bound for ||M||_{p->q} by multi-start gradient ascent.

    Deterministic: restart r draws from SeedSequence((seed, r)).  The restart
    ladder is the exact L2 maximizer (when p = q = 2) or a power-method
    approximation of it, followed half by Gaussian elements and half by
    rank-one elements; the first rank-one starts are matrix units placed in
    blocks of ascending weight, where extremizers of weighted-norm problems
    like to live.
    """
    _check_exponents(p, q)
    if restarts < 1:
        raise ParameterError(f"need at least one restart, got {restarts}")
    if max_iters < 1 or tol <= 0:
        raise ParameterError("max_iters must be >= 1 and tol > 0")

    dom = m.domain
    dom_ops = _BlockOps(dom)
    cod_ops = _BlockOps(m.codomain)

    sigma, warm = _l2_maximizer(m, exact=(p == 2.0 and q == 2.0))
    base_step = 1.0 / max(sigma, 1e-12)

    n_rest = restarts - 1
    n_rank = n_rest // 2
    n_gauss = n_rest - n_rank
    inits = [warm]
    weight_order = np.argsort(dom.weights)
    for r in range(n_rank):
        if r < dom.num_blocks:
            atom = dom.basis_element(int(weight_order[r]), 0, 0)
        else:
            atom = random_element(dom, np.random.SeedSequence((seed, 2 * r + 1)), "rank_one")
        inits.append(real_from_complex(stack_complex(atom)))
    for r in range(n_gauss):
        elem = random_element(dom, np.random.SeedSequence((seed, 2 * r + 2)), "gaussian")
        inits.append(real_from_complex(stack_complex(elem)))

    best_f = -1.0
    best_z = None
    converged = 0
    usable = 0
    for z0 in inits:
        zr = np.asarray(z0, dtype=float)[None, :]
        nrm = dom_ops.norm(_as_complex_batch(zr), p)[0]
        if not np.isfinite(nrm) or nrm <= _TINY:
            continue
        usable += 1
        zr = zr / nrm
        f = cod_ops.norm(_as_complex_batch(zr @ m.matrix.T), q)[0]
        step = base_step
        hit_tol = False
        if f > _TINY:
            for _ in range(max_iters):
                g = _ratio_gradient(m, dom_ops, cod_ops, zr, q, np.array([f]))
                t = step
                f_try = f
                z_try = zr
                improved = False
                for _ in range(50):
                    cand = zr + t * g
                    cn = dom_ops.norm(_as_complex_batch(cand), p)[0]
                    if cn > _TINY:
                        cand = cand / cn
                        fc = cod_ops.norm(_as_complex_batch(cand @ m.matrix.T), q)[0]
                        if fc > f:
                            z_try, f_try, improved = cand, fc, True
                            break
                    t *= 0.5
                if not improved:
                    hit_tol = True
                    break
                rel = (f_try - f) / max(f_try, _TINY)
                zr, f = z_try, f_try
                step = 2.0 * t
                if rel < tol:
                    hit_tol = True
                    break
        if hit_tol:
            converged += 1
        if f > best_f:
            best_f = f
            best_z = zr
    degenerate = best_z is None or best_f <= 0.0
    if best_z is None:
        best_z = np.zeros((1, dom.real_dim))
        best_z[0, 0] = 1.0
        best_f = 0.0
    witness = unstack_complex(dom, complex_from_real(best_z[0]))
    return NormEstimate(
        lower_bound=float(max(best_f, 0.0)),
        witness=witness,
        p=p,
        q=q,
        restarts_used=len(inits),
        converged_fraction=converged / max(usable, 1),
        degenerate=degenerate,
    )


def brute_force_pq_norm(
    m: LinearMap,
    p: float,
    q: float,
    samples: int = 100_000,
    seed: int = 0,
    refine_steps: int = 200,
) -> float:
    """Sampling oracle for ||M||_{p->q} on domains of at most 8 real dimensions.

    Draws uniform points on the Euclidean sphere (at least 1e5 of them),
    renormalizes to the unit p-sphere, and polishes every sample with
    ``refine_steps`` fixed-step ascent steps, returning the best ratio seen
    anywhere along the way.
    """
    _check_exponents(p, q)
    if m.domain.real_dim > 8:
        raise ParameterError(
            f"brute force is restricted to domains with at most 8 real "
            f"dimensions, got {m.domain.real_dim}"
        )
    if samples < 100_000:
        raise ParameterError(f"need at least 1e5 samples, got {samples}")

    dom_ops = _BlockOps(m.domain)
    cod_ops = _BlockOps(m.codomain)
    rng = np.random.default_rng(seed)
    zr = rng.standard_normal((samples, m.domain.real_dim))

    def normalize(batch):
        nrm = dom_ops.norm(_as_complex_batch(batch), p)
        good = nrm > _TINY
        batch = np.where(good[:, None], batch / np.maximum(nrm, _TINY)[:, None], 0.0)
        return batch, good

    zr, good = normalize(zr)
    f = cod_ops.norm(_as_complex_batch(zr @ m.matrix.T), q)
    f = np.where(good, f, 0.0)
    best = float(f.max(initial=0.0))

    sigma, _ = _l2_maximizer(m, exact=False)
    step = 0.5 / max(sigma, 1e-12)
    for _ in range(refine_steps):
        g = _ratio_gradient(m, dom_ops, cod_ops, zr, q, f)
        zr, good = normalize(zr + step * g)
        f = cod_ops.norm(_as_complex_batch(zr @ m.matrix.T), q)
        f = np.where(good, f, 0.0)
        cur = float(f.max(initial=0.0))
        if cur > best:
            best = cur
    return best

"""Generate the shipped group data files (Z2xZ2, S3, D4, Q8).

Run from the repository root after installing the package:

    python3 tools/generate_group_data.py

Each group is built from an explicit presentation, its irreducible unitary
representations are written out elementwise, everything is validated by the
package's own checks, and the result lands in src/ncfourier/data/ with a
checksum.  Irreps are ordered by ascending dimension (trivial first).
"""

from __future__ import annotations

import itertools
from pathlib import Path

import numpy as np

from ncfourier.groups import FiniteGroupData, save_group_file, validate_group_data

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "ncfourier" / "data"


def klein_four() -> FiniteGroupData:
    # elements (a, b) with a, b in {0, 1}, index 2a + b, componentwise xor
    idx = lambda a, b: 2 * a + b
    mult = np.zeros((4, 4), dtype=int)
    for a1, b1, a2, b2 in itertools.product(range(2), repeat=4):
        mult[idx(a1, b1), idx(a2, b2)] = idx(a1 ^ a2, b1 ^ b2)
    irreps = []
    for s, t in itertools.product(range(2), repeat=2):
        mats = np.array(
            [[[(-1.0) ** (s * a + t * b)]] for a, b in itertools.product(range(2), repeat=2)],
            dtype=complex,
        )
        irreps.append(mats)
    return FiniteGroupData("Z2xZ2", 4, 0, mult, tuple(irreps))


def symmetric_3() -> FiniteGroupData:
    # permutations of {0,1,2} in lexicographic order of their one-line form
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    mult = np.zeros((6, 6), dtype=int)
    for i, s in enumerate(perms):
        for j, t in enumerate(perms):
            comp = tuple(s[t[k]] for k in range(3))  # s after t
            mult[i, j] = index[comp]
    trivial = np.ones((6, 1, 1), dtype=complex)

    def sign(p):
        sgn = 1
        for a in range(3):
            for b in range(a + 1, 3):
                if p[a] > p[b]:
                    sgn = -sgn
        return sgn

    sgn_rep = np.array([[[float(sign(p))]] for p in perms], dtype=complex)
    # standard 2-dim representation: restriction of the permutation action
    # to the plane x + y + z = 0, in an orthonormal basis of that plane
    basis = np.array(
        [
            [1 / np.sqrt(2), 1 / np.sqrt(6)],
            [-1 / np.sqrt(2), 1 / np.sqrt(6)],
            [0.0, -2 / np.sqrt(6)],
        ]
    )
    std = []
    for p in perms:
        pm = np.zeros((3, 3))
        for j in range(3):
            pm[p[j], j] = 1.0
        std.append(basis.T @ pm @ basis)
    std = np.asarray(std, dtype=complex)
    return FiniteGroupData("S3", 6, 0, mult, (trivial, sgn_rep, std))


def dihedral_4() -> FiniteGroupData:
    # r^a s^b with a mod 4, b mod 2, index a + 4b; s r s = r^{-1}
    idx = lambda a, b: a % 4 + 4 * (b % 2)
    mult = np.zeros((8, 8), dtype=int)
    for a1, b1 in itertools.product(range(4), range(2)):
        for a2, b2 in itertools.product(range(4), range(2)):
            a = a1 + (a2 if b1 == 0 else -a2)
            mult[idx(a1, b1), idx(a2, b2)] = idx(a, b1 + b2)
    elements = [(a, b) for b in range(2) for a in range(4)]
    elements.sort(key=lambda ab: idx(*ab))
    one_dims = []
    for er, es in itertools.product((1.0, -1.0), repeat=2):
        mats = np.array([[[er**a * es**b]] for a, b in elements], dtype=complex)
        one_dims.append(mats)
    rot = np.array([[0.0, -1.0], [1.0, 0.0]])
    ref = np.array([[1.0, 0.0], [0.0, -1.0]])
    two = np.array(
        [np.linalg.matrix_power(rot, a) @ np.linalg.matrix_power(ref, b) for a, b in elements],
        dtype=complex,
    )
    return FiniteGroupData("D4", 8, 0, mult, (*one_dims, two))


def quaternion_8() -> FiniteGroupData:
    # elements 1, -1, i, -i, j, -j, k, -k in that order
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    two_i = np.array([[1j, 0], [0, -1j]])
    two_j = np.array([[0.0, 1.0], [-1.0, 0.0]], dtype=complex)
    reps2 = {
        "1": np.eye(2, dtype=complex),
        "i": two_i,
        "j": two_j,
        "k": two_i @ two_j,
    }
    mats2 = []
    for nm in names:
        base = reps2[nm.lstrip("-")]
        mats2.append(-base if nm.startswith("-") else base)
    mats2 = np.asarray(mats2)
    # multiplication table from the faithful 2-dim representation
    index_of = {}
    for i, m in enumerate(mats2):
        index_of[tuple(np.round(m.ravel(), 8))] = i
    mult = np.zeros((8, 8), dtype=int)
    for i in range(8):
        for j in range(8):
            prod = mats2[i] @ mats2[j]
            mult[i, j] = index_of[tuple(np.round(prod.ravel(), 8))]
    # the four 1-dim irreps factor through the quotient by {1, -1}
    signs = {"1": (1, 1), "i": None, "j": None, "k": None}
    one_dims = []
    for ei, ej in itertools.product((1.0, -1.0), repeat=2):
        char = {"1": 1.0, "-1": 1.0, "i": ei, "-i": ei, "j": ej, "-j": ej, "k": ei * ej, "-k": ei * ej}
        mats = np.array([[[char[nm]]] for nm in names], dtype=complex)
        one_dims.append(mats)
    return FiniteGroupData("Q8", 8, 0, mult, (*one_dims, mats2))


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for build, fname in [
        (klein_four, "z2xz2.json"),
        (symmetric_3, "s3.json"),
        (dihedral_4, "d4.json"),
        (quaternion_8, "q8.json"),
    ]:
        g = build()
        validate_group_data(g)
        save_group_file(OUT_DIR / fname, g)
        print(f"wrote {fname}: |G|={g.order}, irrep dims {g.irrep_dims}")


if __name__ == "__main__":
    main()

"""Floating-point cross-check of the exact character tables.

This path shares no code with the exact one.  Structure constants are
recounted straight from the definition (products of class members),
the simultaneous eigenvectors of the class matrices come from numpy's
eigensolver applied to one random real combination, and the degrees
from the second orthogonality relation.  Rows are then matched one to
one against the exact table evaluated as complex numbers.
"""
from __future__ import annotations

import numpy as np

from .chartable import CharTable
from .config import ORACLE_SEED
from .errors import InternalInconsistency
from .groups import Group, conjugacy_classes

__all__ = ["oracle_character_values", "verify_against_oracle"]


def direct_structure_constants(G: Group) -> np.ndarray:
    """a[i, j, k] with K_i * K_j = sum_k a[i,j,k] K_k, by brute counting.

    For each pair of classes every product of members is formed and the
    hits in class k are divided by |K_k|; the division must be exact.
    """
    data = conjugacy_classes(G)
    r = data.count
    sizes = np.array(data.sizes, dtype=np.int64)
    A = np.zeros((r, r, r), dtype=np.int64)
    members = [np.array(c, dtype=np.int64) for c in data.classes]
    for i in range(r):
        for j in range(r):
            prods = G.mult[np.ix_(members[i], members[j])]
            counts = np.bincount(data.class_of[prods].ravel(), minlength=r)
            if np.any(counts % sizes):
                raise InternalInconsistency(
                    "class algebra count not divisible by a class size")
            A[i, j] = counts // sizes
    return A


def oracle_character_values(G: Group, seed: int | None = None,
                            tol: float = 1e-6) -> np.ndarray:
    """All irreducible character values as a complex (r x r) array.

    Row order is arbitrary.  A vector w with w[c] = |K_c| chi(g_c)/chi(1)
    is a common eigenvector of every class matrix, so the rows of the
    eigenbasis of one generic real combination recover all of them at
    once; w[0] = 1 fixes the scale and the norm relation
    sum |w_c|^2 / |K_c| = n / chi(1)^2 fixes the degree.  When the
    random combination has a near-collision of eigenvalues the seed is
    bumped and the draw repeated.
    """
    if seed is None:
        seed = ORACLE_SEED
    data = conjugacy_classes(G)
    r = data.count
    n = G.order
    sizes = np.array(data.sizes, dtype=np.float64)
    A = direct_structure_constants(G).astype(np.float64)
    for attempt in range(8):
        rng = np.random.default_rng(seed + attempt)
        # (sum_i c_i A[i])[j, k]: right eigenvectors are the omega vectors
        M = np.tensordot(rng.standard_normal(r), A, axes=(0, 0))
        eigvals, vecs = np.linalg.eig(M)
        pairwise = np.abs(eigvals[:, None] - eigvals[None, :])
        np.fill_diagonal(pairwise, np.inf)
        scale = max(1.0, float(np.abs(eigvals).max()))
        if r > 1 and pairwise.min() < 1e-8 * scale:
            continue
        rows = np.zeros((r, r), dtype=np.complex128)
        for t in range(r):
            w = vecs[:, t]
            if abs(w[0]) < 1e-9:
                break
            w = w / w[0]
            norm = float(np.sum(np.abs(w) ** 2 / sizes).real)
            degree = np.sqrt(n / norm)
            if abs(degree - round(degree)) > tol:
                break
            rows[t] = degree * w / sizes
        else:
            total = float(np.sum(np.round(rows[:, 0].real) ** 2))
            if abs(total - n) > tol:
                raise InternalInconsistency(
                    f"oracle degrees square-sum to {total}, not {n}")
            return rows
    raise InternalInconsistency(
        "no random combination separated the class matrices")


def verify_against_oracle(table: CharTable, seed: int | None = None,
                          tol: float = 1e-6) -> bool:
    """Match every exact row to a distinct oracle row within tol."""
    G = table.group
    oracle = oracle_character_values(G, seed=seed, tol=tol)
    exact = np.array([[v.to_complex() for v in chi.values]
                      for chi in table.irreducibles], dtype=np.complex128)
    r = oracle.shape[0]
    if exact.shape != (r, r):
        raise InternalInconsistency("table and oracle row counts differ")
    taken = np.zeros(r, dtype=bool)
    for i in range(r):
        diffs = np.abs(oracle - exact[i]).max(axis=1)
        diffs[taken] = np.inf
        j = int(np.argmin(diffs))
        if diffs[j] > tol:
            raise InternalInconsistency(
                f"character {i} of {G.name} has no oracle match "
                f"(best deviation {diffs[j]:.2e})")
        taken[j] = True
    return True

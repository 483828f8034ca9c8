"""Equi-isoclinic plane tuples extracted from Seidel matrices.

With S^2 = (2k-2) I, the matrix A = I + S / sqrt(2k-2) is twice the rank-
(2k-1) eigenprojector of S, so its eigenvalues are exactly {0, 2}.  Its
2 x 2 diagonal blocks are identities and for i != j the blocks satisfy
A_ij A_ji = lambda I_2 with lambda = 1 / (2k-2).  Factoring A = X^T X with
X of row rank 2k - 1 therefore yields q = 2k - 1 planes in R^(2k-1),
spanned by consecutive column pairs of X, any two of which meet at the same
pair of angles: B = P_i^T P_j has B^T B = lambda I_2.

That count is maximal for this angle parameter: the pairwise bound

    v <= r (1 - lambda) / (2 - r lambda)        (valid while r lambda < 2)

on the number v of equi-isoclinic planes at parameter lambda in R^r is
attained with equality at r = 2k - 1, lambda = 1/(2k-2), v = 2k - 1.  The
bound statement here is the lambda-restricted count, not the unrestricted
maximum over all lambda.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .errors import NotInvolutory, RankMismatch
from .seidel import SeidelMatrix, seidel_square_residual


@dataclass(frozen=True, eq=False)
class PlaneTuple:
    """n planes in R^r at common isoclinism parameter lambda.

    basis has shape (r, 2n); columns 2i, 2i+1 are an orthonormal basis of
    plane i.  lambda is kept as an exact rational so tightness of the count
    bound can be decided without floating point.
    """

    r: int
    n: int
    lam: Fraction
    basis: np.ndarray
    gram: np.ndarray

    def plane(self, i: int) -> np.ndarray:
        return self.basis[:, 2 * i : 2 * i + 2]


def build_gram(S: SeidelMatrix) -> np.ndarray:
    """A = I + S / sqrt(2k-2); PSD with eigenvalues {0, 2}."""
    if seidel_square_residual(S) > 1e-10:
        raise NotInvolutory("S^2 is not (2k-2) I within 1e-10")
    n = 2 * S.q
    return np.eye(n) + S.dense / math.sqrt(2 * S.k - 2)


def extract_bases(gram: np.ndarray, r: int, lam: Fraction) -> PlaneTuple:
    """Factor gram = X^T X by symmetric eigendecomposition, keeping rank r.

    Eigenvalues above 1 are kept (the spectral gap of a valid gram separates
    0 from 2); any other count raises RankMismatch.  Deterministic gauge:
    descending eigenvalue order, each eigenvector's first nonzero component
    made positive.
    """
    gram = np.asarray(gram, dtype=float)
    m = gram.shape[0]
    if m % 2 != 0 or gram.shape != (m, m):
        raise ValueError(f"gram must be square of even order, got {gram.shape}")
    vals, vecs = np.linalg.eigh(gram)
    keep = np.nonzero(vals > 1.0)[0][::-1]
    if len(keep) != r:
        raise RankMismatch(f"{len(keep)} eigenvalues above threshold, expected {r}")
    basis = np.empty((r, m))
    for row, idx in enumerate(keep):
        v = vecs[:, idx]
        nz = np.nonzero(np.abs(v) > 1e-12)[0]
        if len(nz) and v[nz[0]] < 0:
            v = -v
        basis[row] = math.sqrt(vals[idx]) * v
    return PlaneTuple(r=r, n=m // 2, lam=Fraction(lam), basis=basis, gram=gram.copy())


def planes_from_seidel(S: SeidelMatrix) -> PlaneTuple:
    """Full extraction: 2k-1 equi-isoclinic planes in R^(2k-1)."""
    lam = Fraction(1, 2 * S.k - 2)
    return extract_bases(build_gram(S), S.q, lam)


def orthonormality_residual(pt: PlaneTuple) -> float:
    """Max deviation of any plane's P^T P from I_2."""
    eye = np.eye(2)
    worst = 0.0
    for i in range(pt.n):
        p = pt.plane(i)
        worst = max(worst, float(np.abs(p.T @ p - eye).max()))
    return worst


def isoclinic_residual(pt: PlaneTuple) -> float:
    """Max deviation of any B^T B from lambda I_2, B = P_i^T P_j, i < j."""
    lam = float(pt.lam)
    eye = np.eye(2)
    worst = 0.0
    for i in range(pt.n):
        pi = pt.plane(i)
        for j in range(i + 1, pt.n):
            b = pi.T @ pt.plane(j)
            worst = max(worst, float(np.abs(b.T @ b - lam * eye).max()))
    return worst


class BoundCheck(NamedTuple):
    bound: Fraction | float  # +inf when r * lam >= 2
    tight: bool


def ls_bound(r: int, lam: Fraction | int, v: int) -> BoundCheck:
    """Pairwise-parameter bound v <= r (1 - lam) / (2 - r lam), decided exactly.

    lam must be an exact rational.  tight means v equals the floor of the
    bound and attains it with equality in exact arithmetic; a vacuous bound
    (r lam >= 2) is never tight.
    """
    if r < 4:
        raise ValueError(f"ambient dimension r must be >= 4, got {r}")
    lam = Fraction(lam)
    if not 0 < lam < 1:
        raise ValueError(f"lambda must lie strictly between 0 and 1, got {lam}")
    denom = 2 - r * lam
    if denom <= 0:
        return BoundCheck(math.inf, False)
    bound = Fraction(r) * (1 - lam) / denom
    tight = v == math.floor(bound) and v * denom == r * (1 - lam)
    return BoundCheck(bound, tight)

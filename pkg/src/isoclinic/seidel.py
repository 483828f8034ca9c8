"""Seidel block matrices: real 2q x 2q images of the conference construction.

Replacing each unimodular entry e^(i phi) of a conference matrix by the
2 x 2 plane symmetry

    s_phi = [[cos phi, sin phi], [sin phi, -cos phi]]

and each zero by the 2 x 2 zero block yields a real symmetric matrix S with

    S^2 = (2k - 2) I_{2q}

when phi = theta * chi(a_i - a_j) and cos(2 theta) = (2-k)/(k-1).  The two
eigenprojectors P = (I +- S/sqrt(2k-2)) / 2 then each have rank 2k - 1, and
the column span pairs of 2 P_+ form the equi-isoclinic plane tuples
extracted in the planes module.

Reflection algebra used throughout: s_a s_b = r_{a-b} (a plane rotation),
r_b s_a = s_a r_{-b} = s_{a+b}, hence r_{eta/2} s_a r_{-eta/2} = s_{a+eta}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .conference import ConferenceMatrix, _check_permutation, critical_angle
from .errors import InvalidShift, NotInvolutory, NotSymmetrizable, NotUnimodular
from .gf import Element, GaloisField


def plane_rotation(angle: float) -> np.ndarray:
    """r_angle = [[c, -s], [s, c]]."""
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s], [s, c]])


def plane_symmetry(angle: float) -> np.ndarray:
    """s_angle = [[c, s], [s, -c]]: reflection across the line at angle/2."""
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, s], [s, -c]])


@dataclass(frozen=True, eq=False)
class SeidelMatrix:
    """Real symmetric 2q x 2q matrix with zero 2x2 diagonal blocks.

    The canonical construction fills every off-diagonal block with a plane
    symmetry; normalization replaces the first block row/column by identity
    blocks, which are rotations, so downstream code only assumes the blocks
    are orthogonal.
    """

    q: int
    k: int
    theta: float
    dense: np.ndarray

    @property
    def blocks(self) -> np.ndarray:
        """View of shape (q, q, 2, 2): blocks[i, j] is the 2x2 block at (i, j)."""
        q = self.q
        return self.dense.reshape(q, 2, q, 2).swapaxes(1, 2)

    def block(self, i: int, j: int) -> np.ndarray:
        return self.dense[2 * i : 2 * i + 2, 2 * j : 2 * j + 2]


def build_seidel(field: GaloisField) -> SeidelMatrix:
    """Canonical Seidel matrix at the critical angle over the given field."""
    q = field.q
    if q % 4 != 1:
        raise NotSymmetrizable(f"q = {q} is {q % 4} mod 4; chi(-1) = -1 breaks symmetry")
    k = (q + 1) // 2
    theta = critical_angle(k)
    chi = np.zeros((q, q))
    elements = field.elements
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            if i != j:
                chi[i, j] = field.chi(field.sub(a, b))
    ang = theta * chi
    c, s = np.cos(ang), np.sin(ang)
    blocks = np.empty((q, q, 2, 2))
    blocks[..., 0, 0] = c
    blocks[..., 0, 1] = s
    blocks[..., 1, 0] = s
    blocks[..., 1, 1] = -c
    idx = np.arange(q)
    blocks[idx, idx] = 0.0
    dense = blocks.swapaxes(1, 2).reshape(2 * q, 2 * q)
    return SeidelMatrix(q=q, k=k, theta=theta, dense=dense)


def seidel_square_residual(S: SeidelMatrix) -> float:
    """Max-abs entry of S^2 - (2k-2) I."""
    n = 2 * S.q
    sq = S.dense @ S.dense
    return float(np.abs(sq - (2 * S.k - 2) * np.eye(n)).max())


def rotation_sum(field: GaloisField, theta: float, b: Element) -> np.ndarray:
    """Sum of r_{theta (chi(a) - chi(a+b))} over a not in {0, -b}.

    Direct evaluation of the character-sum identity: the result equals
    (k - 2 + (k - 1) cos(2 theta)) I_2 for every nonzero shift b, hence the
    zero matrix at the critical angle.
    """
    if b == field.zero:
        raise InvalidShift("shift b must be a nonzero field element")
    total = np.zeros((2, 2))
    for a in field.elements:
        if a == field.zero or field.add(a, b) == field.zero:
            continue
        total += plane_rotation(theta * (field.chi(a) - field.chi(field.add(a, b))))
    return total


def spectrum(S: SeidelMatrix) -> list[tuple[float, int]]:
    """Eigenvalues +-sqrt(2k-2) with multiplicities from projector traces.

    S^2 = (2k-2) I forces the two-point spectrum; the multiplicities are the
    traces of P = (I +- S/mu)/2, integers up to roundoff.
    """
    if seidel_square_residual(S) > 1e-10:
        raise NotInvolutory("S^2 is not (2k-2) I within 1e-10")
    n = 2 * S.q
    mu = math.sqrt(2 * S.k - 2)
    eye = np.eye(n)
    out: list[tuple[float, int]] = []
    for sign in (1.0, -1.0):
        tr = float(np.trace(0.5 * (eye + sign * S.dense / mu)))
        m = round(tr)
        if abs(tr - m) > 1e-8:
            raise NotInvolutory(f"projector trace {tr!r} is not an integer up to 1e-8")
        out.append((sign * mu, m))
    return out


def normalize(S: SeidelMatrix) -> SeidelMatrix:
    """Equivalent matrix whose first block row and column are identity blocks.

    Multiplies block column j by S[j, 1] and block row j by S[1, j] for
    j >= 2 (1-based); as a dense operation this is conjugation by the
    orthogonal block-diagonal matrix diag(I, S[1,2], ..., S[1,q]), so the
    square identity and the spectrum are preserved.  Idempotent.
    """
    q = S.q
    n = 2 * q
    Q = np.zeros((n, n))
    Q[0:2, 0:2] = np.eye(2)
    for j in range(1, q):
        Q[2 * j : 2 * j + 2, 2 * j : 2 * j + 2] = S.block(0, j)
    dense = Q @ S.dense @ Q.T
    return SeidelMatrix(q=q, k=S.k, theta=S.theta, dense=dense)


def transport_scaling(S: SeidelMatrix, index: int, eta: float) -> SeidelMatrix:
    """Multiply block row `index` by r_{eta/2} and block column by r_{-eta/2}.

    Orthogonal conjugation, so S^2 and the spectrum are preserved.  This is
    the Seidel-side image of scaling row/column `index` of the underlying
    conference matrix by e^(i eta / 2): each touched reflection s_phi
    becomes s_{phi + eta/2}.
    """
    if not 0 <= index < S.q:
        raise IndexError(f"index {index} out of range for order {S.q}")
    n = 2 * S.q
    Q = np.eye(n)
    Q[2 * index : 2 * index + 2, 2 * index : 2 * index + 2] = plane_rotation(eta / 2.0)
    dense = Q @ S.dense @ Q.T
    return SeidelMatrix(q=S.q, k=S.k, theta=S.theta, dense=dense)


def from_conference(C: ConferenceMatrix) -> SeidelMatrix:
    """Entry-by-entry image: e^(i phi) -> s_phi, zero diagonal -> zero blocks.

    For the canonical C(omega0) this coincides with build_seidel up to
    floating-point roundoff in the angle extraction.
    """
    q = C.q
    off = ~np.eye(q, dtype=bool)
    dev = float(np.abs(np.abs(C.values[off]) - 1.0).max())
    if dev > 1e-8:
        raise NotUnimodular(f"off-diagonal entries deviate from |c| = 1 by {dev!r}")
    ang = np.angle(C.values)
    c, s = np.cos(ang), np.sin(ang)
    blocks = np.empty((q, q, 2, 2))
    blocks[..., 0, 0] = c
    blocks[..., 0, 1] = s
    blocks[..., 1, 0] = s
    blocks[..., 1, 1] = -c
    idx = np.arange(q)
    blocks[idx, idx] = 0.0
    dense = blocks.swapaxes(1, 2).reshape(2 * q, 2 * q)
    return SeidelMatrix(q=q, k=C.k, theta=critical_angle(C.k), dense=dense)


def permute_blocks(S: SeidelMatrix, sigma: Sequence[int]) -> SeidelMatrix:
    """Simultaneous block row/column permutation mirroring conference.permute."""
    idx = _check_permutation(sigma, S.q)
    q = S.q
    pair = np.arange(2)
    b = S.dense.reshape(q, 2, q, 2)
    dense = b[np.ix_(idx, pair, idx, pair)].reshape(2 * q, 2 * q)
    return SeidelMatrix(q=q, k=S.k, theta=S.theta, dense=dense)

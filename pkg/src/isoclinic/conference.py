"""Complex symmetric conference matrices built from the quadratic character.

For a field of odd prime-power order q = 2k - 1 with q = 1 (mod 4), the
matrix C(omega) has zero diagonal and off-diagonal entries

    C[i, j] = omega ** chi(a_i - a_j),    chi the quadratic character,

which is symmetric because chi is even.  The Gram identity

    C C* = (2k - 2 - c) I + c J,    c = k - 2 + (k - 1) Re(omega^2),

holds for every unimodular omega.  At the critical omega with
Re(omega^2) = (2 - k) / (k - 1) the off-diagonal constant c vanishes and
C C* = (2k - 2) I.

The constant c is certified exactly, without floating point, by counting
exponent differences: for each off-diagonal (i, j), the products
C[i, g] * conj(C[g, j]) over the q - 2 inner indices g split into r ones,
s factors omega^2 and t factors omega^-2 with

    (r, s, t) = (k - 2, (k - 1)/2, (k - 1)/2),

independent of i, j and omega.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import (
    InvalidOrder,
    InvalidPermutation,
    NotSymmetrizable,
    NotUnimodular,
    WitnessMismatch,
)
from .gf import GaloisField

UNIT_TOL = 1e-12


def _require_unit(u: complex, what: str = "scalar") -> complex:
    u = complex(u)
    if abs(u.real * u.real + u.imag * u.imag - 1.0) > UNIT_TOL:
        raise NotUnimodular(f"{what} must be unimodular, got |u|^2 = {abs(u) ** 2!r}")
    return u


def critical_angle(k: int) -> float:
    """Half-angle theta with cos(2 theta) = (2-k)/(k-1), principal branch."""
    if not isinstance(k, int) or k < 3:
        raise InvalidOrder(f"k must be an integer >= 3, got {k!r}")
    return 0.5 * math.acos((2.0 - k) / (k - 1.0))


def critical_omega(k: int) -> complex:
    """The unit scalar exp(i theta) that makes C C* a multiple of I."""
    theta = critical_angle(k)
    return complex(math.cos(theta), math.sin(theta))


def gram_constant(k: int, omega: complex) -> float:
    """Off-diagonal Gram value c = k - 2 + (k - 1) Re(omega^2)."""
    if not isinstance(k, int) or k < 3:
        raise InvalidOrder(f"k must be an integer >= 3, got {k!r}")
    omega = complex(omega)
    return (k - 2) + (k - 1) * (omega * omega).real


@dataclass(frozen=True, eq=False)
class ConferenceMatrix:
    """Order-q matrix with zero diagonal and unimodular off-diagonal entries.

    `exponents` is the symbolic layer: an integer matrix with sentinel 0 on
    the diagonal (the value there is zero, not omega^0) and +-1 off the
    diagonal, meaning the value omega**e.  Row/column scaling destroys the
    layer, in which case `exponents` is None and only numeric checks apply.
    """

    q: int
    k: int
    omega: complex
    exponents: np.ndarray | None
    values: np.ndarray

    @property
    def has_symbolic(self) -> bool:
        return self.exponents is not None


class ExponentCounts(NamedTuple):
    r: int  # products equal to 1
    s: int  # products equal to omega^2
    t: int  # products equal to omega^-2


@dataclass(frozen=True, eq=False)
class GramCounts:
    """Exact per-entry counts of exponent differences 0 / +2 / -2."""

    r: np.ndarray
    s: np.ndarray
    t: np.ndarray

    def entry(self, i: int, j: int) -> ExponentCounts:
        return ExponentCounts(int(self.r[i, j]), int(self.s[i, j]), int(self.t[i, j]))


def build_conference(field: GaloisField, omega: complex) -> ConferenceMatrix:
    """C(omega) over the given field; requires q = 1 (mod 4) for symmetry."""
    q = field.q
    if q % 4 != 1:
        raise NotSymmetrizable(f"q = {q} is {q % 4} mod 4; chi(-1) = -1 breaks symmetry")
    omega = _require_unit(omega, "omega")
    k = (q + 1) // 2
    exponents = np.zeros((q, q), dtype=np.int8)
    elements = field.elements
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            if i != j:
                exponents[i, j] = field.chi(field.sub(a, b))
    values = np.zeros((q, q), dtype=np.complex128)
    values[exponents == 1] = omega
    values[exponents == -1] = 1.0 / omega
    return ConferenceMatrix(q=q, k=k, omega=omega, exponents=exponents, values=values)


def gram_counts(C: ConferenceMatrix) -> GramCounts:
    """Count exponent differences E[i, g] - E[g, j] over inner indices g.

    Exact integer computation on the symbolic layer; the diagonal of the
    result is meaningless and set to -1.
    """
    if C.exponents is None:
        raise ValueError("symbolic exponent layer absent; only numeric checks apply")
    e = C.exponents.astype(np.int16)
    q = C.q
    # diff[i, j, g] = e[i, g] - e[g, j]; inner indices g = i and g = j are
    # excluded from every bucket via an out-of-band sentinel
    diff = e[:, None, :] - e.T[None, :, :]
    idx = np.arange(q)
    diff[idx, :, idx] = 99
    diff[:, idx, idx] = 99
    r = (diff == 0).sum(axis=2)
    s = (diff == 2).sum(axis=2)
    t = (diff == -2).sum(axis=2)
    for m in (r, s, t):
        m[idx, idx] = -1
    return GramCounts(r=r, s=s, t=t)


def verify_counts(C: ConferenceMatrix) -> bool:
    """True iff every off-diagonal count triple equals (k-2, (k-1)/2, (k-1)/2).

    Together with Re(omega^2) = (2-k)/(k-1) this certifies
    C C* = (2k-2) I exactly, with no floating-point arithmetic.
    """
    counts = gram_counts(C)
    k = C.k
    off = ~np.eye(C.q, dtype=bool)
    return bool(
        (counts.r[off] == k - 2).all()
        and (counts.s[off] == (k - 1) // 2).all()
        and (counts.t[off] == (k - 1) // 2).all()
    )


def conference_residual(C: ConferenceMatrix) -> float:
    """Max-abs entry of C C* - (q-1) I."""
    q = C.q
    gram = C.values @ C.values.conj().T
    return float(np.abs(gram - (q - 1) * np.eye(q)).max())


def scale_row_col(C: ConferenceMatrix, index: int, u: complex) -> ConferenceMatrix:
    """Multiply row `index` and column `index` by the unit scalar u.

    Preserves symmetry, the zero diagonal and the Gram identity; the
    symbolic exponent layer no longer applies and is dropped.
    """
    u = _require_unit(u)
    if not 0 <= index < C.q:
        raise IndexError(f"index {index} out of range for order {C.q}")
    values = C.values.copy()
    values[index, :] *= u
    values[:, index] *= u
    values[index, index] = 0.0
    return ConferenceMatrix(q=C.q, k=C.k, omega=C.omega, exponents=None, values=values)


def _check_permutation(sigma: Sequence[int], n: int) -> np.ndarray:
    idx = np.asarray(tuple(sigma), dtype=np.intp)
    if idx.shape != (n,) or sorted(idx.tolist()) != list(range(n)):
        raise InvalidPermutation(f"not a bijection on 0..{n - 1}: {tuple(sigma)!r}")
    return idx


def permute(C: ConferenceMatrix, sigma: Sequence[int]) -> ConferenceMatrix:
    """Simultaneous row/column permutation: result[i, j] = C[sigma[i], sigma[j]]."""
    idx = _check_permutation(sigma, C.q)
    values = C.values[np.ix_(idx, idx)]
    exponents = None if C.exponents is None else C.exponents[np.ix_(idx, idx)]
    return ConferenceMatrix(q=C.q, k=C.k, omega=C.omega, exponents=exponents, values=values)


@dataclass(frozen=True)
class EquivalenceWitnesses:
    """Verified witnesses that the four critical scalars give equivalent matrices.

    permutation: sigma with permute(C(1/omega0), sigma) = C(omega0); it maps
        index i to the index of a_i * g for the first non-square g.
    scalings: per-index unit scalars (all i) turning C(-omega0) into C(omega0).
    """

    permutation: tuple[int, ...]
    scalings: tuple[complex, ...]


def equivalence_witnesses(field: GaloisField) -> EquivalenceWitnesses:
    """Construct and verify the equivalence witnesses over the given field."""
    q = field.q
    k = (q + 1) // 2
    omega0 = critical_omega(k)
    base = build_conference(field, omega0)

    g = field.first_nonsquare()
    sigma = tuple(field.index(field.mul(a, g)) for a in field.elements)
    recip = build_conference(field, 1.0 / omega0)
    if np.abs(permute(recip, sigma).values - base.values).max() > 1e-12:
        raise WitnessMismatch("non-square permutation does not map C(1/omega0) to C(omega0)")

    negated = build_conference(field, -omega0)
    scaled = negated
    for i in range(q):
        scaled = scale_row_col(scaled, i, 1j)
    if np.abs(scaled.values - base.values).max() > 1e-12:
        raise WitnessMismatch("all-i scaling does not map C(-omega0) to C(omega0)")

    return EquivalenceWitnesses(permutation=sigma, scalings=(1j,) * q)

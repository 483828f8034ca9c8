"""Order doubling: a conference matrix of order n gives a complex Hadamard
matrix of order 2n,

    H = [[C + I, C* - I], [C - I, -C* - I]],    H H* = 2n I,

where C* is the conjugate transpose; for symmetric C this is plain
entrywise conjugation, which is how it is computed here.  Complex Hadamard
matrices of doubled order are of independent interest, e.g. in quantum
information; this module only builds and verifies them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .conference import ConferenceMatrix, conference_residual
from .errors import NotConference


@dataclass(frozen=True, eq=False)
class HadamardMatrix:
    """Unimodular matrix of order n2 with H H* = n2 I."""

    n2: int
    values: np.ndarray


def double(C: ConferenceMatrix) -> HadamardMatrix:
    """Doubled Hadamard matrix; input must pass the conference residual gate."""
    resid = conference_residual(C)
    if resid > 1e-10:
        raise NotConference(f"conference residual {resid!r} exceeds 1e-10")
    V = C.values
    Vc = V.conj()  # symmetric C: entrywise conjugate equals conjugate transpose
    eye = np.eye(C.q)
    H = np.block([[V + eye, Vc - eye], [V - eye, -Vc - eye]])
    return HadamardMatrix(n2=2 * C.q, values=H)


def hadamard_residual(H: HadamardMatrix) -> float:
    """Max of the unimodularity deviation and the max-abs entry of H H* - n2 I."""
    n2 = H.n2
    V = H.values
    unimod = float(np.abs(np.abs(V) - 1.0).max())
    gram = float(np.abs(V @ V.conj().T - n2 * np.eye(n2)).max())
    return max(unimod, gram)

"""Order doubling to complex Hadamard matrices."""

from __future__ import annotations

import numpy as np
import pytest

from isoclinic import (
    HadamardMatrix,
    NotConference,
    build_conference,
    critical_omega,
    double,
    hadamard_residual,
    make_field,
)


def test_double_q5_structure():
    f = make_field(5)
    C = build_conference(f, critical_omega(3))
    H = double(C)
    assert H.n2 == 10
    eye = np.eye(5)
    assert np.array_equal(H.values[:5, :5], C.values + eye)
    assert np.array_equal(H.values[:5, 5:], C.values.conj() - eye)
    assert np.array_equal(H.values[5:, :5], C.values - eye)
    assert np.array_equal(H.values[5:, 5:], -C.values.conj() - eye)
    assert np.abs(np.abs(H.values) - 1.0).max() <= 1e-12
    assert np.abs(H.values @ H.values.conj().T - 10.0 * np.eye(10)).max() <= 1e-12


@pytest.mark.parametrize("p,alpha", [(5, 1), (3, 2), (13, 1), (5, 2)])
def test_double_residuals(p, alpha):
    q = p**alpha
    C = build_conference(make_field(p, alpha), critical_omega((q + 1) // 2))
    H = double(C)
    assert H.n2 == 2 * q
    assert hadamard_residual(H) <= 1e-9


def test_double_rejects_non_conference_input():
    # omega = 1 has residual 3, far above the 1e-10 gate
    C = build_conference(make_field(5), 1.0)
    with pytest.raises(NotConference):
        double(C)


def test_entrywise_conjugate_equals_conjugate_transpose():
    # C is symmetric, so the two notions of C* coincide; doubling uses the
    # entrywise form and must agree with the transpose form exactly
    C = build_conference(make_field(3, 2), critical_omega(5))
    assert np.array_equal(C.values.conj(), C.values.conj().T)
    eye = np.eye(C.q)
    Vc = C.values.conj().T
    H_alt = np.block([[C.values + eye, Vc - eye], [C.values - eye, -Vc - eye]])
    assert np.array_equal(double(C).values, H_alt)


def test_residual_all_ones_order4():
    # J J* = 4 J; the max-abs deviation from 4 I sits off-diagonal and is 4
    H = HadamardMatrix(n2=4, values=np.ones((4, 4), dtype=complex))
    assert hadamard_residual(H) == 4.0


def test_residual_order2_hadamard_is_zero():
    H = HadamardMatrix(n2=2, values=np.array([[1, 1], [1, -1]], dtype=complex))
    assert hadamard_residual(H) == 0.0

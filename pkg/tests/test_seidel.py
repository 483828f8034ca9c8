"""Seidel block matrices: reflection algebra, square identity, transports."""

from __future__ import annotations

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isoclinic import (
    InvalidShift,
    NotInvolutory,
    NotSymmetrizable,
    NotUnimodular,
    SeidelMatrix,
    build_conference,
    build_seidel,
    critical_angle,
    critical_omega,
    from_conference,
    make_field,
    normalize,
    permute,
    permute_blocks,
    plane_rotation,
    plane_symmetry,
    rotation_sum,
    scale_row_col,
    seidel_square_residual,
    spectrum,
    transport_scaling,
)

angles = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)


@settings(deadline=None, max_examples=200)
@given(a=angles, b=angles)
def test_reflection_product_is_rotation(a, b):
    # s_a s_b = r_{a-b} and r_a r_b = r_{a+b}
    assert np.abs(plane_symmetry(a) @ plane_symmetry(b) - plane_rotation(a - b)).max() <= 1e-14
    assert np.abs(plane_rotation(a) @ plane_rotation(b) - plane_rotation(a + b)).max() <= 1e-14


@settings(deadline=None, max_examples=200)
@given(theta=angles, eta=angles)
def test_rotation_conjugation_shifts_reflection(theta, eta):
    lhs = plane_rotation(eta / 2) @ plane_symmetry(theta) @ plane_rotation(-eta / 2)
    assert np.abs(lhs - plane_symmetry(theta + eta)).max() <= 1e-14


def test_opposite_rotations_sum_to_scalar():
    for theta in (0.0, 0.3, critical_angle(5), 1.4):
        total = plane_rotation(2 * theta) + plane_rotation(-2 * theta)
        assert np.abs(total - 2 * math.cos(2 * theta) * np.eye(2)).max() <= 1e-15


def test_build_seidel_k3_structure():
    S = build_seidel(make_field(5))
    assert S.dense.shape == (10, 10)
    assert abs(S.theta - math.pi / 3) < 1e-15
    assert np.array_equal(S.dense, S.dense.T)
    assert S.q == 5 and S.k == 3
    for i in range(5):
        assert np.array_equal(S.block(i, i), np.zeros((2, 2)))
    # chi(0 - 1) = chi(4) = +1, so block (0, 1) is the reflection at +theta
    assert np.abs(S.block(0, 1) - plane_symmetry(S.theta)).max() == 0.0
    assert np.trace(S.dense) == 0.0


def test_blocks_view():
    S = build_seidel(make_field(5))
    assert S.blocks.shape == (5, 5, 2, 2)
    assert np.array_equal(S.blocks[2, 3], S.block(2, 3))


def test_build_rejects_q_3_mod_4():
    with pytest.raises(NotSymmetrizable):
        build_seidel(make_field(7))


@pytest.mark.parametrize("p,alpha", [(5, 1), (3, 2), (13, 1), (5, 2)])
def test_square_identity(p, alpha):
    S = build_seidel(make_field(p, alpha))
    assert seidel_square_residual(S) <= 1e-11


def test_square_detects_perturbation():
    S = build_seidel(make_field(5))
    dense = S.dense.copy()
    wrong = plane_symmetry(-S.theta)
    dense[0:2, 2:4] = wrong
    dense[2:4, 0:2] = wrong
    bad = SeidelMatrix(q=5, k=3, theta=S.theta, dense=dense)
    assert seidel_square_residual(bad) >= 0.1


def test_rotation_sum_vanishes_at_critical_angle():
    for p, alpha in [(5, 1), (3, 2), (13, 1)]:
        f = make_field(p, alpha)
        theta = critical_angle((f.q + 1) // 2)
        for b in f.elements[1:]:
            assert np.abs(rotation_sum(f, theta, b)).max() <= 1e-10


def test_rotation_sum_at_zero_angle_counts_terms():
    f = make_field(5)
    assert np.array_equal(rotation_sum(f, 0.0, f.element(1)), 3.0 * np.eye(2))


def test_rotation_sum_matches_scalar_formula():
    # the sum is (k - 2 + (k - 1) cos(2 theta)) I for every nonzero shift
    f = make_field(3, 2)
    k = 5
    for theta in (0.7, 1.3):
        expected = (k - 2 + (k - 1) * math.cos(2 * theta)) * np.eye(2)
        for b in f.elements[1:]:
            assert np.abs(rotation_sum(f, theta, b) - expected).max() <= 1e-12


def test_rotation_sum_rejects_zero_shift():
    f = make_field(5)
    with pytest.raises(InvalidShift):
        rotation_sum(f, 0.5, f.zero)


def test_spectrum_k3():
    S = build_seidel(make_field(5))
    pairs = spectrum(S)
    assert pairs == [(2.0, 5), (-2.0, 5)]


@pytest.mark.parametrize("p,alpha", [(3, 2), (13, 1), (5, 2)])
def test_spectrum_multiplicities(p, alpha):
    q = p**alpha
    S = build_seidel(make_field(p, alpha))
    pairs = spectrum(S)
    mu = math.sqrt(2 * S.k - 2)
    assert [v for v, _ in pairs] == [mu, -mu]
    assert [m for _, m in pairs] == [q, q]


def test_spectrum_rejects_non_involutory():
    S = build_seidel(make_field(5))
    dense = S.dense.copy()
    dense[0, 2] += 0.5
    dense[2, 0] += 0.5
    with pytest.raises(NotInvolutory):
        spectrum(SeidelMatrix(q=5, k=3, theta=S.theta, dense=dense))


def test_normalize_first_block_row_and_column():
    for p, alpha in [(5, 1), (3, 2)]:
        S = build_seidel(make_field(p, alpha))
        N = normalize(S)
        eye = np.eye(2)
        for j in range(1, S.q):
            assert np.abs(N.block(0, j) - eye).max() <= 1e-14
            assert np.abs(N.block(j, 0) - eye).max() <= 1e-14
        assert np.abs(N.dense - N.dense.T).max() <= 1e-14
        assert seidel_square_residual(N) <= 1e-11
        assert spectrum(N) == spectrum(S)
        again = normalize(N)
        assert np.abs(again.dense - N.dense).max() <= 1e-12


def test_transport_scaling_is_orthogonal_conjugation():
    S = build_seidel(make_field(3, 2))
    moved = transport_scaling(S, 4, 1.1)
    assert seidel_square_residual(moved) <= 1e-11
    assert np.abs(moved.dense - moved.dense.T).max() <= 1e-14
    untouched = transport_scaling(S, 4, 0.0)
    assert np.array_equal(untouched.dense, S.dense)
    with pytest.raises(IndexError):
        transport_scaling(S, 9, 0.3)


def test_transport_matches_conference_scaling():
    # scaling a conference row/column by e^(i eta) maps, block-wise, to the
    # rotation transport with parameter 2 eta: each touched reflection gains
    # the full phase eta while r_{eta} acts from one side only
    for p, alpha in [(5, 1), (3, 2)]:
        f = make_field(p, alpha)
        k = (f.q + 1) // 2
        C = build_conference(f, critical_omega(k))
        S = build_seidel(f)
        for index, eta in [(0, 0.37), (2, -1.2), (f.q - 1, 2.9)]:
            left = from_conference(scale_row_col(C, index, cmath.exp(1j * eta)))
            right = transport_scaling(S, index, 2.0 * eta)
            assert np.abs(left.dense - right.dense).max() <= 1e-12


def test_from_conference_matches_build():
    for p, alpha in [(5, 1), (3, 2)]:
        f = make_field(p, alpha)
        C = build_conference(f, critical_omega((f.q + 1) // 2))
        assert np.abs(from_conference(C).dense - build_seidel(f).dense).max() <= 1e-14


def test_from_conference_accepts_scaled_input():
    f = make_field(5)
    C = scale_row_col(build_conference(f, critical_omega(3)), 1, cmath.exp(0.9j))
    S = from_conference(C)
    assert seidel_square_residual(S) <= 1e-11


def test_from_conference_rejects_non_unimodular():
    from isoclinic import ConferenceMatrix

    C = build_conference(make_field(5), critical_omega(3))
    values = C.values.copy()
    values[0, 1] *= 2.0
    bad = ConferenceMatrix(q=5, k=3, omega=C.omega, exponents=None, values=values)
    with pytest.raises(NotUnimodular):
        from_conference(bad)


def test_permute_blocks_functorial():
    rng = np.random.default_rng(23)
    f = make_field(3, 2)
    C = build_conference(f, critical_omega(5))
    sigma = rng.permutation(9).tolist()
    left = from_conference(permute(C, sigma))
    right = permute_blocks(from_conference(C), sigma)
    assert np.abs(left.dense - right.dense).max() == 0.0

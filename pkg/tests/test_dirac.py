# ruff: noqa: D100, D101, D102, D103, D104, D107
from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from relqubit.basic_types import (
    MINKOWSKI_METRIC,
    Bispinor,
    Q2BitAmplitudes,
    SpinMatrix,
    ValidationError,
    WeylSpinor,
)
from relqubit.dirac import (
    current,
    from_q2bit,
    gamma,
    gamma5,
    invariant_scalar,
    parity,
    pseudoscalar,
    to_q2bit,
    transform_bispinor,
)
from relqubit.lorentz import (
    lorentz_matrix_of,
    minkowski_norm,
    random_spin_matrix,
    sl2_boost,
    su2_rotation,
)

Z_AXIS = (0.0, 0.0, 1.0)


def random_bispinor(rng: np.random.Generator) -> Bispinor:
    return Bispinor.from_components(rng.normal(size=4) + 1j * rng.normal(size=4))


def random_transform(rng: np.random.Generator, index: int) -> SpinMatrix:
    axis = rng.normal(size=3)
    axis /= np.linalg.norm(axis)
    if index % 3 == 0:
        return su2_rotation(axis, rng.uniform(0, 2 * math.pi))
    if index % 3 == 1:
        return sl2_boost(axis, rng.uniform(-2, 2))
    return random_spin_matrix(rng)


def test_gamma_block_form() -> None:
    np.testing.assert_array_equal(
        gamma(0),
        [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]],
    )
    np.testing.assert_array_equal(
        gamma(1),
        [[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
    )
    with pytest.raises(ValidationError):
        gamma(4)


def test_clifford_algebra() -> None:
    identity = np.eye(4)
    for mu, nu in itertools.product(range(4), repeat=2):
        anticommutator = gamma(mu) @ gamma(nu) + gamma(nu) @ gamma(mu)
        np.testing.assert_allclose(
            anticommutator,
            2 * MINKOWSKI_METRIC[mu, nu] * identity,
            rtol=0,
            atol=1e-12,
        )


def test_gamma5_separates_chiralities() -> None:
    np.testing.assert_allclose(
        gamma5(),
        np.diag([1, 1, -1, -1]),
        rtol=0,
        atol=1e-12,
    )
    for mu in range(4):
        np.testing.assert_allclose(
            gamma5() @ gamma(mu) + gamma(mu) @ gamma5(),
            np.zeros((4, 4)),
            atol=1e-12,
        )


def test_gamma_returns_copies() -> None:
    matrix = gamma(0)
    matrix[0, 0] = 5
    assert gamma(0)[0, 0] == 0


def test_q2bit_layout() -> None:
    psi = Bispinor.from_components([1, 2, 3, 4])
    amplitudes = to_q2bit(psi)
    assert amplitudes == Q2BitAmplitudes(c00=1, c01=3, c10=2, c11=4)
    assert from_q2bit(amplitudes) == psi


def test_q2bit_is_bijective(rng: np.random.Generator) -> None:
    for _ in range(20):
        psi = random_bispinor(rng)
        assert from_q2bit(to_q2bit(psi)) == psi
        assert sorted(abs(v) for v in to_q2bit(psi).as_array()) == sorted(
            abs(v) for v in psi.as_array()
        )


def test_current_time_component(rng: np.random.Generator) -> None:
    for _ in range(1000):
        psi = random_bispinor(rng)
        j = current(psi)
        assert j.t >= 0
        assert j.t == pytest.approx(psi.norm_squared, abs=1e-12 * psi.norm_squared)


def test_current_of_basis_states() -> None:
    right = Bispinor(phi_r=WeylSpinor(c0=1, c1=0), phi_l=WeylSpinor(c0=0, c1=0))
    np.testing.assert_allclose(current(right).as_array(), [1, 0, 0, 1])
    left = Bispinor(phi_r=WeylSpinor(c0=0, c1=0), phi_l=WeylSpinor(c0=1, c1=0))
    np.testing.assert_allclose(current(left).as_array(), [1, 0, 0, -1])


def test_invariant_scalar() -> None:
    psi = Bispinor(phi_r=WeylSpinor(c0=1, c1=0), phi_l=WeylSpinor(c0=2, c1=0))
    assert invariant_scalar(psi) == 4
    assert pseudoscalar(psi) == 0
    twisted = Bispinor(phi_r=WeylSpinor(c0=1, c1=0), phi_l=WeylSpinor(c0=1j, c1=0))
    assert invariant_scalar(twisted) == 0
    assert pseudoscalar(twisted) == 2


def test_current_norm_is_scalar_and_pseudoscalar(rng: np.random.Generator) -> None:
    for _ in range(1000):
        psi = random_bispinor(rng)
        psi = Bispinor.from_components(psi.as_array() / psi.norm)
        assert minkowski_norm(current(psi)) == pytest.approx(
            invariant_scalar(psi) ** 2 + pseudoscalar(psi) ** 2,
            abs=1e-10,
        )


def test_current_norm_is_scalar_squared_for_real_relative_phase(
    rng: np.random.Generator,
) -> None:
    for _ in range(100):
        phi = rng.normal(size=2) + 1j * rng.normal(size=2)
        weight = rng.normal()
        psi = Bispinor.from_components(np.concatenate([phi, weight * phi]))
        psi = Bispinor.from_components(psi.as_array() / psi.norm)
        assert pseudoscalar(psi) == pytest.approx(0, abs=1e-12)
        assert minkowski_norm(current(psi)) == pytest.approx(
            invariant_scalar(psi) ** 2,
            abs=1e-10,
        )


def test_transform_identity(rng: np.random.Generator) -> None:
    psi = random_bispinor(rng)
    assert transform_bispinor(SpinMatrix.identity(), psi) == psi


def test_unitary_transform_acts_alike_on_both_halves(rng: np.random.Generator) -> None:
    rotation = su2_rotation(Z_AXIS, 0.4)
    psi = random_bispinor(rng)
    moved = transform_bispinor(rotation, psi)
    matrix = rotation.as_array()
    np.testing.assert_allclose(moved.phi_r.as_array(), matrix @ psi.phi_r.as_array())
    np.testing.assert_allclose(
        moved.phi_l.as_array(),
        matrix @ psi.phi_l.as_array(),
        atol=1e-15,
    )


@pytest.mark.timeout(5)
def test_current_is_equivariant(rng: np.random.Generator) -> None:
    for index in range(1000):
        matrix = random_transform(rng, index)
        psi = random_bispinor(rng)
        moved = current(transform_bispinor(matrix, psi))
        expected = lorentz_matrix_of(matrix).apply(current(psi))
        scale = max(1.0, float(np.max(np.abs(moved.as_array()))))
        np.testing.assert_allclose(
            moved.as_array(),
            expected.as_array(),
            rtol=0,
            atol=1e-9 * scale,
        )


@pytest.mark.timeout(5)
def test_invariant_scalar_is_preserved(rng: np.random.Generator) -> None:
    for index in range(1000):
        matrix = random_transform(rng, index)
        psi = random_bispinor(rng)
        before = invariant_scalar(psi)
        after = invariant_scalar(transform_bispinor(matrix, psi))
        assert after == pytest.approx(before, abs=1e-10 * max(1.0, psi.norm_squared))


def test_time_component_is_not_invariant() -> None:
    psi = Bispinor(phi_r=WeylSpinor(c0=1, c1=0), phi_l=WeylSpinor(c0=0, c1=0))
    before = current(psi).t
    after = current(transform_bispinor(sl2_boost(Z_AXIS, 1), psi)).t
    assert after == pytest.approx(math.e * before, abs=1e-10)


def test_parity(rng: np.random.Generator) -> None:
    psi = random_bispinor(rng)
    flipped = parity(psi)
    assert flipped.phi_r == psi.phi_l
    assert flipped.phi_l == psi.phi_r
    assert parity(flipped) == psi
    assert invariant_scalar(flipped) == pytest.approx(invariant_scalar(psi))
    j, j_flipped = current(psi), current(flipped)
    assert j_flipped.t == pytest.approx(j.t)
    np.testing.assert_allclose(j_flipped.spatial, np.negative(j.spatial))


def test_bispinor_layout() -> None:
    psi = Bispinor.from_components([1, 2j, 3, 4j])
    assert psi.phi_r == WeylSpinor(c0=1, c1=2j)
    assert psi.phi_l == WeylSpinor(c0=3, c1=4j)
    np.testing.assert_array_equal(psi.as_array(), [1, 2j, 3, 4j])
    with pytest.raises(ValidationError):
        Bispinor.from_components([1, 2, 3])

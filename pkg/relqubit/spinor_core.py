"""Weyl spinors, their rays, the Riemann sphere and the Pauli four-vector."""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import numpy as np

from relqubit.basic_types import (
    DEFAULT_OPTIONS,
    ExtendedComplex,
    FourVector,
    HermitianMatrix2,
    RelqubitOptions,
    ValidationError,
    WeylSpinor,
    ZeroStateError,
)

if TYPE_CHECKING:
    import numpy.typing as npt

    from relqubit.basic_types import Axis

IDENTITY = np.eye(2, dtype=np.complex128)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)


def _require_ray(psi: WeylSpinor) -> None:
    if psi.is_zero:
        raise ZeroStateError


def normalize(psi: WeylSpinor) -> WeylSpinor:
    """Scale `psi` by a positive real so that its norm is one."""
    _require_ray(psi)
    return psi.scaled(1 / psi.norm)


def ray_coordinate(
    psi: WeylSpinor,
    *,
    options: RelqubitOptions = DEFAULT_OPTIONS,
) -> ExtendedComplex:
    """Return zeta = c0 / c1, infinity when c1 vanishes relative to c0."""
    _require_ray(psi)
    if abs(psi.c1) <= options.infinity_ratio * abs(psi.c0):
        return ExtendedComplex.infinity()
    return ExtendedComplex(value=psi.c0 / psi.c1)


def bloch_extended(psi: WeylSpinor) -> FourVector:
    """Return the null four-vector (T, X, Y, Z) of an unnormalized spinor."""
    _require_ray(psi)
    cross = psi.c0 * psi.c1.conjugate()
    p0 = abs(psi.c0) ** 2
    p1 = abs(psi.c1) ** 2
    return FourVector(
        t=p0 + p1,
        x=2 * cross.real,
        # Y = i (c0 c1* - c1 c0*) = -2 Im(c0 c1*)
        y=-2 * cross.imag,
        z=p0 - p1,
    )


def riemann_point(psi: WeylSpinor) -> Axis:
    """Return the point of the unit sphere a ray projects to."""
    vector = bloch_extended(psi)
    return (vector.x / vector.t, vector.y / vector.t, vector.z / vector.t)


def spinor_from_riemann_point(point: npt.ArrayLike) -> WeylSpinor:
    """Return a normalized spinor whose ray sits at `point` on the sphere."""
    x, y, z = np.asarray(point, dtype=np.float64)
    radius = math.sqrt(x * x + y * y + z * z)
    if radius == 0:
        msg = 'the origin is not a point of the sphere'
        raise ValidationError(msg)
    x, y, z = x / radius, y / radius, z / radius
    theta = math.acos(max(-1.0, min(1.0, z)))
    phi = math.atan2(y, x)
    # c0 c1* = sin(theta) e^{-i phi} / 2 reproduces X and Y above
    return WeylSpinor(
        c0=math.cos(theta / 2),
        c1=math.sin(theta / 2) * complex(math.cos(phi), math.sin(phi)),
    )


def sphere_angle(psi: WeylSpinor, phi: WeylSpinor) -> float:
    """Angle between the Riemann points of two rays."""
    cosine = float(np.dot(riemann_point(psi), riemann_point(phi)))
    return math.acos(max(-1.0, min(1.0, cosine)))


def expectation(psi: WeylSpinor, operator: npt.ArrayLike) -> complex:
    """Return psi* O psi."""
    vector = psi.as_array()
    return complex(vector.conj() @ np.asarray(operator) @ vector)


def v_matrix(psi: WeylSpinor) -> HermitianMatrix2:
    """Return V = 2 psi psi*; the zero spinor gives the zero matrix."""
    vector = psi.as_array()
    return HermitianMatrix2.from_array(2 * np.outer(vector, vector.conj()))


def pauli_decompose(matrix: HermitianMatrix2 | npt.ArrayLike) -> FourVector:
    """Return (T, X, Y, Z) with V = T 1 + X sx + Y sy + Z sz."""
    if not isinstance(matrix, HermitianMatrix2):
        matrix = HermitianMatrix2.from_array(matrix)
    array = matrix.as_array()
    t, x, y, z = (
        0.5 * np.trace(sigma @ array).real for sigma in (IDENTITY, *PAULI)
    )
    return FourVector(t=t, x=x, y=y, z=z)


def pauli_compose(vector: FourVector) -> HermitianMatrix2:
    """Return T 1 + X sx + Y sy + Z sz."""
    return HermitianMatrix2(
        m00=vector.t + vector.z,
        m01=complex(vector.x, -vector.y),
        m10=complex(vector.x, vector.y),
        m11=vector.t - vector.z,
    )


def random_spinor(rng: np.random.Generator, *, scale: float = 1.0) -> WeylSpinor:
    """Return a spinor with independent complex Gaussian amplitudes."""
    values = rng.normal(size=2) + 1j * rng.normal(size=2)
    return WeylSpinor.from_array(scale * values)


def pauli_vector(psi: WeylSpinor) -> tuple[float, float, float]:
    """Return (psi* sx psi, psi* sy psi, psi* sz psi)."""
    x, y, z = (expectation(psi, sigma).real for sigma in PAULI)
    return (x, y, z)

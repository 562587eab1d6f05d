"""SU(2) and SL(2,C) acting on spinors and four-vectors."""

from __future__ import annotations

import logging
import math
from typing import TYPE_CHECKING, Literal

import numpy as np

from relqubit.basic_types import (
    DEFAULT_OPTIONS,
    MINKOWSKI_METRIC,
    FourVector,
    LorentzMatrix,
    RelqubitOptions,
    SpinMatrix,
    ValidationError,
    WeylSpinor,
)
from relqubit.spinor_core import (
    IDENTITY,
    PAULI,
    pauli_compose,
    pauli_decompose,
    spinor_from_riemann_point,
)

if TYPE_CHECKING:
    import numpy.typing as npt

    from relqubit.basic_types import Axis, ComplexArray, RealArray

logger = logging.getLogger(__name__)

Sampling = Literal['random', 'grid']

BASIS = tuple(FourVector.from_array(row) for row in np.eye(4))


def _unit_axis(
    axis: npt.ArrayLike,
    options: RelqubitOptions,
) -> RealArray:
    vector = np.asarray(axis, dtype=np.float64).reshape(-1)
    if vector.shape != (3,):
        msg = f'axis must have 3 components, got {vector.shape[0]}'
        raise ValidationError(msg)
    if not abs(float(np.linalg.norm(vector)) - 1) <= options.axis_tolerance:
        msg = f'axis must be a unit vector, got {vector.tolist()}'
        raise ValidationError(msg)
    return vector


def _finite(name: str, value: float) -> float:
    if not math.isfinite(value):
        msg = f'{name} must be finite, got {value}'
        raise ValidationError(msg)
    return value


def _half_hyperbolic(rapidity: float) -> tuple[float, float]:
    half = _finite('rapidity', rapidity) / 2
    try:
        return math.cosh(half), math.sinh(half)
    except OverflowError:
        msg = f'rapidity {rapidity} is too large to represent'
        raise ValidationError(msg) from None


def _n_sigma(axis: RealArray) -> ComplexArray:
    return sum(
        (component * sigma for component, sigma in zip(axis, PAULI, strict=True)),
        np.zeros((2, 2), dtype=np.complex128),
    )


def su2_rotation(
    axis: npt.ArrayLike,
    angle: float,
    *,
    options: RelqubitOptions = DEFAULT_OPTIONS,
) -> SpinMatrix:
    """Return cos(angle/2) 1 - i sin(angle/2) (n . sigma)."""
    n_sigma = _n_sigma(_unit_axis(axis, options))
    angle = _finite('angle', angle)
    matrix = math.cos(angle / 2) * IDENTITY - 1j * math.sin(angle / 2) * n_sigma
    return SpinMatrix.from_array(matrix)


def sl2_boost(
    axis: npt.ArrayLike,
    rapidity: float,
    *,
    options: RelqubitOptions = DEFAULT_OPTIONS,
) -> SpinMatrix:
    """Return cosh(rapidity/2) 1 + sinh(rapidity/2) (n . sigma)."""
    n_sigma = _n_sigma(_unit_axis(axis, options))
    cosh, sinh = _half_hyperbolic(rapidity)
    return SpinMatrix.from_array(cosh * IDENTITY + sinh * n_sigma)


def boost_velocity(rapidity: float) -> float:
    """Speed, in units of c, of a boost with the given rapidity."""
    return math.tanh(rapidity)


def sl2_boost_from_velocity(
    axis: npt.ArrayLike,
    velocity: float,
    *,
    options: RelqubitOptions = DEFAULT_OPTIONS,
) -> SpinMatrix:
    if not -1 < velocity < 1:
        msg = f'velocity must lie strictly between -1 and 1, got {velocity}'
        raise ValidationError(msg)
    return sl2_boost(axis, math.atanh(velocity), options=options)


def act_spinor(matrix: SpinMatrix, psi: WeylSpinor) -> WeylSpinor:
    """Return A psi."""
    return WeylSpinor.from_array(matrix.as_array() @ psi.as_array())


def act_four_vector(matrix: SpinMatrix, vector: FourVector) -> FourVector:
    """Return the four-vector of A V A*, V being the Pauli matrix of `vector`."""
    array = matrix.as_array()
    conjugated = array @ pauli_compose(vector).as_array() @ array.conj().T
    # rounding may leave A V A* a hair away from Hermitian
    return pauli_decompose((conjugated + conjugated.conj().T) / 2)


def lorentz_matrix_of(matrix: SpinMatrix) -> LorentzMatrix:
    """Return the 4x4 Lorentz matrix whose columns are A e_mu A*."""
    columns = [act_four_vector(matrix, basis).as_array() for basis in BASIS]
    return LorentzMatrix.from_array(np.column_stack(columns))


def rotation_matrix_of(
    matrix: SpinMatrix,
) -> RealArray:
    """Return the SO(3) block of a unitary spin matrix."""
    if not matrix.unitary:
        msg = 'only unitary spin matrices correspond to spatial rotations'
        raise ValidationError(msg)
    return lorentz_matrix_of(matrix).as_array()[1:, 1:]


def minkowski_dot(u: FourVector, v: FourVector) -> float:
    return float(u.as_array() @ MINKOWSKI_METRIC @ v.as_array())


def minkowski_norm(vector: FourVector) -> float:
    """Return T^2 - X^2 - Y^2 - Z^2."""
    return vector.t**2 - vector.x**2 - vector.y**2 - vector.z**2


def is_null(
    vector: FourVector,
    *,
    options: RelqubitOptions = DEFAULT_OPTIONS,
) -> bool:
    scale = max(1.0, vector.t**2)
    return abs(minkowski_norm(vector)) <= options.null_tolerance * scale


def null_decompose(vector: FourVector) -> tuple[FourVector, FourVector]:
    """Split `vector` into two null vectors adding up to it.

    The second part is `vector - first`, so the parts add back to `vector` up
    to one rounding per component.
    """
    t, x, y, z = vector.as_array()
    radius = math.sqrt(x * x + y * y + z * z)
    if radius == 0:
        half = t / 2
        first = FourVector(t=half, x=0, y=0, z=half)
    else:
        weight = (t + radius) / 2
        scale = weight / radius
        first = FourVector(t=weight, x=scale * x, y=scale * y, z=scale * z)
    return first, vector - first


def random_spin_matrix(rng: np.random.Generator) -> SpinMatrix:
    """Return a random element of SL(2,C)."""
    while True:
        matrix = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        if abs(np.linalg.det(matrix)) > 1e-3:  # noqa: PLR2004
            return SpinMatrix.from_array(matrix, normalize=True)


def sample_state_sphere(
    samples: int,
    *,
    seed: int = 0,
    sampling: Sampling = 'random',
) -> list[WeylSpinor]:
    """Return normalized spinors spread over the state sphere.

    `random` draws uniformly with a generator seeded by `seed`, `grid` lays
    the points on a Fibonacci spiral from pole to pole, both poles included.
    """
    if samples < 1:
        msg = f'samples must be at least 1, got {samples}'
        raise ValidationError(msg)
    if sampling == 'random':
        rng = np.random.default_rng(seed)
        points = rng.normal(size=(samples, 3))
    elif sampling == 'grid':
        index = np.arange(samples, dtype=np.float64)
        z = 1 - 2 * index / (samples - 1) if samples > 1 else np.ones(1)
        ring = np.sqrt(np.clip(1 - z * z, 0, None))
        golden_angle = math.pi * (3 - math.sqrt(5))
        points = np.column_stack(
            [
                ring * np.cos(golden_angle * index),
                ring * np.sin(golden_angle * index),
                z,
            ],
        )
    else:
        msg = f'unknown sampling {sampling!r}'
        raise ValidationError(msg)
    return [spinor_from_riemann_point(point) for point in points]


def unitarity_defect(
    matrix: SpinMatrix,
    samples: int,
    *,
    seed: int = 0,
    sampling: Sampling = 'random',
) -> float:
    """Return the largest | |A psi| - 1 | over sampled normalized spinors."""
    states = np.array([psi.as_array() for psi in sample_state_sphere(
        samples,
        seed=seed,
        sampling=sampling,
    )])
    norms = np.linalg.norm(states @ matrix.as_array().T, axis=1)
    defect = float(np.max(np.abs(norms - 1)))
    logger.debug(
        'unitarity defect %.17g over %d %s samples',
        defect,
        samples,
        sampling,
    )
    return defect


def boost_defect_supremum(rapidity: float) -> float:
    """Supremum of the unitarity defect of a pure boost, e^{|rapidity|/2} - 1."""
    half = abs(_finite('rapidity', rapidity)) / 2
    try:
        return math.expm1(half)
    except OverflowError:
        msg = f'rapidity {rapidity} is too large to represent'
        raise ValidationError(msg) from None


def axis_of(name_or_vector: str | Axis) -> Axis:
    """Resolve `x`, `y`, `z` or an explicit triple into an axis."""
    if isinstance(name_or_vector, str):
        named = {'x': (1.0, 0.0, 0.0), 'y': (0.0, 1.0, 0.0), 'z': (0.0, 0.0, 1.0)}
        try:
            return named[name_or_vector.lower()]
        except KeyError:
            msg = f'unknown axis name {name_or_vector!r}'
            raise ValidationError(msg) from None
    x, y, z = (float(value) for value in name_or_vector)
    return (x, y, z)

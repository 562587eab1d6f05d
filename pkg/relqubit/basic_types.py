# ruff: noqa: A003, D100, D101, D102, D103, D104, D105, D107
from __future__ import annotations

import cmath
import math
from collections.abc import Callable, Sequence
from dataclasses import field
from types import NoneType
from typing import Any, Generic, Protocol, TypeAlias, TypeGuard, TypeVar

import numpy as np
import numpy.typing as npt
from immutable import Immutable

ComplexArray: TypeAlias = npt.NDArray[np.complex128]
RealArray: TypeAlias = npt.NDArray[np.float64]
OperatorMatrix: TypeAlias = npt.NDArray[Any]
GammaMatrix: TypeAlias = ComplexArray
Axis: TypeAlias = tuple[float, float, float]

MINKOWSKI_METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
ENTRY_ROUNDING = 64 * float(np.finfo(np.float64).eps)


# Configuration


class RelqubitOptions(Immutable):
    unit_tolerance: float = 1e-12
    hermitian_tolerance: float = 1e-12
    infinity_ratio: float = 1e-14
    null_tolerance: float = 1e-10
    axis_tolerance: float = 1e-10
    det_tolerance: float = 1e-10
    lorentz_tolerance: float = 1e-9
    pipeline_det_tolerance: float = 1e-8
    max_fermi_modes: int = 10
    max_bose_dim: int = 4096


DEFAULT_OPTIONS = RelqubitOptions()


# Errors


class RelqubitError(Exception):
    exit_code: int = 1


class ValidationError(RelqubitError, ValueError):
    exit_code = 2


class DocumentError(ValidationError):
    exit_code = 2


class DomainError(RelqubitError, ValueError):
    exit_code = 3


class ZeroStateError(DomainError):
    def __init__(self: ZeroStateError) -> None:
        super().__init__('zero state has no ray')


class PipelineStepError(ValidationError):
    exit_code = 4


class ReportOutputError(RelqubitError):
    exit_code = 5


# Spinors and four-vectors


def _set(obj: object, name: str, value: object) -> None:
    object.__setattr__(obj, name, value)


class WeylSpinor(Immutable):
    c0: complex
    c1: complex

    def __post_init__(self: WeylSpinor) -> None:
        _set(self, 'c0', complex(self.c0))
        _set(self, 'c1', complex(self.c1))
        if not (cmath.isfinite(self.c0) and cmath.isfinite(self.c1)):
            msg = f'spinor amplitudes must be finite, got ({self.c0}, {self.c1})'
            raise ValidationError(msg)

    @classmethod
    def from_array(cls: type[WeylSpinor], array: npt.ArrayLike) -> WeylSpinor:
        values = np.asarray(array, dtype=np.complex128).reshape(-1)
        if values.shape != (2,):
            msg = f'a Weyl spinor has 2 amplitudes, got {values.shape[0]}'
            raise ValidationError(msg)
        return cls(c0=complex(values[0]), c1=complex(values[1]))

    def as_array(self: WeylSpinor) -> ComplexArray:
        return np.array([self.c0, self.c1], dtype=np.complex128)

    @property
    def norm_squared(self: WeylSpinor) -> float:
        return abs(self.c0) ** 2 + abs(self.c1) ** 2

    @property
    def norm(self: WeylSpinor) -> float:
        return math.hypot(abs(self.c0), abs(self.c1))

    @property
    def is_zero(self: WeylSpinor) -> bool:
        return self.c0 == 0 and self.c1 == 0

    def scaled(self: WeylSpinor, factor: complex) -> WeylSpinor:
        return WeylSpinor(c0=factor * self.c0, c1=factor * self.c1)


class ExtendedComplex(Immutable):
    """A point of the extended complex plane; `value is None` is infinity."""

    value: complex | None = None

    @classmethod
    def infinity(cls: type[ExtendedComplex]) -> ExtendedComplex:
        return cls(value=None)

    @property
    def is_infinity(self: ExtendedComplex) -> bool:
        return self.value is None


class FourVector(Immutable):
    t: float
    x: float
    y: float
    z: float

    def __post_init__(self: FourVector) -> None:
        for name in ('t', 'x', 'y', 'z'):
            _set(self, name, float(getattr(self, name)))

    @classmethod
    def from_array(cls: type[FourVector], array: npt.ArrayLike) -> FourVector:
        values = np.asarray(array, dtype=np.float64).reshape(-1)
        if values.shape != (4,):
            msg = f'a four-vector has 4 components, got {values.shape[0]}'
            raise ValidationError(msg)
        return cls(t=values[0], x=values[1], y=values[2], z=values[3])

    def as_array(self: FourVector) -> RealArray:
        return np.array([self.t, self.x, self.y, self.z], dtype=np.float64)

    @property
    def spatial(self: FourVector) -> Axis:
        return (self.x, self.y, self.z)

    def __add__(self: FourVector, other: FourVector) -> FourVector:
        return FourVector(
            t=self.t + other.t,
            x=self.x + other.x,
            y=self.y + other.y,
            z=self.z + other.z,
        )

    def __sub__(self: FourVector, other: FourVector) -> FourVector:
        return FourVector(
            t=self.t - other.t,
            x=self.x - other.x,
            y=self.y - other.y,
            z=self.z - other.z,
        )

    def __neg__(self: FourVector) -> FourVector:
        return FourVector(t=-self.t, x=-self.x, y=-self.y, z=-self.z)


def _entry_tolerance(matrix: npt.NDArray[Any], tolerance: float) -> float:
    return tolerance * max(1.0, float(np.max(np.abs(matrix), initial=0.0)))


class HermitianMatrix2(Immutable):
    m00: complex
    m01: complex
    m10: complex
    m11: complex

    def __post_init__(self: HermitianMatrix2) -> None:
        for name in ('m00', 'm01', 'm10', 'm11'):
            _set(self, name, complex(getattr(self, name)))
        matrix = self.as_array()
        tolerance = _entry_tolerance(matrix, DEFAULT_OPTIONS.hermitian_tolerance)
        if not np.allclose(matrix, matrix.conj().T, rtol=0, atol=tolerance):
            msg = f'matrix is not Hermitian: {matrix.tolist()}'
            raise ValidationError(msg)

    @classmethod
    def from_array(
        cls: type[HermitianMatrix2],
        array: npt.ArrayLike,
    ) -> HermitianMatrix2:
        matrix = np.asarray(array, dtype=np.complex128)
        if matrix.shape != (2, 2):
            msg = f'expected a 2x2 matrix, got shape {matrix.shape}'
            raise ValidationError(msg)
        return cls(
            m00=matrix[0, 0],
            m01=matrix[0, 1],
            m10=matrix[1, 0],
            m11=matrix[1, 1],
        )

    def as_array(self: HermitianMatrix2) -> ComplexArray:
        return np.array(
            [[self.m00, self.m01], [self.m10, self.m11]],
            dtype=np.complex128,
        )

    @property
    def trace(self: HermitianMatrix2) -> float:
        return (self.m00 + self.m11).real

    @property
    def det(self: HermitianMatrix2) -> float:
        return (self.m00 * self.m11 - self.m01 * self.m10).real


# Group elements


class SpinMatrix(Immutable):
    """Element of SL(2,C), `[[a, b], [c, d]]` with `ad - bc = 1`."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self: SpinMatrix) -> None:
        for name in ('a', 'b', 'c', 'd'):
            _set(self, name, complex(getattr(self, name)))
        values = (self.a, self.b, self.c, self.d)
        if not all(cmath.isfinite(value) for value in values):
            msg = f'spin matrix entries must be finite, got {self.as_array().tolist()}'
            raise ValidationError(msg)
        try:
            entries = tuple(abs(value) for value in values)
        except OverflowError:
            msg = 'spin matrix entries are too large to check the determinant'
            raise ValidationError(msg) from None
        largest = max(entries)
        products = entries[0] * entries[3] + entries[1] * entries[2]
        # entries rounded to machine precision move ad - bc by about eps |entry|^2
        tolerance = (
            DEFAULT_OPTIONS.det_tolerance * max(1.0, products)
            + ENTRY_ROUNDING * largest * largest
        )
        if not math.isfinite(tolerance):
            msg = 'spin matrix entries are too large to check the determinant'
            raise ValidationError(msg)
        if not abs(self.det - 1) <= tolerance:
            msg = f'spin matrix must have unit determinant, got {self.det}'
            raise ValidationError(msg)

    @classmethod
    def from_array(
        cls: type[SpinMatrix],
        array: npt.ArrayLike,
        *,
        normalize: bool = False,
    ) -> SpinMatrix:
        matrix = np.asarray(array, dtype=np.complex128)
        if matrix.shape != (2, 2):
            msg = f'expected a 2x2 matrix, got shape {matrix.shape}'
            raise ValidationError(msg)
        if normalize:
            det = complex(np.linalg.det(matrix))
            if det == 0:
                msg = 'singular matrix cannot be normalized into SL(2,C)'
                raise ValidationError(msg)
            matrix = matrix / cmath.sqrt(det)
        return cls(a=matrix[0, 0], b=matrix[0, 1], c=matrix[1, 0], d=matrix[1, 1])

    @classmethod
    def identity(cls: type[SpinMatrix]) -> SpinMatrix:
        return cls(a=1, b=0, c=0, d=1)

    def as_array(self: SpinMatrix) -> ComplexArray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=np.complex128)

    @property
    def det(self: SpinMatrix) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def unitary(self: SpinMatrix) -> bool:
        matrix = self.as_array()
        return bool(
            np.allclose(
                matrix.conj().T @ matrix,
                np.eye(2),
                rtol=0,
                atol=DEFAULT_OPTIONS.det_tolerance,
            ),
        )

    def inverse(self: SpinMatrix) -> SpinMatrix:
        return SpinMatrix(a=self.d, b=-self.b, c=-self.c, d=self.a)

    def adjoint(self: SpinMatrix) -> SpinMatrix:
        return SpinMatrix(
            a=self.a.conjugate(),
            b=self.c.conjugate(),
            c=self.b.conjugate(),
            d=self.d.conjugate(),
        )

    def __matmul__(self: SpinMatrix, other: SpinMatrix) -> SpinMatrix:
        return SpinMatrix.from_array(self.as_array() @ other.as_array())

    def __neg__(self: SpinMatrix) -> SpinMatrix:
        return SpinMatrix(a=-self.a, b=-self.b, c=-self.c, d=-self.d)


class LorentzMatrix(Immutable):
    entries: tuple[tuple[float, float, float, float], ...]

    def __post_init__(self: LorentzMatrix) -> None:
        matrix = np.asarray(self.entries, dtype=np.float64)
        if matrix.shape != (4, 4):
            msg = f'expected a 4x4 matrix, got shape {matrix.shape}'
            raise ValidationError(msg)
        _set(self, 'entries', tuple(tuple(float(v) for v in row) for row in matrix))
        defect = matrix.T @ MINKOWSKI_METRIC @ matrix - MINKOWSKI_METRIC
        largest = float(np.max(np.abs(matrix)))
        tolerance = DEFAULT_OPTIONS.lorentz_tolerance * max(1.0, largest * largest)
        if not np.max(np.abs(defect)) <= tolerance:
            msg = 'matrix does not preserve the Minkowski quadratic form'
            raise ValidationError(msg)

    @classmethod
    def from_array(cls: type[LorentzMatrix], array: npt.ArrayLike) -> LorentzMatrix:
        return cls(entries=tuple(map(tuple, np.asarray(array, dtype=np.float64))))

    def as_array(self: LorentzMatrix) -> RealArray:
        return np.array(self.entries, dtype=np.float64)

    def apply(self: LorentzMatrix, vector: FourVector) -> FourVector:
        return FourVector.from_array(self.as_array() @ vector.as_array())

    def __matmul__(self: LorentzMatrix, other: LorentzMatrix) -> LorentzMatrix:
        return LorentzMatrix.from_array(self.as_array() @ other.as_array())


# Bispinors


class Bispinor(Immutable):
    phi_r: WeylSpinor
    phi_l: WeylSpinor

    @classmethod
    def from_components(cls: type[Bispinor], array: npt.ArrayLike) -> Bispinor:
        values = np.asarray(array, dtype=np.complex128).reshape(-1)
        if values.shape != (4,):
            msg = f'a bispinor has 4 components, got {values.shape[0]}'
            raise ValidationError(msg)
        return cls(
            phi_r=WeylSpinor.from_array(values[:2]),
            phi_l=WeylSpinor.from_array(values[2:]),
        )

    def as_array(self: Bispinor) -> ComplexArray:
        return np.concatenate([self.phi_r.as_array(), self.phi_l.as_array()])

    @property
    def norm_squared(self: Bispinor) -> float:
        return self.phi_r.norm_squared + self.phi_l.norm_squared

    @property
    def norm(self: Bispinor) -> float:
        return math.sqrt(self.norm_squared)


class Q2BitAmplitudes(Immutable):
    c00: complex
    c01: complex
    c10: complex
    c11: complex

    def as_array(self: Q2BitAmplitudes) -> ComplexArray:
        return np.array([self.c00, self.c01, self.c10, self.c11], dtype=np.complex128)


# Ladder algebras


class ModeSet(Immutable):
    n: int
    annihilators: tuple[OperatorMatrix, ...]
    creators: tuple[OperatorMatrix, ...]

    @property
    def dimension(self: ModeSet) -> int:
        return 2**self.n


class RelationCheck(Immutable):
    relation: str
    passed: bool
    max_residual: float
    expected_failure: bool = False


class TracelessCommutatorReport(Immutable):
    dimension: int
    trace: complex
    trace_tolerance: float
    trace_vanishes: bool
    distance_from_identity: float
    implication_holds: bool


# Reports


class BlochReport(Immutable):
    state: WeylSpinor
    ray_coordinate: ExtendedComplex
    riemann_point: Axis
    vector: FourVector
    null_residual: float


class NoGoReport(Immutable):
    rapidity: float
    samples: int
    seed: int
    sampling: str
    unitarity_defect: float
    unitarity_defect_supremum: float
    dimension: int
    commutator_defect: int
    commutator_trace: int


class SingleModeMatrices(Immutable):
    annihilator: OperatorMatrix
    creator: OperatorMatrix
    number: OperatorMatrix


class FockReport(Immutable):
    statistics: str
    modes: int
    dimension: int
    relations: tuple[RelationCheck, ...]
    single_mode: SingleModeMatrices | None = None
    commutator_trace: int | None = None

    @property
    def passed(self: FockReport) -> bool:
        """Every relation holds, except the ones known to fail."""
        return all(check.passed or check.expected_failure for check in self.relations)


# Store plumbing


class BaseAction(Immutable): ...


class BaseEvent(Immutable): ...


State = TypeVar('State', bound=Immutable | None)
Action = TypeVar('Action', bound=BaseAction | None)
Event = TypeVar('Event', bound=BaseEvent | None)
Event2 = TypeVar('Event2', bound=BaseEvent)
EventHandler = Callable[[Event], Any]


class CompleteReducerResult(Immutable, Generic[State, Action, Event]):
    state: State
    actions: Sequence[Action] | None = None
    events: Sequence[Event] | None = None


ReducerResult = CompleteReducerResult[State, Action, Event] | State
ReducerType = Callable[[State | None, Action], ReducerResult[State, Action, Event]]


class InitializationActionError(RelqubitError):
    def __init__(self: InitializationActionError, action: BaseAction) -> None:
        super().__init__(
            f"""No state is loaded yet, only an init action is accepted, \
action "{action}" is not allowed.""",
        )


class InitAction(BaseAction): ...


class FinishAction(BaseAction): ...


class FinishEvent(BaseEvent): ...


def is_complete_reducer_result(
    result: ReducerResult[State, Action, Event],
) -> TypeGuard[CompleteReducerResult[State, Action, Event]]:
    return isinstance(result, CompleteReducerResult)


class ActionMiddleware(Protocol, Generic[Action]):
    def __call__(self: ActionMiddleware, action: Action) -> Action | None: ...


class EventMiddleware(Protocol, Generic[Event]):
    def __call__(self: EventMiddleware, event: Event) -> Event | None: ...


class CreateStoreOptions(Immutable, Generic[Action]):
    action_middlewares: Sequence[ActionMiddleware[Action]] = field(default_factory=list)


SnapshotAtom = (
    int
    | float
    | str
    | bool
    | NoneType
    | dict[str, 'SnapshotAtom']
    | list['SnapshotAtom']
)

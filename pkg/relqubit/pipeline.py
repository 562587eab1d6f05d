"""State and pipeline documents, and the reducer folding steps into a state."""

from __future__ import annotations

import json
import logging
import math
from dataclasses import replace
from pathlib import Path
from typing import TYPE_CHECKING, Literal, TypeAlias

import numpy as np
from immutable import Immutable

from relqubit.basic_types import (
    DEFAULT_OPTIONS,
    BaseAction,
    BaseEvent,
    Bispinor,
    CompleteReducerResult,
    CreateStoreOptions,
    DocumentError,
    FinishAction,
    FourVector,
    InitAction,
    InitializationActionError,
    PipelineStepError,
    ReducerResult,
    RelqubitOptions,
    SpinMatrix,
    ValidationError,
    WeylSpinor,
)
from relqubit.dirac import current, invariant_scalar, parity, transform_bispinor
from relqubit.lorentz import act_spinor, minkowski_norm, sl2_boost, su2_rotation
from relqubit.main import Store, log_action_middleware
from relqubit.spinor_core import bloch_extended

if TYPE_CHECKING:
    from collections.abc import Sequence

    from relqubit.basic_types import Axis, RealArray

logger = logging.getLogger(__name__)

QuantumState: TypeAlias = WeylSpinor | Bispinor

AMPLITUDE_COUNT: dict[str, int] = {'weyl': 2, 'bispinor': 4}


# Documents


def _as_float(value: float) -> float:
    # JSON integers are unbounded
    try:
        return float(value)
    except OverflowError:
        return math.inf


def parse_complex(value: object) -> complex:
    """Read `[re, im]` or a bare real number."""
    if isinstance(value, bool):
        msg = f'expected a number or an [re, im] pair, got {value!r}'
        raise DocumentError(msg)
    if isinstance(value, int | float):
        number = complex(_as_float(value))
    elif (
        isinstance(value, list | tuple)
        and len(value) == 2  # noqa: PLR2004
        and all(isinstance(v, int | float) and not isinstance(v, bool) for v in value)
    ):
        number = complex(_as_float(value[0]), _as_float(value[1]))
    else:
        msg = f'expected a number or an [re, im] pair, got {value!r}'
        raise DocumentError(msg)
    if not (math.isfinite(number.real) and math.isfinite(number.imag)):
        msg = f'amplitudes must be finite, got {value!r}'
        raise DocumentError(msg)
    return number


def parse_state_document(document: object) -> QuantumState:
    """Turn `{"kind": ..., "amplitudes": [[re, im], ...]}` into a state."""
    if not isinstance(document, dict):
        msg = 'state document must be an object'
        raise DocumentError(msg)
    kind = document.get('kind')
    if kind not in AMPLITUDE_COUNT:
        msg = f'state kind must be "weyl" or "bispinor", got {kind!r}'
        raise DocumentError(msg)
    amplitudes = document.get('amplitudes')
    if not isinstance(amplitudes, list) or len(amplitudes) != AMPLITUDE_COUNT[kind]:
        msg = f'a {kind} state needs {AMPLITUDE_COUNT[kind]} amplitudes'
        raise DocumentError(msg)
    values = [parse_complex(value) for value in amplitudes]
    if kind == 'weyl':
        return WeylSpinor(c0=values[0], c1=values[1])
    return Bispinor.from_components(values)


def _parse_axis(value: object) -> Axis:
    if (
        not isinstance(value, list | tuple)
        or len(value) != 3  # noqa: PLR2004
        or not all(isinstance(v, int | float) for v in value)
    ):
        msg = f'axis must be a list of 3 numbers, got {value!r}'
        raise DocumentError(msg)
    x, y, z = (_as_float(v) for v in value)
    if not all(map(math.isfinite, (x, y, z))):
        msg = f'axis components must be finite, got {value!r}'
        raise DocumentError(msg)
    return (x, y, z)


def _parse_number(body: dict, key: str) -> float:
    value = body.get(key)
    if isinstance(value, bool) or not isinstance(value, int | float):
        msg = f'"{key}" must be a number, got {value!r}'
        raise DocumentError(msg)
    number = _as_float(value)
    if not math.isfinite(number):
        msg = f'"{key}" must be finite, got {value!r}'
        raise DocumentError(msg)
    return number


# Actions and state


class TransformStepAction(BaseAction):
    def spin_matrix(self: TransformStepAction) -> SpinMatrix | None:
        """Return the SL(2,C) element of the step, None for discrete steps."""
        return None

    @property
    def label(self: TransformStepAction) -> str:
        return type(self).__name__


class RotateAction(TransformStepAction):
    axis: Axis
    angle: float

    def spin_matrix(self: RotateAction) -> SpinMatrix:
        return su2_rotation(self.axis, self.angle)

    @property
    def label(self: RotateAction) -> str:
        return f'rotate(axis={list(self.axis)}, angle={self.angle!r})'


class BoostAction(TransformStepAction):
    axis: Axis
    rapidity: float

    def spin_matrix(self: BoostAction) -> SpinMatrix:
        return sl2_boost(self.axis, self.rapidity)

    @property
    def label(self: BoostAction) -> str:
        return f'boost(axis={list(self.axis)}, rapidity={self.rapidity!r})'


class ParityAction(TransformStepAction):
    @property
    def label(self: ParityAction) -> str:
        return 'parity'


class MatrixAction(TransformStepAction):
    matrix: SpinMatrix

    def spin_matrix(self: MatrixAction) -> SpinMatrix:
        return self.matrix

    @property
    def label(self: MatrixAction) -> str:
        return 'matrix'


class LoadStateAction(InitAction):
    state: QuantumState


def _parse_matrix(body: object, options: RelqubitOptions) -> SpinMatrix:
    entries = body.get('entries') if isinstance(body, dict) else body
    if (
        not isinstance(entries, list)
        or len(entries) != 2  # noqa: PLR2004
        or not all(
            isinstance(row, list) and len(row) == 2  # noqa: PLR2004
            for row in entries
        )
    ):
        msg = 'matrix step needs 2x2 entries'
        raise DocumentError(msg)
    matrix = np.array(
        [[parse_complex(value) for value in row] for row in entries],
        dtype=np.complex128,
    )
    det = complex(np.linalg.det(matrix))
    if not abs(det - 1) <= options.pipeline_det_tolerance:
        msg = f'matrix step must have determinant 1, got {det}'
        raise PipelineStepError(msg)
    return SpinMatrix.from_array(matrix, normalize=True)


def parse_step(
    step: object,
    *,
    options: RelqubitOptions = DEFAULT_OPTIONS,
) -> TransformStepAction:
    """Turn one pipeline entry such as `{"rotate": {...}}` into an action."""
    if not isinstance(step, dict) or len(step) != 1:
        msg = f'each pipeline step must be an object with one key, got {step!r}'
        raise DocumentError(msg)
    ((name, body),) = step.items()
    if name == 'matrix':
        return MatrixAction(matrix=_parse_matrix(body, options))
    if not isinstance(body, dict):
        msg = f'body of "{name}" step must be an object'
        raise DocumentError(msg)
    if name == 'rotate':
        action = RotateAction(
            axis=_parse_axis(body.get('axis')),
            angle=_parse_number(body, 'angle'),
        )
    elif name == 'boost':
        action = BoostAction(
            axis=_parse_axis(body.get('axis')),
            rapidity=_parse_number(body, 'rapidity'),
        )
    elif name == 'parity':
        return ParityAction()
    else:
        msg = f'unknown pipeline step "{name}"'
        raise DocumentError(msg)
    try:
        action.spin_matrix()
    except ValidationError as exception:
        raise PipelineStepError(str(exception)) from exception
    return action


def parse_pipeline_document(
    document: object,
    *,
    options: RelqubitOptions = DEFAULT_OPTIONS,
) -> list[TransformStepAction]:
    if not isinstance(document, list):
        msg = 'pipeline document must be a list of steps'
        raise DocumentError(msg)
    return [parse_step(step, options=options) for step in document]


def read_json(path: str | Path) -> object:
    """Read a JSON document, reporting unreadable or malformed files."""
    try:
        return json.loads(Path(path).read_text(encoding='utf-8'))
    except OSError as exception:
        msg = f'cannot read {path}: {exception.strerror}'
        raise DocumentError(msg) from exception
    except json.JSONDecodeError as exception:
        msg = f'malformed JSON in {path}: {exception}'
        raise DocumentError(msg) from exception


# Reducer


class InvariantRow(Immutable):
    step: int
    label: str
    norm_before: float
    norm_after: float
    minkowski_before: float
    minkowski_after: float
    invariant_scalar_before: float | None = None
    invariant_scalar_after: float | None = None


class TransformState(Immutable):
    initial: QuantumState
    current: QuantumState
    rows: tuple[InvariantRow, ...] = ()


class StepAppliedEvent(BaseEvent):
    row: InvariantRow


TransformAction: TypeAlias = LoadStateAction | TransformStepAction | FinishAction


def associated_vector(state: QuantumState) -> FourVector:
    """Extended Bloch vector of a Weyl state, current of a bispinor."""
    if isinstance(state, Bispinor):
        return current(state)
    return bloch_extended(state)


def apply_step(action: TransformStepAction, state: QuantumState) -> QuantumState:
    if isinstance(action, ParityAction):
        if not isinstance(state, Bispinor):
            msg = 'parity needs a bispinor state, got a weyl state'
            raise PipelineStepError(msg)
        return parity(state)
    matrix = action.spin_matrix()
    if matrix is None:
        msg = f'step "{action.label}" has no group element'
        raise PipelineStepError(msg)
    if isinstance(state, Bispinor):
        return transform_bispinor(matrix, state)
    return act_spinor(matrix, state)


def _invariant_row(
    index: int,
    label: str,
    before: QuantumState,
    after: QuantumState,
) -> InvariantRow:
    scalars = (
        (invariant_scalar(before), invariant_scalar(after))
        if isinstance(before, Bispinor) and isinstance(after, Bispinor)
        else (None, None)
    )
    return InvariantRow(
        step=index,
        label=label,
        norm_before=before.norm,
        norm_after=after.norm,
        minkowski_before=minkowski_norm(associated_vector(before)),
        minkowski_after=minkowski_norm(associated_vector(after)),
        invariant_scalar_before=scalars[0],
        invariant_scalar_after=scalars[1],
    )


def transform_reducer(
    state: TransformState | None,
    action: TransformAction,
) -> ReducerResult[TransformState, TransformAction, StepAppliedEvent]:
    """Fold pipeline steps into the loaded state, one invariant row per step."""
    if isinstance(action, LoadStateAction):
        return TransformState(initial=action.state, current=action.state)
    if state is None:
        raise InitializationActionError(action)
    if isinstance(action, TransformStepAction):
        after = apply_step(action, state.current)
        row = _invariant_row(len(state.rows) + 1, action.label, state.current, after)
        return CompleteReducerResult(
            state=replace(state, current=after, rows=(*state.rows, row)),
            events=[StepAppliedEvent(row=row)],
        )
    return state


def run_pipeline(
    state: QuantumState,
    steps: Sequence[TransformStepAction],
    *,
    log_steps: bool = False,
) -> TransformState:
    """Run steps over a state through a `Store` and return the final state."""
    store: Store[TransformState, TransformAction, StepAppliedEvent] = Store(
        transform_reducer,
        CreateStoreOptions(
            action_middlewares=[log_action_middleware] if log_steps else [],
        ),
    )
    if log_steps:
        store.subscribe_event(
            StepAppliedEvent,
            lambda event: logger.debug('step %d: %s', event.row.step, event.row),
        )
    store.dispatch(LoadStateAction(state=state))
    store.dispatch(list(steps))
    store.dispatch(FinishAction())
    result = store.state
    if result is None:  # pragma: no cover
        raise InitializationActionError(LoadStateAction(state=state))
    return result


# Orbits


Generator: TypeAlias = Literal['rotation', 'boost']


def orbit_rows(
    state: QuantumState,
    generator: Generator,
    axis: Axis,
    *,
    steps: int,
    max_param: float,
) -> RealArray:
    """Sample the associated 4-vector along a one-parameter subgroup.

    Returns a `steps x 5` array of `param, T, X, Y, Z` with the parameter
    running evenly over `[0, max_param]`.
    """
    if steps < 2:  # noqa: PLR2004
        msg = f'an orbit needs at least 2 steps, got {steps}'
        raise ValidationError(msg)
    if not math.isfinite(max_param):
        msg = f'orbit parameter range must be finite, got {max_param}'
        raise ValidationError(msg)
    element = {'rotation': su2_rotation, 'boost': sl2_boost}[generator]
    # rejects zero Weyl states before any sampling
    associated_vector(state)
    rows = []
    for param in np.linspace(0.0, max_param, steps):
        matrix = element(axis, float(param))
        moved = (
            transform_bispinor(matrix, state)
            if isinstance(state, Bispinor)
            else act_spinor(matrix, state)
        )
        rows.append([float(param), *associated_vector(moved).as_array()])
    return np.array(rows, dtype=np.float64)

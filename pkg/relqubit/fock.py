"""Finite matrix realizations of creation and annihilation algebras."""

from __future__ import annotations

import cmath
import functools
import itertools
import logging
from typing import TYPE_CHECKING

import numpy as np

from relqubit.basic_types import (
    DEFAULT_OPTIONS,
    ModeSet,
    OperatorMatrix,
    RelationCheck,
    RelqubitOptions,
    TracelessCommutatorReport,
    ValidationError,
)
from relqubit.lorentz import minkowski_dot

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    import numpy.typing as npt

    from relqubit.basic_types import FourVector, RealArray

logger = logging.getLogger(__name__)

FERMI_ANNIHILATOR = np.array([[0, 0], [1, 0]], dtype=np.float64)
FERMI_SIGN = np.array([[1, 0], [0, -1]], dtype=np.float64)


def commutator(a: npt.ArrayLike, b: npt.ArrayLike) -> OperatorMatrix:
    a, b = np.asarray(a), np.asarray(b)
    return a @ b - b @ a


def anticommutator(a: npt.ArrayLike, b: npt.ArrayLike) -> OperatorMatrix:
    a, b = np.asarray(a), np.asarray(b)
    return a @ b + b @ a


def _kron_all(factors: Sequence[OperatorMatrix]) -> OperatorMatrix:
    first, *rest = factors
    # a single factor comes back as a fresh array, never as a shared constant
    return functools.reduce(np.kron, rest, np.array(first))


def fermi_single() -> tuple[OperatorMatrix, OperatorMatrix, OperatorMatrix]:
    """Return (a, a*, N) of a single fermionic mode, N = a* a."""
    a = FERMI_ANNIHILATOR.copy()
    a_star = a.T.copy()
    return a, a_star, a_star @ a


def fermi_modes(
    n: int,
    *,
    options: RelqubitOptions = DEFAULT_OPTIONS,
) -> ModeSet:
    """Return n fermionic modes on 2^n states through sign strings.

    Mode k is S x ... x S x a x 1 x ... x 1 with S = diag(1, -1) on the k - 1
    preceding modes; entries are 0 and +-1, so products of them are exact.
    """
    if not 1 <= n <= options.max_fermi_modes:
        msg = f'number of fermionic modes must be in 1..{options.max_fermi_modes}'
        raise ValidationError(f'{msg}, got {n}')
    identity = np.eye(2)
    annihilators = tuple(
        _kron_all(
            [FERMI_SIGN] * k + [FERMI_ANNIHILATOR] + [identity] * (n - k - 1),
        )
        for k in range(n)
    )
    return ModeSet(
        n=n,
        annihilators=annihilators,
        creators=tuple(a.T.copy() for a in annihilators),
    )


class BoseLadder:
    """Truncated bosonic mode on d states.

    The squared ladder weights 0, 1, ..., d - 1 are kept as integers, so the
    commutator, its trace and the number operator are exact even though the
    ladder matrix itself carries irrational entries.
    """

    def __init__(
        self: BoseLadder,
        dimension: int,
        *,
        options: RelqubitOptions = DEFAULT_OPTIONS,
    ) -> None:
        """Create a truncated mode of the given dimension."""
        if not 2 <= dimension <= options.max_bose_dim:  # noqa: PLR2004
            msg = f'bosonic truncation must be in 2..{options.max_bose_dim}'
            raise ValidationError(f'{msg}, got {dimension}')
        self.dimension = dimension
        self.weights_squared = np.arange(dimension, dtype=np.int64)

    @functools.cached_property
    def annihilator(self: BoseLadder) -> RealArray:
        """c with c|n> = sqrt(n)|n - 1>."""
        return np.diag(np.sqrt(self.weights_squared[1:].astype(np.float64)), k=1)

    @functools.cached_property
    def creator(self: BoseLadder) -> RealArray:
        return self.annihilator.T.copy()

    @functools.cached_property
    def number(self: BoseLadder) -> OperatorMatrix:
        """c* c = diag(0, 1, ..., d - 1)."""
        return np.diag(self.weights_squared)

    @functools.cached_property
    def commutator(self: BoseLadder) -> OperatorMatrix:
        """c c* - c* c = diag(1, ..., 1, -(d - 1))."""
        raised = np.append(self.weights_squared[1:], 0)
        return np.diag(raised - self.weights_squared)

    @property
    def trace(self: BoseLadder) -> int:
        return int(np.trace(self.commutator))

    @property
    def defect(self: BoseLadder) -> int:
        """Largest entry of |[c, c*] - 1|, always d."""
        identity = np.eye(self.dimension, dtype=np.int64)
        return int(np.max(np.abs(self.commutator - identity)))

    @property
    def reversed_defect(self: BoseLadder) -> int:
        """Largest entry of |[c*, c] - 1|, max(2, d - 2)."""
        identity = np.eye(self.dimension, dtype=np.int64)
        return int(np.max(np.abs(-self.commutator - identity)))


def bose_truncated(
    d: int,
    *,
    options: RelqubitOptions = DEFAULT_OPTIONS,
) -> tuple[RealArray, RealArray]:
    """Return (c, c*) of a bosonic mode truncated to d states."""
    ladder = BoseLadder(d, options=options)
    return ladder.annihilator, ladder.creator


def commutator_defect(
    d: int,
    *,
    options: RelqubitOptions = DEFAULT_OPTIONS,
) -> int:
    """Return max |([c, c*] - 1)_ij|, which is d for every truncation."""
    return BoseLadder(d, options=options).defect


def check_traceless_commutator(
    a: npt.ArrayLike,
    b: npt.ArrayLike,
) -> TracelessCommutatorReport:
    """Check that [A, B] is traceless and therefore cannot be the identity."""
    a, b = np.asarray(a), np.asarray(b)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape != b.shape:  # noqa: PLR2004
        msg = f'operands must be square of equal size, got {a.shape} and {b.shape}'
        raise ValidationError(msg)
    dimension = a.shape[0]
    result = commutator(a, b)
    trace = complex(np.trace(result))
    max_entry = float(np.max(np.abs(a), initial=0.0) * np.max(np.abs(b), initial=0.0))
    trace_tolerance = 1e-9 * dimension * max(max_entry, 1.0)
    distance = float(np.max(np.abs(result - np.eye(dimension))))
    report = TracelessCommutatorReport(
        dimension=dimension,
        trace=trace,
        trace_tolerance=trace_tolerance,
        trace_vanishes=abs(trace) <= trace_tolerance,
        distance_from_identity=distance,
        # a traceless d x d matrix minus 1 has diagonal mean -1
        implication_holds=distance >= 1 - 1e-9,
    )
    logger.debug('traceless commutator check: %s', report)
    return report


def field_operator(
    p: FourVector,
    x: FourVector,
    d: int,
    *,
    options: RelqubitOptions = DEFAULT_OPTIONS,
) -> OperatorMatrix:
    """Return e^{-i p.x} c + e^{i p.x} c* on the d-state truncation."""
    c, c_star = bose_truncated(d, options=options)
    phase = cmath.exp(-1j * minkowski_dot(p, x))
    return phase * c + phase.conjugate() * c_star


def fermi_field_operator(p: FourVector, x: FourVector) -> OperatorMatrix:
    """Single-mode fermionic counterpart of `field_operator`."""
    a, a_star, _ = fermi_single()
    phase = cmath.exp(-1j * minkowski_dot(p, x))
    return phase * a + phase.conjugate() * a_star


def number_spectrum(operator: npt.ArrayLike) -> RealArray:
    """Return the sorted eigenvalues of a Hermitian number operator."""
    return np.linalg.eigvalsh(np.asarray(operator, dtype=np.complex128))


def _max_residual(matrix: OperatorMatrix) -> float:
    return float(np.max(np.abs(matrix), initial=0.0))


def _family(
    relation: str,
    residuals: Iterable[float],
    *,
    tolerance: float = 0.0,
    expected_failure: bool = False,
) -> RelationCheck:
    worst = max(residuals, default=0.0)
    return RelationCheck(
        relation=relation,
        passed=worst <= tolerance,
        max_residual=worst,
        expected_failure=expected_failure,
    )


def fermi_relations(modes: ModeSet) -> list[RelationCheck]:
    """Check every anticommutation relation of a fermionic mode set exactly."""
    a, a_star = modes.annihilators, modes.creators
    identity = np.eye(modes.dimension)
    pairs = list(itertools.product(range(modes.n), repeat=2))
    return [
        _family(
            '{a_k, a_j} = 0',
            (_max_residual(anticommutator(a[k], a[j])) for k, j in pairs),
        ),
        _family(
            '{a_k*, a_j*} = 0',
            (_max_residual(anticommutator(a_star[k], a_star[j])) for k, j in pairs),
        ),
        _family(
            '{a_k, a_k*} = 1',
            (
                _max_residual(anticommutator(a[k], a_star[k]) - identity)
                for k in range(modes.n)
            ),
        ),
        _family(
            '{a_k, a_j*} = 0 (k != j)',
            (
                _max_residual(anticommutator(a[k], a_star[j]))
                for k, j in pairs
                if k != j
            ),
        ),
    ]


def bose_modes(
    n: int,
    d: int,
    *,
    options: RelqubitOptions = DEFAULT_OPTIONS,
) -> tuple[tuple[RealArray, ...], tuple[RealArray, ...]]:
    """Return n truncated bosonic modes on d^n states."""
    if n < 1 or d**n > options.max_bose_dim:
        msg = f'{n} bosonic modes of dimension {d} exceed {options.max_bose_dim}'
        raise ValidationError(msg)
    ladder = BoseLadder(d, options=options)
    identity = np.eye(d)
    annihilators = tuple(
        _kron_all([identity] * k + [ladder.annihilator] + [identity] * (n - k - 1))
        for k in range(n)
    )
    return annihilators, tuple(c.T.copy() for c in annihilators)


def bose_relations(
    n: int,
    d: int,
    *,
    options: RelqubitOptions = DEFAULT_OPTIONS,
) -> list[RelationCheck]:
    """Check the commutation relations of n truncated bosonic modes.

    `[c_k, c_k*] = 1` always fails with the truncation defect d as residual;
    the reversed ordering `[c_k*, c_k] = 1` is reported as well.
    """
    c, c_star = bose_modes(n, d, options=options)
    ladder = BoseLadder(d, options=options)
    pairs = list(itertools.product(range(n), repeat=2))
    # [c_k, c_k] vanishes identically, only distinct modes are checked
    distinct = list(itertools.combinations(range(n), 2))
    return [
        _family(
            '[c_k, c_j] = 0',
            (_max_residual(commutator(c[k], c[j])) for k, j in distinct),
        ),
        _family(
            '[c_k*, c_j*] = 0',
            (_max_residual(commutator(c_star[k], c_star[j])) for k, j in distinct),
        ),
        _family(
            '[c_k, c_k*] = 1',
            [float(ladder.defect)],
            expected_failure=True,
        ),
        _family(
            '[c_k*, c_k] = 1',
            [float(ladder.reversed_defect)],
            expected_failure=True,
        ),
        _family(
            '[c_k, c_j*] = 0 (k != j)',
            (
                _max_residual(commutator(c[k], c_star[j]))
                for k, j in pairs
                if k != j
            ),
        ),
    ]

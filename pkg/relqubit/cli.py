"""Command-line front end: reports on states, pipelines, orbits and no-go checks."""

from __future__ import annotations

import logging
import os
import sys
from pathlib import Path
from typing import TYPE_CHECKING, Any

import click
import numpy as np
from str_to_bool import str_to_bool

from relqubit.basic_types import (
    DEFAULT_OPTIONS,
    Bispinor,
    BlochReport,
    DocumentError,
    FockReport,
    NoGoReport,
    RelqubitError,
    ReportOutputError,
    SingleModeMatrices,
    ValidationError,
    WeylSpinor,
)
from relqubit.fock import (
    BoseLadder,
    bose_relations,
    fermi_modes,
    fermi_relations,
    fermi_single,
)
from relqubit.lorentz import (
    Sampling,
    axis_of,
    boost_defect_supremum,
    minkowski_norm,
    sl2_boost,
    unitarity_defect,
)
from relqubit.pipeline import (
    Generator,
    QuantumState,
    TransformState,
    orbit_rows,
    parse_pipeline_document,
    parse_state_document,
    read_json,
    run_pipeline,
)
from relqubit.serialization_mixin import SerializationMixin
from relqubit.spinor_core import bloch_extended, ray_coordinate, riemann_point

if TYPE_CHECKING:
    from relqubit.basic_types import Axis

logger = logging.getLogger(__name__)

NUMBER_FORMAT = '%.17g'
Z_AXIS: Axis = (0.0, 0.0, 1.0)


# Reports


def bloch_report(psi: WeylSpinor) -> BlochReport:
    vector = bloch_extended(psi)
    return BlochReport(
        state=psi,
        ray_coordinate=ray_coordinate(psi),
        riemann_point=riemann_point(psi),
        vector=vector,
        null_residual=abs(minkowski_norm(vector)),
    )


def nogo_report(
    *,
    dimension: int,
    rapidity: float,
    samples: int,
    seed: int,
    sampling: Sampling = 'random',
) -> NoGoReport:
    """Collect both no-go witnesses: boost norm change and commutator defect."""
    ladder = BoseLadder(dimension)
    return NoGoReport(
        rapidity=rapidity,
        samples=samples,
        seed=seed,
        sampling=sampling,
        unitarity_defect=unitarity_defect(
            sl2_boost(Z_AXIS, rapidity),
            samples,
            seed=seed,
            sampling=sampling,
        ),
        unitarity_defect_supremum=boost_defect_supremum(rapidity),
        dimension=dimension,
        commutator_defect=ladder.defect,
        commutator_trace=ladder.trace,
    )


def fermi_report(modes: int) -> FockReport:
    mode_set = fermi_modes(modes)
    single_mode = None
    if modes == 1:
        a, a_star, number = fermi_single()
        single_mode = SingleModeMatrices(annihilator=a, creator=a_star, number=number)
    return FockReport(
        statistics='fermi',
        modes=modes,
        dimension=mode_set.dimension,
        relations=tuple(fermi_relations(mode_set)),
        single_mode=single_mode,
    )


def bose_report(dimension: int, *, modes: int = 1) -> FockReport:
    ladder = BoseLadder(dimension)
    return FockReport(
        statistics='bose',
        modes=modes,
        dimension=dimension**modes,
        relations=tuple(bose_relations(modes, dimension)),
        single_mode=SingleModeMatrices(
            annihilator=ladder.annihilator,
            creator=ladder.creator,
            number=ladder.number,
        )
        if modes == 1 and dimension <= 8  # noqa: PLR2004
        else None,
        commutator_trace=ladder.trace,
    )


def _format_number(value: float | None) -> str:
    return '-' if value is None else NUMBER_FORMAT % value


def _format_complex(value: complex) -> str:
    return f'{NUMBER_FORMAT % value.real}{value.imag:+.17g}j'


def _amplitudes(state: QuantumState) -> list[complex]:
    return [complex(value) for value in state.as_array()]


def format_transform_table(result: TransformState) -> str:
    """Render the final state and one tab-separated row per pipeline step."""
    kind = 'bispinor' if isinstance(result.current, Bispinor) else 'weyl'
    columns = (
        'step',
        'label',
        'norm_before',
        'norm_after',
        'minkowski_before',
        'minkowski_after',
        'invariant_scalar_before',
        'invariant_scalar_after',
    )
    lines = [
        f'kind: {kind}',
        'initial: ' + ' '.join(map(_format_complex, _amplitudes(result.initial))),
        'final: ' + ' '.join(map(_format_complex, _amplitudes(result.current))),
        '\t'.join(columns),
    ]
    lines.extend(
        '\t'.join(
            [
                str(row.step),
                row.label,
                *(
                    _format_number(value)
                    for value in (
                        row.norm_before,
                        row.norm_after,
                        row.minkowski_before,
                        row.minkowski_after,
                        row.invariant_scalar_before,
                        row.invariant_scalar_after,
                    )
                ),
            ],
        )
        for row in result.rows
    )
    return '\n'.join(lines)


def _echo_report(report: object) -> None:
    click.echo(SerializationMixin.to_json(report))


# Command line


class RelqubitGroup(click.Group):
    """Click group turning library errors into their exit codes."""

    def invoke(self: RelqubitGroup, ctx: click.Context) -> Any:  # noqa: ANN401
        try:
            return super().invoke(ctx)
        except RelqubitError as exception:
            click.echo(f'Error: {exception}', err=True)
            ctx.exit(exception.exit_code)


def _axis_option(
    _ctx: click.Context,
    _param: click.Parameter,
    value: str,
) -> Axis:
    try:
        return axis_of(value if value.lower() in {'x', 'y', 'z'} else value.split(','))
    except (ValidationError, ValueError) as exception:
        msg = f'expected x, y, z or three comma separated numbers, got {value!r}'
        raise click.BadParameter(msg) from exception


def _load_state(path: Path) -> QuantumState:
    return parse_state_document(read_json(path))


@click.group(cls=RelqubitGroup)
@click.option(
    '-v',
    '--verbose',
    is_flag=True,
    default=False,
    help='Log every pipeline step and computation on stderr.',
)
@click.pass_context
def main(ctx: click.Context, *, verbose: bool) -> None:
    """Relativistic qubits: Weyl spinors, bispinors and ladder algebras."""
    try:
        from_environment = os.environ.get('RELQUBIT_VERBOSE', 'false')
        verbose = verbose or str_to_bool(from_environment) == 1
    except ValueError as exception:
        msg = 'RELQUBIT_VERBOSE must be a boolean'
        raise click.UsageError(msg) from exception
    logging.basicConfig(
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s',
    )
    logging.getLogger('relqubit').setLevel(
        logging.DEBUG if verbose else logging.WARNING,
    )
    ctx.obj = verbose


@main.command()
@click.argument('state_file', type=click.Path(dir_okay=False, path_type=Path))
def bloch(state_file: Path) -> None:
    """Print the Riemann sphere and light cone coordinates of a Weyl state."""
    state = _load_state(state_file)
    if not isinstance(state, WeylSpinor):
        msg = 'bloch needs a weyl state'
        raise DocumentError(msg)
    _echo_report(bloch_report(state))


@main.command()
@click.argument('state_file', type=click.Path(dir_okay=False, path_type=Path))
@click.argument('pipeline_file', type=click.Path(dir_okay=False, path_type=Path))
@click.option(
    '--format',
    'output_format',
    type=click.Choice(['table', 'json']),
    default='table',
    show_default=True,
)
@click.pass_obj
def transform(
    verbose: bool,  # noqa: FBT001
    state_file: Path,
    pipeline_file: Path,
    output_format: str,
) -> None:
    """Run a state through a pipeline and print per-step invariants."""
    state = _load_state(state_file)
    steps = parse_pipeline_document(read_json(pipeline_file))
    result = run_pipeline(state, steps, log_steps=verbose)
    if output_format == 'json':
        _echo_report(result)
    else:
        click.echo(format_transform_table(result))


@main.command()
@click.argument('state_file', type=click.Path(dir_okay=False, path_type=Path))
@click.option(
    '--generator',
    type=click.Choice(['rotation', 'boost']),
    required=True,
)
@click.option('--axis', default='z', show_default=True, callback=_axis_option)
@click.option('--steps', type=click.IntRange(min=2), required=True)
@click.option('--max-param', type=float, required=True)
@click.option(
    '--out',
    type=click.Path(path_type=Path),
    required=True,
)
def orbit(  # noqa: PLR0913
    state_file: Path,
    generator: Generator,
    axis: Axis,
    steps: int,
    max_param: float,
    out: Path,
) -> None:
    """Write the 4-vector orbit of a state as `param,T,X,Y,Z` CSV rows."""
    rows = orbit_rows(
        _load_state(state_file),
        generator,
        axis,
        steps=steps,
        max_param=max_param,
    )
    try:
        np.savetxt(
            out,
            rows,
            fmt=NUMBER_FORMAT,
            delimiter=',',
            header='param,T,X,Y,Z',
            comments='',
        )
    except OSError as exception:
        msg = f'cannot write {out}: {exception.strerror or exception}'
        raise ReportOutputError(msg) from exception
    logger.info('wrote %d orbit rows to %s', steps, out)


@main.command()
@click.option(
    '--dim',
    type=click.IntRange(min=2, max=DEFAULT_OPTIONS.max_bose_dim),
    default=4,
    show_default=True,
)
@click.option('--rapidity', type=float, default=2.0, show_default=True)
@click.option(
    '--samples',
    type=click.IntRange(min=1),
    default=10_000,
    show_default=True,
)
@click.option('--seed', type=int, default=0, show_default=True)
@click.option(
    '--sampling',
    type=click.Choice(['random', 'grid']),
    default='random',
    show_default=True,
)
def nogo(
    dim: int,
    rapidity: float,
    samples: int,
    seed: int,
    sampling: Sampling,
) -> None:
    """Print the boost unitarity defect and the bosonic commutator defect."""
    _echo_report(
        nogo_report(
            dimension=dim,
            rapidity=rapidity,
            samples=samples,
            seed=seed,
            sampling=sampling,
        ),
    )


@main.command()
@click.option('--modes', type=int, help='Number of fermionic modes.')
@click.option('--bose-dim', type=int, help='Truncation of each bosonic mode.')
@click.option(
    '--bose-modes',
    type=click.IntRange(min=1),
    default=1,
    show_default=True,
    help='Number of bosonic modes, used with --bose-dim.',
)
def fock(modes: int | None, bose_dim: int | None, bose_modes: int) -> None:
    """Check the (anti)commutation relations of finite ladder operators."""
    if (modes is None) == (bose_dim is None):
        msg = 'pass exactly one of --modes and --bose-dim'
        raise click.UsageError(msg)
    if modes is not None:
        _echo_report(fermi_report(modes))
    elif bose_dim is not None:
        _echo_report(bose_report(bose_dim, modes=bose_modes))

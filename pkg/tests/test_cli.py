# ruff: noqa: D100, D101, D102, D103, D104, D107
from __future__ import annotations

import json
import logging
import math
from typing import TYPE_CHECKING

import numpy as np
import pytest
from click.testing import CliRunner, Result

from relqubit.basic_types import WeylSpinor
from relqubit.cli import main
from relqubit.pipeline import orbit_rows

if TYPE_CHECKING:
    from collections.abc import Callable, Generator
    from pathlib import Path

    from relqubit_pytest.fixtures import ReportSnapshot

SQRT_HALF = 1 / math.sqrt(2)
UP = {'kind': 'weyl', 'amplitudes': [[1, 0], [0, 0]]}
DIAGONAL = {'kind': 'weyl', 'amplitudes': [SQRT_HALF, SQRT_HALF]}


@pytest.fixture(autouse=True)
def _() -> Generator[None, None, None]:
    """Restore the package logger level the command line adjusts."""
    logger = logging.getLogger('relqubit')
    level = logger.level
    yield
    logger.setLevel(level)


@pytest.fixture
def write_json(tmp_path: Path) -> Callable[[str, object], str]:
    def write(name: str, document: object) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(document))
        return str(path)

    return write


def run(*args: str, env: dict[str, str] | None = None) -> Result:
    return CliRunner().invoke(main, list(args), env=env)


def test_bloch_of_the_pole(write_json: Callable[[str, object], str]) -> None:
    result = run('bloch', write_json('up.json', UP))
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report['_type'] == 'BlochReport'
    assert report['ray_coordinate'] == 'inf'
    assert report['riemann_point'] == [0.0, 0.0, 1.0]
    assert report['vector'] == {
        '_type': 'FourVector',
        't': 1.0,
        'x': 0.0,
        'y': 0.0,
        'z': 1.0,
    }
    assert report['null_residual'] == 0


def test_bloch_of_the_equator(write_json: Callable[[str, object], str]) -> None:
    result = run('bloch', write_json('diagonal.json', DIAGONAL))
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    vector = report['vector']
    assert [vector[key] for key in 'txyz'] == pytest.approx([1, 1, 0, 0], abs=1e-15)
    assert report['ray_coordinate'] == pytest.approx([1, 0])
    assert report['null_residual'] <= 1e-12


def test_bloch_report_snapshot(
    write_json: Callable[[str, object], str],
    report_snapshot: ReportSnapshot,
) -> None:
    result = run('bloch', write_json('up.json', UP))
    report_snapshot.take(result.stdout)


def test_bloch_errors(write_json: Callable[[str, object], str], tmp_path: Path) -> None:
    truncated = tmp_path / 'truncated.json'
    truncated.write_text('{"kind": "weyl", "ampl')
    result = run('bloch', str(truncated))
    assert result.exit_code == 2
    assert 'malformed JSON' in result.stderr

    result = run('bloch', str(tmp_path / 'missing.json'))
    assert result.exit_code == 2

    zero = write_json('zero.json', {'kind': 'weyl', 'amplitudes': [0, 0]})
    result = run('bloch', zero)
    assert result.exit_code == 3
    assert result.stderr == 'Error: zero state has no ray\n'

    bispinor = write_json(
        'bispinor.json',
        {'kind': 'bispinor', 'amplitudes': [1, 0, 0, 0]},
    )
    assert run('bloch', bispinor).exit_code == 2


def test_transform_table(write_json: Callable[[str, object], str]) -> None:
    pipeline = write_json(
        'pipeline.json',
        [{'boost': {'axis': [0, 0, 1], 'rapidity': 2}}],
    )
    result = run('transform', write_json('up.json', UP), pipeline)
    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    assert lines[0] == 'kind: weyl'
    assert lines[1] == 'initial: 1+0j 0+0j'
    assert lines[2].startswith('final: 2.718281828459')
    assert lines[3].split('\t') == [
        'step',
        'label',
        'norm_before',
        'norm_after',
        'minkowski_before',
        'minkowski_after',
        'invariant_scalar_before',
        'invariant_scalar_after',
    ]
    (row,) = (line.split('\t') for line in lines[4:])
    assert row[:3] == ['1', 'boost(axis=[0.0, 0.0, 1.0], rapidity=2.0)', '1']
    assert float(row[3]) == pytest.approx(math.e)
    assert float(row[4]) == 0
    assert float(row[5]) == pytest.approx(0, abs=1e-12)
    assert row[6:] == ['-', '-']


def test_transform_json(write_json: Callable[[str, object], str]) -> None:
    state = write_json(
        'bispinor.json',
        {'kind': 'bispinor', 'amplitudes': [[1, 0], 0, [0.5, 0], 0]},
    )
    pipeline = write_json(
        'pipeline.json',
        [
            {'rotate': {'axis': [1, 0, 0], 'angle': math.pi}},
            {'boost': {'axis': [0, 1, 0], 'rapidity': 0.5}},
            {'parity': {}},
        ],
    )
    result = run('transform', state, pipeline, '--format', 'json')
    assert result.exit_code == 0, result.output
    document = json.loads(result.stdout)
    assert document['_type'] == 'TransformState'
    rows = document['rows']
    assert [row['step'] for row in rows] == [1, 2, 3]
    assert rows[2]['label'] == 'parity'
    for row in rows:
        assert row['invariant_scalar_after'] == pytest.approx(1, abs=1e-12)
        assert row['minkowski_after'] == pytest.approx(1, abs=1e-12)


def test_transform_step_errors(write_json: Callable[[str, object], str]) -> None:
    up = write_json('up.json', UP)
    parity = write_json('parity.json', [{'parity': {}}])
    result = run('transform', up, parity)
    assert result.exit_code == 4
    assert 'parity needs a bispinor' in result.stderr

    scaled = write_json('scaled.json', [{'matrix': [[2, 0], [0, 1]]}])
    assert run('transform', up, scaled).exit_code == 4

    unknown = write_json('unknown.json', [{'twist': {}}])
    assert run('transform', up, unknown).exit_code == 2

    huge = write_json('huge.json', [{'boost': {'axis': [0, 0, 1], 'rapidity': 1500}}])
    result = run('transform', up, huge)
    assert result.exit_code == 4
    assert 'too large' in result.stderr

    endless = write_json(
        'endless.json',
        [{'rotate': {'axis': [0, 0, 1], 'angle': math.inf}}],
    )
    result = run('transform', up, endless)
    assert result.exit_code == 2
    assert 'must be finite' in result.stderr


def test_verbose_transform_logs_steps(
    write_json: Callable[[str, object], str],
    caplog: pytest.LogCaptureFixture,
) -> None:
    caplog.set_level(logging.DEBUG)
    pipeline = write_json(
        'pipeline.json',
        [{'rotate': {'axis': [0, 0, 1], 'angle': 1}}],
    )
    result = run('-v', 'transform', write_json('up.json', UP), pipeline)
    assert result.exit_code == 0, result.output
    assert 'step 1: ' in caplog.text

    caplog.clear()
    result = run(
        'transform',
        write_json('up.json', UP),
        pipeline,
        env={'RELQUBIT_VERBOSE': 'yes'},
    )
    assert result.exit_code == 0, result.output
    assert 'step 1: ' in caplog.text


def test_invalid_verbose_environment(write_json: Callable[[str, object], str]) -> None:
    result = run('bloch', write_json('up.json', UP), env={'RELQUBIT_VERBOSE': 'maybe'})
    assert result.exit_code == 2


def test_rotation_orbit(
    write_json: Callable[[str, object], str],
    tmp_path: Path,
) -> None:
    out = tmp_path / 'orbit.csv'
    result = run(
        'orbit',
        write_json('diagonal.json', DIAGONAL),
        '--generator',
        'rotation',
        '--steps',
        '5',
        '--max-param',
        repr(2 * math.pi),
        '--out',
        str(out),
    )
    assert result.exit_code == 0, result.output
    lines = out.read_text().splitlines()
    assert lines[0] == 'param,T,X,Y,Z'
    assert len(lines) == 6
    rows = np.loadtxt(out, delimiter=',', skiprows=1)
    np.testing.assert_allclose(
        rows[:, 1:],
        [[1, 1, 0, 0], [1, 0, 1, 0], [1, -1, 0, 0], [1, 0, -1, 0], [1, 1, 0, 0]],
        atol=1e-12,
    )
    psi = WeylSpinor(c0=SQRT_HALF, c1=SQRT_HALF)
    expected = orbit_rows(psi, 'rotation', (0, 0, 1), steps=5, max_param=2 * math.pi)
    np.testing.assert_array_equal(rows, expected)


def test_rotation_orbit_of_the_pole(
    write_json: Callable[[str, object], str],
    tmp_path: Path,
) -> None:
    out = tmp_path / 'orbit.csv'
    result = run(
        'orbit',
        write_json('up.json', UP),
        '--generator',
        'rotation',
        '--axis',
        '0,0,1',
        '--steps',
        '4',
        '--max-param',
        '3',
        '--out',
        str(out),
    )
    assert result.exit_code == 0, result.output
    rows = np.loadtxt(out, delimiter=',', skiprows=1)
    np.testing.assert_allclose(rows[:, 1:], np.tile([1, 0, 0, 1], (4, 1)), atol=1e-15)


def test_boost_orbit(write_json: Callable[[str, object], str], tmp_path: Path) -> None:
    out = tmp_path / 'orbit.csv'
    result = run(
        'orbit',
        write_json('up.json', UP),
        '--generator',
        'boost',
        '--axis',
        'z',
        '--steps',
        '3',
        '--max-param',
        '1',
        '--out',
        str(out),
    )
    assert result.exit_code == 0, result.output
    rows = np.loadtxt(out, delimiter=',', skiprows=1)
    np.testing.assert_allclose(rows[-1], [1, math.e, 0, 0, math.e])


@pytest.mark.parametrize(
    ('arguments', 'exit_code'),
    [
        (['--steps', '1'], 2),
        (['--axis', 'w'], 2),
        (['--axis', '0,0,2'], 2),
        (['--max-param', 'inf'], 2),
        (['--out-dir-missing'], 5),
        (['--out-is-directory'], 5),
    ],
)
def test_orbit_errors(
    write_json: Callable[[str, object], str],
    tmp_path: Path,
    arguments: list[str],
    exit_code: int,
) -> None:
    options = {'--steps': '3', '--axis': 'z', '--out': str(tmp_path / 'orbit.csv')}
    if arguments == ['--out-dir-missing']:
        options['--out'] = str(tmp_path / 'missing' / 'orbit.csv')
    elif arguments == ['--out-is-directory']:
        options['--out'] = str(tmp_path)
    else:
        options[arguments[0]] = arguments[1]
    result = run(
        'orbit',
        write_json('up.json', UP),
        '--generator',
        'rotation',
        '--max-param',
        '1',
        *(item for pair in options.items() for item in pair),
    )
    assert result.exit_code == exit_code, result.output


def test_orbit_of_the_zero_state(
    write_json: Callable[[str, object], str],
    tmp_path: Path,
) -> None:
    result = run(
        'orbit',
        write_json('zero.json', {'kind': 'weyl', 'amplitudes': [0, 0]}),
        '--generator',
        'boost',
        '--steps',
        '3',
        '--max-param',
        '1',
        '--out',
        str(tmp_path / 'orbit.csv'),
    )
    assert result.exit_code == 3


def test_nogo_without_boost() -> None:
    result = run('nogo', '--rapidity', '0', '--samples', '500', '--dim', '3')
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report['unitarity_defect'] <= 1e-12
    assert report['unitarity_defect_supremum'] == 0
    assert report['commutator_defect'] == 3
    assert report['commutator_trace'] == 0


@pytest.mark.parametrize('sampling', ['random', 'grid'])
def test_nogo_with_boost(sampling: str) -> None:
    result = run('nogo', '--samples', '500', '--sampling', sampling)
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report['rapidity'] == 2
    assert report['dimension'] == 4
    assert report['commutator_defect'] == 4
    assert report['unitarity_defect_supremum'] == pytest.approx(math.e - 1)
    assert report['unitarity_defect'] <= report['unitarity_defect_supremum'] + 1e-12
    assert report['unitarity_defect'] >= 0.95 * (math.e - 1)


@pytest.mark.timeout(5)
def test_nogo_is_reproducible() -> None:
    first = run('nogo', '--seed', '7')
    second = run('nogo', '--seed', '7')
    assert first.exit_code == 0, first.output
    assert first.stdout == second.stdout
    assert json.loads(first.stdout)['samples'] == 10_000


def test_nogo_errors() -> None:
    assert run('nogo', '--dim', '1').exit_code == 2
    assert run('nogo', '--dim', '4097').exit_code == 2
    assert run('nogo', '--samples', '0').exit_code == 2

    result = run('nogo', '--rapidity', '1500', '--samples', '10')
    assert result.exit_code == 2
    assert 'too large' in result.stderr
    assert run('nogo', '--rapidity', 'nan', '--samples', '10').exit_code == 2


def test_fock_fermions() -> None:
    result = run('fock', '--modes', '2')
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report['statistics'] == 'fermi'
    assert report['dimension'] == 4
    assert report['single_mode'] is None
    assert len(report['relations']) == 4
    for check in report['relations']:
        assert check['passed']
        assert check['max_residual'] == 0


def test_fock_single_fermion(report_snapshot: ReportSnapshot) -> None:
    result = run('fock', '--modes', '1')
    assert result.exit_code == 0, result.output
    single_mode = json.loads(result.stdout)['single_mode']
    assert single_mode['annihilator'] == [[0, 0], [1, 0]]
    assert single_mode['creator'] == [[0, 1], [0, 0]]
    assert single_mode['number'] == [[1, 0], [0, 0]]
    report_snapshot.take(result.stdout)


@pytest.mark.parametrize('arguments', [['--modes', '3'], ['--bose-dim', '5']])
def test_fock_is_reproducible(arguments: list[str]) -> None:
    first = run('fock', *arguments)
    second = run('fock', *arguments)
    assert first.exit_code == 0, first.output
    assert first.stdout_bytes == second.stdout_bytes


def test_fock_bosons() -> None:
    result = run('fock', '--bose-dim', '4')
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report['statistics'] == 'bose'
    assert report['commutator_trace'] == 0
    checks = {check['relation']: check for check in report['relations']}
    failing = checks['[c_k, c_k*] = 1']
    assert not failing['passed']
    assert failing['expected_failure']
    assert failing['max_residual'] == 4
    assert report['single_mode']['number'] == [
        [0, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 2, 0],
        [0, 0, 0, 3],
    ]


def test_fock_bosonic_modes() -> None:
    result = run('fock', '--bose-dim', '3', '--bose-modes', '2')
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report['modes'] == 2
    assert report['dimension'] == 9
    assert report['single_mode'] is None


@pytest.mark.parametrize(
    'arguments',
    [
        ['--modes', '11'],
        ['--modes', '0'],
        ['--bose-dim', '5000'],
        ['--bose-dim', '17', '--bose-modes', '3'],
        [],
        ['--modes', '2', '--bose-dim', '3'],
    ],
)
def test_fock_errors(arguments: list[str]) -> None:
    assert run('fock', *arguments).exit_code == 2

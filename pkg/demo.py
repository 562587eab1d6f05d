# ruff: noqa: D100, D103, T201
from __future__ import annotations

import logging
import math

from relqubit import (
    Bispinor,
    BoostAction,
    ParityAction,
    RotateAction,
    WeylSpinor,
    run_pipeline,
)
from relqubit.dirac import current, invariant_scalar
from relqubit.fock import BoseLadder, fermi_modes, fermi_relations
from relqubit.spinor_core import bloch_extended, riemann_point

Z_AXIS = (0.0, 0.0, 1.0)


def spinors() -> None:
    psi = WeylSpinor(c0=1 / math.sqrt(2), c1=1j / math.sqrt(2))
    print('Riemann point:', riemann_point(psi))
    print('Extended Bloch vector:', bloch_extended(psi))

    result = run_pipeline(
        psi,
        [
            RotateAction(axis=Z_AXIS, angle=math.pi / 2),
            BoostAction(axis=Z_AXIS, rapidity=1.0),
        ],
        log_steps=True,
    )
    for row in result.rows:
        print(f'{row.label}: norm {row.norm_before:.6f} -> {row.norm_after:.6f}')


def bispinors() -> None:
    psi = Bispinor.from_components([1, 0, 0.5, 0.5j])
    result = run_pipeline(
        psi,
        [BoostAction(axis=(1.0, 0.0, 0.0), rapidity=2.0), ParityAction()],
    )
    print('Current before:', current(psi))
    print('Current after:', current(result.current))
    print(
        'Invariant scalar:',
        invariant_scalar(psi),
        '->',
        invariant_scalar(result.current),
    )


def ladders() -> None:
    for check in fermi_relations(fermi_modes(3)):
        print(f'{check.relation}: residual {check.max_residual}')
    for dimension in (2, 4, 16):
        ladder = BoseLadder(dimension)
        print(
            f'd={dimension}: trace [c, c*] = {ladder.trace}, '
            f'|[c, c*] - 1| = {ladder.defect}',
        )


def main() -> None:
    logging.basicConfig(level=logging.DEBUG)
    spinors()
    bispinors()
    ladders()


if __name__ == '__main__':
    main()

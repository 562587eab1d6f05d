"""Dirac bispinors as pairs of Weyl spinors (q2bits)."""

from __future__ import annotations

import functools

import numpy as np

from relqubit.basic_types import (
    Bispinor,
    FourVector,
    GammaMatrix,
    Q2BitAmplitudes,
    SpinMatrix,
    ValidationError,
    WeylSpinor,
)
from relqubit.lorentz import act_spinor
from relqubit.spinor_core import IDENTITY, PAULI

_ZERO = np.zeros((2, 2), dtype=np.complex128)


@functools.cache
def _gammas() -> tuple[GammaMatrix, ...]:
    gamma0 = np.block([[_ZERO, IDENTITY], [IDENTITY, _ZERO]])
    spatial = tuple(np.block([[_ZERO, -sigma], [sigma, _ZERO]]) for sigma in PAULI)
    return (gamma0, *spatial)


def gamma(mu: int) -> GammaMatrix:
    """Return gamma^mu in the 2x2 block (chiral) form."""
    if mu not in range(4):
        msg = f'gamma index must be one of 0, 1, 2, 3, got {mu}'
        raise ValidationError(msg)
    return _gammas()[mu].copy()


def gamma5() -> GammaMatrix:
    """Return i g0 g1 g2 g3, which is +1 on phi_R and -1 on phi_L."""
    return 1j * gamma(0) @ gamma(1) @ gamma(2) @ gamma(3)


def to_q2bit(psi: Bispinor) -> Q2BitAmplitudes:
    """Read a bispinor as two qubits: spin index first, chirality second."""
    return Q2BitAmplitudes(
        c00=psi.phi_r.c0,
        c01=psi.phi_l.c0,
        c10=psi.phi_r.c1,
        c11=psi.phi_l.c1,
    )


def from_q2bit(amplitudes: Q2BitAmplitudes) -> Bispinor:
    return Bispinor(
        phi_r=WeylSpinor(c0=amplitudes.c00, c1=amplitudes.c10),
        phi_l=WeylSpinor(c0=amplitudes.c01, c1=amplitudes.c11),
    )


def current(psi: Bispinor) -> FourVector:
    """Return j^mu = psi* g0 g^mu psi."""
    vector = psi.as_array()
    adjoint = vector.conj() @ gamma(0)
    return FourVector.from_array(
        [(adjoint @ gamma(mu) @ vector).real for mu in range(4)],
    )


def invariant_scalar(psi: Bispinor) -> float:
    """Return psi* g0 psi = phi_R* phi_L + phi_L* phi_R."""
    return 2 * float(np.vdot(psi.phi_r.as_array(), psi.phi_l.as_array()).real)


def pseudoscalar(psi: Bispinor) -> float:
    """Return i psi* g0 g5 psi = 2 Im(phi_R* phi_L)."""
    return 2 * float(np.vdot(psi.phi_r.as_array(), psi.phi_l.as_array()).imag)


def transform_bispinor(matrix: SpinMatrix, psi: Bispinor) -> Bispinor:
    """Apply A to phi_R and (A*)^-1 to phi_L."""
    return Bispinor(
        phi_r=act_spinor(matrix, psi.phi_r),
        phi_l=act_spinor(matrix.adjoint().inverse(), psi.phi_l),
    )


def parity(psi: Bispinor) -> Bispinor:
    """Exchange the right- and left-handed halves."""
    return Bispinor(phi_r=psi.phi_l, phi_l=psi.phi_r)

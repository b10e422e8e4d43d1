"""Gibbs states of the ring models and their two-qubit reductions.

Temperatures are in units with the Boltzmann constant equal to 1.  For
``T > 0`` the thermal state is built from the numerically obtained
spectrum with energies shifted by the ground energy before
exponentiation, so inverse temperatures up to ``1e3`` never overflow
(the shift cancels in the normalized state).  ``T = 0`` means the
equal-weight mixture over the degenerate ground group, which is exactly
how the zero-temperature concurrence limits arise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .concurrence import XStateParams, closed_form_xstate
from .errors import InvalidTemperature, NotHermitian
from .linalg import hermitian_eigen
from .spinmodel import ModelSpec, build_hamiltonian

_TRACE_TOL = 1e-10
_HERMITICITY_ATOL = 1e-10


@dataclass(frozen=True)
class ThermalPoint:
    """Temperature with the derived dimensionless quantities.

    ``beta = 1/T`` (infinity at ``T = 0``), ``x = beta * J`` and
    ``z = exp(x)``; the pair ``(x, z)`` is what every closed form is
    written in.
    """

    T: float
    beta: float
    x: float
    z: float

    @classmethod
    def at(cls, T: float, J: float) -> "ThermalPoint":
        if T < 0.0:
            raise InvalidTemperature(f"temperature must be >= 0, got {T}")
        if T == 0.0:
            beta = math.inf
            x = math.copysign(math.inf, J) if J != 0.0 else 0.0
        else:
            beta = 1.0 / T
            x = J / T
        return cls(T=T, beta=beta, x=x, z=math.exp(x))


@dataclass(frozen=True)
class DensityMatrix:
    """Validated density matrix (4x4 or 8x8): Hermitian with unit trace."""

    mat: np.ndarray

    def __post_init__(self) -> None:
        mat = np.asarray(self.mat, dtype=complex)
        object.__setattr__(self, "mat", mat)
        if mat.shape not in ((4, 4), (8, 8)):
            raise ValueError(f"expected a 4x4 or 8x8 matrix, got {mat.shape}")
        if float(np.abs(mat - mat.conj().T).max()) > _HERMITICITY_ATOL:
            raise NotHermitian("density matrix is not Hermitian")
        trace = complex(np.trace(mat))
        if abs(trace - 1.0) > _TRACE_TOL:
            raise ValueError(f"trace must be 1, got {trace!r}")

    @property
    def dim(self) -> int:
        return self.mat.shape[0]


def partition_function(spec: ModelSpec, T: float) -> float:
    """Sum of Boltzmann weights over the numerically obtained spectrum."""
    if T <= 0.0:
        raise InvalidTemperature(f"partition function needs T > 0, got {T}")
    energies = hermitian_eigen(build_hamiltonian(spec)).eigenvalues
    beta = 1.0 / T
    emin = float(energies.min())
    shifted = float(np.exp(-beta * (energies - emin)).sum())
    try:
        return math.exp(-beta * emin) * shifted
    except OverflowError:
        return math.inf


def gibbs_density(spec: ModelSpec, T: float) -> DensityMatrix:
    """Thermal equilibrium state ``exp(-H/T) / Z`` of the model.

    At ``T = 0`` this is the projector onto the degenerate ground group
    divided by its degeneracy (grouping per
    :meth:`spinthermal.linalg.Spectrum.degenerate_groups`).
    """
    if T < 0.0:
        raise InvalidTemperature(f"temperature must be >= 0, got {T}")
    spectrum = hermitian_eigen(build_hamiltonian(spec))
    vecs = spectrum.eigenvectors
    if T == 0.0:
        ground = spectrum.degenerate_groups()[0]
        cols = vecs[:, ground]
        rho = (cols @ cols.conj().T) / len(ground)
    else:
        energies = spectrum.eigenvalues
        weights = np.exp(-(energies - energies.min()) / T)
        rho = (vecs * weights) @ vecs.conj().T / weights.sum()
    return DensityMatrix((rho + rho.conj().T) / 2.0)


def partial_trace(rho, site: int = 3):
    """Trace one qubit out of an 8x8 operator.

    ``site`` counts from 1; the returned 4x4 operator keeps the two
    remaining qubits in their original order.  A plain array input
    returns a plain array (useful for unnormalized projector sums), a
    :class:`DensityMatrix` returns a :class:`DensityMatrix`.
    """
    if site not in (1, 2, 3):
        raise ValueError(f"site must be 1, 2 or 3, got {site}")
    mat = getattr(rho, "mat", rho)
    mat = np.asarray(mat, dtype=complex)
    if mat.shape != (8, 8):
        raise ValueError(f"expected an 8x8 matrix, got {mat.shape}")
    cube = mat.reshape(2, 2, 2, 2, 2, 2)
    reduced = np.trace(cube, axis1=site - 1, axis2=site + 2).reshape(4, 4)
    if isinstance(rho, DensityMatrix):
        return DensityMatrix(reduced)
    return reduced


def xstate_params(spec: ModelSpec, T: float) -> XStateParams:
    """Closed-form (u, v, w, y, Z) of the reduced two-qubit state.

    Only the XX, XXZ and uniform-field models have closed forms; the
    general XYZ variant raises ``UnsupportedModel``.  Field-free models
    come out with ``u == v`` exactly.
    """
    J, delta, B = spec.closed_form_params()
    return closed_form_xstate(J, delta, B, T)

"""Wootters concurrence for two-qubit states.

Three routes are provided:

* :func:`concurrence_general`: the spin-flip definition for an
  arbitrary 4x4 density matrix.  The eigenvalues of ``rho @ rho_tilde``
  (not Hermitian in general) are obtained through the Hermitian,
  positive-semidefinite similarity ``sqrt(rho) @ rho_tilde @ sqrt(rho)``,
  which has the same spectrum, so all spectral work stays inside the
  Jacobi solver.
* :func:`concurrence_xstate`: the shortcut for the X-shaped reduced
  states produced by the ring models, parameterized by
  :class:`XStateParams`.
* :func:`concurrence_closed_form`: fully scalar expressions in
  ``(J, delta, B, T)`` for the XX, XXZ and uniform-field models; the
  independent check against the numeric pipeline.

Complex conjugation in the spin flip is taken entry-wise in the
computational basis fixed by :mod:`spinthermal.spinmodel`; pinning the
basis makes every intermediate quantity reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidTemperature
from .linalg import PSD_FLOOR, hermitian_eigen, kron, psd_sqrt
from .spinmodel import SIGMA_Y, ModelSpec

#: Two-qubit spin-flip operator; real antidiagonal (-1, 1, 1, -1).
SPIN_FLIP = kron(SIGMA_Y, SIGMA_Y)

_XSTATE_TRACE_TOL = 1e-10


@dataclass(frozen=True)
class ConcurrenceResult:
    """Sorted spin-flip eigenvalue roots and the concurrence they give."""

    lambdas: tuple[float, float, float, float]
    C: float


@dataclass(frozen=True)
class XStateParams:
    """Closed-form parameters of the ring's reduced two-qubit state.

    The reduced state is ``(2 / (3 Z)) * [[u, 0, 0, 0], [0, w, y, 0],
    [0, y, w, 0], [0, 0, 0, v]]`` in the (00, 01, 10, 11) basis, so unit
    trace pins ``2 (u + v + 2 w) = 3 Z``.  Field-free models have
    ``u == v``.
    """

    u: float
    v: float
    w: float
    y: float
    Z: float

    def __post_init__(self) -> None:
        values = (self.u, self.v, self.w, self.y, self.Z)
        if not all(math.isfinite(x) for x in values):
            return  # extreme-parameter overflow; consistency is meaningless
        if min(self.u, self.v, self.w) < 0.0 or self.Z <= 0.0:
            raise ValueError("u, v, w must be nonnegative and Z positive")
        trace = 2.0 * (self.u + self.v + 2.0 * self.w) / (3.0 * self.Z)
        if abs(trace - 1.0) > _XSTATE_TRACE_TOL:
            raise ValueError(f"parameters violate unit trace: {trace!r}")

    def reduced_matrix(self) -> np.ndarray:
        """The 4x4 density matrix described by these parameters."""
        scale = 2.0 / (3.0 * self.Z)
        out = np.zeros((4, 4), dtype=complex)
        out[0, 0] = scale * self.u
        out[3, 3] = scale * self.v
        out[1, 1] = out[2, 2] = scale * self.w
        out[1, 2] = out[2, 1] = scale * self.y
        return out


def _as_matrix(rho) -> np.ndarray:
    mat = getattr(rho, "mat", rho)
    mat = np.asarray(mat, dtype=complex)
    if mat.shape != (4, 4):
        raise ValueError(f"expected a 4x4 density matrix, got shape {mat.shape}")
    return mat


def spin_flip(rho) -> np.ndarray:
    """The tilde transform ``(sy x sy) conj(rho) (sy x sy)``."""
    mat = _as_matrix(rho)
    return SPIN_FLIP @ mat.conj() @ SPIN_FLIP


def concurrence_general(rho) -> ConcurrenceResult:
    """Concurrence of an arbitrary two-qubit density matrix.

    Accepts a plain 4x4 array or anything exposing ``.mat``.  The four
    lambdas are the square roots of the eigenvalues of the spin-flipped
    product, descending; the concurrence is
    ``max(l1 - l2 - l3 - l4, 0)``.
    """
    mat = _as_matrix(rho)
    root = psd_sqrt(mat)
    mixed = root @ spin_flip(mat) @ root
    vals = hermitian_eigen((mixed + mixed.conj().T) / 2.0).eigenvalues
    if float(vals.min()) < PSD_FLOOR:
        raise ValueError(f"spin-flip product eigenvalue {vals.min():.3e} < 0")
    lams = np.sqrt(np.clip(vals, 0.0, None))[::-1]
    diff = float(lams[0] - lams[1] - lams[2] - lams[3])
    return ConcurrenceResult(lambdas=tuple(float(x) for x in lams), C=max(diff, 0.0))


def concurrence_xstate(params: XStateParams) -> float:
    """Concurrence of the X-shaped reduced state: ``(4 / 3Z) max(|y| - sqrt(uv), 0)``."""
    gap = abs(params.y) - math.sqrt(params.u * params.v)
    return (4.0 / (3.0 * params.Z)) * max(gap, 0.0)


def closed_form_xstate(J: float, delta: float, B: float, T: float) -> XStateParams:
    """Scalar evaluation of (u, v, w, y, Z) at temperature ``T``.

    Works for every model with a closed form; ``delta = 0`` gives the XX
    expressions and ``B = 0`` the field-free ones (where ``u == v``).
    """
    if T <= 0.0:
        raise InvalidTemperature(f"closed forms need T > 0, got {T}")
    z = math.exp(J / T)
    b = B / T
    weight = z ** (2.0 * delta)
    band = weight * (2.0 * z + z**-2)
    u = 1.5 * math.exp(3.0 * b) + 0.5 * math.exp(b) * band
    v = 1.5 * math.exp(-3.0 * b) + 0.5 * math.exp(-b) * band
    w = math.cosh(b) * band
    y = math.cosh(b) * weight * (z**-2 - z)
    Z = 2.0 * math.cosh(3.0 * b) + 2.0 * math.cosh(b) * band
    return XStateParams(u=u, v=v, w=w, y=y, Z=Z)


def concurrence_closed_form(spec: ModelSpec, T: float) -> float:
    """Concurrence straight from the scalar closed forms.

    For the field-free models this is a single rational expression in
    ``z = exp(J/T)``; with a field it is the X-state formula on the
    scalar parameters.  Raises ``UnsupportedModel`` for the general XYZ
    variant and ``InvalidTemperature`` for ``T <= 0``.
    """
    J, delta, B = spec.closed_form_params()
    if T <= 0.0:
        raise InvalidTemperature(f"closed forms need T > 0, got {T}")
    if spec.variant in ("xx", "xxz"):
        z = math.exp(J / T)
        weight = z ** (2.0 * delta)
        num = 2.0 * weight * abs(z**-2 - z) - 3.0 - 2.0 * weight * z - weight * z**-2
        den = 3.0 * (1.0 + 2.0 * weight * z + weight * z**-2)
        return max(num / den, 0.0)
    return concurrence_xstate(closed_form_xstate(J, delta, B, T))

"""Three-qubit Heisenberg ring Hamiltonians and their symmetry structure.

Basis conventions, fixed and not configurable:

* the basis state ``|q1 q2 q3>`` maps to index ``4*q1 + 2*q2 + q3``
  (qubit 1 is the most significant bit);
* ``sigma^z |1> = +|1>`` and ``sigma^z |0> = -|0>``, so a uniform field
  ``B * sum_n sigma_n^z`` gives ``|000>`` the energy ``-3B``.

Couplings follow the standard ring form: ``J/2`` on each ``xx + yy``
bond, ``Delta*J/2`` on each ``(zz - 1)`` bond, with periodic boundary
(site 4 is site 1).  Positive ``J`` is the antiferromagnetic side,
negative ``J`` the ferromagnetic side.  All four uniform models share
one eigenbasis because the anisotropy and field terms commute with the
hopping term; :func:`analytic_eigenstates` returns it explicitly so the
numerics can be checked against exact expressions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import UnsupportedModel
from .linalg import kron

VARIANTS = ("xx", "xxz", "xxzfield", "xyz")

IDENTITY_2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, 1.0j], [-1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[-1.0, 0.0], [0.0, 1.0]], dtype=complex)
SIGMA_PLUS = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex)
SIGMA_MINUS = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)

_AXIS_TABLE = {
    "x": SIGMA_X,
    "y": SIGMA_Y,
    "z": SIGMA_Z,
    "+": SIGMA_PLUS,
    "-": SIGMA_MINUS,
}

# Primitive cube root of unity; the phase carried by the translation
# eigenstates of the ring.
Q = complex(-0.5, math.sqrt(3.0) / 2.0)

# Cyclic-shift eigenphase of each analytic eigenstate, in state order.
# States 0, 3, 6, 7 are fully symmetric; the two chiral pairs pick up
# conjugate phases (states 1 and 4 share Q, states 2 and 5 share Q**2).
SHIFT_PHASES = (1.0 + 0.0j, Q, Q * Q, 1.0 + 0.0j, Q, Q * Q, 1.0 + 0.0j, 1.0 + 0.0j)

_RING_BONDS = ((1, 2), (2, 3), (3, 1))


def basis_index(q1: int, q2: int, q3: int) -> int:
    """Index of ``|q1 q2 q3>`` in the computational basis."""
    return 4 * q1 + 2 * q2 + q3


@dataclass(frozen=True)
class ModelSpec:
    """Which Hamiltonian to build, with its couplings.

    Fields that do not belong to the chosen ``variant`` stay ``None`` and
    are ignored.  Use the classmethod constructors rather than filling
    fields by hand.
    """

    variant: str
    J: float | None = None
    delta: float | None = None
    B: float | None = None
    J1: float | None = None
    J2: float | None = None
    J3: float | None = None
    B1: float | None = None
    B2: float | None = None
    B3: float | None = None

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown model variant {self.variant!r}")
        required = {
            "xx": ("J",),
            "xxz": ("J", "delta"),
            "xxzfield": ("J", "delta", "B"),
            "xyz": ("J1", "J2", "J3", "B1", "B2", "B3"),
        }[self.variant]
        for name in required:
            value = getattr(self, name)
            if value is None:
                raise ValueError(f"variant {self.variant!r} requires field {name!r}")
            if not math.isfinite(value):
                raise ValueError(f"field {name!r} must be finite, got {value!r}")

    @classmethod
    def xx(cls, J: float) -> "ModelSpec":
        return cls("xx", J=float(J))

    @classmethod
    def xxz(cls, J: float, delta: float) -> "ModelSpec":
        return cls("xxz", J=float(J), delta=float(delta))

    @classmethod
    def xxz_field(cls, J: float, delta: float, B: float) -> "ModelSpec":
        return cls("xxzfield", J=float(J), delta=float(delta), B=float(B))

    @classmethod
    def general_xyz(
        cls,
        J1: float,
        J2: float,
        J3: float,
        B1: float = 0.0,
        B2: float = 0.0,
        B3: float = 0.0,
    ) -> "ModelSpec":
        return cls(
            "xyz",
            J1=float(J1),
            J2=float(J2),
            J3=float(J3),
            B1=float(B1),
            B2=float(B2),
            B3=float(B3),
        )

    def closed_form_params(self) -> tuple[float, float, float]:
        """Effective ``(J, delta, B)`` for the models with closed forms.

        The XX model is delta = 0, the field-free models are B = 0.
        Raises ``UnsupportedModel`` for the general XYZ variant.
        """
        if self.variant == "xx":
            return float(self.J), 0.0, 0.0
        if self.variant == "xxz":
            return float(self.J), float(self.delta), 0.0
        if self.variant == "xxzfield":
            return float(self.J), float(self.delta), float(self.B)
        raise UnsupportedModel("no closed form for the general XYZ model")


def pauli(site: int, axis: str) -> np.ndarray:
    """Single-site operator embedded in the three-qubit space.

    ``axis`` is one of ``x``, ``y``, ``z``, ``+``, ``-`` with
    ``sigma^{+-} = (sigma^x +- i sigma^y) / 2``; ``site`` counts from 1.
    """
    if site not in (1, 2, 3):
        raise ValueError(f"site must be 1, 2 or 3, got {site}")
    try:
        op = _AXIS_TABLE[axis]
    except KeyError:
        raise ValueError(f"axis must be one of x, y, z, +, -; got {axis!r}") from None
    factors = [IDENTITY_2, IDENTITY_2, IDENTITY_2]
    factors[site - 1] = op
    return kron(kron(factors[0], factors[1]), factors[2])


def build_hamiltonian(spec: ModelSpec) -> np.ndarray:
    """8x8 Hamiltonian of the requested ring model.

    Prefactors are kept exactly as defined for each variant (``J/2`` on
    ``xx + yy``, ``delta*J/2`` on ``zz - 1``, ``J_a/2`` per axis for the
    general model) so the exact energy expressions hold digit for digit.
    """
    h = np.zeros((8, 8), dtype=complex)
    eye = np.eye(8, dtype=complex)
    if spec.variant == "xyz":
        couplings = (spec.J1, spec.J2, spec.J3)
        fields = (spec.B1, spec.B2, spec.B3)
        for n, m in _RING_BONDS:
            for coupling, axis in zip(couplings, "xyz"):
                h = h + (coupling / 2.0) * (pauli(n, axis) @ pauli(m, axis))
        for n in (1, 2, 3):
            h = h + fields[n - 1] * pauli(n, "z")
        return h

    J, delta, B = spec.closed_form_params()
    for n, m in _RING_BONDS:
        h = h + (J / 2.0) * (
            pauli(n, "x") @ pauli(m, "x") + pauli(n, "y") @ pauli(m, "y")
        )
        if spec.variant in ("xxz", "xxzfield"):
            h = h + (delta * J / 2.0) * (pauli(n, "z") @ pauli(m, "z") - eye)
    if spec.variant == "xxzfield":
        for n in (1, 2, 3):
            h = h + B * pauli(n, "z")
    return h


def cyclic_shift() -> np.ndarray:
    """Permutation matrix of the ring rotation ``|ijk> -> |kij>``."""
    p = np.zeros((8, 8), dtype=complex)
    for i in (0, 1):
        for j in (0, 1):
            for k in (0, 1):
                p[basis_index(k, i, j), basis_index(i, j, k)] = 1.0
    return p


def _ket(q1: int, q2: int, q3: int) -> np.ndarray:
    v = np.zeros(8, dtype=complex)
    v[basis_index(q1, q2, q3)] = 1.0
    return v


def analytic_eigenstates() -> list[np.ndarray]:
    """The eight exact eigenstates shared by all uniform ring models.

    State 0 is ``|000>`` and state 7 is ``|111>``; states 1..3 live in
    the single-excitation sector and 4..6 in the double-excitation
    sector, each sector holding one symmetric combination and two
    chiral ones weighted by powers of :data:`Q`.  All are unit vectors
    and pairwise orthonormal.
    """
    s = 1.0 / math.sqrt(3.0)
    q, q2 = Q, Q * Q
    return [
        _ket(0, 0, 0),
        s * (q * _ket(0, 0, 1) + q2 * _ket(0, 1, 0) + _ket(1, 0, 0)),
        s * (q2 * _ket(0, 0, 1) + q * _ket(0, 1, 0) + _ket(1, 0, 0)),
        s * (_ket(0, 0, 1) + _ket(0, 1, 0) + _ket(1, 0, 0)),
        s * (q * _ket(1, 1, 0) + q2 * _ket(1, 0, 1) + _ket(0, 1, 1)),
        s * (q2 * _ket(1, 1, 0) + q * _ket(1, 0, 1) + _ket(0, 1, 1)),
        s * (_ket(1, 1, 0) + _ket(1, 0, 1) + _ket(0, 1, 1)),
        _ket(1, 1, 1),
    ]


def analytic_energies(spec: ModelSpec) -> np.ndarray:
    """Exact energies of the eight analytic eigenstates, in state order.

    Only the uniform models have a closed spectrum here; the general XYZ
    variant raises ``UnsupportedModel``.
    """
    if spec.variant == "xyz":
        raise UnsupportedModel("no analytic spectrum for the general XYZ model")
    J, delta, B = spec.closed_form_params()
    e_single = -2.0 * J * (delta + 0.5)
    e_symmetric = -2.0 * J * (delta - 1.0)
    return np.array(
        [
            -3.0 * B,
            e_single - B,
            e_single - B,
            e_symmetric - B,
            e_single + B,
            e_single + B,
            e_symmetric + B,
            3.0 * B,
        ]
    )

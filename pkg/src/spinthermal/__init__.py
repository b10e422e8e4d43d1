"""Thermal pairwise entanglement in three-qubit Heisenberg rings.

Builds the ring Hamiltonians (XX, XXZ, XXZ in a uniform field, general
XYZ), diagonalizes them exactly, forms Gibbs states and two-qubit
reductions, and evaluates the Wootters concurrence both numerically and
through closed forms, plus the critical temperatures, entanglement
regions and zero-temperature transition values that follow.
"""

from .analysis import (
    CriticalPoint,
    FieldCurves,
    RegionVerdict,
    SweepAxis,
    SweepConfig,
    P1,
    P2,
    Z0,
    delta_boundary,
    field_curves_half,
    field_region,
    sweep,
    xx_critical,
    xx_region,
    xxx_field_threshold,
    xxz_critical,
    xxz_region,
    zero_temperature_concurrence,
)
from .concurrence import (
    ConcurrenceResult,
    XStateParams,
    concurrence_closed_form,
    concurrence_general,
    concurrence_xstate,
    spin_flip,
)
from .errors import (
    ConfigError,
    InvalidGrid,
    InvalidTemperature,
    NoConvergence,
    NoRoot,
    NotHermitian,
    NotPSD,
    OutOfDomain,
    ParseError,
    SpinThermalError,
    UnknownKey,
    UnsupportedModel,
    ValidationError,
)
from .linalg import Spectrum, hermitian_eigen, kron, psd_sqrt
from .spinmodel import (
    ModelSpec,
    Q,
    SHIFT_PHASES,
    analytic_eigenstates,
    analytic_energies,
    basis_index,
    build_hamiltonian,
    cyclic_shift,
    pauli,
)
from .thermalstate import (
    DensityMatrix,
    ThermalPoint,
    gibbs_density,
    partial_trace,
    partition_function,
    xstate_params,
)

__version__ = "0.1.0"

__all__ = [
    "ConcurrenceResult",
    "ConfigError",
    "CriticalPoint",
    "DensityMatrix",
    "FieldCurves",
    "InvalidGrid",
    "InvalidTemperature",
    "ModelSpec",
    "NoConvergence",
    "NoRoot",
    "NotHermitian",
    "NotPSD",
    "OutOfDomain",
    "P1",
    "P2",
    "ParseError",
    "Q",
    "RegionVerdict",
    "SHIFT_PHASES",
    "Spectrum",
    "SpinThermalError",
    "SweepAxis",
    "SweepConfig",
    "ThermalPoint",
    "UnknownKey",
    "UnsupportedModel",
    "ValidationError",
    "XStateParams",
    "Z0",
    "analytic_eigenstates",
    "analytic_energies",
    "basis_index",
    "build_hamiltonian",
    "concurrence_closed_form",
    "concurrence_general",
    "concurrence_xstate",
    "cyclic_shift",
    "delta_boundary",
    "field_curves_half",
    "field_region",
    "gibbs_density",
    "hermitian_eigen",
    "kron",
    "partial_trace",
    "partition_function",
    "pauli",
    "psd_sqrt",
    "spin_flip",
    "sweep",
    "xstate_params",
    "xx_critical",
    "xx_region",
    "xxx_field_threshold",
    "xxz_critical",
    "xxz_region",
    "zero_temperature_concurrence",
]

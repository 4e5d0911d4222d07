__all__ = [
    "InversionResult",
    "CLOSED_FORM",
    "TRIANGULAR",
    "FIXED_POINT",
    "METHODS",
    "solve",
    "residual",
    "exp_identity",
    "inverse_check",
    "residual_check",
    "solve_general",
    "compose_general",
    "PowerSeriesCoeffs",
    "power_polynomials",
    "classical_oracle",
    "bridge",
    "InversionError",
    "FixedPointNotConverged",
    "SupportViolation",
    "InvalidPowerSeries",
]

from dirlag.inversion.result import InversionResult
from dirlag.inversion.result import CLOSED_FORM, TRIANGULAR, FIXED_POINT, METHODS
from dirlag.inversion.solvers import solve
from dirlag.inversion.solvers import residual
from dirlag.inversion.identities import exp_identity
from dirlag.inversion.identities import inverse_check
from dirlag.inversion.identities import residual_check
from dirlag.inversion.general import solve_general
from dirlag.inversion.general import compose_general
from dirlag.inversion.classical import PowerSeriesCoeffs
from dirlag.inversion.classical import power_polynomials
from dirlag.inversion.classical import classical_oracle
from dirlag.inversion.classical import bridge

from dirlag.inversion.exceptions import \
    InversionError, \
    FixedPointNotConverged, \
    SupportViolation, \
    InvalidPowerSeries

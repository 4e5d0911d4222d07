__all__ = [
    "initialise",
    "DirichletSeries",
    "dmul",
    "dexp",
    "dlog",
    "dpow",
    "dderiv",
    "dshift",
    "compose_inner",
    "dexp_graded",
    "dexp_log_recursive",
    "factorize",
    "divisors",
    "big_omega",
    "log_value",
    "SeriesError",
    "OrderMismatch",
    "ModeMismatch",
    "NotInD0",
    "NotUnit",
    "InexactShift",
]

from dirlag.dseries.arith import initialise
from dirlag.dseries.arith import factorize
from dirlag.dseries.arith import divisors
from dirlag.dseries.arith import big_omega
from dirlag.dseries.arith import log_value
from dirlag.dseries.series import DirichletSeries
from dirlag.dseries.operations import dmul
from dirlag.dseries.operations import dexp
from dirlag.dseries.operations import dlog
from dirlag.dseries.operations import dpow
from dirlag.dseries.operations import dderiv
from dirlag.dseries.operations import dshift
from dirlag.dseries.operations import compose_inner
from dirlag.dseries.operations import dexp_graded
from dirlag.dseries.operations import dexp_log_recursive

from dirlag.dseries.exceptions import \
    SeriesError, \
    OrderMismatch, \
    ModeMismatch, \
    NotInD0, \
    NotUnit, \
    InexactShift

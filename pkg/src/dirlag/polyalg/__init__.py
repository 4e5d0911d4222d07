__all__ = [
    "SymbolicScalar",
    "UniPoly",
    "binomial_poly",
    "poly_shift",
    "poly_integrate",
    "eval_numeric",
    "parse_rational",
    "format_rational",
    "is_rational_string",
    "symbol",
    "PolyAlgError",
    "MissingVariable",
    "InexactOperation",
    "InvalidRational",
]

from dirlag.polyalg.symbolic import SymbolicScalar
from dirlag.polyalg.unipoly import UniPoly
from dirlag.polyalg.unipoly import binomial_poly
from dirlag.polyalg.unipoly import poly_shift
from dirlag.polyalg.unipoly import poly_integrate
from dirlag.polyalg.evaluation import eval_numeric
from dirlag.polyalg.rational import parse_rational
from dirlag.polyalg.rational import format_rational
from dirlag.polyalg.rational import is_rational_string

from dirlag.polyalg.exceptions import \
    PolyAlgError, \
    MissingVariable, \
    InexactOperation, \
    InvalidRational

symbol = SymbolicScalar.symbol

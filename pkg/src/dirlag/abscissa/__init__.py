__all__ = [
    "AnalyticDescriptor",
    "zeta_shift",
    "log_weighted",
    "descriptor",
    "EvalResult",
    "eval_f",
    "eval_fprime",
    "eval_fsecond",
    "AbscissaResult",
    "INTERIOR_MIN",
    "BOUNDARY_MIN",
    "sigma_g",
    "minimize_F",
    "curve_dump",
    "write_curve",
    "AbscissaError",
    "TailBoundUnreachable",
    "ClassificationInconclusive",
    "BracketFailure",
]

from dirlag.abscissa.descriptors import AnalyticDescriptor
from dirlag.abscissa.descriptors import zeta_shift
from dirlag.abscissa.descriptors import log_weighted
from dirlag.abscissa.descriptors import descriptor
from dirlag.abscissa.evaluation import EvalResult
from dirlag.abscissa.evaluation import eval_f
from dirlag.abscissa.evaluation import eval_fprime
from dirlag.abscissa.evaluation import eval_fsecond
from dirlag.abscissa.minimum import AbscissaResult
from dirlag.abscissa.minimum import INTERIOR_MIN, BOUNDARY_MIN
from dirlag.abscissa.minimum import sigma_g
from dirlag.abscissa.minimum import minimize_F
from dirlag.abscissa.minimum import curve_dump
from dirlag.abscissa.minimum import write_curve

from dirlag.abscissa.exceptions import \
    AbscissaError, \
    TailBoundUnreachable, \
    ClassificationInconclusive, \
    BracketFailure

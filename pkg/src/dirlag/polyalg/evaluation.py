import math

from dirlag.polyalg.symbolic import SymbolicScalar, log_symbol_prime
from dirlag.polyalg.exceptions import MissingVariable


def _variable_value(name, assignment):
    if name in assignment:
        return complex(assignment[name])
    prime = log_symbol_prime(name)
    if prime is not None:
        return complex(math.log(prime))
    raise MissingVariable(name)


def eval_numeric(p, assignment=None):
    """
        Evaluates an exact scalar or a polynomial in x at complex binary64 values.

        Log symbols L_p default to ln p; every other variable must be assigned.
    """
    from dirlag.polyalg.unipoly import UniPoly

    if assignment is None:
        assignment = {}
    assert isinstance(assignment, dict), "assignment expected to be dict. Got {:s}".format(repr(assignment))

    if isinstance(p, UniPoly):
        if "x" not in assignment:
            raise MissingVariable("x")
        point = complex(assignment["x"])
        result = 0j
        for coefficient in reversed(p.coefficients):
            result = result * point + eval_numeric(coefficient, assignment)
        return result

    if isinstance(p, SymbolicScalar):
        total = 0j
        for (monomial, coefficient) in p.terms():
            value = complex(coefficient.numerator / coefficient.denominator)
            for (name, exponent) in monomial:
                value *= _variable_value(name, assignment) ** exponent
            total += value
        return total

    return complex(p)

from dirlag import globals
from dirlag.checks import CheckResult
from dirlag.polyalg import scalars
from dirlag.polyalg.symbolic import SymbolicScalar
from dirlag.dseries.operations import dexp, compose_inner
from dirlag.families.generation import family_from_generator
from dirlag.families.transforms import beta_transform
from dirlag.inversion.result import CLOSED_FORM
from dirlag.inversion.solvers import solve

EXP_IDENTITY = "exp_identity"
INVERSE_CHECK = "inverse_check"
RESIDUAL = "residual"


def _compare(name, lhs, rhs):
    n = lhs.first_difference(rhs)
    if n is None:
        return CheckResult.success(name)
    return CheckResult.failure(name, n, lhs[n], rhs[n])


def exp_identity(f, w, x=None):
    """
        exp(x g(s)) = 1 + x sum_{n >= 2} hat(alpha_n)(x + w ln n) n^{-s}, g solving f(s - w g) = g.

        The right side is the beta transform of the family generated by f, read at x. Exact
        mode keeps x an indeterminate unless a value is given.
    """
    if x is None:
        assert f.mode == globals.EXACT, "numeric mode needs a value for x"
        x = SymbolicScalar.symbol("x")
    x = scalars.coerce(x, f.mode)
    g = solve(f, w, CLOSED_FORM, check_residual=False).g
    lhs = dexp(g.scale(x))
    rhs = beta_transform(family_from_generator(f), w).to_series(x)
    return _compare(EXP_IDENTITY, lhs, rhs)


def inverse_check(f, w, g=None):
    """
        g(s + w f(s)) = f(s) for the solution g of f(s - w g(s)) = g(s).
    """
    if g is None:
        g = solve(f, w, check_residual=False).g
    w = scalars.coerce(w, f.mode)
    return _compare(INVERSE_CHECK, compose_inner(g, f, -w), f)


def residual_check(f, w, g):
    return _compare(RESIDUAL, compose_inner(f, g, w), g)

"""The canonical Poisson bracket of first integrals in Darboux coordinates.

On a (2p+1)-dimensional contact chart with the normal-form contact form,
functions independent of the last coordinate close under

    {f, g} = sum_i  df/dx_{2i} * dg/dx_{2i-1} - dg/dx_{2i} * df/dx_{2i-1},

which is the classical bracket on the first 2p coordinates.
"""

from __future__ import annotations

from .poly import Poly
from .structure import PreconditionError


def darboux_vars(p: int, with_contact_coordinate: bool = False):
    n = 2 * p + 1 if with_contact_coordinate else 2 * p
    return tuple(f"x{i}" for i in range(1, n + 1))


def darboux_poisson(p: int, f1: Poly, f2: Poly) -> Poly:
    """Exact bracket of two first integrals.

    Accepts polynomials over x1..x_{2p} or over x1..x_{2p+1}; dependence on
    the contact coordinate x_{2p+1} is a precondition error ("not a first
    integral").
    """
    if p < 1:
        raise PreconditionError("p must be >= 1")
    if f1.vars != f2.vars:
        raise PreconditionError("both arguments must share one variable list")
    short, long = darboux_vars(p), darboux_vars(p, True)
    if f1.vars not in (short, long):
        raise PreconditionError("arguments must live in Darboux coordinates")
    if f1.vars == long:
        if f1.degree_in(2 * p) > 0 or f2.degree_in(2 * p) > 0:
            raise PreconditionError("not a first integral")
    total = Poly.zero(f1.vars)
    for i in range(1, p + 1):
        even, odd = 2 * i - 1, 2 * i - 2  # 0-based indices of x_{2i}, x_{2i-1}
        total = total + f2.diff(even) * f1.diff(odd) - f1.diff(even) * f2.diff(odd)
    return total

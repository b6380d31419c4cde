"""Exact-symplectic algebras up to contraction: the diagonal model family.

Rescaling a basis by powers of a parameter t multiplies each structure
constant by t^(e_i + e_j - e_k); when no negative power survives, the
t -> 0 limit is a new (degenerate) Lie algebra.  The diagonal models

    [X1,X2] = X1, [X_{2k+1},X_{2k+2}] = X1,
    [X2,X_{2k+1}] = a_k X_{2k+1}, [X2,X_{2k+2}] = -(1+a_k) X_{2k+2}

absorb every exact-symplectic algebra under such limits, and their
parameters are frozen: any converging diagonal rescaling that lands back
in the family has the same a_k.  The parameters are read off the adjoint
spectrum of the principal basis vector X2.
"""

from itertools import product

from cartanlab import catalog as cat
from cartanlab.contraction import (
    ContractionSpec,
    contract,
    frobenius_model_parameters,
    is_reduced_frobenius_shape,
)
from cartanlab.forms import cartan_class
from cartanlab.liealg import LieAlgebra
from cartanlab.spectrum import adjoint_spectrum

print(__doc__)

print("The rank-1 simple algebra contracts onto the Heisenberg algebra:")
sl2 = cat.dim3("sl2").algebra
res = contract(ContractionSpec(sl2, (1, 1, 2)))
print("  exponents (1,1,2) converge:", res.converges,
      "; limit equals the Heisenberg table:",
      res.limit.same_constants(cat.heisenberg(1).algebra))

print()
print("Model family p = 2, parameter 5:")
g = cat.frobenius_model(2, [5]).algebra
print("  class of w1:", cartan_class(cat.frobenius_model(2, [5]).distinguished_form).value)
spec = adjoint_spectrum(g, 2)
print("  adjoint spectrum of X2:", [(str(v), m) for v, m in spec.eigenvalues],
      " -> contains 5 and -(1+5)")

print()
print("Fixed-point scan: all diagonal exponent vectors over {0,1,2}")
frozen = True
for exps in product((0, 1, 2), repeat=4):
    out = contract(ContractionSpec(g, exps))
    if out.converges:
        found = frobenius_model_parameters(out.limit)
        if found is not None and found != (g.constant(2, 3, 3),):
            frozen = False
print("  parameters frozen under every converging rescaling:", frozen)

print()
print("A non-model sample in an adapted basis degenerates into the reduced")
print("shape, where only the action of X2 and the pairing into X1 survive:")
sample = LieAlgebra(
    4,
    {
        (1, 2): {1: 1},
        (3, 4): {1: 1, 3: 2},
        (2, 3): {3: -1},
    },
)
out = contract(ContractionSpec(sample, (2, 0, 1, 1)))
print("  converges:", out.converges,
      "; reduced shape:", is_reduced_frobenius_shape(out.limit),
      "; recovered parameters:", tuple(str(x) for x in frobenius_model_parameters(out.limit)))

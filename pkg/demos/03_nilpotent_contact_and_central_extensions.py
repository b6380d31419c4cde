"""Contact nilpotent algebras are central extensions of symplectic ones.

The center of a contact nilpotent algebra is a line; quotienting by it
leaves an even-dimensional algebra carrying the induced closed 2-form, and
extending back by that form reproduces the original structure constants
exactly.  The round trip below is exact on the Heisenberg family and on
the dimension-9 filiform contact algebra.
"""

from cartanlab import catalog as cat
from cartanlab.deformation import central_extension, central_quotient
from cartanlab.forms import DualForm, cartan_class, ce_differential, wedge_power
from cartanlab.structure import center, lower_central_series

print(__doc__)

for entry in (cat.heisenberg(1), cat.heisenberg(2), cat.mu_c9([1, 2, 3])):
    g = entry.algebra
    z = center(g)
    series = lower_central_series(g)
    print(f"{entry.id}")
    print(f"  center dimension: {z.dim}   nilindex: {series.nilindex}")
    k, theta = central_quotient(g)
    print(f"  quotient dim {k.dim}; induced 2-form theta = {theta}")
    print(f"  theta closed: {ce_differential(theta).is_zero},"
          f" nondegenerate: {not wedge_power(theta, k.dim // 2).is_zero}")
    rebuilt = central_extension(k, theta)
    print(f"  re-extension reproduces the table: {rebuilt.same_constants(g)}")
    print(f"  class of the new central dual: {cartan_class(DualForm.basis(rebuilt, rebuilt.dim)).value}"
          f" = dim {k.dim} + 1")
    print()

print("Base case from scratch: the plane with its area form extends to the")
print("3-dimensional Heisenberg algebra.")
ab2 = cat.abelian(2).algebra
ext = central_extension(ab2, DualForm(ab2, 2, {(1, 2): 1}))
print("  extension equals the Heisenberg table:",
      ext.same_constants(cat.heisenberg(1).algebra))

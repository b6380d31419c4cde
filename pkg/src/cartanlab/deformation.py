"""Cochain calculus for deformations of a 2-step nilpotent bracket.

Implements the circle product

    phi o psi (X,Y,Z) = phi(psi(X,Y),Z) + phi(psi(Y,Z),X) + phi(psi(Z,X),Y),

the single-term bullet product psi1(psi2(X,Y),Z), the adjoint-valued
coboundaries, and the four compatibility equations of a quadratic
deformation mu_0 + phi_1 + phi_2.

Coboundary signs are pinned so that on the Heisenberg algebra a diagonal
endomorphism f (acting through phi_2(X_l, X_{2p+1}) = f(X_l)) satisfies

    d phi_2 (X_{2k-1}, X_{2k}, X_l) = -f(X_l),

which together with d o d = 0 fixes every other sign.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forms import DualForm, ce_differential, wedge_power
from .liealg import LieAlgebra, LinearMap, Vector
from .scalars import ONE, ZERO, Scalar
from .structure import PreconditionError, require_jacobi


def _zero_comps(n):
    return (ZERO,) * n


def _add_comps(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _neg_comps(a):
    return tuple(-x for x in a)


def _scale_comps(a, s):
    return tuple(x * s for x in a)


class BilinearMap:
    """Skew bilinear map on a LieAlgebra's space with values in the space.

    Values are stored for i < j only; entries are coordinate tuples.
    """

    __slots__ = ("algebra", "values")

    def __init__(self, algebra: LieAlgebra, values=None):
        self.algebra = algebra
        n = algebra.dim
        clean = {}
        for (i, j), comps in (values or {}).items():
            if not (1 <= i < j <= n):
                raise ValueError(f"bad pair ({i},{j})")
            if isinstance(comps, Vector):
                comps = comps.comps
            comps = tuple(Scalar.of(x) for x in comps)
            if len(comps) != n:
                raise ValueError("value length does not match dimension")
            if any(comps):
                clean[(i, j)] = comps
        self.values = clean

    @staticmethod
    def zero(algebra):
        return BilinearMap(algebra)

    @staticmethod
    def from_brackets(algebra, brackets):
        """brackets: {(i, j): {k: coeff}} exactly as for LieAlgebra."""
        n = algebra.dim
        values = {}
        for (i, j), terms in brackets.items():
            comps = [ZERO] * n
            for k, v in terms.items():
                comps[k - 1] = Scalar.of(v)
            values[(i, j)] = tuple(comps)
        return BilinearMap(algebra, values)

    @staticmethod
    def of_algebra(g: LieAlgebra):
        """The bracket of g itself, as a BilinearMap on g's space."""
        return BilinearMap.from_brackets(g, g.c)

    @property
    def is_zero(self):
        return not self.values

    def at(self, i, j):
        n = self.algebra.dim
        if i == j:
            return _zero_comps(n)
        if i < j:
            return self.values.get((i, j), _zero_comps(n))
        return _neg_comps(self.values.get((j, i), _zero_comps(n)))

    def apply_comps(self, x, y):
        """Bilinear extension on coordinate tuples."""
        n = self.algebra.dim
        acc = [ZERO] * n
        for (i, j), comps in self.values.items():
            w = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1]
            if not w:
                continue
            for t in range(n):
                if comps[t]:
                    acc[t] = acc[t] + w * comps[t]
        return tuple(acc)

    def apply(self, x: Vector, y: Vector) -> Vector:
        return Vector(self.algebra, self.apply_comps(x.comps, y.comps))

    def __add__(self, other):
        if other.algebra is not self.algebra:
            raise ValueError("mixed spaces")
        out = dict(self.values)
        for key, comps in other.values.items():
            merged = _add_comps(out.get(key, _zero_comps(self.algebra.dim)), comps)
            if any(merged):
                out[key] = merged
            else:
                out.pop(key, None)
        return BilinearMap(self.algebra, out)

    def __neg__(self):
        return BilinearMap(self.algebra, {k: _neg_comps(v) for k, v in self.values.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        s = Scalar.of(s)
        if not s:
            return BilinearMap(self.algebra)
        return BilinearMap(
            self.algebra, {k: _scale_comps(v, s) for k, v in self.values.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, BilinearMap)
            and self.algebra is other.algebra
            and self.values == other.values
        )

    def __hash__(self):
        return hash(tuple(sorted(self.values.items())))


class SkewTrilinear:
    """Fully skew trilinear table, stored on i < j < k."""

    __slots__ = ("algebra", "values")

    def __init__(self, algebra, values=None):
        self.algebra = algebra
        self.values = {
            key: comps for key, comps in (values or {}).items() if any(comps)
        }

    @property
    def is_zero(self):
        return not self.values

    def at(self, i, j, k):
        n = self.algebra.dim
        if len({i, j, k}) < 3:
            return _zero_comps(n)
        order = sorted(((i, 0), (j, 1), (k, 2)))
        key = tuple(t for t, _ in order)
        perm = tuple(p for _, p in order)
        sign = 1 if perm in ((0, 1, 2), (1, 2, 0), (2, 0, 1)) else -1
        comps = self.values.get(key, _zero_comps(n))
        return comps if sign > 0 else _neg_comps(comps)

    def first_nonzero(self):
        for key in sorted(self.values):
            return key, self.values[key]
        return None

    def __add__(self, other):
        out = dict(self.values)
        for key, comps in other.values.items():
            merged = _add_comps(out.get(key, _zero_comps(self.algebra.dim)), comps)
            if any(merged):
                out[key] = merged
            else:
                out.pop(key, None)
        return SkewTrilinear(self.algebra, out)

    def __neg__(self):
        return SkewTrilinear(self.algebra, {k: _neg_comps(v) for k, v in self.values.items()})


def circle_product(phi: BilinearMap, psi: BilinearMap) -> SkewTrilinear:
    """Cyclic composition; mu o mu = 0 is exactly the Jacobi identity."""
    if phi.algebra is not psi.algebra:
        raise ValueError("mixed spaces")
    alg = phi.algebra
    n = alg.dim
    values = {}
    basis = [tuple(ONE if t == m else ZERO for t in range(n)) for m in range(n)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                acc = phi.apply_comps(psi.at(i, j), basis[k - 1])
                acc = _add_comps(acc, phi.apply_comps(psi.at(j, k), basis[i - 1]))
                acc = _add_comps(acc, phi.apply_comps(psi.at(k, i), basis[j - 1]))
                if any(acc):
                    values[(i, j, k)] = acc
    return SkewTrilinear(alg, values)


class LeftComposite:
    """psi1(psi2(X,Y),Z): skew in the first two slots only."""

    __slots__ = ("algebra", "values")

    def __init__(self, algebra, values=None):
        self.algebra = algebra
        self.values = {k: v for k, v in (values or {}).items() if any(v)}

    @property
    def is_zero(self):
        return not self.values

    def at(self, i, j, k):
        n = self.algebra.dim
        if i == j:
            return _zero_comps(n)
        if i < j:
            return self.values.get((i, j, k), _zero_comps(n))
        return _neg_comps(self.values.get((j, i, k), _zero_comps(n)))


def bullet_product(psi1: BilinearMap, psi2: BilinearMap) -> LeftComposite:
    if psi1.algebra is not psi2.algebra:
        raise ValueError("mixed spaces")
    alg = psi1.algebra
    n = alg.dim
    basis = [tuple(ONE if t == m else ZERO for t in range(n)) for m in range(n)]
    values = {}
    for (i, j), comps in psi2.values.items():
        for k in range(1, n + 1):
            acc = psi1.apply_comps(comps, basis[k - 1])
            if any(acc):
                values[(i, j, k)] = acc
    return LeftComposite(alg, values)


def bullet_power(mu: BilinearMap, k: int):
    """Left-iterated table mu(mu(...mu(X,Y)...), Z): arity k+1 entries.

    Returns {index tuple: comps}; the first two indices satisfy i < j, the
    remaining slots run over the whole basis.  Empty dict means the iterate
    vanishes, i.e. the bracket is at most k-step nilpotent.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = mu.algebra.dim
    basis = [tuple(ONE if t == m else ZERO for t in range(n)) for m in range(n)]
    table = {key: comps for key, comps in mu.values.items()}
    for _ in range(k - 1):
        nxt = {}
        for key, comps in table.items():
            for l in range(1, n + 1):
                acc = mu.apply_comps(comps, basis[l - 1])
                if any(acc):
                    nxt[key + (l,)] = acc
        table = nxt
        if not table:
            break
    return table


def coboundary_of_map(f: LinearMap, g: LieAlgebra) -> BilinearMap:
    """(df)(X,Y) = f([X,Y]) - [f(X),Y] - [X,f(Y)]."""
    if f.algebra is not g:
        raise ValueError("map is not an endomorphism of this algebra")
    n = g.dim
    values = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            v = (
                f.apply(g.bracket_basis(i, j))
                - g.bracket(f.apply_basis(i), g.basis_vector(j))
                - g.bracket(g.basis_vector(i), f.apply_basis(j))
            )
            if not v.is_zero:
                values[(i, j)] = v.comps
    return BilinearMap(g, values)


def coboundary_of_bilinear(phi: BilinearMap, g: LieAlgebra) -> SkewTrilinear:
    """(d phi)(X,Y,Z) = sum_cyc phi([X,Y],Z) - sum_cyc [X, phi(Y,Z)]."""
    if phi.algebra is not g:
        raise ValueError("cochain lives on a different algebra")
    n = g.dim
    mu = BilinearMap.of_algebra(g)
    basis = [tuple(ONE if t == m else ZERO for t in range(n)) for m in range(n)]
    values = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                acc = phi.apply_comps(mu.at(i, j), basis[k - 1])
                acc = _add_comps(acc, phi.apply_comps(mu.at(j, k), basis[i - 1]))
                acc = _add_comps(acc, phi.apply_comps(mu.at(k, i), basis[j - 1]))
                acc = _add_comps(acc, _neg_comps(mu.apply_comps(basis[i - 1], phi.at(j, k))))
                acc = _add_comps(acc, _neg_comps(mu.apply_comps(basis[j - 1], phi.at(k, i))))
                acc = _add_comps(acc, _neg_comps(mu.apply_comps(basis[k - 1], phi.at(i, j))))
                if any(acc):
                    values[(i, j, k)] = acc
    return SkewTrilinear(g, values)


@dataclass(frozen=True)
class DeformationSpec:
    base: LieAlgebra
    phi1: BilinearMap
    phi2: BilinearMap

    def __post_init__(self):
        if self.phi1.algebra is not self.base or self.phi2.algebra is not self.base:
            raise ValueError("cochains must live on the base algebra's space")


@dataclass(frozen=True)
class QuadraticCheck:
    ok: bool
    failures: tuple  # ((equation number, witness triple, defect comps), ...)

    def failing_equations(self):
        return tuple(sorted({eq for eq, _, _ in self.failures}))

    def __bool__(self):
        return self.ok


def check_quadratic_deformation(spec: DeformationSpec) -> QuadraticCheck:
    """The four compatibility equations of mu_0 + phi_1 + phi_2:

      1. d phi_1 = 0
      2. phi_1 o phi_1 + d phi_2 = 0
      3. phi_1 o phi_2 + phi_2 o phi_1 = 0
      4. phi_2 o phi_2 = 0

    All four hold iff mu_0 + phi_1 + phi_2 satisfies Jacobi with the graded
    pieces vanishing separately.
    """
    base = spec.base
    require_jacobi(base)
    if bullet_power(BilinearMap.of_algebra(base), 2):
        raise PreconditionError("base bracket must be (at most) 2-step nilpotent")
    failures = []

    def record(eq, table):
        if isinstance(table, SkewTrilinear) and not table.is_zero:
            key, comps = table.first_nonzero()
            failures.append((eq, key, comps))

    record(1, coboundary_of_bilinear(spec.phi1, base))
    record(2, circle_product(spec.phi1, spec.phi1) + coboundary_of_bilinear(spec.phi2, base))
    record(3, circle_product(spec.phi1, spec.phi2) + circle_product(spec.phi2, spec.phi1))
    record(4, circle_product(spec.phi2, spec.phi2))
    return QuadraticCheck(not failures, tuple(failures))


def assemble(spec: DeformationSpec) -> LieAlgebra:
    """The deformed bracket mu_0 + phi_1 + phi_2 (parameter specialized to 1:
    all nonzero parameter values give isomorphic brackets)."""
    base = spec.base
    n = base.dim
    total = BilinearMap.of_algebra(base) + spec.phi1 + spec.phi2
    brackets = {}
    for (i, j), comps in total.values.items():
        terms = {t + 1: comps[t] for t in range(n) if comps[t]}
        if terms:
            brackets[(i, j)] = terms
    return LieAlgebra(n, brackets, basis=base.basis)


def bilinear_from_endomorphism(base: LieAlgebra, f_rows) -> BilinearMap:
    """phi_2 with phi_2(X_l, X_n) = f(X_l) for l < n and zero on the rest.

    f_rows is a (n-1)x(n-1) matrix acting on span{X_1..X_{n-1}} whose image
    must stay inside that span (the quadratic normal form for a deformation
    of the Heisenberg algebra).
    """
    n = base.dim
    m = n - 1
    f_rows = tuple(tuple(Scalar.of(x) for x in row) for row in f_rows)
    if len(f_rows) != m or any(len(r) != m for r in f_rows):
        raise ValueError("endomorphism must act on the non-central subspace")
    values = {}
    for l in range(1, m + 1):
        comps = [ZERO] * n
        for t in range(m):
            comps[t] = f_rows[t][l - 1]
        if any(comps):
            values[(l, n)] = tuple(comps)
    return BilinearMap(base, values)


def endomorphism_of(phi2: BilinearMap) -> tuple:
    """Inverse of `bilinear_from_endomorphism`: read f back from phi_2."""
    n = phi2.algebra.dim
    m = n - 1
    rows = [[ZERO] * m for _ in range(m)]
    for l in range(1, m + 1):
        comps = phi2.at(l, n)
        if comps[m] != ZERO:
            raise ValueError("phi_2 has a central component, no endomorphism form")
        for t in range(m):
            rows[t][l - 1] = comps[t]
    return tuple(tuple(r) for r in rows)


def normalize_linear_deformation(base: LieAlgebra, phi1: BilinearMap):
    """Subtract a coboundary so the cocycle vanishes on (X_i, X_n) pairs.

    For a 2-cocycle of the Heisenberg algebra the values phi1(X_i, X_n) are
    forced into the center; solving the bracket pairing for f(X_n) gives an
    endomorphism f with (phi1 - df)(X_i, X_n) = 0.  Returns (phi1', f).
    """
    n = base.dim
    p = (n - 1) // 2
    if n % 2 == 0:
        raise PreconditionError("normalization expects odd dimension")
    lam = []
    for i in range(1, n):
        comps = phi1.at(i, n)
        if any(comps[t] for t in range(n - 1)):
            raise PreconditionError(
                "phi1(X_i, X_n) has a non-central component; not a cocycle shape"
            )
        lam.append(comps[n - 1])
    if all(not x for x in lam):
        return phi1, LinearMap.from_diagonal(base, [ZERO] * n)
    # need mu(X_i, f(X_n)) = -lam_i * Z; invert the standard pairing
    # mu(X_{2k-1}, X_{2k}) = Z by hand: c_{2k-1} = lam_{2k}, c_{2k} = -lam_{2k-1}
    target = [ZERO] * n
    for k in range(p):
        target[2 * k] = lam[2 * k + 1]
        target[2 * k + 1] = -lam[2 * k]
    rows = [[ZERO] * n for _ in range(n)]
    for t in range(n):
        rows[t][n - 1] = target[t]
    f = LinearMap(base, rows)
    adjusted = phi1 - coboundary_of_map(f, base)
    return adjusted, f


def deformation_from_classical_basis(g: LieAlgebra) -> DeformationSpec:
    """Split a bracket written in a classical contact basis into
    mu_0 + phi_1 + phi_2 over the Heisenberg algebra of the same dimension.

    Requires: odd dimension 2p+1; [X_{2k-1}, X_{2k}] carries X_{2p+1} with
    coefficient exactly 1; no other bracket among the first 2p vectors hits
    X_{2p+1}; brackets with X_{2p+1} stay inside span{X_1..X_2p}.
    """
    n = g.dim
    if n % 2 == 0 or n < 3:
        raise PreconditionError("classical contact basis needs odd dimension >= 3")
    p = (n - 1) // 2
    pair_set = {(2 * k - 1, 2 * k) for k in range(1, p + 1)}
    from .catalog import heisenberg  # local to avoid an import cycle

    base = heisenberg(p).algebra
    phi1_vals = {}
    phi2_vals = {}
    for (i, j), terms in g.c.items():
        central = terms.get(n, ZERO)
        if j < n:
            if (i, j) in pair_set:
                if central != ONE:
                    raise PreconditionError(
                        f"bracket ({i},{j}) must carry the center with coefficient 1"
                    )
            elif central:
                raise PreconditionError(
                    f"bracket ({i},{j}) has a stray central component"
                )
            low = [terms.get(k, ZERO) for k in range(1, n + 1)]
            low[n - 1] = ZERO
            if any(low):
                phi1_vals[(i, j)] = tuple(low)
        else:
            if central:
                raise PreconditionError("brackets with the center must stay horizontal")
            phi2_vals[(i, j)] = tuple(terms.get(k, ZERO) for k in range(1, n + 1))
    return DeformationSpec(
        base, BilinearMap(base, phi1_vals), BilinearMap(base, phi2_vals)
    )


class NotCocycleError(ValueError):
    pass


class DegenerateFormError(ValueError):
    pass


def central_extension(k: LieAlgebra, theta: DualForm) -> LieAlgebra:
    """Extend k by a 1-dimensional center with bracket twisted by theta.

    Preconditions: theta is a closed 2-form on k (a 2-cocycle) and its top
    wedge power is nonzero (a symplectic form), so the dual of the new
    central generator has Cartan class dim(k) + 1.
    """
    if theta.algebra is not k or theta.grade != 2:
        raise ValueError("theta must be a 2-form on the base algebra")
    if k.dim % 2 != 0:
        raise PreconditionError("central extensions here take an even-dimensional base")
    if not ce_differential(theta).is_zero:
        raise NotCocycleError("not a 2-cocycle")
    p = k.dim // 2
    if wedge_power(theta, p).is_zero:
        raise DegenerateFormError("not symplectic")
    n = k.dim + 1
    brackets = {}
    for (i, j), terms in k.c.items():
        brackets[(i, j)] = dict(terms)
    for (i, j), v in theta.coeffs.items():
        brackets.setdefault((i, j), {})[n] = v
    labels = tuple(k.basis) + ("Z",)
    return LieAlgebra(n, brackets, basis=labels)


def central_quotient(g: LieAlgebra):
    """Quotient by the central line spanned by the last basis vector.

    Returns (k, theta): the quotient bracket on the first n-1 coordinates
    and the induced 2-form theta(X_i, X_j) = (last coordinate of [X_i, X_j]).
    """
    n = g.dim
    last = g.basis_vector(n)
    for i in range(1, n):
        if not g.bracket(last, g.basis_vector(i)).is_zero:
            raise PreconditionError("last basis vector is not central")
    brackets = {}
    theta_terms = {}
    for (i, j), terms in g.c.items():
        if j == n:
            continue
        reduced = {t: v for t, v in terms.items() if t < n}
        if reduced:
            brackets[(i, j)] = reduced
        if n in terms:
            theta_terms[(i, j)] = terms[n]
    k = LieAlgebra(n - 1, brackets, basis=g.basis[: n - 1])
    theta = DualForm(k, 2, theta_terms)
    return k, theta

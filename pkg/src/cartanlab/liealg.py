"""Lie algebras given by exact structure constants.

A LieAlgebra stores c[i, j, k] for i < j only (1-based indices); the other
half of the bracket table is implied by skew symmetry.  The Jacobi identity
is deliberately *not* an invariant of the type: deformation intermediates
are allowed to violate it, and `structure.jacobi_check` is the gatekeeper.
"""

from __future__ import annotations

from .linalg import nullspace, rref
from .scalars import ONE, ZERO, Scalar


class LieAlgebra:
    """dim, basis labels and the sparse skew bracket table."""

    __slots__ = ("dim", "basis", "c", "_pair_table")

    def __init__(self, dim, brackets, basis=None):
        """brackets: {(i, j): {k: coeff}} with 1 <= i < j <= dim."""
        if dim <= 0:
            raise ValueError("dimension must be positive")
        self.dim = int(dim)
        if basis is None:
            basis = tuple(f"X{i}" for i in range(1, dim + 1))
        basis = tuple(str(b) for b in basis)
        if len(basis) != self.dim:
            raise ValueError("basis label count does not match dimension")
        self.basis = basis
        table = {}
        for (i, j), terms in brackets.items():
            if not (1 <= i < j <= dim):
                raise ValueError(f"bad bracket pair ({i},{j}) for dim {dim}")
            clean = {}
            for k, v in terms.items():
                if not (1 <= k <= dim):
                    raise ValueError(f"bad bracket target {k} for dim {dim}")
                v = Scalar.of(v)
                if v:
                    clean[k] = v
            if clean:
                table[(i, j)] = clean
        self.c = table
        self._pair_table = None

    # -- raw access ------------------------------------------------------

    def pair(self, i, j):
        """{k: coeff} for [X_i, X_j], handling order and i == j."""
        if i == j:
            return {}
        if i < j:
            return self.c.get((i, j), {})
        flipped = self.c.get((j, i), {})
        return {k: -v for k, v in flipped.items()}

    def constant(self, i, j, k):
        return self.pair(i, j).get(k, ZERO)

    def bracket_basis(self, i, j):
        return Vector.from_sparse(self, self.pair(i, j))

    def bracket(self, x: "Vector", y: "Vector") -> "Vector":
        if x.algebra is not self or y.algebra is not self:
            raise ValueError("vectors belong to a different algebra")
        acc = {}
        for (i, j), terms in self.c.items():
            w = x.comps[i - 1] * y.comps[j - 1] - x.comps[j - 1] * y.comps[i - 1]
            if not w:
                continue
            for k, v in terms.items():
                acc[k] = acc.get(k, ZERO) + w * v
        return Vector.from_sparse(self, acc)

    def adjoint_rows(self, index):
        """Matrix of ad(X_index), column j = coordinates of [X_index, X_j]."""
        n = self.dim
        cols = []
        for j in range(1, n + 1):
            terms = self.pair(index, j)
            cols.append(tuple(terms.get(k, ZERO) for k in range(1, n + 1)))
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))

    # -- structural equality ----------------------------------------------

    def constants(self):
        out = {}
        for (i, j), terms in self.c.items():
            for k, v in terms.items():
                out[(i, j, k)] = v
        return out

    def same_constants(self, other: "LieAlgebra") -> bool:
        return self.dim == other.dim and self.constants() == other.constants()

    def basis_vector(self, i) -> "Vector":
        return Vector.from_sparse(self, {i: ONE})

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, brackets={len(self.c)})"


class Vector:
    """Element of a LieAlgebra, exact coordinates in the chosen basis."""

    __slots__ = ("algebra", "comps")

    def __init__(self, algebra, comps):
        comps = tuple(Scalar.of(x) for x in comps)
        if len(comps) != algebra.dim:
            raise ValueError("component count does not match dimension")
        self.algebra = algebra
        self.comps = comps

    @staticmethod
    def from_sparse(algebra, sparse):
        comps = [ZERO] * algebra.dim
        for k, v in sparse.items():
            comps[k - 1] = Scalar.of(v)
        return Vector(algebra, comps)

    @property
    def is_zero(self):
        return all(not x for x in self.comps)

    def __add__(self, other):
        self._check(other)
        return Vector(self.algebra, [a + b for a, b in zip(self.comps, other.comps)])

    def __sub__(self, other):
        self._check(other)
        return Vector(self.algebra, [a - b for a, b in zip(self.comps, other.comps)])

    def __neg__(self):
        return Vector(self.algebra, [-a for a in self.comps])

    def scale(self, s):
        s = Scalar.of(s)
        return Vector(self.algebra, [a * s for a in self.comps])

    def __eq__(self, other):
        return (
            isinstance(other, Vector)
            and self.algebra is other.algebra
            and self.comps == other.comps
        )

    def __hash__(self):
        return hash(self.comps)

    def _check(self, other):
        if not isinstance(other, Vector) or other.algebra is not self.algebra:
            raise ValueError("mixed algebras in vector arithmetic")

    def __repr__(self):
        labels = self.algebra.basis
        parts = [
            f"{v}*{labels[i]}" for i, v in enumerate(self.comps) if v
        ]
        return " + ".join(parts) if parts else "0"


class LinearMap:
    """Endomorphism of the underlying space; column j = image of X_j."""

    __slots__ = ("algebra", "rows")

    def __init__(self, algebra, rows):
        rows = tuple(tuple(Scalar.of(x) for x in row) for row in rows)
        n = algebra.dim
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("matrix shape does not match algebra dimension")
        self.algebra = algebra
        self.rows = rows

    @staticmethod
    def from_diagonal(algebra, diag):
        n = algebra.dim
        diag = list(diag)
        if len(diag) != n:
            raise ValueError("diagonal length does not match dimension")
        return LinearMap(
            algebra,
            [
                [Scalar.of(diag[i]) if i == j else ZERO for j in range(n)]
                for i in range(n)
            ],
        )

    @staticmethod
    def adjoint(algebra, index):
        return LinearMap(algebra, algebra.adjoint_rows(index))

    def apply(self, v: Vector) -> Vector:
        n = self.algebra.dim
        comps = [
            sum((self.rows[i][j] * v.comps[j] for j in range(n)), ZERO)
            for i in range(n)
        ]
        return Vector(self.algebra, comps)

    def apply_basis(self, j) -> Vector:
        return Vector(self.algebra, [self.rows[i][j - 1] for i in range(self.algebra.dim)])

    def compose(self, other: "LinearMap") -> "LinearMap":
        from .linalg import mat_mul

        return LinearMap(self.algebra, mat_mul(self.rows, other.rows))

    def commutator(self, other: "LinearMap") -> "LinearMap":
        from .linalg import mat_mul, mat_sub

        return LinearMap(
            self.algebra,
            mat_sub(mat_mul(self.rows, other.rows), mat_mul(other.rows, self.rows)),
        )

    def trace(self) -> Scalar:
        return sum((self.rows[i][i] for i in range(self.algebra.dim)), ZERO)

    def __eq__(self, other):
        return (
            isinstance(other, LinearMap)
            and self.algebra is other.algebra
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash(self.rows)


class Subspace:
    """Subspace of a LieAlgebra in canonical reduced-echelon form.

    The stored basis rows are the rref of whatever spanning set was given,
    so equality of subspaces is plain tuple equality of the bases.
    """

    __slots__ = ("algebra", "rows")

    def __init__(self, algebra, vectors=()):
        raw = []
        for v in vectors:
            if isinstance(v, Vector):
                if v.algebra is not algebra:
                    raise ValueError("vector from a different algebra")
                raw.append(v.comps)
            else:
                raw.append(tuple(Scalar.of(x) for x in v))
        reduced, _ = rref(raw) if raw else ((), ())
        self.algebra = algebra
        self.rows = reduced

    @property
    def dim(self):
        return len(self.rows)

    def vectors(self):
        return [Vector(self.algebra, row) for row in self.rows]

    def contains(self, v: Vector) -> bool:
        if v.is_zero:
            return True
        stacked = list(self.rows) + [v.comps]
        reduced, _ = rref(stacked)
        return len(reduced) == len(self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.algebra is other.algebra
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Subspace(dim={self.dim})"


def kernel_subspace(algebra, rows) -> Subspace:
    """Subspace from the nullspace of a constraint matrix (columns = coords)."""
    basis = nullspace(rows, ncols=algebra.dim)
    return Subspace(algebra, [Vector(algebra, b) for b in basis])


def change_basis(g: LieAlgebra, p_rows, basis=None) -> LieAlgebra:
    """Structure constants of g in the basis Y_j = sum_i P[i][j] X_i."""
    from .linalg import as_matrix, invert, mat_vec

    p = as_matrix(p_rows)
    if len(p) != g.dim or any(len(r) != g.dim for r in p):
        raise ValueError("change of basis matrix has wrong shape")
    pinv = invert(p)
    n = g.dim
    new_brackets = {}
    for i in range(1, n + 1):
        yi = Vector(g, [p[r][i - 1] for r in range(n)])
        for j in range(i + 1, n + 1):
            yj = Vector(g, [p[r][j - 1] for r in range(n)])
            w = g.bracket(yi, yj)
            coords = mat_vec(pinv, w.comps)
            terms = {k + 1: coords[k] for k in range(n) if coords[k]}
            if terms:
                new_brackets[(i, j)] = terms
    return LieAlgebra(n, new_brackets, basis=basis or g.basis)

"""Exterior forms on the dual of a structure-constant Lie algebra.

The differential is fixed once and for all by

    d omega (X, Y) = -omega([X, Y])

on grade 1 and extends as an antiderivation.  Under this convention the
Heisenberg coframe satisfies d w_{2p+1} = -w_1^w_2 - ... - w_{2p-1}^w_{2p}.

`cartan_class` computes the class twice, by wedge powers and by the exact
codimension of the characteristic space, and refuses to return if the two
answers disagree: the second computation is the module's built-in oracle
for the first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .liealg import LieAlgebra, Subspace, Vector, kernel_subspace
from .scalars import ONE, ZERO, Scalar


class FormError(ValueError):
    pass


def _merge_sign(a: tuple, b: tuple):
    """Sign of sorting the concatenation of two increasing index tuples.

    Returns (sorted tuple, sign) or (None, 0) when an index repeats.
    """
    inversions = 0
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return None, 0
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            # b[j] jumps over the remaining entries of a
            inversions += len(a) - i
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out), (-1) ** (inversions & 1)


class DualForm:
    """Sparse exterior form: strictly increasing index tuples -> Scalar."""

    __slots__ = ("algebra", "grade", "coeffs")

    def __init__(self, algebra: LieAlgebra, grade: int, coeffs=None):
        if grade < 0:
            raise FormError("grade must be nonnegative")
        self.algebra = algebra
        self.grade = grade
        clean = {}
        for idx, v in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != grade:
                raise FormError("index tuple length does not match grade")
            if any(not (1 <= t <= algebra.dim) for t in idx):
                raise FormError("form index out of range")
            if any(idx[t] >= idx[t + 1] for t in range(len(idx) - 1)):
                raise FormError("index tuples must be strictly increasing")
            v = Scalar.of(v)
            if v:
                clean[idx] = v
        self.coeffs = clean

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(algebra, grade=1):
        return DualForm(algebra, grade)

    @staticmethod
    def one(algebra):
        return DualForm(algebra, 0, {(): ONE})

    @staticmethod
    def basis(algebra, *indices):
        return DualForm(algebra, len(indices), {tuple(indices): ONE})

    @staticmethod
    def covector(algebra, comps):
        comps = list(comps)
        if len(comps) != algebra.dim:
            raise FormError("covector length does not match dimension")
        return DualForm(
            algebra, 1, {(i + 1,): comps[i] for i in range(len(comps)) if Scalar.of(comps[i])}
        )

    # -- basic algebra -----------------------------------------------------

    @property
    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for idx, v in other.coeffs.items():
            w = out.get(idx, ZERO) + v
            if w:
                out[idx] = w
            else:
                out.pop(idx, None)
        return DualForm(self.algebra, self.grade, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return DualForm(self.algebra, self.grade, {k: -v for k, v in self.coeffs.items()})

    def scale(self, s):
        s = Scalar.of(s)
        if not s:
            return DualForm(self.algebra, self.grade)
        return DualForm(self.algebra, self.grade, {k: v * s for k, v in self.coeffs.items()})

    def __eq__(self, other):
        return (
            isinstance(other, DualForm)
            and self.algebra is other.algebra
            and self.grade == other.grade
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.grade, tuple(sorted(self.coeffs.items()))))

    def _check(self, other):
        if not isinstance(other, DualForm):
            raise FormError("expected a DualForm")
        if other.algebra is not self.algebra:
            raise FormError("mismatched algebras")
        if other.grade != self.grade:
            raise FormError("mismatched grades")

    # -- evaluation ---------------------------------------------------------

    def pair(self, v: Vector) -> Scalar:
        if self.grade != 1:
            raise FormError("pair() is for grade-1 forms")
        return sum((c * v.comps[idx[0] - 1] for idx, c in self.coeffs.items()), ZERO)

    def evaluate(self, *vectors) -> Scalar:
        """theta(v_1, ..., v_q) by exact minors."""
        if len(vectors) != self.grade:
            raise FormError("wrong number of arguments")
        from .linalg import det

        total = ZERO
        for idx, c in self.coeffs.items():
            minor = [[v.comps[t - 1] for t in idx] for v in vectors]
            total = total + c * det(minor)
        return total

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for idx in sorted(self.coeffs):
            mono = "^".join(f"w{t}" for t in idx) if idx else "1"
            parts.append(f"({self.coeffs[idx]})*{mono}")
        return " + ".join(parts)


def wedge(a: DualForm, b: DualForm) -> DualForm:
    """Exterior product; graded commutative, zero above the dimension."""
    if a.algebra is not b.algebra:
        raise FormError("mismatched algebras")
    grade = a.grade + b.grade
    alg = a.algebra
    if grade > alg.dim:
        return DualForm(alg, grade)
    out = {}
    for ia, va in a.coeffs.items():
        for ib, vb in b.coeffs.items():
            idx, sign = _merge_sign(ia, ib)
            if idx is None:
                continue
            v = va * vb
            if sign < 0:
                v = -v
            w = out.get(idx, ZERO) + v
            if w:
                out[idx] = w
            else:
                out.pop(idx, None)
    return DualForm(alg, grade, out)


def wedge_power(a: DualForm, k: int) -> DualForm:
    if k < 0:
        raise FormError("negative wedge power")
    out = DualForm.one(a.algebra)
    for _ in range(k):
        out = wedge(out, a)
    return out


def ce_differential(a: DualForm) -> DualForm:
    """Chevalley-Eilenberg differential, antiderivation extension of
    d w_m = -sum_{i<j} c_ijm  w_i ^ w_j."""
    alg = a.algebra
    if a.grade == 0:
        return DualForm(alg, 1)
    dbasis = {}

    def d_of(m):
        if m not in dbasis:
            terms = {}
            for (i, j), tv in alg.c.items():
                v = tv.get(m)
                if v:
                    terms[(i, j)] = -v
            dbasis[m] = DualForm(alg, 2, terms)
        return dbasis[m]

    total = DualForm(alg, a.grade + 1)
    for idx, coeff in a.coeffs.items():
        for r, m in enumerate(idx):
            left = DualForm(alg, r, {idx[:r]: ONE}) if r else DualForm.one(alg)
            rest = idx[r + 1 :]
            right = (
                DualForm(alg, len(rest), {rest: ONE}) if rest else DualForm.one(alg)
            )
            piece = wedge(wedge(left, d_of(m)), right)
            sign_coeff = coeff if r % 2 == 0 else -coeff
            total = total + piece.scale(sign_coeff)
    return total


def interior_product(x: Vector, a: DualForm) -> DualForm:
    """i(X)theta(X_1,..,X_{q-1}) = theta(X, X_1, .., X_{q-1})."""
    if x.algebra is not a.algebra:
        raise FormError("mismatched algebras")
    if a.grade == 0:
        raise FormError("no interior product of a grade-0 form")
    out = {}
    for idx, coeff in a.coeffs.items():
        for r, t in enumerate(idx):
            xv = x.comps[t - 1]
            if not xv:
                continue
            rest = idx[:r] + idx[r + 1 :]
            v = coeff * xv
            if r % 2 == 1:
                v = -v
            w = out.get(rest, ZERO) + v
            if w:
                out[rest] = w
            else:
                out.pop(rest, None)
    return DualForm(a.algebra, a.grade - 1, out)


@dataclass(frozen=True)
class CartanClass:
    value: int
    characteristic_space: Subspace
    branch: str  # "odd" when w ^ (dw)^q != 0, else "even"
    power: int  # the maximal q with (dw)^q != 0


class ClassOracleError(AssertionError):
    """Wedge-power class and characteristic-space codimension disagreed."""


def characteristic_space(w: DualForm) -> Subspace:
    """C(w) = {X : w(X) = 0, i(X) dw = 0} by exact kernel computation."""
    alg = w.algebra
    n = alg.dim
    dw = ce_differential(w)
    rows = [tuple(w.coeffs.get((i,), ZERO) for i in range(1, n + 1))]
    for j in range(1, n + 1):
        # row j: dw(X_i, X_j) as i runs over the basis
        row = []
        for i in range(1, n + 1):
            if i < j:
                row.append(dw.coeffs.get((i, j), ZERO))
            elif i > j:
                row.append(-dw.coeffs.get((j, i), ZERO))
            else:
                row.append(ZERO)
        rows.append(tuple(row))
    return kernel_subspace(alg, rows)


def cartan_class(w: DualForm) -> CartanClass:
    """Cartan class of a nonzero grade-1 form, with its characteristic space.

    Wedge-power route: q = max{k : (dw)^k != 0}; the class is 2q+1 when
    w ^ (dw)^q != 0 and 2q otherwise.  Cross-checked against
    dim(g) - dim C(w); any disagreement raises ClassOracleError.
    """
    if w.grade != 1:
        raise FormError("Cartan class is defined for grade-1 forms")
    if w.is_zero:
        raise FormError("class undefined for the zero form")
    dw = ce_differential(w)
    q = 0
    power = DualForm.one(w.algebra)
    while True:
        nxt = wedge(power, dw)
        if nxt.is_zero:
            break
        power = nxt
        q += 1
    top = wedge(w, power)
    if not top.is_zero:
        value, branch = 2 * q + 1, "odd"
    else:
        value, branch = 2 * q, "even"
    space = characteristic_space(w)
    codim = w.algebra.dim - space.dim
    if codim != value:
        raise ClassOracleError(
            f"wedge-power class {value} != codimension {codim} of the characteristic space"
        )
    return CartanClass(value, space, branch, q)

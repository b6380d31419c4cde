"""Differential forms and vector fields with polynomial coefficients on
affine space.  Coefficients are exact, so d o d = 0 holds on the nose and
every identity below is a polynomial identity, not a numerical one.
"""

from __future__ import annotations

from .poly import Poly, VariableMismatch
from .scalars import ONE, Scalar


def _merge_sign(a, b):
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
            inversions += len(a) - i
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out), (-1) ** (inversions & 1)


class PolyForm:
    """Sparse exterior form: strictly increasing variable-index tuples -> Poly."""

    __slots__ = ("vars", "grade", "coeffs")

    def __init__(self, vars, grade, coeffs=None):
        self.vars = tuple(vars)
        self.grade = int(grade)
        if self.grade < 0:
            raise ValueError("grade must be nonnegative")
        clean = {}
        for idx, p in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != self.grade:
                raise ValueError("index tuple length does not match grade")
            if any(not (0 <= t < len(self.vars)) for t in idx):
                raise ValueError("variable index out of range")
            if any(idx[t] >= idx[t + 1] for t in range(len(idx) - 1)):
                raise ValueError("indices must be strictly increasing")
            if not isinstance(p, Poly):
                p = Poly.constant(self.vars, p)
            if p.vars != self.vars:
                raise VariableMismatch("coefficient over different variables")
            if not p.is_zero:
                clean[idx] = p
        self.coeffs = clean

    @staticmethod
    def zero(vars, grade=1):
        return PolyForm(vars, grade)

    @staticmethod
    def function(poly: Poly):
        return PolyForm(poly.vars, 0, {(): poly})

    @staticmethod
    def d_var(vars, i):
        return PolyForm(vars, 1, {(i,): Poly.constant(vars, ONE)})

    @property
    def is_zero(self):
        return not self.coeffs

    def _check(self, other):
        if self.vars != other.vars:
            raise VariableMismatch("mismatched variable sets")

    def __add__(self, other):
        self._check(other)
        if self.grade != other.grade:
            raise ValueError("mismatched grades")
        out = dict(self.coeffs)
        for idx, p in other.coeffs.items():
            w = out.get(idx)
            w = p if w is None else w + p
            if w.is_zero:
                out.pop(idx, None)
            else:
                out[idx] = w
        return PolyForm(self.vars, self.grade, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PolyForm(self.vars, self.grade, {k: -p for k, p in self.coeffs.items()})

    def scale(self, s):
        if isinstance(s, Poly):
            return PolyForm(
                self.vars, self.grade, {k: p * s for k, p in self.coeffs.items()}
            )
        s = Scalar.of(s)
        return PolyForm(
            self.vars, self.grade, {k: p * s for k, p in self.coeffs.items()}
        )

    def __eq__(self, other):
        return (
            isinstance(other, PolyForm)
            and self.vars == other.vars
            and self.grade == other.grade
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for idx in sorted(self.coeffs):
            mono = "^".join(f"d{self.vars[t]}" for t in idx) if idx else "1"
            parts.append(f"({self.coeffs[idx]}) {mono}")
        return " + ".join(parts)


def poly_wedge(a: PolyForm, b: PolyForm) -> PolyForm:
    a._check(b)
    grade = a.grade + b.grade
    if grade > len(a.vars):
        return PolyForm(a.vars, grade)
    out = {}
    for ia, pa in a.coeffs.items():
        for ib, pb in b.coeffs.items():
            idx, sign = _merge_sign(ia, ib)
            if idx is None:
                continue
            term = pa * pb
            if sign < 0:
                term = -term
            w = out.get(idx)
            w = term if w is None else w + term
            if w.is_zero:
                out.pop(idx, None)
            else:
                out[idx] = w
    return PolyForm(a.vars, grade, out)


def poly_wedge_power(a: PolyForm, k: int) -> PolyForm:
    out = PolyForm(a.vars, 0, {(): Poly.constant(a.vars, ONE)})
    for _ in range(k):
        out = poly_wedge(out, a)
    return out


def exterior_d(a: PolyForm) -> PolyForm:
    """d(f dx_I) = sum_v (df/dx_v) dx_v ^ dx_I, with the insertion sign."""
    out = {}
    nv = len(a.vars)
    for idx, p in a.coeffs.items():
        for v in range(nv):
            dp = p.diff(v)
            if dp.is_zero:
                continue
            merged, sign = _merge_sign((v,), idx)
            if merged is None:
                continue
            term = dp if sign > 0 else -dp
            w = out.get(merged)
            w = term if w is None else w + term
            if w.is_zero:
                out.pop(merged, None)
            else:
                out[merged] = w
    return PolyForm(a.vars, a.grade + 1, out)


class PolyVectorField:
    """sum_v comps[v] d/dx_v with polynomial components."""

    __slots__ = ("vars", "comps")

    def __init__(self, vars, comps):
        self.vars = tuple(vars)
        comps = list(comps)
        if len(comps) != len(self.vars):
            raise ValueError("one component per variable required")
        fixed = []
        for p in comps:
            if not isinstance(p, Poly):
                p = Poly.constant(self.vars, p)
            if p.vars != self.vars:
                raise VariableMismatch("component over different variables")
            fixed.append(p)
        self.comps = tuple(fixed)

    def apply_to(self, f: Poly) -> Poly:
        """Derivation action on functions."""
        if f.vars != self.vars:
            raise VariableMismatch("function over different variables")
        total = Poly.zero(self.vars)
        for v, comp in enumerate(self.comps):
            if not comp.is_zero:
                total = total + comp * f.diff(v)
        return total

    def __eq__(self, other):
        return (
            isinstance(other, PolyVectorField)
            and self.vars == other.vars
            and self.comps == other.comps
        )


def poly_interior(v: PolyVectorField, a: PolyForm) -> PolyForm:
    if v.vars != a.vars:
        raise VariableMismatch("mismatched variable sets")
    if a.grade == 0:
        raise ValueError("no interior product of a grade-0 form")
    out = {}
    for idx, p in a.coeffs.items():
        for r, t in enumerate(idx):
            comp = v.comps[t]
            if comp.is_zero:
                continue
            rest = idx[:r] + idx[r + 1 :]
            term = p * comp
            if r % 2 == 1:
                term = -term
            w = out.get(rest)
            w = term if w is None else w + term
            if w.is_zero:
                out.pop(rest, None)
            else:
                out[rest] = w
    return PolyForm(a.vars, a.grade - 1, out)


def vf_bracket(v: PolyVectorField, w: PolyVectorField) -> PolyVectorField:
    """[V, W]^b = V(W^b) - W(V^b), the commutator of derivations."""
    if v.vars != w.vars:
        raise VariableMismatch("mismatched variable sets")
    comps = [v.apply_to(wb) - w.apply_to(vb) for vb, wb in zip(v.comps, w.comps)]
    return PolyVectorField(v.vars, comps)


def pullback_linear(a: PolyForm, matrix) -> PolyForm:
    """Pullback under the linear substitution x_i -> sum_j L[i][j] x_j
    (both in the coefficients and in the differentials)."""
    nv = len(a.vars)
    l = [[Scalar.of(matrix[i][j]) for j in range(nv)] for i in range(nv)]
    images = [
        Poly(a.vars, {
            tuple(1 if t == j else 0 for t in range(nv)): l[i][j]
            for j in range(nv)
            if l[i][j]
        })
        for i in range(nv)
    ]
    d_images = [
        PolyForm(a.vars, 1, {(j,): l[i][j] for j in range(nv) if l[i][j]})
        for i in range(nv)
    ]
    total = PolyForm(a.vars, a.grade)
    for idx, p in a.coeffs.items():
        pulled = PolyForm.function(p.subs(images))
        for t in idx:
            pulled = poly_wedge(pulled, d_images[t])
        total = total + pulled
    return total


def form_on_field(a: PolyForm, v: PolyVectorField) -> Poly:
    """Pairing of a 1-form with a vector field."""
    if a.grade != 1:
        raise ValueError("pairing needs a 1-form")
    if a.vars != v.vars:
        raise VariableMismatch("mismatched variable sets")
    total = Poly.zero(a.vars)
    for (t,), p in a.coeffs.items():
        if not v.comps[t].is_zero:
            total = total + p * v.comps[t]
    return total

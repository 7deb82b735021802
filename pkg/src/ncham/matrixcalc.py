"""The universal differential calculus on the matrix algebra M_n.

A degree-k form is an element of the (k+1)-fold tensor power of M_n whose
contraction at every junction (multiplying two adjacent legs) vanishes;
degree 0 is M_n itself.  Forms are stored sparsely as maps from tuples of
matrix-unit indices to scalars; the scalar ring is anything with exact
+, -, * (Fraction here, bivariate polynomials in the tensor-product
model).

The differential inserts the identity into each slot with alternating
signs, d(a0 x ... x am) = sum_i (-1)^i a0 x ... x 1_(i) x ... x am, which
restricts to 1 x a - a x 1 in degree 0; multiplication merges the two
adjacent legs at the junction.  A derivation is a coefficient array
Theta with theta(E_ij) = sum Theta[kl,ij] E_kl, checked against the
Leibniz rule on matrix units at construction; the interior product
contracts theta into one leg at a time with alternating signs and the Lie
derivative applies theta leg-wise.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import DegreeError


def _is_scalar(x):
    return isinstance(x, (int, Fraction)) or hasattr(x, "diff_x")


class TensorForm:
    """Sparse tensor-leg form over M_n; keys are tuples of flat unit indices."""

    __slots__ = ("n", "degree", "terms", "one")

    def __init__(self, n, degree, terms=None, one=Fraction(1)):
        self.n = n
        self.degree = degree
        self.one = one
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if len(key) != degree + 1:
                    raise ValueError("key %r has wrong length for degree %d"
                                     % (key, degree))
                if c:
                    self.terms[key] = c

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, n, degree=0, one=Fraction(1)):
        return cls(n, degree, {}, one)

    @classmethod
    def unit(cls, n, i, j, one=Fraction(1)):
        return cls(n, 0, {(i * n + j,): one}, one)

    @classmethod
    def identity(cls, n, one=Fraction(1)):
        return cls(n, 0, {(i * n + i,): one for i in range(n)}, one)

    @classmethod
    def from_matrix(cls, mat, one=Fraction(1)):
        """mat: n x n nested sequence of scalars."""
        n = len(mat)
        terms = {}
        for i in range(n):
            for j in range(n):
                if mat[i][j]:
                    terms[(i * n + j,)] = mat[i][j]
        return cls(n, 0, terms, one)

    def to_matrix(self):
        if self.degree != 0:
            raise ValueError("only 0-forms convert to matrices")
        zero = self.one - self.one
        mat = [[zero for _ in range(self.n)] for _ in range(self.n)]
        for (f,), c in self.terms.items():
            mat[f // self.n][f % self.n] = c
        return mat

    # -- ring structure -----------------------------------------------------

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("matrix sizes differ")
        if self.degree != other.degree and self.terms and other.terms:
            raise ValueError("degrees differ: %d vs %d" % (self.degree, other.degree))

    def __add__(self, other):
        if not isinstance(other, TensorForm):
            return NotImplemented
        self._check(other)
        if not self.terms:
            return TensorForm(other.n, other.degree, dict(other.terms), other.one)
        out = dict(self.terms)
        for k, c in other.terms.items():
            acc = out.get(k)
            acc = c if acc is None else acc + c
            if acc:
                out[k] = acc
            elif k in out:
                del out[k]
        return TensorForm(self.n, self.degree, out, self.one)

    def __neg__(self):
        return TensorForm(self.n, self.degree,
                          {k: -c for k, c in self.terms.items()}, self.one)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return TensorForm.zero(self.n, self.degree, self.one)
        return TensorForm(self.n, self.degree,
                          {k: v * c for k, v in self.terms.items()}, self.one)

    def __rmul__(self, c):
        if _is_scalar(c):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        if not isinstance(other, TensorForm):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("matrix sizes differ")
        n = self.n
        out = {}
        for k1, c1 in self.terms.items():
            a = k1[-1]
            ai, aj = divmod(a, n)
            for k2, c2 in other.terms.items():
                b = k2[0]
                bi, bj = divmod(b, n)
                if aj != bi:
                    continue
                key = k1[:-1] + (ai * n + bj,) + k2[1:]
                c = c1 * c2
                acc = out.get(key)
                acc = c if acc is None else acc + c
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        return TensorForm(n, self.degree + other.degree, out, self.one)

    def tensor(self, other: "TensorForm") -> "TensorForm":
        """Raw leg concatenation (no junction merge); used to rebuild
        printed forms, whose tensor sign separates legs."""
        if self.n != other.n:
            raise ValueError("matrix sizes differ")
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                c = c1 * c2
                if c:
                    out[k1 + k2] = c
        return TensorForm(self.n, self.degree + other.degree + 1, out, self.one)

    def __eq__(self, other):
        if not isinstance(other, TensorForm):
            return NotImplemented
        return (self.n == other.n and self.degree == other.degree
                and self.terms == other.terms)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def is_zero(self):
        return not self.terms

    # -- calculus ----------------------------------------------------------

    def d(self):
        """Alternating insertion of the identity into each slot."""
        n = self.n
        out = {}
        for key, c in self.terms.items():
            for pos in range(len(key) + 1):
                sign = c if pos % 2 == 0 else -c
                for i in range(n):
                    nk = key[:pos] + (i * n + i,) + key[pos:]
                    acc = out.get(nk)
                    acc = sign if acc is None else acc + sign
                    if acc:
                        out[nk] = acc
                    elif nk in out:
                        del out[nk]
        return TensorForm(n, self.degree + 1, out, self.one)

    def junction_contractions(self):
        """Products of adjacent legs; all must vanish on honest forms."""
        n = self.n
        outs = []
        for j in range(self.degree):
            out = {}
            for key, c in self.terms.items():
                ai, aj = divmod(key[j], n)
                bi, bj = divmod(key[j + 1], n)
                if aj != bi:
                    continue
                nk = key[:j] + (ai * n + bj,) + key[j + 2:]
                acc = out.get(nk)
                acc = c if acc is None else acc + c
                if acc:
                    out[nk] = acc
                elif nk in out:
                    del out[nk]
            outs.append(TensorForm(n, self.degree - 1, out, self.one))
        return outs

    def in_kernel(self):
        return all(t.is_zero() for t in self.junction_contractions())

    def __str__(self):
        from .printing import tensor_str

        return tensor_str(self)

    __repr__ = __str__


class MatrixDerivation:
    """Derivation on M_n given by its coefficient array on matrix units."""

    __slots__ = ("n", "theta", "one", "label")

    def __init__(self, n, theta, one=Fraction(1), check=True, label=None):
        self.n = n
        self.one = one
        self.theta = {k: v for k, v in theta.items() if v}  # (out, in) -> scalar
        self.label = label
        if check:
            self._check_leibniz()

    @classmethod
    def zero(cls, n, one=Fraction(1)):
        return cls(n, {}, one, check=False)

    @classmethod
    def ad(cls, s_matrix, one=Fraction(1), label=None):
        """ad_S(C) = [S, C] = SC - CS for an n x n matrix of scalars."""
        n = len(s_matrix)
        theta = {}

        def put(out, inp, val):
            if val:
                key = (out, inp)
                acc = theta.get(key)
                acc = val if acc is None else acc + val
                if acc:
                    theta[key] = acc
                elif key in theta:
                    del theta[key]

        for i in range(n):
            for j in range(n):
                inp = i * n + j
                for k in range(n):
                    put(k * n + j, inp, s_matrix[k][i])
                    put(i * n + k, inp, -s_matrix[j][k])
        return cls(n, theta, one, check=False, label=label)

    def apply_unit(self, flat):
        out = {}
        for (o, i), v in self.theta.items():
            if i == flat:
                out[o] = v
        return out

    def _check_leibniz(self):
        n = self.n
        for a in range(n * n):
            Ea = TensorForm.unit(n, a // n, a % n, self.one)
            for b in range(n * n):
                Eb = TensorForm.unit(n, b // n, b % n, self.one)
                lhs = self.apply(Ea * Eb)
                rhs = self.apply(Ea) * Eb + Ea * self.apply(Eb)
                if lhs != rhs:
                    raise ValueError("coefficient array is not a derivation")

    # -- linear structure -------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MatrixDerivation):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("matrix sizes differ")
        theta = dict(self.theta)
        for k, v in other.theta.items():
            acc = theta.get(k)
            acc = v if acc is None else acc + v
            if acc:
                theta[k] = acc
            elif k in theta:
                del theta[k]
        return MatrixDerivation(self.n, theta, self.one, check=False)

    def __rmul__(self, c):
        if _is_scalar(c):
            return MatrixDerivation(self.n, {k: v * c for k, v in self.theta.items()},
                                    self.one, check=False)
        return NotImplemented

    def __neg__(self):
        return (-self.one) * self

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return not self.theta

    # -- action -------------------------------------------------------------

    def apply(self, x: TensorForm) -> TensorForm:
        if x.degree != 0:
            raise ValueError("apply expects a 0-form; use lie for forms")
        out = {}
        for (f,), c in x.terms.items():
            for o, v in self.apply_unit(f).items():
                key = (o,)
                acc = out.get(key)
                acc = c * v if acc is None else acc + c * v
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        return TensorForm(x.n, 0, out, x.one)

    def __call__(self, x):
        return self.apply(x)

    def iprod(self, x: TensorForm) -> TensorForm:
        """Contract theta into leg j and merge left, signs alternating."""
        if x.degree < 1:
            raise DegreeError("interior product needs degree >= 1")
        n = x.n
        out = {}
        for key, c in x.terms.items():
            for j in range(1, len(key)):
                sign = c if (j - 1) % 2 == 0 else -c
                li, lj = divmod(key[j - 1], n)
                for o, v in self.apply_unit(key[j]).items():
                    oi, oj = divmod(o, n)
                    if lj != oi:
                        continue
                    nk = key[:j - 1] + (li * n + oj,) + key[j + 1:]
                    add = sign * v
                    acc = out.get(nk)
                    acc = add if acc is None else acc + add
                    if acc:
                        out[nk] = acc
                    elif nk in out:
                        del out[nk]
        return TensorForm(n, x.degree - 1, out, x.one)

    def lie(self, x: TensorForm) -> TensorForm:
        out = TensorForm.zero(x.n, x.degree, x.one)
        for key, c in x.terms.items():
            for j in range(len(key)):
                terms = {}
                for o, v in self.apply_unit(key[j]).items():
                    terms[key[:j] + (o,) + key[j + 1:]] = c * v
                out = out + TensorForm(x.n, x.degree, terms, x.one)
        return out

    def commutator(self, other: "MatrixDerivation") -> "MatrixDerivation":
        if other.n != self.n:
            raise ValueError("matrix sizes differ")
        theta = {}
        for b in range(self.n * self.n):
            img = {}
            for o, v in other.apply_unit(b).items():
                for o2, v2 in self.apply_unit(o).items():
                    img[o2] = img.get(o2, 0) + v * v2
            for o, v in self.apply_unit(b).items():
                for o2, v2 in other.apply_unit(o).items():
                    img[o2] = img.get(o2, 0) - v * v2
            for o, v in img.items():
                if v:
                    theta[(o, b)] = v
        return MatrixDerivation(self.n, theta, self.one, check=False)

    def coordinates(self):
        return dict(self.theta)

    def __repr__(self):
        return "MatrixDerivation(n=%d, %d entries)" % (self.n, len(self.theta))


def d_universal(x: TensorForm) -> TensorForm:
    return x.d()


def mul_universal(x: TensorForm, y: TensorForm) -> TensorForm:
    return x * y


def iprod_universal(theta: MatrixDerivation, x: TensorForm) -> TensorForm:
    return theta.iprod(x)


def lie_universal(theta: MatrixDerivation, x: TensorForm) -> TensorForm:
    return theta.lie(x)


def antisymmetric_basis(n, one=Fraction(1)):
    """E_ij - E_ji for i < j, as 0-forms; spans the antisymmetric matrices."""
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            out.append(TensorForm(n, 0, {(i * n + j,): one, (j * n + i,): -one}, one))
    return out


def matrix_symplectic_form(n, one=Fraction(1)) -> TensorForm:
    """omega = 1/2 sum_ij dE_ij dE_ij."""
    half = one / 2
    om = TensorForm.zero(n, 2, one)
    for i in range(n):
        for j in range(n):
            de = TensorForm.unit(n, i, j, one).d()
            om = om + (de * de).scale(half)
    return om

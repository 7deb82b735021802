"""The graded tensor product calculus on Q[x, y] (x) M_2.

Forms split into bigraded components: a classical wedge symbol from
{1, dx, dy, dx dy} tensored with a matrix-direction form (a TensorForm
over polynomial scalars).  Multiplication carries the Koszul sign
(t1 x e1)(t2 x e2) = (-1)^(|e1| |t2|) t1 t2 x e1 e2, and the
differential acts by

    d(c x T) = dx c x dT/dx + dy c x dT/dy + (-1)^|c| c x d_mat(T),

where d_mat inserts identity legs as in the universal matrix calculus
and the partial derivatives hit the polynomial scalars.

A derivation is a triple (theta_x, theta_y, theta_S): two polynomial
coefficients for d/dx and d/dy plus an antisymmetric matrix-valued
polynomial acting by commutator.  Interior product evaluates against
dx, dy and the matrix legs; the Lie derivative is the unsigned
derivation with L(da) = d(theta(a)).  For a non-constant theta_S the
Lie derivative leaks between bidegrees: on a matrix 1-form A d_mat(B)
it contributes A dx [dS/dx, B] + A dy [dS/dy, B] on top of the
leg-wise commutator action, extended to higher matrix degree with
alternating junction insertions.
"""

from __future__ import annotations

from .algebra import DegreeError
from .matrixcalc import MatrixDerivation, TensorForm
from .polynomials import P_ONE, Poly

CSYMS = ((), ("x",), ("y",), ("x", "y"))


def wedge(a, b):
    """(sign, sorted letters) of the classical wedge a ^ b, or None."""
    letters = list(a) + list(b)
    if len(set(letters)) != len(letters):
        return None
    sign = 1
    out = list(a)
    for lt in b:
        pos = len(out)
        out.append(lt)
        while pos > 0 and out[pos - 1] > out[pos]:
            out[pos - 1], out[pos] = out[pos], out[pos - 1]
            sign = -sign
            pos -= 1
    return sign, tuple(out)


def _poly(v):
    if isinstance(v, Poly):
        return v
    return Poly.const(v)


class BigradedForm:
    """Map from classical wedge symbol to a matrix-direction TensorForm."""

    __slots__ = ("parts",)

    def __init__(self, parts=None):
        self.parts = {}
        if parts:
            for csym, t in parts.items():
                if not t.is_zero():
                    self.parts[csym] = t

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def from_matrix_form(cls, t: TensorForm, csym=()):
        return cls({csym: t})

    @classmethod
    def scalar(cls, value):
        return cls({(): TensorForm.identity(2, P_ONE).scale(_poly(value))})

    @classmethod
    def classical(cls, csym, value=1):
        """value * (csym tensor identity-matrix)."""
        return cls({tuple(csym): TensorForm.identity(2, P_ONE).scale(_poly(value))})

    @classmethod
    def from_matrix(cls, mat):
        return cls({(): TensorForm.from_matrix(
            [[_poly(v) for v in row] for row in mat], P_ONE)})

    def component(self, csym):
        return self.parts.get(tuple(csym), TensorForm.zero(2, 0, P_ONE))

    def bidegrees(self):
        return sorted((len(c), t.degree) for c, t in self.parts.items())

    def degree(self):
        degs = {len(c) + t.degree for c, t in self.parts.items()}
        if not degs:
            return 0
        if len(degs) > 1:
            raise ValueError("form is not homogeneous: total degrees %s" % sorted(degs))
        return degs.pop()

    def is_zero(self):
        return not self.parts

    # -- linear structure ----------------------------------------------------

    def _put(self, parts, csym, t):
        if t.is_zero():
            return
        cur = parts.get(csym)
        acc = t if cur is None else cur + t
        if acc.is_zero():
            parts.pop(csym, None)
        else:
            parts[csym] = acc

    def __add__(self, other):
        if not isinstance(other, BigradedForm):
            return NotImplemented
        parts = dict(self.parts)
        for csym, t in other.parts.items():
            self._put(parts, csym, t)
        return BigradedForm(parts)

    def __neg__(self):
        return BigradedForm({c: -t for c, t in self.parts.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, value):
        p = _poly(value)
        return BigradedForm({c: t.scale(p) for c, t in self.parts.items()})

    def __rmul__(self, value):
        if isinstance(value, (int, Poly)) or hasattr(value, "denominator"):
            return self.scale(value)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Poly)) or hasattr(other, "denominator"):
            return self.scale(other)
        if not isinstance(other, BigradedForm):
            return NotImplemented
        parts = {}
        for c1, t1 in self.parts.items():
            for c2, t2 in other.parts.items():
                w = wedge(c1, c2)
                if w is None:
                    continue
                sign, csym = w
                if (t1.degree * len(c2)) % 2 == 1:
                    sign = -sign
                t = t1 * t2
                if sign < 0:
                    t = -t
                self._put(parts, csym, t)
        return BigradedForm(parts)

    def tensor(self, other: "BigradedForm") -> "BigradedForm":
        if set(self.parts) - {()} or set(other.parts) - {()}:
            raise ValueError("tensor legs only combine matrix-direction parts")
        if not self.parts or not other.parts:
            return BigradedForm()
        return BigradedForm({(): self.parts[()].tensor(other.parts[()])})

    def __eq__(self, other):
        if not isinstance(other, BigradedForm):
            return NotImplemented
        return self.parts == other.parts

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    # -- calculus --------------------------------------------------------------

    def d(self):
        parts = {}
        for csym, t in self.parts.items():
            for var, dt in (("x", _map_scalars(t, Poly.diff_x)),
                            ("y", _map_scalars(t, Poly.diff_y))):
                w = wedge((var,), csym)
                if w is None or dt.is_zero():
                    continue
                sign, nc = w
                self._put(parts, nc, dt if sign > 0 else -dt)
            dm = t.d()
            if len(csym) % 2 == 1:
                dm = -dm
            self._put(parts, csym, dm)
        return BigradedForm(parts)

    def __str__(self):
        from .printing import bigraded_str

        return bigraded_str(self)

    __repr__ = __str__


def _map_scalars(t: TensorForm, fn) -> TensorForm:
    return TensorForm(t.n, t.degree,
                      {k: fn(v) for k, v in t.terms.items()}, t.one)


def _junction_insert(t: TensorForm, p_matrix) -> list:
    """Contract junction j of every term with the matrix P inserted,
    for j = 1..degree; returns the list indexed by j-1."""
    n = t.n
    outs = []
    for j in range(1, t.degree + 1):
        out = {}
        for key, c in t.terms.items():
            ai, aj = divmod(key[j - 1], n)
            bi, bj = divmod(key[j], n)
            val = p_matrix[aj][bi]
            if not val:
                continue
            nk = key[:j - 1] + (ai * n + bj,) + key[j + 1:]
            add = c * val
            acc = out.get(nk)
            acc = add if acc is None else acc + add
            if acc:
                out[nk] = acc
            elif nk in out:
                del out[nk]
        outs.append(TensorForm(n, t.degree - 1, out, t.one))
    return outs


class MixedDerivation:
    """(theta_x, theta_y, theta_S) acting as
    theta(f) = theta_x df/dx + theta_y df/dy + [theta_S, f]."""

    __slots__ = ("theta_x", "theta_y", "theta_s", "label")

    def __init__(self, theta_x=0, theta_y=0, theta_s=None, label=None,
                 require_antisymmetric=True):
        self.theta_x = _poly(theta_x)
        self.theta_y = _poly(theta_y)
        if theta_s is None:
            theta_s = [[Poly(), Poly()], [Poly(), Poly()]]
        self.theta_s = [[_poly(v) for v in row] for row in theta_s]
        self.label = label
        if require_antisymmetric:
            for i in range(2):
                for j in range(2):
                    if self.theta_s[i][j] != -self.theta_s[j][i]:
                        raise ValueError("theta_S must be antisymmetric")

    # -- linear structure ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MixedDerivation):
            return NotImplemented
        return MixedDerivation(
            self.theta_x + other.theta_x, self.theta_y + other.theta_y,
            [[self.theta_s[i][j] + other.theta_s[i][j] for j in range(2)]
             for i in range(2)])

    def __rmul__(self, c):
        return MixedDerivation(
            c * self.theta_x, c * self.theta_y,
            [[c * v for v in row] for row in self.theta_s])

    def __neg__(self):
        return (-1) * self

    def __sub__(self, other):
        return self + (-1) * other

    def is_zero(self):
        return not (self.theta_x or self.theta_y
                    or any(any(row) for row in self.theta_s))

    def _ad(self):
        return MatrixDerivation.ad(self.theta_s, P_ONE)

    def _scalar_transport(self, t: TensorForm) -> TensorForm:
        out = _map_scalars(t, Poly.diff_x).scale(self.theta_x)
        return out + _map_scalars(t, Poly.diff_y).scale(self.theta_y)

    # -- action ----------------------------------------------------------------

    def apply(self, a: BigradedForm) -> BigradedForm:
        t = a.component(())
        if set(a.parts) - {()} or t.degree != 0:
            raise ValueError("apply expects a 0-form; use lie for forms")
        out = self._scalar_transport(t) + self._ad().lie(t)
        return BigradedForm({(): out})

    def __call__(self, a):
        return self.apply(a)

    def iprod(self, x: BigradedForm) -> BigradedForm:
        if x.parts and all(len(c) + t.degree == 0 for c, t in x.parts.items()):
            raise DegreeError("interior product needs degree >= 1")
        evals = {"x": self.theta_x, "y": self.theta_y}
        ad = self._ad()
        parts = {}
        out = BigradedForm()
        for csym, t in x.parts.items():
            for j, var in enumerate(csym):
                rest = csym[:j] + csym[j + 1:]
                term = t.scale(evals[var])
                if j % 2 == 1:
                    term = -term
                out._put(parts, rest, term)
            if t.degree >= 1:
                term = ad.iprod(t)
                if len(csym) % 2 == 1:
                    term = -term
                out._put(parts, csym, term)
        return BigradedForm(parts)

    def lie(self, x: BigradedForm) -> BigradedForm:
        dtheta = {
            "x": (self.theta_x.diff_x(), self.theta_x.diff_y()),
            "y": (self.theta_y.diff_x(), self.theta_y.diff_y()),
        }
        ds_dx = [[v.diff_x() for v in row] for row in self.theta_s]
        ds_dy = [[v.diff_y() for v in row] for row in self.theta_s]
        ad = self._ad()
        out = BigradedForm()
        parts = {}
        for csym, t in x.parts.items():
            # replace each classical letter dxi by d(theta_xi)
            for j, var in enumerate(csym):
                cx, cy = dtheta[var]
                for repl, coeff in (("x", cx), ("y", cy)):
                    if not coeff:
                        continue
                    w = wedge(csym[:j], (repl,))
                    if w is None:
                        continue
                    s1, left = w
                    w2 = wedge(left, csym[j + 1:])
                    if w2 is None:
                        continue
                    s2, nc = w2
                    term = t.scale(coeff)
                    if s1 * s2 < 0:
                        term = -term
                    out._put(parts, nc, term)
            # transport of polynomial scalars plus leg-wise commutator
            out._put(parts, csym, self._scalar_transport(t) + ad.lie(t))
            # bidegree leakage of a non-constant theta_S
            for var, dS in (("x", ds_dx), ("y", ds_dy)):
                if not any(any(row) for row in dS):
                    continue
                w = wedge(csym, (var,))
                if w is None:
                    continue
                sign, nc = w
                acc = None
                for j, ins in enumerate(_junction_insert(t, dS)):
                    term = ins if j % 2 == 0 else -ins
                    acc = term if acc is None else acc + term
                if acc is None or acc.is_zero():
                    continue
                if sign < 0:
                    acc = -acc
                out._put(parts, nc, acc)
        return BigradedForm(parts)

    def commutator(self, other: "MixedDerivation") -> "MixedDerivation":
        def transport(theta, g):
            return theta.theta_x * g.diff_x() + theta.theta_y * g.diff_y()

        tx = transport(self, other.theta_x) - transport(other, self.theta_x)
        ty = transport(self, other.theta_y) - transport(other, self.theta_y)
        ts = [[transport(self, other.theta_s[i][j])
               - transport(other, self.theta_s[i][j])
               + sum((self.theta_s[i][k] * other.theta_s[k][j]
                      - other.theta_s[i][k] * self.theta_s[k][j])
                     for k in range(2))
               for j in range(2)] for i in range(2)]
        return MixedDerivation(tx, ty, ts)

    def coordinates(self):
        coords = {}
        for mono, c in self.theta_x.coeffs.items():
            coords[("x", mono)] = c
        for mono, c in self.theta_y.coeffs.items():
            coords[("y", mono)] = c
        for i in range(2):
            for j in range(2):
                for mono, c in self.theta_s[i][j].coeffs.items():
                    coords[("S", i, j, mono)] = c
        return coords

    def __repr__(self):
        return ("mixed derivation(theta_x=%s, theta_y=%s, theta_S12=%s)"
                % (self.theta_x, self.theta_y, self.theta_s[0][1]))


def poly_matrix_symplectic_form() -> BigradedForm:
    """omega = dx dy + 1/2 sum dE_ij dE_ij + dx (dE_12 - dE_21)."""
    from .matrixcalc import matrix_symplectic_form

    om = BigradedForm.classical(("x", "y"))
    om = om + BigradedForm.from_matrix_form(matrix_symplectic_form(2, P_ONE))
    j_mat = TensorForm(2, 0, {(0 * 2 + 1,): P_ONE, (1 * 2 + 0,): -P_ONE}, P_ONE)
    om = om + BigradedForm({("x",): j_mat.d()})
    return om

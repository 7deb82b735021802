"""Hamiltonian machinery for a closed 2-form on any calculus backend.

omega_tilde sends a derivation theta to theta _| omega.  For a closed
omega, theta preserves omega exactly when d(theta _| omega) = 0, and
omega is nonsingular relative to a finite ansatz space V when omega_tilde
has trivial kernel on the span of V.  An element a is Hamiltonian
relative to V when the exact linear system omega_tilde(X) = da has a
solution X in span(V); then {a, b} = X_a(b), and the truncated flow of b
is exp(t X_b) a cut at a fixed order.  Everything is solved by exact
Gauss-Jordan elimination over the coefficient field; there is no
tolerance anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import ExactLinearSystem


class SingularFormError(ValueError):
    """The 2-form has nontrivial kernel on the ansatz; refusing to solve."""


class NotHamiltonianError(ValueError):
    def __init__(self, verdict):
        super().__init__("element is not Hamiltonian relative to the ansatz: "
                         "residual has %d coordinates" % len(verdict.residual))
        self.verdict = verdict


@dataclass
class SymplecticForm:
    backend: object
    omega: object

    def __post_init__(self):
        if not self.backend.is_zero(self.backend.d(self.omega)):
            raise ValueError("the 2-form is not closed")
        self.closed = True


@dataclass
class AnsatzSpace:
    backend: object
    basis: list

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)


@dataclass
class KernelReport:
    dimension: int
    basis: list                      # coefficient vectors over the ansatz

    @property
    def nonsingular(self):
        return self.dimension == 0

    def summary(self):
        if self.nonsingular:
            return "omega_tilde kernel: 0 (nonsingular on the ansatz)"
        return "omega_tilde kernel dimension: %d" % self.dimension


@dataclass
class HamiltonianSolution:
    element: object
    coefficients: list
    vector_field: object             # X_a with omega_tilde(X_a) = da exactly

    @property
    def hamiltonian(self):
        return True


@dataclass
class NotHamiltonian:
    element: object
    residual: dict                   # coordinates of da outside the image

    @property
    def hamiltonian(self):
        return False


def omega_tilde(theta, form: SymplecticForm):
    return theta.iprod(form.omega)


def in_v_omega(theta, form: SymplecticForm) -> bool:
    """d(theta _| omega) = 0, cross-checked against L_theta(omega) = 0."""
    backend = form.backend
    via_d = backend.is_zero(backend.d(theta.iprod(form.omega)))
    via_lie = backend.is_zero(theta.lie(form.omega))
    if via_d != via_lie:
        raise AssertionError("closedness of omega broken: the two membership "
                             "tests disagree")
    return via_d


class HamiltonianSolver:
    """Factorizes omega_tilde on an ansatz once; solves many right sides."""

    def __init__(self, form: SymplecticForm, space: AnsatzSpace):
        if form.backend is not space.backend:
            raise ValueError("form and ansatz use different backends")
        self.form = form
        self.space = space
        self.backend = form.backend
        self._images = [theta.iprod(form.omega) for theta in space.basis]
        self._system = ExactLinearSystem(
            [self.backend.coordinates(img) for img in self._images],
            self.backend.field_one)
        self._kernel = self._system.nullspace()
        self._cache = {}

    def kernel_report(self) -> KernelReport:
        return KernelReport(len(self._kernel), self._kernel)

    @property
    def nonsingular(self):
        return not self._kernel

    def solve(self, a):
        if self._kernel:
            raise SingularFormError(
                "omega_tilde has kernel of dimension %d on the ansatz"
                % len(self._kernel))
        key = self.backend.freeze(a)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        da = self.backend.d(a)
        rhs = self.backend.coordinates(da)
        coeffs = self._system.solve(rhs)
        if coeffs is None:
            out = NotHamiltonian(a, self._system.residual(rhs))
        else:
            x_a = self.backend.combo(coeffs, self.space.basis)
            residual = x_a.iprod(self.form.omega) - da
            if not self.backend.is_zero(residual):
                raise AssertionError("solver produced a nonzero residual")
            out = HamiltonianSolution(a, coeffs, x_a)
        self._cache[key] = out
        return out

    def require_field(self, a):
        sol = self.solve(a)
        if not sol.hamiltonian:
            raise NotHamiltonianError(sol)
        return sol.vector_field

    def poisson(self, a, b):
        """{a, b} = X_a(b); both arguments must be Hamiltonian."""
        x_a = self.require_field(a)
        self.require_field(b)
        return x_a.apply(b)

    def flow(self, b, a, order: int):
        """Truncated formal flow exp(t X_b) a as a FlowSeries."""
        if order < 0:
            raise ValueError("flow order must be >= 0")
        x_b = self.require_field(b)
        coeffs = [a]
        cur = a
        fact = 1
        for k in range(1, order + 1):
            cur = x_b.apply(cur)
            fact *= k
            coeffs.append(cur * Fraction(1, fact))
        return FlowSeries(coeffs)


@dataclass
class FlowSeries:
    """Polynomial in the formal time t with element coefficients.

    coefficients[k] is the coefficient of t^k, the 1/k! included.
    """

    coefficients: list

    @property
    def order(self):
        return len(self.coefficients) - 1

    def coefficient(self, k):
        return self.coefficients[k]

    def derivative_at_zero(self):
        return self.coefficients[1] if len(self.coefficients) > 1 else None

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coefficients):
            body = str(c)
            if k == 0:
                parts.append(body)
            else:
                t = "t" if k == 1 else "t^%d" % k
                parts.append("%s (%s)" % (t, body))
        return " + ".join(parts)

    __repr__ = __str__


_solver_cache = {}


def _solver(form: SymplecticForm, space: AnsatzSpace) -> HamiltonianSolver:
    key = (id(form), id(space))
    solver = _solver_cache.get(key)
    if solver is None or solver.form is not form or solver.space is not space:
        solver = HamiltonianSolver(form, space)
        _solver_cache[key] = solver
    return solver


def check_nonsingular(form: SymplecticForm, space: AnsatzSpace) -> KernelReport:
    return _solver(form, space).kernel_report()


def solve_hamiltonian(a, form: SymplecticForm, space: AnsatzSpace):
    return _solver(form, space).solve(a)


def poisson(a, b, form: SymplecticForm, space: AnsatzSpace):
    return _solver(form, space).poisson(a, b)


def flow(b, a, order: int, form: SymplecticForm, space: AnsatzSpace) -> FlowSeries:
    return _solver(form, space).flow(b, a, order)

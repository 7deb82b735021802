"""Derivations and the Cartan operations on presented calculi.

A derivation is determined by its images on the algebra generators and
extended everywhere by the Leibniz rule; for an invertible generator the
image of g^-1 is -g^-1 theta(g) g^-1, forced by theta(g g^-1) = 0.  The
interior product is the signed derivation of degree -1 with
theta _| dg = theta(g); the Lie derivative is the unsigned derivation of
degree 0 with L(dg) = d(theta(g)).

These operations are only well defined when they annihilate every
relation of the calculus, so `check_consistency` reduces theta(R),
theta _| R and L_theta(R) to normal form for each installed rule R and
reports the residuals.  Derivations enter a `DerivationSpace` only after
passing that check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import DegreeError, Element
from .forms import CalculusPresentation
from .linalg import ExactLinearSystem


class InconsistentDerivationError(ValueError):
    pass


class PresentedDerivation:
    """Derivation on a presented calculus, given by generator images."""

    def __init__(self, calculus: CalculusPresentation, images, label=None):
        self.calculus = calculus
        self.images = {}
        for name, img in images.items():
            if name not in {g.name for g in calculus.generators}:
                raise KeyError("unknown generator %r" % name)
            if not isinstance(img, Element):
                raise TypeError("image of %s must be an Element" % name)
            self.images[name] = calculus.normalize(img)
        for g in calculus.generators:
            self.images.setdefault(g.name, calculus.zero())
        self.label = label

    # -- linear structure ----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, PresentedDerivation):
            return NotImplemented
        if other.calculus is not self.calculus:
            raise ValueError("derivations on different calculi")
        return PresentedDerivation(
            self.calculus,
            {n: self.images[n] + other.images[n] for n in self.images})

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        return PresentedDerivation(
            self.calculus, {n: img * scalar for n, img in self.images.items()})

    def __neg__(self):
        return (-1) * self

    def is_zero(self):
        return all(img.is_zero() for img in self.images.values())

    # -- action -----------------------------------------------------------

    def _image_of_letter(self, li):
        lt = self.calculus.system.table.letters[li]
        img = self.images[lt.base]
        if lt.exp == 1:
            return img
        ginv = Element(self.calculus.system, {(li,): self.calculus.system.one()},
                       normal=True)
        return -(ginv * img * ginv)

    def apply(self, a: Element) -> Element:
        """Leibniz extension over words; degree-0 elements only."""
        system = self.calculus.system
        if a.system is not system:
            raise ValueError("element belongs to a different calculus")
        isd = system.table.is_diff
        out = Element.zero(system)
        one = system.one()
        for w, c in a.terms.items():
            for j, li in enumerate(w):
                if isd[li]:
                    raise ValueError("apply expects a 0-form; use lie for forms")
                pre = Element(system, {w[:j]: c}, normal=True)
                suf = Element(system, {w[j + 1:]: one}, normal=True)
                out = out + pre * self._image_of_letter(li) * suf
        return out

    def __call__(self, a):
        return self.apply(a)

    def iprod(self, x: Element) -> Element:
        """Interior product: signed derivation, degree -1."""
        system = self.calculus.system
        if x.system is not system:
            raise ValueError("element belongs to a different calculus")
        if x.terms and x.degrees() == [0]:
            raise DegreeError("interior product needs degree >= 1")
        isd = system.table.is_diff
        letters = system.table.letters
        out = Element.zero(system)
        one = system.one()
        for w, c in x.terms.items():
            sign = one
            for j, li in enumerate(w):
                if not isd[li]:
                    continue
                pre = Element(system, {w[:j]: c * sign}, normal=True)
                suf = Element(system, {w[j + 1:]: one}, normal=True)
                out = out + pre * self.images[letters[li].base] * suf
                sign = -sign
        return out

    def lie(self, x: Element) -> Element:
        """Lie derivative: unsigned derivation, degree 0."""
        system = self.calculus.system
        if x.system is not system:
            raise ValueError("element belongs to a different calculus")
        isd = system.table.is_diff
        letters = system.table.letters
        out = Element.zero(system)
        one = system.one()
        for w, c in x.terms.items():
            for j, li in enumerate(w):
                if isd[li]:
                    repl = self.calculus.d(self.images[letters[li].base])
                else:
                    repl = self._image_of_letter(li)
                pre = Element(system, {w[:j]: c}, normal=True)
                suf = Element(system, {w[j + 1:]: one}, normal=True)
                out = out + pre * repl * suf
        return out

    def commutator(self, other: "PresentedDerivation") -> "PresentedDerivation":
        if other.calculus is not self.calculus:
            raise ValueError("derivations on different calculi")
        images = {}
        for g in self.calculus.generators:
            images[g.name] = (self.apply(other.images[g.name])
                              - other.apply(self.images[g.name]))
        return PresentedDerivation(self.calculus, images)

    def coordinates(self):
        coords = {}
        for name, img in self.images.items():
            for w, c in img.terms.items():
                coords[(name, w)] = c
        return coords

    def __repr__(self):
        body = ", ".join("%s -> %s" % (n, self.images[n])
                         for n in sorted(self.images))
        return "derivation(%s)" % body


# -- generic wrappers (any backend exposes the same methods) -------------


def apply(theta, a):
    return theta.apply(a)


def iprod_or_zero(theta, x):
    """theta _| x with the convention that _| vanishes on 0-forms."""
    try:
        return theta.iprod(x)
    except DegreeError:
        return x - x


def iprod(theta, x):
    return theta.iprod(x)


def lie(theta, x):
    return theta.lie(x)


def commutator(theta, phi):
    return theta.commutator(phi)


# -- consistency ---------------------------------------------------------


@dataclass
class ConsistencyCheck:
    description: str
    residual: object
    ok: bool


@dataclass
class ConsistencyReport:
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def summary(self):
        lines = ["consistency checks: %d, failing: %d"
                 % (len(self.checks), len(self.failures()))]
        for c in self.failures():
            lines.append("  FAIL %s: residual %s" % (c.description, c.residual))
        return "\n".join(lines)


def check_consistency(theta: PresentedDerivation,
                      calculus: CalculusPresentation = None) -> ConsistencyReport:
    """Reduce theta(R), theta _| R and L_theta(R) for every relation R.

    Algebra relations are checked under apply; form relations under both
    the interior product and the Lie derivative.  Derived inverse-variant
    rules are consequences of the declared ones, but checking them too is
    cheap and catches encoding mistakes.
    """
    calc = calculus or theta.calculus
    report = ConsistencyReport()
    deg = calc.system.table.word_degree
    for desc, lhs, rhs in calc.all_relations():
        rel = lhs - rhs
        if all(deg(w) == 0 for w in rel.terms):
            res = theta.apply(rel)
            report.checks.append(ConsistencyCheck("apply on " + desc, res,
                                                  res.is_zero()))
        else:
            res_i = theta.iprod(rel)
            report.checks.append(ConsistencyCheck("iprod on " + desc, res_i,
                                                  res_i.is_zero()))
            res_l = theta.lie(rel)
            report.checks.append(ConsistencyCheck("lie on " + desc, res_l,
                                                  res_l.is_zero()))
    return report


# -- torus classification -------------------------------------------------


def classify_torus_derivations(p: int, bound: int, calculus=None, root_exp=1):
    """Basis of consistent torus derivations with exponent offsets <= bound.

    The consistent family is theta(u) in span{u^(1+sp) v^(tp)} and
    theta(v) in span{u^(sp) v^(1+tp)}; the returned basis has one member
    per monomial image with |s|, |t| <= bound, u-type first, ordered by
    (s, t).  `tests` confirm by brute force that nothing else passes the
    consistency check.
    """
    if calculus is None:
        from .models import torus_calculus

        calculus = torus_calculus(p, root_exp)
    basis = []
    rng = range(-bound, bound + 1)
    for s in rng:
        for t in rng:
            img = calculus.element([("u", 1 + s * p), ("v", t * p)])
            basis.append(PresentedDerivation(
                calculus, {"u": img},
                label="b[%d,%d]" % (s, t)))
    for s in rng:
        for t in rng:
            img = calculus.element([("u", s * p), ("v", 1 + t * p)])
            basis.append(PresentedDerivation(
                calculus, {"v": img},
                label="c[%d,%d]" % (s, t)))
    return basis


# -- derivation spaces ------------------------------------------------------


class DerivationSpace:
    """A finite, consistency-checked basis of derivations.

    Commutator closure is verified span-wise: a commutator lying outside
    the stored span is accepted when it still passes the consistency
    check (the ambient space is infinite dimensional and the basis is a
    truncation), and reported as such.
    """

    def __init__(self, basis, backend=None, check=True):
        self.basis = list(basis)
        self.backend = backend
        if check:
            for theta in self.basis:
                rep = consistency_of(theta)
                if rep is not None and not rep.ok:
                    raise InconsistentDerivationError(
                        "basis member fails consistency:\n" + rep.summary())

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def combo(self, coeffs):
        out = None
        for c, theta in zip(coeffs, self.basis):
            term = c * theta
            out = term if out is None else out + term
        return out

    def _system(self):
        cols = [theta.coordinates() for theta in self.basis]
        ones = [c for col in cols for c in col.values()]
        if not ones:
            raise ValueError("cannot build coordinates of an all-zero basis")
        one = ones[0] / ones[0]
        return ExactLinearSystem(cols, one)

    def contains(self, theta):
        return self._system().solve(theta.coordinates()) is not None

    def verify_closure(self):
        """Status of [theta_i, theta_j] for all i < j."""
        system = self._system()
        out = []
        for i in range(len(self.basis)):
            for j in range(i + 1, len(self.basis)):
                com = self.basis[i].commutator(self.basis[j])
                if com.is_zero() or system.solve(com.coordinates()) is not None:
                    out.append((i, j, "in-span"))
                else:
                    rep = consistency_of(com)
                    if rep is None or rep.ok:
                        out.append((i, j, "consistent-beyond-truncation"))
                    else:
                        out.append((i, j, "INCONSISTENT"))
        return out


def consistency_of(theta):
    """Consistency report if the backend defines one, else None."""
    if isinstance(theta, PresentedDerivation):
        return check_consistency(theta)
    checker = getattr(theta, "check_consistency", None)
    return checker() if checker else None

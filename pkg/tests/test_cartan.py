"""Derivations, interior products, Lie derivatives, consistency checks."""

import random

import pytest

from ncham.algebra import DegreeError
from ncham.cartan import (DerivationSpace, InconsistentDerivationError,
                          PresentedDerivation, check_consistency,
                          classify_torus_derivations, iprod_or_zero)
from ncham.models import cuntz_calculus, theta_h, torus_calculus


def torus_derivation(calc, img_u=None, img_v=None):
    images = {}
    if img_u is not None:
        images["u"] = img_u
    if img_v is not None:
        images["v"] = img_v
    return PresentedDerivation(calc, images)


def test_apply_examples():
    calc = torus_calculus(2)
    u = calc.gen("u")
    th = torus_derivation(calc, img_u=u)
    assert th.apply(calc.gen("u", -1)) == -calc.gen("u", -1)
    assert th.apply(calc.one()).is_zero()

    cc = cuntz_calculus(2)
    h = cc.gen("s1") * cc.gen("s2*")
    th_h = theta_h(cc, h, 2)
    assert th_h.apply(cc.gen("s2")) == cc.gen("s1")


def test_iprod_examples():
    calc = torus_calculus(2)
    u, v = calc.gen("u"), calc.gen("v")
    du, dv = calc.dgen("u"), calc.dgen("v")
    ui, vi = calc.gen("u", -1), calc.gen("v", -1)
    omega = ui * du * dv * vi
    th = torus_derivation(calc, img_u=u)
    assert th.iprod(du) == u                      # theta _| du = theta(u)
    assert th.iprod(omega) == dv * vi
    with pytest.raises(DegreeError):
        th.iprod(u)
    assert iprod_or_zero(th, u).is_zero()


def test_iprod_general_display_identity():
    """theta _| omega = u^-1 theta(u) dv v^-1 - u^-1 du theta(v) v^-1."""
    rng = random.Random(17)
    for p in (2, 3):
        calc = torus_calculus(p)
        du, dv = calc.dgen("u"), calc.dgen("v")
        ui, vi = calc.gen("u", -1), calc.gen("v", -1)
        omega = ui * du * dv * vi
        basis = classify_torus_derivations(p, 1, calculus=calc)
        for _ in range(15):
            th = rng.choice(basis) + 2 * rng.choice(basis)
            a, b = th.images["u"], th.images["v"]
            assert th.iprod(omega) == ui * a * dv * vi - ui * du * b * vi


def test_lie_examples():
    calc = torus_calculus(2)
    u = calc.gen("u")
    du = calc.dgen("u")
    th = torus_derivation(calc, img_u=u)
    assert th.lie(du) == calc.d(u)
    assert th.lie(calc.gen("u", -1) * du).is_zero()   # log form is invariant

    cc = cuntz_calculus(2)
    th_h = theta_h(cc, cc.gen("s1") * cc.gen("s2*"), 2)
    rel = cc.zero()
    for i in (1, 2):
        rel = rel + cc.dgen("s%d" % i) * cc.gen("s%d*" % i) \
            + cc.gen("s%d" % i) * cc.dgen("s%d*" % i)
    assert th_h.lie(rel).is_zero()


def test_commutator_examples():
    calc = torus_calculus(2)
    basis = classify_torus_derivations(2, 2, calculus=calc)
    th = basis[0] + 3 * basis[5]
    assert th.commutator(th).is_zero()

    # torus p=2: [X_{u^2 v^2}, X_{u^2 v^4}] = X_{{u^2v^2, u^2v^4}}
    def x_field(s, t, p=2):
        xu = calc.element([("u", 1 + s * p), ("v", t * p)], t * p)
        xv = calc.element([("u", s * p), ("v", 1 + t * p)], -s * p)
        return PresentedDerivation(calc, {"u": xu, "v": xv})

    lhs = x_field(1, 1).commutator(x_field(1, 2))
    # {u^2v^2, u^2v^4} = -4 u^4 v^6, and X is linear in the Hamiltonian
    rhs = (-4) * x_field(2, 3)
    assert lhs.coordinates() == rhs.coordinates()


def test_consistency_examples():
    calc = torus_calculus(2)
    ok = torus_derivation(calc,
                          img_u=calc.element([("u", 3), ("v", 2)]),
                          img_v=calc.element([("u", 2), ("v", 3)]))
    assert check_consistency(ok).ok

    bad = torus_derivation(calc, img_u=calc.gen("u") * calc.gen("u"))
    rep = check_consistency(bad)
    assert not rep.ok
    assert rep.failures()

    cc = cuntz_calculus(2)
    rng = random.Random(23)
    names = ["s1", "s2", "s1*", "s2*"]
    for _ in range(10):
        h = cc.one()
        for _ in range(rng.randint(1, 3)):
            h = h * cc.gen(rng.choice(names))
        if h.is_zero():
            continue
        assert check_consistency(theta_h(cc, h, 2)).ok


def test_classification_counts_and_membership():
    for p in (1, 2, 3):
        calc = torus_calculus(p)
        basis = classify_torus_derivations(p, 1, calculus=calc)
        assert len(basis) == 18
        for th in basis:
            assert check_consistency(th).ok


def test_classification_p1_bound0_is_classical():
    calc = torus_calculus(1)
    basis = classify_torus_derivations(1, 0, calculus=calc)
    assert len(basis) == 2
    assert basis[0].images["u"] == calc.gen("u")
    assert basis[0].images["v"].is_zero()
    assert basis[1].images["v"] == calc.gen("v")
    assert basis[1].images["u"].is_zero()


def test_classification_matches_brute_force_scan():
    """Monomial images u^a v^b pass consistency iff Prop-4.1 shaped."""
    for p in (1, 2, 3):
        calc = torus_calculus(p)
        for a in range(-3, 4):
            for b in range(-3, 4):
                img = calc.element([("u", a), ("v", b)])
                th_u = torus_derivation(calc, img_u=img)
                th_v = torus_derivation(calc, img_v=img)
                expect_u = (a % p == 1 % p) and (b % p == 0)
                expect_v = (a % p == 0) and (b % p == 1 % p)
                assert check_consistency(th_u).ok == expect_u, (p, a, b)
                assert check_consistency(th_v).ok == expect_v, (p, a, b)


def test_derivation_space_checks_and_closure():
    calc = torus_calculus(2)
    basis = classify_torus_derivations(2, 1, calculus=calc)
    space = DerivationSpace(basis)
    statuses = {s for _, _, s in space.verify_closure()}
    assert "INCONSISTENT" not in statuses
    # offsets add, so some commutators land beyond the stored bound
    assert statuses <= {"in-span", "consistent-beyond-truncation"}

    bad = torus_derivation(calc, img_u=calc.gen("u") * calc.gen("u"))
    with pytest.raises(InconsistentDerivationError):
        DerivationSpace(basis + [bad])


def test_cuntz_family_commutator_closed(cuntz2):
    space = cuntz2.derivation_space()
    assert all(status == "in-span"
               for _, _, status in space.verify_closure())

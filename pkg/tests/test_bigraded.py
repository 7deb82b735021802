"""The tensor-product calculus on Q[x,y] (x) M_2 and its derivations."""

import random
from fractions import Fraction

import pytest

from ncham.algebra import DegreeError
from ncham.bigraded import (BigradedForm, MixedDerivation,
                            poly_matrix_symplectic_form, wedge)
from ncham.matrixcalc import TensorForm
from ncham.polynomials import P_ONE, Poly


def rand_poly(rng, d=2):
    return Poly({(i, j): Fraction(rng.randint(-2, 2))
                 for i in range(d + 1) for j in range(d + 1 - i)})


def rand_mixed(rng):
    g = rand_poly(rng, 2)
    return MixedDerivation(rand_poly(rng, 2), rand_poly(rng, 2),
                           [[Poly(), g], [-g, Poly()]])


def rand_zero_form(rng):
    return BigradedForm.from_matrix(
        [[rand_poly(rng, 1) for _ in range(2)] for _ in range(2)])


def rand_form(rng, deg):
    f = rand_zero_form(rng)
    for _ in range(deg):
        choice = rng.randrange(3)
        if choice == 0:
            f = f * BigradedForm.classical(("x",), rand_poly(rng, 1))
        elif choice == 1:
            f = f * BigradedForm.classical(("y",), rand_poly(rng, 1))
        else:
            f = f * rand_zero_form(rng).d()
    return f


def test_polynomials():
    x, y = Poly.x(), Poly.y()
    f = x * x * y - 2 * y + 1
    assert f.diff_x() == 2 * x * y
    assert f.diff_y() == x * x - 2
    assert (x + y) * (x - y) == x * x - y * y
    assert f.degree() == 3
    assert str(x * x * y - 2 * y) == "-2 y + x^2 y"


def test_wedge_signs():
    assert wedge((), ("x",)) == (1, ("x",))
    assert wedge(("x",), ("y",)) == (1, ("x", "y"))
    assert wedge(("y",), ("x",)) == (-1, ("x", "y"))
    assert wedge(("x",), ("x",)) is None


def test_classical_anticommutation():
    dx = BigradedForm.classical(("x",))
    dy = BigradedForm.classical(("y",))
    assert dx * dy == -(dy * dx)
    assert (dx * dx).is_zero()


def test_omega_structure():
    om = poly_matrix_symplectic_form()
    assert om.degree() == 2
    assert sorted(om.bidegrees()) == [(0, 2), (1, 1), (2, 0)]
    assert om.d().is_zero()


def test_paper_interior_product_display():
    """theta _| omega = theta_x dy - theta_y dx
       + d_mat(theta_S + theta_x (E12 - E21))."""
    om = poly_matrix_symplectic_form()
    rng = random.Random(5)
    for _ in range(15):
        th = rand_mixed(rng)
        inner = [[th.theta_s[i][j] for j in range(2)] for i in range(2)]
        inner[0][1] = inner[0][1] + th.theta_x
        inner[1][0] = inner[1][0] - th.theta_x
        expected = (BigradedForm.classical(("y",), th.theta_x)
                    - BigradedForm.classical(("x",), th.theta_y)
                    + BigradedForm({(): TensorForm.from_matrix(inner, P_ONE).d()}))
        assert th.iprod(om) == expected


def test_interaction_term_vanishing():
    """[theta_S, E12 - E21] = 0: antisymmetric 2x2 matrices commute."""
    rng = random.Random(6)
    j_mat = [[Poly(), P_ONE], [-P_ONE, Poly()]]
    for _ in range(10):
        g = rand_poly(rng, 2)
        th = MixedDerivation(0, 0, [[Poly(), g], [-g, Poly()]])
        bracket = th._ad().apply(TensorForm.from_matrix(j_mat, P_ONE))
        assert bracket.is_zero()


def test_hamiltonian_fields_displayed_form():
    om = poly_matrix_symplectic_form()
    x, y = Poly.x(), Poly.y()
    f = x * x * y + 3 * y
    t_const = Fraction(5)
    a = (BigradedForm.from_matrix([[0, t_const], [-t_const, 0]])
         + BigradedForm.scalar(f))
    fy = f.diff_y()
    g = Poly.const(t_const) - fy
    x_a = MixedDerivation(fy, -f.diff_x(), [[Poly(), g], [-g, Poly()]])
    assert x_a.iprod(om) == a.d()


def test_commutator_matches_composition():
    rng = random.Random(7)
    for _ in range(15):
        t, s = rand_mixed(rng), rand_mixed(rng)
        a = rand_zero_form(rng)
        assert t.commutator(s).apply(a) == t.apply(s.apply(a)) - s.apply(t.apply(a))


def test_cartan_props_bigraded():
    rng = random.Random(8)
    for _ in range(30):
        t, s = rand_mixed(rng), rand_mixed(rng)
        deg = rng.randint(1, 2)
        f = rand_form(rng, deg)
        assert t.iprod(f).d() + t.iprod(f.d()) == t.lie(f)
        assert t.lie(f).d() == t.lie(f.d())
        assert s.lie(t.iprod(f)) == t.iprod(s.lie(f)) + s.commutator(t).iprod(f)
        if deg >= 2:
            assert s.iprod(t.iprod(f)) == -t.iprod(s.iprod(f))
        assert t.lie(s.lie(f)) - s.lie(t.lie(f)) == t.commutator(s).lie(f)


def test_graded_leibniz_bigraded():
    rng = random.Random(9)
    for _ in range(15):
        f = rand_form(rng, 1)
        g = rand_form(rng, rng.randint(0, 1))
        assert (f * g).d() == f.d() * g - f * g.d()


def test_degree_errors_and_antisymmetry_requirement():
    th = MixedDerivation(Poly.x(), 0)
    with pytest.raises(DegreeError):
        th.iprod(BigradedForm.scalar(Poly.x()))
    with pytest.raises(ValueError):
        MixedDerivation(0, 0, [[Poly(), Poly.x()], [Poly.x(), Poly()]])

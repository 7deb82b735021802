"""omega_tilde, nonsingularity, the Hamiltonian solver, brackets, flows."""

import random
from fractions import Fraction

import pytest

from ncham.cartan import PresentedDerivation
from ncham.matrixcalc import MatrixDerivation, TensorForm
from ncham.symplectic import (AnsatzSpace, HamiltonianSolution,
                              HamiltonianSolver, NotHamiltonian,
                              NotHamiltonianError, SingularFormError,
                              SymplecticForm, check_nonsingular, flow,
                              in_v_omega, omega_tilde, poisson,
                              solve_hamiltonian)


def torus_monomial(calc, a, b, coeff=1):
    return calc.element([("u", a), ("v", b)], coeff)


def test_omega_tilde_linearity(torus2):
    th1 = torus2.space.basis[3]
    th2 = torus2.space.basis[10]
    om = torus2.omega
    lhs = omega_tilde(th1 + th2, om)
    assert lhs == omega_tilde(th1, om) + omega_tilde(th2, om)
    zero = 0 * th1
    assert omega_tilde(zero, om).is_zero()


def test_in_v_omega_examples(torus2, matrix2):
    calc = torus2.calculus
    x_a = PresentedDerivation(calc, {
        "u": torus_monomial(calc, 3, 2, 2), "v": torus_monomial(calc, 2, 3, -2)})
    assert in_v_omega(x_a, torus2.omega)

    th = PresentedDerivation(calc, {"u": torus_monomial(calc, 3, 2)})
    assert not in_v_omega(th, torus2.omega)

    s = [[Fraction(0), Fraction(1)], [Fraction(-1), Fraction(0)]]
    assert in_v_omega(MatrixDerivation.ad(s), matrix2.omega)


def test_nonsingularity(torus2, matrix3, cuntz2, polymat):
    for model in (torus2, matrix3, cuntz2, polymat):
        assert check_nonsingular(model.omega, model.space).nonsingular


def test_zero_form_is_totally_singular(torus2):
    calc = torus2.calculus
    om0 = SymplecticForm(torus2.backend, calc.zero())
    space = AnsatzSpace(torus2.backend, torus2.space.basis[:5])
    rep = check_nonsingular(om0, space)
    assert rep.dimension == len(space.basis)
    solver = HamiltonianSolver(om0, space)
    with pytest.raises(SingularFormError):
        solver.solve(calc.gen("u"))


def test_nonclosed_form_rejected(torus2):
    calc = torus2.calculus
    not_closed = calc.gen("u") * calc.dgen("v")   # d(u dv) = du dv != 0
    assert not calc.is_closed(not_closed)
    with pytest.raises(ValueError):
        SymplecticForm(torus2.backend, not_closed)


def test_torus_solver_paper_fields(torus2):
    calc = torus2.calculus
    a = torus_monomial(calc, 2, 2)
    sol = solve_hamiltonian(a, torus2.omega, torus2.space)
    assert isinstance(sol, HamiltonianSolution)
    assert sol.vector_field.images["u"] == torus_monomial(calc, 3, 2, 2)
    assert sol.vector_field.images["v"] == torus_monomial(calc, 2, 3, -2)

    for bad in [calc.gen("u"), calc.gen("v"),
                calc.gen("u") * calc.gen("v"),
                torus_monomial(calc, 2, 1)]:
        verdict = solve_hamiltonian(bad, torus2.omega, torus2.space)
        assert isinstance(verdict, NotHamiltonian)
        assert verdict.residual          # carries the unreachable part of da


def test_poisson_examples(torus2, cuntz2, matrix3, polymat):
    calc = torus2.calculus
    a = torus_monomial(calc, 2, 2)
    b = torus_monomial(calc, 2, 4)
    assert poisson(a, b, torus2.omega, torus2.space) == \
        torus_monomial(calc, 4, 6, -4)

    cc = cuntz2.calculus
    got = poisson(cc.gen("s1") * cc.gen("s2*"), cc.gen("s2") * cc.gen("s1*"),
                  cuntz2.omega, cuntz2.space)
    want = cc.gen("s1") * cc.gen("s1*") - cc.gen("s2") * cc.gen("s2*")
    assert got == want

    ns = matrix3.namespace()
    s = ns["E12"] - ns["E21"]
    t = ns["E23"] - ns["E32"]
    assert poisson(s, t, matrix3.omega, matrix3.space) == ns["E13"] - ns["E31"]

    np_ = polymat.namespace()
    t7 = 2 * (np_["E12"] - np_["E21"])
    r7 = -1 * (np_["E12"] - np_["E21"])
    got = poisson(t7 + np_["x"], r7 + np_["y"], polymat.omega, polymat.space)
    assert got == -1 * np_["I"]


def test_poisson_requires_hamiltonian_inputs(torus2):
    calc = torus2.calculus
    a = torus_monomial(calc, 2, 2)
    with pytest.raises(NotHamiltonianError):
        poisson(calc.gen("u"), a, torus2.omega, torus2.space)
    with pytest.raises(NotHamiltonianError):
        poisson(a, calc.gen("u"), torus2.omega, torus2.space)


def test_flow_examples(torus2):
    calc = torus2.calculus
    b = torus_monomial(calc, 2, 2)
    u = calc.gen("u")
    series = flow(b, u, 1, torus2.omega, torus2.space)
    assert series.coefficient(0) == u
    assert series.coefficient(1) == torus_monomial(calc, 3, 2, 2)

    a = torus_monomial(calc, 2, 4)
    series2 = flow(b, a, 3, torus2.omega, torus2.space)
    assert series2.coefficient(1) == poisson(b, a, torus2.omega, torus2.space)


def test_flow_matches_conjugation_series(matrix2):
    """exp(tS) a exp(-tS) to second order, against plain matrix arithmetic."""
    rng = random.Random(21)
    n = 2
    ns = matrix2.namespace()
    s_form = ns["E12"] - ns["E21"]
    s = s_form.to_matrix()

    def mat_mul(a, b):
        return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)]

    for _ in range(10):
        a = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        a_form = TensorForm.from_matrix(a)
        series = flow(s_form, a_form, 2, matrix2.omega, matrix2.space)
        sa = mat_mul(s, a)
        as_ = mat_mul(a, s)
        first = [[sa[i][j] - as_[i][j] for j in range(n)] for i in range(n)]
        ssa = mat_mul(s, sa)
        sas = mat_mul(sa, s)
        ass = mat_mul(as_, s)
        second = [[Fraction(1, 2) * (ssa[i][j] - 2 * sas[i][j] + ass[i][j])
                   for j in range(n)] for i in range(n)]
        assert series.coefficient(0) == a_form
        assert series.coefficient(1) == TensorForm.from_matrix(first)
        assert series.coefficient(2) == TensorForm.from_matrix(second)


def test_flow_rejects_non_hamiltonian_generator(torus2):
    calc = torus2.calculus
    with pytest.raises(NotHamiltonianError):
        flow(calc.gen("u"), calc.gen("v"), 2, torus2.omega, torus2.space)
    with pytest.raises(ValueError):
        flow(torus_monomial(calc, 2, 2), calc.gen("u"), -1,
             torus2.omega, torus2.space)


def test_solver_uniqueness_under_nonsingularity(torus2):
    calc = torus2.calculus
    a = torus_monomial(calc, 2, 2, 3) + torus_monomial(calc, -2, 4, Fraction(1, 2))
    solver = HamiltonianSolver(torus2.omega, torus2.space)
    sol = solver.solve(a)
    assert sol.hamiltonian
    # residual certificate: omega~(X_a) - da = 0 exactly
    residual = sol.vector_field.iprod(torus2.omega.omega) - calc.d(a)
    assert residual.is_zero()
    # linearity of the solve
    sol_u = solver.solve(torus_monomial(calc, 2, 2))
    sol_v = solver.solve(torus_monomial(calc, -2, 4))
    combo = 3 * sol_u.vector_field + Fraction(1, 2) * sol_v.vector_field
    assert combo.coordinates() == sol.vector_field.coordinates()

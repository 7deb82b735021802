"""Acceptance suite.

One test per criterion; each prints a single PASS line on success.  All
comparisons are exact (rational or cyclotomic arithmetic); there are no
tolerances anywhere.
"""

import itertools
import random
import time
from fractions import Fraction

from ncham.algebra import check_local_confluence
from ncham.bigraded import BigradedForm
from ncham.cartan import check_consistency, iprod_or_zero
from ncham.matrixcalc import MatrixDerivation, TensorForm, antisymmetric_basis
from ncham.models import theta_h
from ncham.polynomials import Poly
from ncham.symplectic import NotHamiltonian

SEED = 20260809


def _passline(n, text):
    print("PASS criterion %d: %s" % (n, text))


def torus_monomial(calc, a, b, coeff=1):
    return calc.element([("u", a), ("v", b)], coeff)


# -- criterion 1 -------------------------------------------------------------


def test_criterion_1_cartan_identity_suite(all_models):
    """Props 2.5-2.9 on >= 100 seeded random triples per model, < 60 s."""
    t0 = time.time()
    trials = 100
    for model in all_models:
        rng = random.Random(SEED)
        d = model.backend.d
        is_zero = model.backend.is_zero
        for _ in range(trials):
            th = model.random_derivation(rng)
            ph = model.random_derivation(rng)
            x = model.random_form(rng, 2)
            # 2.5 magic formula
            assert is_zero(d(iprod_or_zero(th, x)) + iprod_or_zero(th, d(x))
                           - th.lie(x)), model.name
            # 2.6 d commutes with L
            assert is_zero(d(th.lie(x)) - th.lie(d(x))), model.name
            # 2.7 L against interior product
            assert is_zero(ph.lie(iprod_or_zero(th, x))
                           - iprod_or_zero(th, ph.lie(x))
                           - iprod_or_zero(ph.commutator(th), x)), model.name
            # 2.8 antisymmetry of contraction (degree 2 content)
            x2 = d(model.random_form(rng, 1))
            assert is_zero(iprod_or_zero(ph, iprod_or_zero(th, x2))
                           + iprod_or_zero(th, iprod_or_zero(ph, x2))), model.name
            # 2.9 Lie commutator
            assert is_zero(th.lie(ph.lie(x)) - ph.lie(th.lie(x))
                           - th.commutator(ph).lie(x)), model.name
    elapsed = time.time() - t0
    assert elapsed < 60, "suite took %.1f s" % elapsed
    _passline(1, "Cartan props 2.5-2.9, %d triples x %d models, exact, "
                 "%.1f s" % (trials, len(all_models), elapsed))


# -- criterion 2 -------------------------------------------------------------


def test_criterion_2_torus_bracket_table(torus2, torus3):
    count = 0
    for model, p in ((torus2, 2), (torus3, 3)):
        calc = model.calculus
        rng = range(-2, 3)
        for s, t, s2, t2 in itertools.product(rng, repeat=4):
            a = torus_monomial(calc, s * p, t * p)
            b = torus_monomial(calc, s2 * p, t2 * p)
            got = model.solver.poisson(a, b)
            want = torus_monomial(calc, (s + s2) * p, (t + t2) * p,
                                  (t * s2 - t2 * s) * p * p)
            assert got == want, (p, s, t, s2, t2)
            count += 1
    _passline(2, "torus brackets equal (t s' - t' s) p^2 u^((s+s')p) "
                 "v^((t+t')p) for %d pairs, p in {2, 3}" % count)


# -- criterion 3 -------------------------------------------------------------


def test_criterion_3_torus_classification(torus2):
    calc = torus2.calculus
    u, v = calc.gen("u"), calc.gen("v")
    hamiltonian_found = []
    for a in range(-6, 7):
        for b in range(-6, 7):
            el = torus_monomial(calc, a, b)
            sol = torus2.solver.solve(el)
            expect = a % 2 == 0 and b % 2 == 0
            assert sol.hamiltonian == expect, (a, b)
            if sol.hamiltonian:
                hamiltonian_found.append(el)
    # spans of even monomials succeed as well
    combo = torus_monomial(calc, 2, 2, 3) - torus_monomial(calc, -2, 4, 5)
    assert torus2.solver.solve(combo).hamiltonian
    hamiltonian_found.append(combo)
    for el in [u, v, u * v, u * u * v]:
        verdict = torus2.solver.solve(el)
        assert isinstance(verdict, NotHamiltonian)
    for el in hamiltonian_found:
        assert el.commutator(u).is_zero() and el.commutator(v).is_zero()
    _passline(3, "p=2 Hamiltonians are exactly span{u^(2s) v^(2t)} on the "
                 "scanned grid; u, v, uv, u^2 v rejected; all found "
                 "Hamiltonians are central")


# -- criterion 4 -------------------------------------------------------------


def _mat_mul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]


def _commutator_oracle(a, b):
    ab, ba = _mat_mul(a, b), _mat_mul(b, a)
    return [[ab[i][j] - ba[i][j] for j in range(len(a))] for i in range(len(a))]


def test_criterion_4_matrix_model(matrix2, matrix3):
    for model, n in ((matrix2, 2), (matrix3, 3)):
        basis = antisymmetric_basis(n)
        for s_form in basis:
            ad_s = MatrixDerivation.ad(s_form.to_matrix())
            assert ad_s.iprod(model.omega.omega) == s_form.d()
            sol = model.solver.solve(s_form)
            assert sol.hamiltonian
            assert sol.vector_field.coordinates() == ad_s.coordinates()
        for s_form, t_form in itertools.product(basis, repeat=2):
            got = model.solver.poisson(s_form, t_form)
            want = TensorForm.from_matrix(
                _commutator_oracle(s_form.to_matrix(), t_form.to_matrix()))
            assert got == want
    _passline(4, "omega~(ad_S) = 1(x)S - S(x)1 = dS and {S,T} = [S,T] for "
                 "n in {2, 3}; n=3 table matches the so(3) commutator oracle")


# -- criterion 5 -------------------------------------------------------------


def test_criterion_5_cuntz_model(cuntz2, cuntz3):
    for model, n in ((cuntz2, 2), (cuntz3, 3)):
        calc = model.calculus
        s = [calc.gen("s%d" % (i + 1)) for i in range(n)]
        st = [calc.gen("s%d*" % (i + 1)) for i in range(n)]
        for k, l, r, m in itertools.product(range(n), repeat=4):
            got = model.solver.poisson(s[k] * st[l], s[r] * st[m])
            want = calc.zero()
            if l == r:
                want = want + s[k] * st[m]
            if m == k:
                want = want - s[r] * st[l]
            assert got == want, (n, k, l, r, m)
        # the four differential-relation checks for random words h
        rng = random.Random(SEED)
        names = ["s%d" % (i + 1) for i in range(n)] + \
                ["s%d*" % (i + 1) for i in range(n)]
        ds = [calc.dgen("s%d" % (i + 1)) for i in range(n)]
        dst = [calc.dgen("s%d*" % (i + 1)) for i in range(n)]
        sum_rel = calc.zero()
        for i in range(n):
            sum_rel = sum_rel + ds[i] * st[i] + s[i] * dst[i]
        checked = 0
        while checked < 20:
            h = calc.one()
            for _ in range(rng.randint(1, 3)):
                h = h * calc.gen(rng.choice(names))
            if h.is_zero():
                continue
            th = theta_h(calc, h, n)
            for i in range(n):
                for j in range(n):
                    rel = dst[i] * s[j] + st[i] * ds[j]
                    assert th.iprod(rel).is_zero()
                    assert th.lie(rel).is_zero()
            assert th.iprod(sum_rel).is_zero()
            assert th.lie(sum_rel).is_zero()
            assert check_consistency(th).ok
            checked += 1
    _passline(5, "Cuntz bracket tables match delta_(l,r) s_k s_m* - "
                 "delta_(m,k) s_r s_l* for n in {2, 3}; all four "
                 "differential-relation checks vanish for 20 random h")


# -- criterion 6 -------------------------------------------------------------


def test_criterion_6_tensor_model(polymat):
    ns = polymat.namespace()
    j_form = ns["E12"] - ns["E21"]
    t_mat = 2 * j_form
    r_mat = -3 * j_form
    monos = [(i, j) for i in range(4) for j in range(4 - i)]
    count = 0
    for (i1, j1), (i2, j2) in itertools.product(monos, repeat=2):
        f = Poly.monomial(i1, j1)
        g = Poly.monomial(i2, j2)
        a = t_mat + BigradedForm.scalar(f)
        b = r_mat + BigradedForm.scalar(g)
        got = polymat.solver.poisson(a, b)
        want = BigradedForm.scalar(f.diff_y() * g.diff_x()
                                   - f.diff_x() * g.diff_y())
        assert got == want, ((i1, j1), (i2, j2))
        count += 1
        # the matrix-commutator term vanishes: X_a's matrix part is a
        # multiple of E12 - E21 and so commutes with R + g I
        x_a = polymat.solver.solve(a).vector_field
        comm = x_a._ad().lie(b.component(()))
        assert comm.is_zero()
    _passline(6, "{T + f I, R + g I} = (f_y g_x - f_x g_y) I for %d monomial "
                 "pairs of degree <= 3, commutator term identically zero"
              % count)


# -- criterion 7 -------------------------------------------------------------


def test_criterion_7_structural_certificates(all_models):
    presented = 0
    for model in all_models:
        if model.calculus is not None:
            rep = check_local_confluence(model.calculus)
            assert rep.all_joinable, model.name
            presented += 1
        assert model.backend.is_zero(model.backend.d(model.omega.omega)), \
            model.name
        assert model.solver.kernel_report().nonsingular, model.name
        rng = random.Random(SEED)
        for _ in range(25):
            x = model.random_form(rng, 1)
            assert model.backend.is_zero(model.backend.d(model.backend.d(x)))
    _passline(7, "%d presented models locally confluent; d omega = 0, "
                 "omega~ kernel trivial, d^2 = 0 on random forms in all %d "
                 "models" % (presented, len(all_models)))


# -- criterion 8 -------------------------------------------------------------


def _poisson_laws(model, triples, name):
    solver = model.solver
    is_zero = model.backend.is_zero
    for a, b, c in triples:
        ab = solver.poisson(a, b)
        assert is_zero(ab + solver.poisson(b, a))         # antisymmetry
        # X_{a,b} = [X_a, X_b] (brackets of Hamiltonians stay Hamiltonian)
        x_ab = solver.solve(ab)
        assert x_ab.hamiltonian, name
        lhs = x_ab.vector_field.coordinates()
        com = solver.solve(a).vector_field.commutator(
            solver.solve(b).vector_field)
        assert lhs == com.coordinates(), name
        # Jacobi
        jac = (solver.poisson(c, ab)
               + solver.poisson(b, solver.poisson(c, a))
               + solver.poisson(a, solver.poisson(b, c)))
        assert is_zero(jac), name
        # Leibniz whenever bc is Hamiltonian too
        bc = b * c
        if solver.solve(bc).hamiltonian:
            assert solver.poisson(a, bc) == \
                solver.poisson(a, b) * c + b * solver.poisson(a, c), name


def test_criterion_8_poisson_structure_laws(torus2, torus3, cuntz2, matrix3,
                                            polymat):
    rng = random.Random(SEED)
    # torus tuples from the criterion-2 family
    for model, p in ((torus2, 2), (torus3, 3)):
        calc = model.calculus
        triples = []
        for _ in range(8):
            picks = [(rng.randint(-1, 1), rng.randint(-1, 1)) for _ in range(3)]
            triples.append(tuple(
                torus_monomial(calc, s * p, t * p) for s, t in picks))
        _poisson_laws(model, triples, model.name)
    # Cuntz tuples from the criterion-5 family
    calc = cuntz2.calculus
    words = [calc.gen("s%d" % (k + 1)) * calc.gen("s%d*" % (l + 1))
             for k in range(2) for l in range(2)]
    triples = [tuple(rng.choice(words) for _ in range(3)) for _ in range(8)]
    _poisson_laws(cuntz2, triples, cuntz2.name)
    # matrix tuples from the antisymmetric family
    basis = antisymmetric_basis(3)
    triples = [tuple(rng.choice(basis) for _ in range(3)) for _ in range(8)]
    _poisson_laws(matrix3, triples, matrix3.name)
    # tensor-model tuples from the criterion-6 family
    ns = polymat.namespace()
    j_form = ns["E12"] - ns["E21"]

    def rand_a():
        f = Poly.monomial(rng.randint(0, 2), rng.randint(0, 1))
        return rng.randint(-2, 2) * j_form + BigradedForm.scalar(f)

    triples = [tuple(rand_a() for _ in range(3)) for _ in range(6)]
    _poisson_laws(polymat, triples, polymat.name)
    _passline(8, "antisymmetry, Jacobi, Leibniz, and X_{a,b} = [X_a, X_b] "
                 "hold exactly on Hamiltonian tuples in all models")


# -- criterion 9 -------------------------------------------------------------


def test_criterion_9_flow_consistency(torus2, cuntz2, matrix2, matrix3):
    rng = random.Random(SEED)
    # t^1 coefficient equals the bracket
    calc = torus2.calculus
    for _ in range(6):
        b = torus_monomial(calc, 2 * rng.randint(-1, 1), 2 * rng.randint(-1, 1))
        a = torus_monomial(calc, 2 * rng.randint(-1, 1), 2 * rng.randint(-1, 1))
        for order in (1, 2, 3):
            series = torus2.solver.flow(b, a, order)
            assert series.coefficient(0) == a
            assert series.coefficient(1) == torus2.solver.poisson(b, a)
    cc = cuntz2.calculus
    for k, l in ((0, 1), (1, 0), (0, 0)):
        b = cc.gen("s%d" % (k + 1)) * cc.gen("s%d*" % (l + 1))
        a = cc.gen("s2") * cc.gen("s1*")
        series = cuntz2.solver.flow(b, a, 2)
        assert series.coefficient(1) == cuntz2.solver.poisson(b, a)
    # conjugation-series oracle in the matrix model (any a); the bracket
    # comparison needs a Hamiltonian a, so it draws antisymmetric ones
    for model, n in ((matrix2, 2), (matrix3, 3)):
        basis = antisymmetric_basis(n)
        for _ in range(6):
            s_form = basis[rng.randrange(len(basis))]
            s = s_form.to_matrix()
            a = [[Fraction(rng.randint(-3, 3)) for _ in range(n)]
                 for _ in range(n)]
            a_form = TensorForm.from_matrix(a)
            series = model.solver.flow(s_form, a_form, 2)
            first = _commutator_oracle(s, a)
            second = _commutator_oracle(s, first)
            assert series.coefficient(1) == TensorForm.from_matrix(first)
            assert series.coefficient(2) == TensorForm.from_matrix(
                [[Fraction(1, 2) * second[i][j] for j in range(n)]
                 for i in range(n)])
        for t_form in basis:
            series = model.solver.flow(s_form, t_form, 1)
            assert series.coefficient(1) == model.solver.poisson(s_form, t_form)
    _passline(9, "flow t^1 coefficient equals the Poisson bracket; matrix "
                 "flows match the exp(tS) a exp(-tS) oracle to order 2")

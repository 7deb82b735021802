"""Built-in models: torus, matrix algebra, Cuntz algebra, poly (x) M_2.

Each builder returns a ModelDescriptor bundling the calculus, the closed
2-form, the default derivation ansatz, seeded random generators for the
property suite, and a `certify` method running the structural checks
(local confluence, d omega = 0, consistency of the ansatz, trivial
omega_tilde kernel).

Rule orientations.  Torus: differentials first, dv < du < u < v, so the
single algebra rule reads v u -> q^-1 u v and normal form words are
dv^e du^e' u^n v^m; inverse variants are derived automatically.  Cuntz:
algebra letters below differentials, with s_i* s_j -> delta_ij, the sum
relation oriented at its largest word s_n s_n*, the differentials of the
delta relations oriented ds_i* s_j -> -s_i* ds_j, and the differential
of the sum relation oriented at ds_n s_n*.  The latter choice (rather
than s_n ds_n*) is what makes the whole rule set locally confluent:
both orientations reproduce the relation, but only this one joins the
overlap ds_i* s_n s_n* and gives theta_h _| omega the same normal form
as d(h).
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import GeneratorSymbol, RuleSpec, check_local_confluence
from .backends import BigradedAdapter, MatrixAdapter, PresentedAdapter
from .bigraded import (BigradedForm, MixedDerivation,
                       poly_matrix_symplectic_form)
from .cartan import (DerivationSpace, PresentedDerivation,
                     classify_torus_derivations, consistency_of)
from .forms import CalculusPresentation
from .matrixcalc import (MatrixDerivation, TensorForm, antisymmetric_basis,
                         matrix_symplectic_form)
from .polynomials import Poly
from .scalars import q_power
from .symplectic import AnsatzSpace, HamiltonianSolver, SymplecticForm


class ModelDescriptor:
    """A built model: calculus + omega + ansatz + random generators."""

    def __init__(self, kind, params, backend, calculus, omega, basis,
                 random_form, random_derivation, namespace, confluence_target,
                 v_family=None):
        self.kind = kind
        self.params = dict(params)
        self.backend = backend
        self.calculus = calculus
        self.omega = SymplecticForm(backend, omega)
        self.space = AnsatzSpace(backend, list(basis))
        self.v_family = list(v_family) if v_family is not None else list(basis)
        self._random_form = random_form
        self._random_derivation = random_derivation
        self._namespace = namespace
        self._confluence_target = confluence_target
        self._solver = None

    @property
    def name(self):
        args = ",".join("%s=%s" % kv for kv in sorted(self.params.items()))
        return "%s:%s" % (self.kind, args) if args else self.kind

    @property
    def solver(self) -> HamiltonianSolver:
        if self._solver is None:
            self._solver = HamiltonianSolver(self.omega, self.space)
        return self._solver

    def random_form(self, rng, max_degree=2):
        return self._random_form(rng, max_degree)

    def random_derivation(self, rng):
        return self._random_derivation(rng)

    def namespace(self):
        return dict(self._namespace)

    def certify(self):
        """Structural certificates; list of (check, ok, detail)."""
        out = []
        if self._confluence_target is not None:
            rep = check_local_confluence(self._confluence_target)
            out.append(("local confluence", rep.all_joinable,
                        "%d critical pairs" % len(rep.pairs)))
        out.append(("d omega = 0",
                    self.backend.is_zero(self.backend.d(self.omega.omega)), ""))
        bad = 0
        for theta in self.space.basis:
            rep = consistency_of(theta)
            if rep is not None and not rep.ok:
                bad += 1
        out.append(("ansatz consistency", bad == 0,
                    "%d derivations" % len(self.space.basis)))
        ker = self.solver.kernel_report()
        out.append(("omega_tilde injective", ker.nonsingular, ker.summary()))
        return out

    def derivation_space(self) -> DerivationSpace:
        """The commutator-closed family V (may be larger than the ansatz)."""
        return DerivationSpace(self.v_family, backend=self.backend)

    def __repr__(self):
        return "<model %s>" % self.name


# -- noncommutative torus -------------------------------------------------


def torus_calculus(p: int, root_exp: int = 1) -> CalculusPresentation:
    """Generators u, v with u v = q v u and the first-order calculus
    du dv = -q dv du, u dv = q dv u, v du = q^-1 du v, [u,du] = [v,dv] = 0,
    (du)^2 = (dv)^2 = 0."""
    if p < 1:
        raise ValueError("p must be >= 1")
    from math import gcd

    if gcd(root_exp, p) != 1:
        raise ValueError("root exponent must be coprime to p")
    qq = q_power(p, root_exp)
    qi = q_power(p, -root_exp)
    gens = [GeneratorSymbol("u", invertible=True),
            GeneratorSymbol("v", invertible=True)]
    algebra_rules = [
        RuleSpec.make([("v", 1), ("u", 1)], [(qi, [("u", 1), ("v", 1)])]),
    ]
    form_rules = [
        RuleSpec.make([("u", 1), ("dv", 1)], [(qq, [("dv", 1), ("u", 1)])]),
        RuleSpec.make([("v", 1), ("du", 1)], [(qi, [("du", 1), ("v", 1)])]),
        RuleSpec.make([("u", 1), ("du", 1)], [(1, [("du", 1), ("u", 1)])]),
        RuleSpec.make([("v", 1), ("dv", 1)], [(1, [("dv", 1), ("v", 1)])]),
        RuleSpec.make([("du", 1), ("dv", 1)], [(-qq, [("dv", 1), ("du", 1)])]),
        RuleSpec.make([("du", 1), ("du", 1)], []),
        RuleSpec.make([("dv", 1), ("dv", 1)], []),
    ]
    return CalculusPresentation(gens, algebra_rules, form_rules, p=p,
                                letter_order=["dv", "du", "u", "v"])


def build_torus(p: int, bound: int = 3, root_exp: int = 1) -> ModelDescriptor:
    calc = torus_calculus(p, root_exp)
    basis = classify_torus_derivations(p, bound, calculus=calc)
    omega = (calc.gen("u", -1) * calc.dgen("u") * calc.dgen("v")
             * calc.gen("v", -1))
    backend = PresentedAdapter(calc)
    # small-offset pool for randomized identity checking; large exponents
    # only slow the rewriting down without adding coverage
    pool = classify_torus_derivations(p, min(bound, 1), calculus=calc)

    def random_form(rng, max_degree=2):
        du, dv = calc.dgen("u"), calc.dgen("v")
        out = calc.zero()
        for _ in range(rng.randint(1, 2)):
            t = calc.element([("u", rng.randint(-2, 2)), ("v", rng.randint(-2, 2))],
                             rng.choice([-2, -1, 1, 2]))
            deg = rng.randint(0, max_degree)
            for _ in range(deg):
                t = t * (du if rng.random() < 0.5 else dv)
                t = t * calc.element([("u", rng.randint(-1, 1))])
            out = out + t
        return out

    def random_derivation(rng):
        combo = rng.choice(pool)
        for _ in range(rng.randint(0, 2)):
            combo = combo + rng.choice([1, 2, -1]) * rng.choice(pool)
        return combo

    return ModelDescriptor(
        kind="torus", params={"p": p} if root_exp == 1 else
        {"p": p, "root": root_exp},
        backend=backend, calculus=calc, omega=omega, basis=basis,
        random_form=random_form, random_derivation=random_derivation,
        namespace=calc.namespace(), confluence_target=calc)


# -- matrix algebra ---------------------------------------------------------


def build_matrix(n: int) -> ModelDescriptor:
    if not 2 <= n <= 4:
        raise ValueError("matrix model supports 2 <= n <= 4")
    omega = matrix_symplectic_form(n)
    anti = antisymmetric_basis(n)
    basis = [MatrixDerivation.ad(a.to_matrix(), label="ad(%s)" % a) for a in anti]
    backend = MatrixAdapter(n)

    def rand_matrix(rng, entries=2):
        # sparse: the identities are multilinear, dense input only costs time
        m = [[Fraction(0)] * n for _ in range(n)]
        for _ in range(entries):
            m[rng.randrange(n)][rng.randrange(n)] = Fraction(rng.randint(-2, 2))
        return m

    def random_form(rng, max_degree=2):
        f = TensorForm.from_matrix(rand_matrix(rng))
        for _ in range(rng.randint(0, max_degree)):
            f = f * TensorForm.from_matrix(rand_matrix(rng)).d()
        return f

    def random_derivation(rng):
        m = rand_matrix(rng)
        anti_m = [[m[i][j] - m[j][i] for j in range(n)] for i in range(n)]
        return MatrixDerivation.ad(anti_m)

    ns = {}
    for i in range(n):
        for j in range(n):
            ns["E%d%d" % (i + 1, j + 1)] = TensorForm.unit(n, i, j)
            ns["dE%d%d" % (i + 1, j + 1)] = TensorForm.unit(n, i, j).d()
    ns["I"] = TensorForm.identity(n)
    return ModelDescriptor(
        kind="matrix", params={"n": n}, backend=backend, calculus=None,
        omega=omega, basis=basis, random_form=random_form,
        random_derivation=random_derivation, namespace=ns,
        confluence_target=None)


# -- Cuntz algebra -----------------------------------------------------------


def cuntz_calculus(n: int) -> CalculusPresentation:
    """Generators s_1..s_n, s_1*..s_n* with s_i* s_j = delta_ij and
    sum_i s_i s_i* = 1, plus the differentials of both relations."""
    if n < 2:
        raise ValueError("Cuntz algebra needs n >= 2")
    s = ["s%d" % (i + 1) for i in range(n)]
    star = [name + "*" for name in s]
    gens = [GeneratorSymbol(name) for name in s + star]
    algebra_rules = []
    for i in range(n):
        for j in range(n):
            rhs = [(1, [])] if i == j else []
            algebra_rules.append(RuleSpec.make([(star[i], 1), (s[j], 1)], rhs))
    sum_rhs = [(1, [])] + [(-1, [(s[i], 1), (star[i], 1)]) for i in range(n - 1)]
    algebra_rules.append(RuleSpec.make([(s[n - 1], 1), (star[n - 1], 1)], sum_rhs))
    form_rules = []
    for i in range(n):
        for j in range(n):
            form_rules.append(RuleSpec.make(
                [("d" + star[i], 1), (s[j], 1)],
                [(-1, [(star[i], 1), ("d" + s[j], 1)])]))
    dsum_rhs = ([(-1, [("d" + s[i], 1), (star[i], 1)]) for i in range(n - 1)]
                + [(-1, [(s[i], 1), ("d" + star[i], 1)]) for i in range(n)])
    form_rules.append(RuleSpec.make([("d" + s[n - 1], 1), (star[n - 1], 1)],
                                    dsum_rhs))
    letter_order = s + star + ["d" + g for g in s] + ["d" + g for g in star]
    return CalculusPresentation(gens, algebra_rules, form_rules, p=1,
                                letter_order=letter_order)


def theta_h(calc: CalculusPresentation, h, n: int, label=None):
    """The derivation theta_h(s_i) = h s_i, theta_h(s_i*) = -s_i* h."""
    images = {}
    for i in range(n):
        si = calc.gen("s%d" % (i + 1))
        st = calc.gen("s%d*" % (i + 1))
        images["s%d" % (i + 1)] = h * si
        images["s%d*" % (i + 1)] = -(st * h)
    return PresentedDerivation(calc, images, label=label)


def build_cuntz(n: int) -> ModelDescriptor:
    calc = cuntz_calculus(n)
    omega = calc.zero()
    for i in range(n):
        omega = omega + calc.dgen("s%d" % (i + 1)) * calc.dgen("s%d*" % (i + 1))
    # The full family theta[s_k s_l*] is the paper's V: an n^2-dimensional
    # gl(n) under commutator.  Since sum_k s_k s_k* = 1, it contains
    # theta_1 with omega~(theta_1) = d(1) = 0, so omega~ is singular on
    # it.  The solver ansatz is its sl(n) part: the off-diagonal members
    # plus differences of consecutive diagonal ones.  It is still closed
    # under commutator, omega~ is injective on it, and theta_1 acts as
    # zero on every balanced word, so no Poisson bracket changes.
    family = []
    diag = []
    for k in range(n):
        for m in range(n):
            h = calc.gen("s%d" % (k + 1)) * calc.gen("s%d*" % (m + 1))
            th = theta_h(calc, h, n, label="theta[s%d s%d*]" % (k + 1, m + 1))
            family.append(th)
            if k == m:
                diag.append(th)
    basis = [th for k, th in enumerate(family) if k // n != k % n]
    for i in range(n - 1):
        member = diag[i] - diag[i + 1]
        member.label = "theta[s%d s%d* - s%d s%d*]" % (i + 1, i + 1, i + 2, i + 2)
        basis.append(member)
    backend = PresentedAdapter(calc)
    gen_names = ["s%d" % (i + 1) for i in range(n)] + \
                ["s%d*" % (i + 1) for i in range(n)]

    def random_word(rng, length):
        out = calc.one()
        for _ in range(length):
            out = out * calc.gen(rng.choice(gen_names))
        return out

    def random_form(rng, max_degree=2):
        for _ in range(50):
            out = calc.zero()
            for _ in range(rng.randint(1, 2)):
                deg = rng.randint(0, max_degree)
                t = calc.scalar(rng.choice([-2, -1, 1, 2]))
                letters = [*(["g"] * rng.randint(0, 2)), *(["d"] * deg)]
                rng.shuffle(letters)
                for kind in letters:
                    name = rng.choice(gen_names)
                    t = t * (calc.dgen(name) if kind == "d" else calc.gen(name))
                out = out + t
            if not out.is_zero():
                return out
        return calc.dgen("s1")

    def random_derivation(rng):
        for _ in range(50):
            h = random_word(rng, rng.randint(1, 3))
            if not h.is_zero():
                return theta_h(calc, h, n)
        return basis[0]

    return ModelDescriptor(
        kind="cuntz", params={"n": n}, backend=backend, calculus=calc,
        omega=omega, basis=basis, random_form=random_form,
        random_derivation=random_derivation, namespace=calc.namespace(),
        confluence_target=calc, v_family=family)


# -- polynomial functions with matrix values ----------------------------------


def build_poly_matrix(degree_bound: int = 3) -> ModelDescriptor:
    if degree_bound < 1:
        raise ValueError("degree bound must be >= 1")
    omega = poly_matrix_symplectic_form()
    basis = []
    monos = sorted({(i, d - i) for d in range(degree_bound + 1)
                    for i in range(d + 1)})
    for i, j in monos:
        m = Poly.monomial(i, j)
        basis.append(MixedDerivation(m, 0, label="x-flow x^%d y^%d" % (i, j)))
    for i, j in monos:
        m = Poly.monomial(i, j)
        basis.append(MixedDerivation(0, m, label="y-flow x^%d y^%d" % (i, j)))
    for i, j in monos:
        m = Poly.monomial(i, j)
        basis.append(MixedDerivation(
            0, 0, [[Poly(), m], [-m, Poly()]],
            label="rotation x^%d y^%d" % (i, j)))
    backend = BigradedAdapter()

    def rand_poly(rng, d=2, terms=2):
        out = {}
        for _ in range(terms):
            i = rng.randint(0, d)
            out[(i, rng.randint(0, d - i))] = Fraction(rng.randint(-2, 2))
        return Poly(out)

    def rand_zero_form(rng):
        return BigradedForm.from_matrix(
            [[rand_poly(rng, 1) for _ in range(2)] for _ in range(2)])

    def random_form(rng, max_degree=2):
        f = rand_zero_form(rng)
        for _ in range(rng.randint(0, max_degree)):
            choice = rng.randrange(3)
            if choice == 0:
                g = BigradedForm.classical(("x",), rand_poly(rng, 1))
            elif choice == 1:
                g = BigradedForm.classical(("y",), rand_poly(rng, 1))
            else:
                g = rand_zero_form(rng).d()
            f = f * g
        return f

    def random_derivation(rng):
        g = rand_poly(rng, 2)
        return MixedDerivation(rand_poly(rng, 2), rand_poly(rng, 2),
                               [[Poly(), g], [-g, Poly()]])

    ns = {
        "x": BigradedForm.scalar(Poly.x()),
        "y": BigradedForm.scalar(Poly.y()),
        "dx": BigradedForm.classical(("x",)),
        "dy": BigradedForm.classical(("y",)),
        "I": BigradedForm.from_matrix([[1, 0], [0, 1]]),
    }
    for i in range(2):
        for j in range(2):
            unit = [[0, 0], [0, 0]]
            unit[i][j] = 1
            ns["E%d%d" % (i + 1, j + 1)] = BigradedForm.from_matrix(unit)
            ns["dE%d%d" % (i + 1, j + 1)] = BigradedForm.from_matrix(unit).d()
    return ModelDescriptor(
        kind="polymat", params={"D": degree_bound}, backend=backend,
        calculus=None, omega=omega, basis=basis, random_form=random_form,
        random_derivation=random_derivation, namespace=ns,
        confluence_target=None)


# -- model strings ------------------------------------------------------------


def build_model(descriptor: str) -> ModelDescriptor:
    """Build from a CLI string: torus:p=2[,B=3][,root=1], matrix:n=3,
    cuntz:n=2, polymat:D=3."""
    kind, _, argtxt = descriptor.partition(":")
    kind = kind.strip()
    args = {}
    if argtxt:
        for chunk in argtxt.split(","):
            key, _, val = chunk.partition("=")
            if not val:
                raise ValueError("malformed model argument %r" % chunk)
            args[key.strip()] = int(val)
    builders = {
        "torus": lambda: build_torus(args.pop("p", 2), args.pop("B", 3),
                                     args.pop("root", 1)),
        "matrix": lambda: build_matrix(args.pop("n", 2)),
        "cuntz": lambda: build_cuntz(args.pop("n", 2)),
        "polymat": lambda: build_poly_matrix(args.pop("D", 3)),
    }
    if kind not in builders:
        raise ValueError("unknown model kind %r" % kind)
    model = builders[kind]()
    if args:
        raise ValueError("model %s does not take %s"
                         % (kind, ", ".join(sorted(args))))
    return model

"""Expression parser and presentation-file loader.

Surface syntax: terms are juxtaposed factors ('*' and the tensor sign are
optional separators), factors are atoms with an optional integer power,
atoms are rationals like 2/3, the scalar q (presented models), generator
or differential names, or parenthesized expressions.  Products associate
left to right.  Negative powers exist only for invertible generators;
du^-1 is rejected.

Presentation files are line oriented:

    cyclotomic 2
    generator u invertible
    order dv < du < u < v
    rule v u -> q^-1 u v
    frule u dv -> q dv u
    omega u^-1 du dv v^-1
    derivation theta: u -> u^3 v^2, v -> u^2 v^3

Lines starting with # are comments.  `omega` and `derivation` lines are
optional; when present they make the Hamiltonian commands available on a
user presentation.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import GeneratorSymbol, RuleSpec
from .forms import CalculusPresentation
from .scalars import CycScalar, q_power


class ParseError(ValueError):
    def __init__(self, message, pos=None):
        if pos is not None:
            message = "%s (at position %d)" % (message, pos)
        super().__init__(message)
        self.pos = pos


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<rational>\d+(?:/\d+)?)
  | (?P<name>[A-Za-z][A-Za-z0-9]*\*?)
  | (?P<pow>\^-?\d+)
  | (?P<op>[-+*()⊗])
""", re.VERBOSE)


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError("unexpected character %r" % text[pos], pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Scalar:
    """Wrapper distinguishing pure scalars from algebra elements."""

    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value


class ExpressionParser:
    """Recursive descent over the token list, resolving names in a model."""

    def __init__(self, model):
        self.model = model
        self.namespace = model.namespace()
        self.calculus = model.calculus      # None for tensor backends

    def parse(self, text):
        self.tokens = tokenize(text)
        self.i = 0
        value = self._expr()
        kind, tok, pos = self.tokens[self.i]
        if kind != "end":
            raise ParseError("trailing input %r" % tok, pos)
        return self._to_element(value)

    def _to_element(self, value):
        if isinstance(value, _Scalar):
            if self.calculus is not None:
                return self.calculus.scalar(value.value)
            raise ParseError("bare scalar expression; multiply a form "
                             "(e.g. the identity I) instead")
        return value

    def _peek(self):
        return self.tokens[self.i]

    def _next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def _expr(self):
        value = self._term()
        while True:
            kind, tok, pos = self._peek()
            if kind == "op" and tok in "+-":
                self._next()
                rhs = self._term()
                value = self._combine_add(value, rhs, tok, pos)
            else:
                return value

    def _combine_add(self, a, b, op, pos):
        if isinstance(a, _Scalar) and isinstance(b, _Scalar):
            return _Scalar(a.value + b.value if op == "+" else a.value - b.value)
        a = self._to_element(a)
        b = self._to_element(b)
        try:
            return a + b if op == "+" else a - b
        except (TypeError, ValueError) as exc:
            raise ParseError(str(exc), pos)

    def _term(self):
        negate = False
        while True:
            kind, tok, _ = self._peek()
            if kind == "op" and tok == "-":
                self._next()
                negate = not negate
            elif kind == "op" and tok == "+":
                self._next()
            else:
                break
        value = self._factor()
        while True:
            kind, tok, pos = self._peek()
            if kind in ("rational", "name") or (kind == "op" and tok == "("):
                rhs = self._factor()
                value = self._combine_mul(value, rhs, pos)
            elif kind == "op" and tok == "*":
                self._next()
                rhs = self._factor()
                value = self._combine_mul(value, rhs, pos)
            else:
                break
        if negate:
            if isinstance(value, _Scalar):
                return _Scalar(-value.value)
            return -value
        return value

    def _combine_mul(self, a, b, pos):
        if isinstance(a, _Scalar) and isinstance(b, _Scalar):
            return _Scalar(a.value * b.value)
        if isinstance(a, _Scalar):
            return b * a.value if not hasattr(b, "scale") else b.scale(a.value)
        if isinstance(b, _Scalar):
            return a * b.value if not hasattr(a, "scale") else a.scale(b.value)
        try:
            return a * b
        except (TypeError, ValueError) as exc:
            raise ParseError(str(exc), pos)

    def _factor(self):
        value = self._primary()
        while True:
            kind, tok, pos = self._peek()
            if kind == "op" and tok == "⊗":
                self._next()
                rhs = self._primary()
                if not hasattr(value, "tensor"):
                    raise ParseError("tensor legs need a tensor backend", pos)
                try:
                    value = value.tensor(rhs)
                except ValueError as exc:
                    raise ParseError(str(exc), pos)
            else:
                return value

    def _primary(self):
        kind, tok, _ = self._peek()
        atom_name = tok if kind == "name" else None
        atom = self._atom()
        kind2, tok2, pos2 = self._peek()
        if kind2 == "pow":
            self._next()
            return self._power(atom, int(tok2[1:]), pos2, atom_name)
        return atom

    def _power(self, atom, k, pos, atom_name=None):
        if isinstance(atom, _Scalar):
            v = atom.value
            if k < 0 and not isinstance(v, CycScalar):
                return _Scalar(Fraction(v) ** k)
            return _Scalar(v ** k)
        if k >= 0:
            result = None
            for _ in range(k):
                result = atom if result is None else result * atom
            if result is None:
                if self.calculus is not None:
                    return self.calculus.one()
                raise ParseError("power 0 of a tensor form is not supported", pos)
            return result
        if self.calculus is None or atom_name is None:
            raise ParseError("negative powers need an invertible generator", pos)
        gens = {g.name: g for g in self.calculus.generators}
        if atom_name in gens:
            if not gens[atom_name].invertible:
                raise ParseError("generator %s is not invertible" % atom_name, pos)
            return self.calculus.element([(atom_name, k)])
        if atom_name.startswith("d") and atom_name[1:] in gens:
            raise ParseError("differentials are not invertible: %s" % atom_name,
                             pos)
        raise ParseError("cannot invert %r" % atom_name, pos)

    def _atom(self):
        kind, tok, pos = self._next()
        if kind == "rational":
            if "/" in tok:
                num, den = tok.split("/")
                return _Scalar(Fraction(int(num), int(den)))
            return _Scalar(Fraction(int(tok)))
        if kind == "name":
            if tok == "q":
                if self.calculus is None:
                    raise ParseError("q is only defined on presented models", pos)
                return _Scalar(q_power(self.calculus.p, 1))
            if tok in self.namespace:
                return self.namespace[tok]
            raise ParseError("unknown generator %r" % tok, pos)
        if kind == "op" and tok == "(":
            value = self._expr()
            kind2, tok2, pos2 = self._next()
            if not (kind2 == "op" and tok2 == ")"):
                raise ParseError("expected ')'", pos2)
            return value
        raise ParseError("unexpected token %r" % tok, pos)


def parse_expression(text, model):
    return ExpressionParser(model).parse(text)


def parse_derivation(text, model):
    """theta specs: 'u -> expr, v -> expr' | 'h: expr' | 'S: expr' |
    'x: expr, y: expr, S: expr'."""
    kind = model.backend.kind
    parser = ExpressionParser(model)
    if "->" in text:
        from .cartan import PresentedDerivation

        if kind != "presented":
            raise ParseError("generator-image derivations need a presented model")
        images = {}
        for chunk in text.split(","):
            lhs, _, rhs = chunk.partition("->")
            if not rhs:
                raise ParseError("malformed derivation chunk %r" % chunk)
            images[lhs.strip()] = parser.parse(rhs)
        return PresentedDerivation(model.calculus, images)
    fields = {}
    for chunk in text.split(","):
        key, _, rhs = chunk.partition(":")
        if not rhs:
            raise ParseError("malformed derivation chunk %r" % chunk)
        fields[key.strip()] = rhs.strip()
    if set(fields) == {"h"}:
        from .models import theta_h

        if model.kind != "cuntz":
            raise ParseError("theta_h derivations are specific to the Cuntz model")
        h = parser.parse(fields["h"])
        return theta_h(model.calculus, h, model.params["n"])
    if kind == "matrix":
        if set(fields) != {"S"}:
            raise ParseError("matrix derivations take a single S: <matrix>")
        from .matrixcalc import MatrixDerivation

        s = parser.parse(fields["S"])
        return MatrixDerivation.ad(s.to_matrix())
    if kind == "bigraded":
        from .bigraded import MixedDerivation
        from .polynomials import Poly

        def zero_form_of(key):
            # multiplying by the identity lifts bare scalars to 0-forms
            el = parser.parse("(%s) I" % fields[key])
            t = el.component(())
            if set(el.parts) - {()} or t.degree != 0:
                raise ParseError("%s must be a 0-form" % key)
            return t.to_matrix()

        def poly_of(key):
            if key not in fields:
                return Poly()
            mat = zero_form_of(key)
            if mat[0][1] or mat[1][0] or mat[0][0] != mat[1][1]:
                raise ParseError("%s must be a multiple of the identity" % key)
            return mat[0][0] if isinstance(mat[0][0], Poly) else Poly.const(mat[0][0])

        theta_s = zero_form_of("S") if "S" in fields else \
            [[Poly(), Poly()], [Poly(), Poly()]]
        return MixedDerivation(poly_of("x"), poly_of("y"), theta_s)
    raise ParseError("could not interpret derivation spec %r" % text)


# -- presentation files ---------------------------------------------------


def load_presentation(path):
    """Parse a presentation file; returns a ModelDescriptor."""
    from .backends import PresentedAdapter
    from .cartan import PresentedDerivation
    from .models import ModelDescriptor

    p = 1
    generators = []
    order = None
    rule_lines = []
    frule_lines = []
    omega_text = None
    derivation_lines = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, _, rest = line.partition(" ")
            rest = rest.strip()
            try:
                if head == "cyclotomic":
                    p = int(rest)
                elif head == "generator":
                    parts = rest.split()
                    generators.append(GeneratorSymbol(
                        parts[0], invertible="invertible" in parts[1:]))
                elif head == "order":
                    order = [t.strip() for t in rest.split("<")]
                elif head == "rule":
                    rule_lines.append(rest)
                elif head == "frule":
                    frule_lines.append(rest)
                elif head == "omega":
                    omega_text = rest
                elif head == "derivation":
                    derivation_lines.append(rest)
                else:
                    raise ParseError("unknown directive %r" % head)
            except ParseError as exc:
                raise ParseError("line %d: %s" % (lineno, exc))
    if not generators:
        raise ParseError("presentation declares no generators")

    scratch = CalculusPresentation(generators, [], [], p=p, letter_order=order)
    scratch_model = _ScratchModel(scratch)

    def parse_rule(text):
        lhs_txt, arrow, rhs_txt = text.partition("->")
        if not arrow:
            raise ParseError("rule %r has no ->" % text)
        lhs = []
        for tok in lhs_txt.split():
            name, _, power = tok.partition("^")
            lhs.append((name, int(power) if power else 1))
        rhs_el = ExpressionParser(scratch_model).parse(rhs_txt.strip())
        rhs_terms = []
        table = scratch.system.table
        for word, coeff in rhs_el.terms.items():
            factors = []
            for li in word:
                lt = table.letters[li]
                factors.append((("d" + lt.base) if lt.diff else lt.base, lt.exp))
            rhs_terms.append((coeff, factors))
        return RuleSpec.make(lhs, rhs_terms)

    algebra_rules = [parse_rule(t) for t in rule_lines]
    form_rules = [parse_rule(t) for t in frule_lines]
    calc = CalculusPresentation(generators, algebra_rules, form_rules, p=p,
                                letter_order=order)
    backend = PresentedAdapter(calc)
    model = _ScratchModel(calc)
    parser = ExpressionParser(model)

    derivations = []
    for text in derivation_lines:
        name, _, spec = text.partition(":")
        images = {}
        for chunk in spec.split(","):
            lhs, _, rhs = chunk.partition("->")
            if not rhs:
                raise ParseError("malformed derivation %r" % text)
            images[lhs.strip()] = parser.parse(rhs)
        derivations.append(PresentedDerivation(calc, images, label=name.strip()))

    omega = parser.parse(omega_text) if omega_text else None
    gen_names = [g.name for g in generators]

    def random_form(rng, max_degree=2):
        out = calc.zero()
        for _ in range(rng.randint(1, 2)):
            t = calc.scalar(rng.choice([-2, -1, 1, 2]))
            for _ in range(rng.randint(0, 2)):
                t = t * calc.gen(rng.choice(gen_names))
            for _ in range(rng.randint(0, max_degree)):
                t = t * calc.dgen(rng.choice(gen_names))
            out = out + t
        return out

    def random_derivation(rng):
        if not derivations:
            raise ValueError("presentation file declares no derivations")
        combo = rng.choice(derivations)
        for _ in range(rng.randint(0, 1)):
            combo = combo + rng.choice([1, -1, 2]) * rng.choice(derivations)
        return combo

    if omega is None:
        return _PresentationOnlyModel(calc, backend, derivations,
                                      random_form, random_derivation)
    return ModelDescriptor(
        kind="file", params={}, backend=backend, calculus=calc, omega=omega,
        basis=derivations, random_form=random_form,
        random_derivation=random_derivation, namespace=calc.namespace(),
        confluence_target=calc)


class _ScratchModel:
    """Just enough of the model surface for the expression parser."""

    def __init__(self, calculus):
        self.calculus = calculus
        self.kind = "file"

    def namespace(self):
        return self.calculus.namespace()


class _PresentationOnlyModel:
    """A loaded presentation without a symplectic form."""

    kind = "file"

    def __init__(self, calculus, backend, derivations, random_form,
                 random_derivation):
        self.calculus = calculus
        self.backend = backend
        self.derivations = derivations
        self.params = {}
        self.omega = None
        self.space = None
        self._random_form = random_form
        self._random_derivation = random_derivation
        self._confluence_target = calculus

    @property
    def name(self):
        return "file"

    def namespace(self):
        return self.calculus.namespace()

    def random_form(self, rng, max_degree=2):
        return self._random_form(rng, max_degree)

    def random_derivation(self, rng):
        return self._random_derivation(rng)

    def certify(self):
        from .algebra import check_local_confluence
        from .cartan import consistency_of

        rep = check_local_confluence(self.calculus)
        out = [("local confluence", rep.all_joinable,
                "%d critical pairs" % len(rep.pairs))]
        bad = sum(1 for th in self.derivations
                  if not consistency_of(th).ok)
        out.append(("derivation consistency", bad == 0,
                    "%d derivations" % len(self.derivations)))
        return out

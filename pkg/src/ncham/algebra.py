"""Presented noncommutative algebras with oriented rewriting.

Words are tuples of interned letter indices.  A letter is a single power
g or g^-1 of an algebra generator, or a degree-1 differential dg; the
letter table of a presentation fixes the precedence used by the
degree-lexicographic term order, so word comparison is just comparison of
(len(word), word).  Inverse cancellation g g^-1 -> 1 is structural: it
happens during concatenation, and stored words never contain an adjacent
inverse pair.

Rewrite rules replace a subword (the lhs) by an element (the rhs); every
rhs word must be strictly smaller than the lhs in the term order, which
makes rewriting terminate.  `check_local_confluence` enumerates all
overlap and inclusion ambiguities between rule left-hand sides (including
the implicit cancellation rules of invertible generators) and reports
whether both branches reduce to the same normal form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import CycScalar, cyc_one, cyc_zero


class ReductionBudgetExceeded(RuntimeError):
    """Raised when a single normalize call exceeds its rewrite-step budget."""


class DegreeError(ValueError):
    """An operation received a form of inadmissible degree."""


class UnknownGeneratorError(KeyError):
    pass


@dataclass(frozen=True)
class GeneratorSymbol:
    name: str
    invertible: bool = False


@dataclass(frozen=True)
class Letter:
    base: str
    exp: int           # +1 or -1; differentials always +1
    diff: bool = False

    @property
    def display(self):
        if self.diff:
            return "d" + self.base
        return self.base if self.exp == 1 else self.base + "^-1"


class LetterTable:
    """Interns letters as small integers; index order is the precedence."""

    def __init__(self, letters):
        self.letters = tuple(letters)
        self.index = {lt: i for i, lt in enumerate(self.letters)}
        if len(self.index) != len(self.letters):
            raise ValueError("duplicate letters in precedence list")
        self.by_display = {lt.display: i for i, lt in enumerate(self.letters)}
        self.inverse_of = {}
        for i, lt in enumerate(self.letters):
            if not lt.diff:
                j = self.index.get(Letter(lt.base, -lt.exp))
                if j is not None:
                    self.inverse_of[i] = j
        self.is_diff = tuple(lt.diff for lt in self.letters)

    def concat(self, *parts):
        """Concatenate letter-index sequences, cancelling inverse pairs."""
        out = []
        inv = self.inverse_of
        for part in parts:
            for li in part:
                if out and inv.get(li) == out[-1]:
                    out.pop()
                else:
                    out.append(li)
        return tuple(out)

    def word_degree(self, word):
        isd = self.is_diff
        return sum(1 for li in word if isd[li])


def word_key(word):
    return (len(word), word)


@dataclass(frozen=True)
class RuleSpec:
    """A rewrite rule at the display-name level: lhs letters, rhs terms.

    lhs: sequence of (name, exp) with name a generator name or d<gen>;
    rhs: sequence of (scalar, [(name, exp), ...]) terms.
    """

    lhs: tuple
    rhs: tuple

    @classmethod
    def make(cls, lhs, rhs):
        return cls(tuple(tuple(f) for f in lhs),
                   tuple((c, tuple(tuple(f) for f in w)) for c, w in rhs))


class RewriteRule:
    __slots__ = ("lhs", "rhs", "derived")

    def __init__(self, lhs, rhs, derived=False):
        self.lhs = lhs          # word (tuple of letter indices)
        self.rhs = rhs          # dict word -> CycScalar
        self.derived = derived  # auto-installed inverse variant


class RewriteSystem:
    """Letter table plus oriented rules plus a memoizing normalizer."""

    def __init__(self, table, p, step_budget=10 ** 6, max_degree=None):
        self.table = table
        self.p = p
        self.step_budget = step_budget
        self.max_degree = max_degree
        self.rules = []
        self._rules_by_first = {}
        self._nf_cache = {}
        self._max_lhs = 0

    # -- scalars -------------------------------------------------------

    def one(self):
        return cyc_one(self.p)

    def zero(self):
        return cyc_zero(self.p)

    def scalar(self, value):
        if isinstance(value, CycScalar):
            if value.p != self.p:
                raise ValueError("scalar has wrong cyclotomic order")
            return value
        return CycScalar.from_rational(self.p, value)

    # -- encoding ------------------------------------------------------

    def encode_letter(self, name, exp=1):
        if exp == 1 and name in self.table.by_display:
            return self.table.by_display[name]
        if exp == -1:
            i = self.table.by_display.get(name + "^-1")
            if i is not None:
                return i
        raise UnknownGeneratorError("unknown letter %r^%d" % (name, exp))

    def encode_word(self, factors):
        """factors: sequence of (name, exp) with arbitrary integer exp."""
        letters = []
        for name, exp in factors:
            if exp == 0:
                continue
            sign = 1 if exp > 0 else -1
            li = self.encode_letter(name, sign)
            if sign == -1 and self.table.letters[li].diff:
                raise ValueError("differentials are not invertible: %s" % name)
            letters.extend([li] * abs(exp))
        return self.table.concat(letters)

    def add_rule(self, spec: RuleSpec, derived=False):
        lhs = self.encode_word(spec.lhs)
        if not lhs:
            raise ValueError("rule lhs must be a nonempty word")
        rhs = {}
        for coeff, wspec in spec.rhs:
            c = self.scalar(coeff)
            if not c:
                continue
            w = self.encode_word(wspec)
            rhs[w] = rhs.get(w, self.zero()) + c
        rhs = {w: c for w, c in rhs.items() if c}
        for w in rhs:
            if word_key(w) >= word_key(lhs):
                raise ValueError(
                    "rule %s does not decrease: rhs word %s is not smaller"
                    % (self.word_str(lhs), self.word_str(w)))
        rule = RewriteRule(lhs, rhs, derived)
        self.rules.append(rule)
        self._rules_by_first.setdefault(lhs[0], []).append(rule)
        self._max_lhs = max(self._max_lhs, len(lhs))
        self._nf_cache.clear()
        return rule

    def install_inverse_variants(self):
        """Derived variants of two-letter swap rules a b -> c b a.

        Conjugating the relation by inverses of its letters yields the
        rules a b^-1 -> c^-1 b^-1 a, a^-1 b -> c^-1 b a^-1 and
        a^-1 b^-1 -> c b^-1 a^-1, installed when the inverse letters
        exist and no rule with that lhs was declared.
        """
        existing = {r.lhs for r in self.rules}
        inv = self.table.inverse_of
        for rule in list(self.rules):
            if len(rule.lhs) != 2 or len(rule.rhs) != 1:
                continue
            (word, coeff), = rule.rhs.items()
            a, b = rule.lhs
            if word != (b, a):
                continue
            variants = []
            if b in inv:
                variants.append(((a, inv[b]), (inv[b], a), coeff.inverse()))
            if a in inv:
                variants.append(((inv[a], b), (b, inv[a]), coeff.inverse()))
            if a in inv and b in inv:
                variants.append(((inv[a], inv[b]), (inv[b], inv[a]), coeff))
            for lhs, rw, c in variants:
                if lhs in existing:
                    continue
                if word_key(rw) >= word_key(lhs):
                    raise ValueError("derived variant does not decrease")
                var = RewriteRule(lhs, {rw: c}, derived=True)
                self.rules.append(var)
                self._rules_by_first.setdefault(lhs[0], []).append(var)
                existing.add(lhs)
        self._nf_cache.clear()

    # -- rewriting -----------------------------------------------------

    def _find_redex(self, word):
        by_first = self._rules_by_first
        n = len(word)
        for i in range(n):
            rules = by_first.get(word[i])
            if not rules:
                continue
            for rule in rules:
                lhs = rule.lhs
                if word[i:i + len(lhs)] == lhs:
                    return i, rule
        return None

    def reduce_word(self, word):
        """Normal form of a single word, as a dict word -> scalar."""
        cache = self._nf_cache
        hit = cache.get(word)
        if hit is not None:
            return hit
        budget = self.step_budget
        steps = 0
        concat = self.table.concat
        expansions = {}
        stack = [word]
        while stack:
            w = stack[-1]
            if w in cache:
                stack.pop()
                continue
            exp = expansions.get(w)
            if exp is None:
                m = self._find_redex(w)
                if m is None:
                    cache[w] = {w: self.one()}
                    stack.pop()
                    continue
                steps += 1
                if steps > budget:
                    raise ReductionBudgetExceeded(
                        "rewrite budget of %d exceeded; presentation may not terminate"
                        % budget)
                i, rule = m
                pre, suf = w[:i], w[i + len(rule.lhs):]
                exp = [(concat(pre, rw, suf), c) for rw, c in rule.rhs.items()]
                expansions[w] = exp
            pending = [wi for wi, _ in exp if wi not in cache]
            if pending:
                stack.extend(pending)
                continue
            out = {}
            for wi, ci in exp:
                for wf, cf in cache[wi].items():
                    acc = out.get(wf)
                    acc = ci * cf if acc is None else acc + ci * cf
                    if acc:
                        out[wf] = acc
                    elif wf in out:
                        del out[wf]
            cache[w] = out
            del expansions[w]
            stack.pop()
        return cache[word]

    def normalize_terms(self, terms):
        out = {}
        cap = self.max_degree
        deg = self.table.word_degree
        for w, c in terms.items():
            if not c:
                continue
            for wf, cf in self.reduce_word(w).items():
                if cap is not None and deg(wf) > cap:
                    continue
                acc = out.get(wf)
                acc = c * cf if acc is None else acc + c * cf
                if acc:
                    out[wf] = acc
                elif wf in out:
                    del out[wf]
        return out

    def reduce_word_randomized(self, word, rng):
        """Fully reduce choosing a random redex at each step (no cache).

        On a locally confluent terminating system this agrees with
        `reduce_word` whatever the random choices; used by tests.
        """
        terms = {word: self.one()}
        budget = self.step_budget
        steps = 0
        while True:
            redexes = []
            for w in terms:
                n = len(w)
                for i in range(n):
                    for rule in self._rules_by_first.get(w[i], ()):
                        if w[i:i + len(rule.lhs)] == rule.lhs:
                            redexes.append((w, i, rule))
            if not redexes:
                return terms
            w, i, rule = redexes[rng.randrange(len(redexes))]
            steps += 1
            if steps > budget:
                raise ReductionBudgetExceeded("randomized reduction exceeded budget")
            c = terms.pop(w)
            pre, suf = w[:i], w[i + len(rule.lhs):]
            for rw, rc in rule.rhs.items():
                nw = self.table.concat(pre, rw, suf)
                acc = terms.get(nw, self.zero()) + c * rc
                if acc:
                    terms[nw] = acc
                elif nw in terms:
                    del terms[nw]

    # -- display -------------------------------------------------------

    def word_str(self, word):
        if not word:
            return "1"
        parts = []
        i = 0
        letters = self.table.letters
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            lt = letters[word[i]]
            count = j - i
            if lt.diff:
                parts.extend([lt.display] * count)
            else:
                e = lt.exp * count
                parts.append(lt.base if e == 1 else "%s^%d" % (lt.base, e))
            i = j
        return " ".join(parts)


class Element:
    """A finite scalar-linear combination of words, kept in normal form."""

    __slots__ = ("system", "terms")

    def __init__(self, system, terms, normal=False):
        self.system = system
        if normal:
            self.terms = {w: c for w, c in terms.items() if c}
        else:
            self.terms = system.normalize_terms(terms)

    @classmethod
    def zero(cls, system):
        return cls(system, {}, normal=True)

    @classmethod
    def one(cls, system):
        return cls(system, {(): system.one()}, normal=True)

    @classmethod
    def from_word(cls, system, factors, coeff=1):
        return cls(system, {system.encode_word(factors): system.scalar(coeff)})

    @classmethod
    def generator(cls, system, name, exp=1):
        return cls.from_word(system, [(name, exp)])

    def _check(self, other):
        if self.system is not other.system:
            raise ValueError("elements belong to different presentations")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CycScalar)):
            other = Element(self.system, {(): self.system.scalar(other)}, normal=True)
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            acc = out.get(w)
            acc = c if acc is None else acc + c
            if acc:
                out[w] = acc
            elif w in out:
                del out[w]
        return Element(self.system, out, normal=True)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.system, {w: -c for w, c in self.terms.items()}, normal=True)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CycScalar)):
            return self + (-self.system.scalar(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycScalar)):
            c0 = self.system.scalar(other)
            if not c0:
                return Element.zero(self.system)
            return Element(self.system, {w: c * c0 for w, c in self.terms.items()},
                           normal=True)
        self._check(other)
        concat = self.system.table.concat
        raw = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = concat(w1, w2)
                c = c1 * c2
                acc = raw.get(w)
                acc = c if acc is None else acc + c
                if acc:
                    raw[w] = acc
                elif w in raw:
                    del raw[w]
        return Element(self.system, raw)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycScalar)):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = Element.one(self.system)
        for _ in range(k):
            out = out * self
        return out

    def commutator(self, other):
        return self * other - other * self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycScalar)):
            other = Element(self.system, {(): self.system.scalar(other)}, normal=True)
        if not isinstance(other, Element):
            return NotImplemented
        return self.system is other.system and self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((id(self.system), frozenset(self.terms)))

    def is_zero(self):
        return not self.terms

    def degrees(self):
        deg = self.system.table.word_degree
        return sorted({deg(w) for w in self.terms})

    def degree(self):
        ds = self.degrees()
        if not ds:
            return 0
        if len(ds) > 1:
            raise ValueError("element is not homogeneous: degrees %s" % ds)
        return ds[0]

    def homogeneous_part(self, n):
        deg = self.system.table.word_degree
        return Element(self.system,
                       {w: c for w, c in self.terms.items() if deg(w) == n},
                       normal=True)

    def __str__(self):
        from .printing import element_str

        return element_str(self)

    __repr__ = __str__


# -- presentations -----------------------------------------------------


def _build_table(generators, letter_order):
    """letter_order: display names; inverse letters are inserted after
    their base letter when not listed explicitly."""
    gen_by_name = {g.name: g for g in generators}
    letters = []
    for disp in letter_order:
        if disp in gen_by_name:
            g = gen_by_name[disp]
            letters.append(Letter(g.name, 1))
            if g.invertible and disp + "^-1" not in letter_order:
                letters.append(Letter(g.name, -1))
        elif disp.endswith("^-1") and disp[:-3] in gen_by_name:
            letters.append(Letter(disp[:-3], -1))
        elif disp.startswith("d") and disp[1:] in gen_by_name:
            letters.append(Letter(disp[1:], 1, diff=True))
        else:
            raise UnknownGeneratorError("letter %r refers to no generator" % disp)
    return LetterTable(letters)


class Presentation:
    """Generators plus oriented algebra rules, no differential structure."""

    def __init__(self, generators, rules, p=1, precedence=None, step_budget=10 ** 6):
        self.generators = tuple(generators)
        self.p = p
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        order = list(precedence) if precedence is not None else names
        self.system = RewriteSystem(_build_table(self.generators, order), p, step_budget)
        self.rule_specs = tuple(rules)
        for spec in self.rule_specs:
            self.system.add_rule(spec)
        self.system.install_inverse_variants()

    @property
    def rules(self):
        return self.system.rules

    def element(self, factors, coeff=1):
        return Element.from_word(self.system, factors, coeff)

    def normalize(self, x: Element) -> Element:
        if x.system is not self.system:
            raise ValueError("element does not belong to this presentation")
        return Element(self.system, dict(x.terms))


# -- local confluence ---------------------------------------------------


@dataclass
class CriticalPair:
    word: tuple
    rule_a: RewriteRule
    rule_b: RewriteRule
    branch_a: dict
    branch_b: dict
    joinable: bool

    def describe(self, system):
        kind = "joinable" if self.joinable else "NOT JOINABLE"
        return "%s: %s  (%s -> ... <- %s)" % (
            kind, system.word_str(self.word),
            system.word_str(self.rule_a.lhs), system.word_str(self.rule_b.lhs))


@dataclass
class ConfluenceReport:
    pairs: list = field(default_factory=list)

    @property
    def all_joinable(self):
        return all(p.joinable for p in self.pairs)

    def failures(self):
        return [p for p in self.pairs if not p.joinable]

    def summary(self, system=None):
        lines = ["critical pairs: %d, joinable: %d, failing: %d" % (
            len(self.pairs), sum(p.joinable for p in self.pairs),
            len(self.failures()))]
        if system is not None:
            for p in self.pairs:
                lines.append("  " + p.describe(system))
        return "\n".join(lines)


def _cancellation_rules(system):
    out = []
    for i, j in system.table.inverse_of.items():
        out.append(RewriteRule((i, j), {(): system.one()}, derived=True))
    return out


def check_local_confluence(pres_or_system) -> ConfluenceReport:
    """Diamond-lemma check: reduce both branches of every overlap.

    Overlaps with the implicit cancellation rules g g^-1 -> 1 of
    invertible generators are included.  Completion is out of scope: a
    failing pair is reported, not repaired.
    """
    system = getattr(pres_or_system, "system", pres_or_system)
    rules = list(system.rules) + _cancellation_rules(system)
    report = ConfluenceReport()

    def reduce_terms(terms):
        return system.normalize_terms(terms)

    def record(word, ra, rb, terms_a, terms_b):
        na, nb = reduce_terms(terms_a), reduce_terms(terms_b)
        report.pairs.append(CriticalPair(word, ra, rb, na, nb, na == nb))

    def apply_at(word, i, rule):
        pre, suf = word[:i], word[i + len(rule.lhs):]
        return {system.table.concat(pre, rw, suf): c for rw, c in rule.rhs.items()}

    for ra in rules:
        for rb in rules:
            la, lb = ra.lhs, rb.lhs
            # identical left-hand sides of distinct rules
            if ra is not rb and la == lb:
                record(la, ra, rb, dict(ra.rhs), dict(rb.rhs))
                continue
            # proper overlap: suffix of la = prefix of lb
            for k in range(1, min(len(la), len(lb))):
                if la[len(la) - k:] == lb[:k]:
                    word = la + lb[k:]
                    record(word, ra, rb,
                           apply_at(word, 0, ra),
                           apply_at(word, len(la) - k, rb))
            # inclusion: lb strictly inside la
            if ra is not rb and len(lb) < len(la):
                for i in range(len(la) - len(lb) + 1):
                    if la[i:i + len(lb)] == lb:
                        record(la, ra, rb, dict(ra.rhs), apply_at(la, i, rb))
    return report

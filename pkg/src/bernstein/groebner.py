"""Truncated Gröbner bases for finitely presented associative algebras
without unit, with degree-lexicographic word order.

Everything here is deterministic: reduction always rewrites the
deglex-largest reducible word at its leftmost occurrence using the
first matching basis element, and the completion loop processes
overlap obstructions in a fixed order.  Each state records the degree
bound below which the basis is complete, and every consumer checks
that bound before trusting a normal form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iter_product

from .core import AlgebraError, InternalCheckError, as_scalar, format_scalar

Word = tuple


def word_key(word):
    """Sort key realising deglex: longer words first, ties by letter
    order (generator 0 is the largest letter)."""
    return (len(word), tuple(-g for g in word))


class NcPoly:
    """Noncommutative polynomial: finitely many words with rational
    coefficients.  Words are tuples of generator indexes; the empty
    word is not allowed (the algebras here have no unit)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for word, coeff in (terms or {}).items():
            word = tuple(word)
            if not word:
                raise AlgebraError("empty words are not supported")
            if any(not isinstance(g, int) or g < 0 for g in word):
                raise AlgebraError(f"bad word {word!r}")
            c = as_scalar(coeff)
            if c:
                clean[word] = c
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def word(cls, word, coeff=1):
        return cls({tuple(word): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            acc = terms.get(word, 0) + coeff
            if acc:
                terms[word] = acc
            else:
                terms.pop(word, None)
        out = NcPoly.__new__(NcPoly)
        out.terms = terms
        return out

    def __neg__(self):
        out = NcPoly.__new__(NcPoly)
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            terms = {}
            for wa, ca in self.terms.items():
                for wb, cb in other.terms.items():
                    word = wa + wb
                    acc = terms.get(word, 0) + ca * cb
                    if acc:
                        terms[word] = acc
                    else:
                        terms.pop(word, None)
            out = NcPoly.__new__(NcPoly)
            out.terms = terms
            return out
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, coeff):
        c = as_scalar(coeff)
        out = NcPoly.__new__(NcPoly)
        out.terms = {} if not c else {w: c * t for w, t in self.terms.items()}
        return out

    def leading_word(self):
        if not self.terms:
            raise AlgebraError("the zero polynomial has no leading word")
        return max(self.terms, key=word_key)

    def leading_coeff(self):
        return self.terms[self.leading_word()]

    def monic(self):
        lead = self.leading_coeff()
        return self.scale(Fraction(1, 1) / lead)

    def degree(self):
        if not self.terms:
            return -1
        return max(len(w) for w in self.terms)

    def render(self, generators):
        if not self.terms:
            return "0"
        parts = []
        for word in sorted(self.terms, key=word_key, reverse=True):
            coeff = self.terms[word]
            text = "".join(generators[g] for g in word)
            if coeff == 1:
                chunk = text
            elif coeff == -1:
                chunk = f"-{text}"
            else:
                chunk = f"{format_scalar(coeff)}*{text}"
            parts.append(chunk)
        out = parts[0]
        for chunk in parts[1:]:
            if chunk.startswith("-"):
                out += " - " + chunk[1:]
            else:
                out += " + " + chunk
        return out

    def __repr__(self):
        if not self.terms:
            return "NcPoly(0)"
        body = " + ".join(
            f"{format_scalar(c)}*{w}" for w, c in
            sorted(self.terms.items(), key=lambda kv: word_key(kv[0]),
                   reverse=True))
        return f"NcPoly({body})"


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relations: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens or len(set(gens)) != len(gens):
            raise AlgebraError("generator names must be distinct and nonempty")
        for name in gens:
            if not isinstance(name, str) or not name.isidentifier():
                raise AlgebraError(f"bad generator name {name!r}")
        rels = tuple(self.relations)
        for rel in rels:
            if not isinstance(rel, NcPoly) or not rel:
                raise AlgebraError("relations must be nonzero polynomials")
            for word in rel.terms:
                if any(g >= len(gens) for g in word):
                    raise AlgebraError("relation uses an unknown generator")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relations", rels)


def _first_occurrence(word, leads):
    """Leftmost position where some leading word occurs as a factor;
    ties broken by basis order."""
    for pos in range(len(word)):
        for li, lead in enumerate(leads):
            if word[pos:pos + len(lead)] == lead:
                return pos, li
    return None


def reduce(poly, basis):
    """Normal form of poly modulo the monic basis, rewriting the
    deglex-largest reducible word first, at its leftmost occurrence."""
    if isinstance(basis, GroebnerState):
        basis = basis.basis
    leads = [g.leading_word() for g in basis]
    terms = dict(poly.terms)
    while True:
        target = None
        for word in sorted(terms, key=word_key, reverse=True):
            hit = _first_occurrence(word, leads)
            if hit is not None:
                target = (word, hit)
                break
        if target is None:
            break
        word, (pos, li) = target
        coeff = terms.pop(word)
        g = basis[li]
        lead = leads[li]
        for tail_word, tail_coeff in g.terms.items():
            if tail_word == lead:
                continue
            new_word = word[:pos] + tail_word + word[pos + len(lead):]
            acc = terms.get(new_word, 0) - coeff * tail_coeff
            if acc:
                terms[new_word] = acc
            else:
                terms.pop(new_word, None)
    out = NcPoly.__new__(NcPoly)
    out.terms = terms
    return out


@dataclass
class GroebnerState:
    presentation: Presentation
    basis: list
    max_degree: int
    complete_below: int
    new_elements: int

    @property
    def is_groebner_as_given(self):
        return self.new_elements == 0

    def render(self):
        gens = self.presentation.generators
        return [g.render(gens) for g in self.basis]


def _insert(basis, poly):
    """Add a monic polynomial, evicting and re-reducing any basis
    element whose leading word it divides."""
    lead = poly.leading_word()
    kept = []
    evicted = []
    for g in basis:
        if _first_occurrence(g.leading_word(), [lead]) is not None:
            evicted.append(g)
        else:
            kept.append(g)
    kept.append(poly)
    for g in evicted:
        r = reduce(g, kept)
        if r:
            _insert(kept, r.monic())
    basis[:] = kept


def _interreduce(basis):
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(list(basis)):
            others = basis[:i] + basis[i + 1:]
            r = reduce(g, others)
            if r.terms != g.terms:
                basis[:] = others
                if r:
                    _insert(basis, r.monic())
                changed = True
                break


def buchberger_truncated(presentation, max_degree):
    """Complete the relations below the degree bound.

    Returns a state whose basis rewrites every element of degree
    < complete_below (= max_degree + 1) to a unique normal form.
    """
    if not isinstance(max_degree, int) or max_degree < 1:
        raise AlgebraError("the degree bound must be a positive integer")
    rel_deg = max(rel.degree() for rel in presentation.relations)
    if max_degree < rel_deg:
        raise AlgebraError(
            f"degree bound {max_degree} is below the relation degree {rel_deg}")

    basis = []
    for rel in presentation.relations:
        r = reduce(rel, basis)
        if r:
            _insert(basis, r.monic())
    _interreduce(basis)

    new_elements = 0
    processed = set()
    changed = True
    while changed:
        changed = False
        obstructions = []
        for i, gi in enumerate(basis):
            wi = gi.leading_word()
            for j, gj in enumerate(basis):
                wj = gj.leading_word()
                for k in range(1, min(len(wi), len(wj))):
                    if wi[len(wi) - k:] == wj[:k]:
                        deg = len(wi) + len(wj) - k
                        if deg <= max_degree:
                            obstructions.append((deg, word_key(wi),
                                                 word_key(wj), k, i, j))
        for deg, _, _, k, i, j in sorted(obstructions):
            gi, gj = basis[i], basis[j]
            wi, wj = gi.leading_word(), gj.leading_word()
            signature = (wi, wj, k)
            if signature in processed:
                continue
            processed.add(signature)
            spoly = gi * NcPoly.word(wj[k:]) - NcPoly.word(wi[:len(wi) - k]) * gj
            h = reduce(spoly, basis)
            if h:
                _insert(basis, h.monic())
                _interreduce(basis)
                new_elements += 1
                changed = True
                break

    basis.sort(key=lambda g: word_key(g.leading_word()))
    return GroebnerState(presentation, basis, max_degree,
                         max_degree + 1, new_elements)


def is_normal_word(state, word):
    word = tuple(word)
    if len(word) >= state.complete_below:
        raise AlgebraError(
            "completeness bound insufficient for words of degree "
            f"{len(word)}")
    leads = [g.leading_word() for g in state.basis]
    return _first_occurrence(word, leads) is None


def normal_words(state, degree):
    """All normal words of the given degree, in deglex order (largest
    generator letter first)."""
    if not isinstance(degree, int) or degree < 1:
        raise AlgebraError("degree must be a positive integer")
    if degree >= state.complete_below:
        raise AlgebraError(
            f"completeness bound insufficient for degree {degree} "
            f"(complete below {state.complete_below})")
    leads = [g.leading_word() for g in state.basis]
    ngens = len(state.presentation.generators)
    out = []

    def extend(prefix):
        if len(prefix) == degree:
            out.append(tuple(prefix))
            return
        for letter in range(ngens):
            prefix.append(letter)
            ok = True
            for lead in leads:
                if len(lead) <= len(prefix) and \
                        tuple(prefix[-len(lead):]) == lead:
                    ok = False
                    break
            if ok:
                extend(prefix)
            prefix.pop()

    extend([])
    return out


def hilbert_counts(state, up_to):
    """Number of normal words in each degree 1..up_to."""
    return [len(normal_words(state, d)) for d in range(1, up_to + 1)]


def nil_span_check(state, span_gens, power):
    """Whether every element of the span of the given polynomials has
    vanishing n-th power, decided by grouping the expansion of
    (a_1 g_1 + ... + a_m g_m)^power by monomials in the a_i."""
    gens = list(span_gens)
    if not gens or any(not isinstance(g, NcPoly) or not g for g in gens):
        raise AlgebraError("span generators must be nonzero polynomials")
    if not isinstance(power, int) or power < 1:
        raise AlgebraError("power must be a positive integer")
    max_deg = max(g.degree() for g in gens)
    needed = power * max_deg + 1
    if state.complete_below < needed:
        raise AlgebraError(
            f"completeness bound insufficient: need complete below "
            f"{needed}, have {state.complete_below}")
    grouped = {}
    for combo in iter_product(range(len(gens)), repeat=power):
        poly = gens[combo[0]]
        for idx in combo[1:]:
            poly = poly * gens[idx]
        key = tuple(sorted(combo))
        grouped[key] = grouped.get(key, NcPoly.zero()) + poly
    return all(not reduce(p, state) for p in grouped.values())


@dataclass
class AssociativeTable:
    """Multiplication table of a truncated associative algebra on a
    normal-word basis.  Pairs whose concatenation exceeds the bound are
    truncated to zero and recorded in overflow_pairs."""

    generators: tuple
    words: tuple
    labels: tuple
    products: dict
    up_to: int
    overflow_pairs: frozenset = field(default_factory=frozenset)
    name: str = ""

    @property
    def dim(self):
        return len(self.words)

    def degree(self, index):
        return len(self.words[index])

    def product(self, i, j):
        return self.products.get((i, j), {})

    def verify(self):
        n = self.dim
        if len(set(self.words)) != n or len(self.labels) != n:
            raise AlgebraError("words and labels must be distinct and aligned")
        for (i, j), vec in self.products.items():
            if not (0 <= i < n and 0 <= j < n):
                raise AlgebraError("product index out of range")
            for k, c in vec.items():
                if not (0 <= k < n) or not as_scalar(c):
                    raise AlgebraError("bad product entry")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.degree(i) + self.degree(j) + self.degree(k) \
                            > self.up_to:
                        continue
                    left = self._apply_vec(self.product(i, j), k, False)
                    right = self._apply_vec(self.product(j, k), i, True)
                    if left != right:
                        raise AlgebraError(
                            f"associativity fails on triple ({i}, {j}, {k})")

    def _apply_vec(self, vec, index, on_left):
        acc = {}
        for mid, coeff in vec.items():
            pair = (index, mid) if on_left else (mid, index)
            for k, c in self.product(*pair).items():
                val = acc.get(k, 0) + coeff * c
                if val:
                    acc[k] = val
                else:
                    acc.pop(k, None)
        return acc


def truncated_algebra_table(state, up_to):
    """Finite-dimensional quotient table on the normal words of degree
    1..up_to, with products beyond the bound truncated to zero."""
    if not isinstance(up_to, int) or up_to < 1:
        raise AlgebraError("truncation degree must be a positive integer")
    if up_to >= state.complete_below:
        raise AlgebraError(
            f"completeness bound insufficient for truncation at {up_to} "
            f"(complete below {state.complete_below})")
    words = []
    for d in range(1, up_to + 1):
        words.extend(normal_words(state, d))
    index = {w: i for i, w in enumerate(words)}
    gens = state.presentation.generators
    joiner = "" if all(len(g) == 1 for g in gens) else "_"
    labels = tuple(joiner.join(gens[g] for g in w) for w in words)

    products = {}
    overflow = set()
    for i, wi in enumerate(words):
        for j, wj in enumerate(words):
            if len(wi) + len(wj) > up_to:
                overflow.add((i, j))
                continue
            normal = reduce(NcPoly.word(wi + wj), state)
            vec = {}
            for word, coeff in normal.terms.items():
                if word not in index:
                    raise InternalCheckError(
                        "reduced product left the truncated basis")
                vec[index[word]] = coeff
            if vec:
                products[(i, j)] = vec

    table = AssociativeTable(
        generators=gens, words=tuple(words), labels=labels,
        products=products, up_to=up_to, overflow_pairs=frozenset(overflow),
        name=f"truncated(deg<={up_to})")
    try:
        table.verify()
    except AlgebraError as exc:
        raise InternalCheckError(f"truncated table inconsistent: {exc}")
    return table

"""Ready-made algebra tables and constructions: small named examples,
shift truncations, singly generated models, idempotent adjunction,
regular-word nil algebras, quotients and subalgebras, and the bridge
from truncated associative algebras to Bernstein tables.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations

from . import linalg
from .core import (AlgebraError, AlgebraTable, InternalCheckError, as_scalar,
                   ZERO, ONE, HALF)
from .elements import analyze_element
from .groebner import (NcPoly, Presentation, buchberger_truncated,
                       truncated_algebra_table)
from .structure import is_bernstein


def elementary_algebra(nil_dim=1):
    """x^2 = w(x) x holds identically: e plus a zero-multiplication
    half-eigenspace."""
    if not isinstance(nil_dim, int) or nil_dim < 0:
        raise AlgebraError("nil_dim must be a nonnegative integer")
    labels = ["e"] + [f"n{i + 1}" for i in range(nil_dim)]
    products = {("e", "e"): {"e": 1}}
    for i in range(nil_dim):
        products[("e", f"n{i + 1}")] = {f"n{i + 1}": HALF}
    return AlgebraTable.build(labels, products, weight={"e": 1},
                              name=f"elementary({nil_dim})")


def constant_algebra():
    """Two-dimensional table with e^2 = e and all other products zero;
    the nonunit basis vector spans the zero Peirce component."""
    return AlgebraTable.build(
        ["e", "v"], {("e", "e"): {"e": 1}}, weight={"e": 1},
        name="constant")


def three_dim_alpha(alpha):
    """One-parameter family on e, u1, v1 with u1*v1 = (alpha - 3/2) u1
    and v1^2 = 4(1 - alpha) u1."""
    a = as_scalar(alpha)
    products = {("e", "e"): {"e": 1},
                ("e", "u1"): {"u1": HALF},
                ("u1", "v1"): {"u1": a - Fraction(3, 2)},
                ("v1", "v1"): {"u1": 4 * (1 - a)}}
    table = AlgebraTable.build(["e", "u1", "v1"], products, weight={"e": 1},
                               name=f"three_dim({a})")
    x = table.element_from({"e": 1, "u1": 2, "v1": 1})
    if analyze_element(x).degree != 3:
        raise InternalCheckError("e + 2u1 + v1 failed to generate the table")
    return table


def example_not_train():
    """Three-dimensional table on e, u, v with u*v = u; its weight
    kernel is not nil, so no train equation can hold."""
    products = {("e", "e"): {"e": 1},
                ("e", "u"): {"u": HALF},
                ("u", "v"): {"u": 1}}
    return AlgebraTable.build(["e", "u", "v"], products, weight={"e": 1},
                              name="not_train")


def _shift_labels(n):
    if not isinstance(n, int) or n < 1:
        raise AlgebraError("the chain length must be a positive integer")
    return ["e"] + [f"u{i + 1}" for i in range(n)] + ["v"]


def shift_up_truncated(n):
    """Basis e, u1..un, v (dimension n + 2); multiplication by v shifts
    the chain up and truncates at the top (u_n v = 0), and
    U^2 = v^2 = 0."""
    labels = _shift_labels(n)
    products = {("e", "e"): {"e": 1}}
    for i in range(1, n + 1):
        products[("e", f"u{i}")] = {f"u{i}": HALF}
    for i in range(1, n):
        products[(f"u{i}", "v")] = {f"u{i + 1}": 1}
    return AlgebraTable.build(labels, products, weight={"e": 1},
                              name=f"shift_up({n})")


def shift_down_truncated(n):
    """Basis e, u1..un, v (dimension n + 2); multiplication by v shifts
    the chain down, killing u1, and U^2 = v^2 = 0."""
    labels = _shift_labels(n)
    products = {("e", "e"): {"e": 1}}
    for i in range(1, n + 1):
        products[("e", f"u{i}")] = {f"u{i}": HALF}
    for i in range(2, n + 1):
        products[(f"u{i}", "v")] = {f"u{i - 1}": 1}
    return AlgebraTable.build(labels, products, weight={"e": 1},
                              name=f"shift_down({n})")


def free_single_truncated(n, betas=None):
    """Truncated model of the singly generated exceptional algebra.

    Basis e, u1..u_(n-2), v1 with U^2 = 0, v1^2 = -2u1 - 4u2, the shift
    u_i v1 = u_(i+1), and the top product u_(n-2) v1 given by the betas
    (default all zero).  The element e + 2u1 + v1 generates the whole
    algebra, which is asserted.
    """
    if not isinstance(n, int) or n < 4:
        raise AlgebraError("the truncated model needs dimension at least 4")
    if betas is None:
        betas = [ZERO] * (n - 2)
    betas = [as_scalar(b) for b in betas]
    if len(betas) != n - 2:
        raise AlgebraError(f"expected {n - 2} top coefficients")
    labels = ["e"] + [f"u{i + 1}" for i in range(n - 2)] + ["v1"]
    products = {("e", "e"): {"e": 1},
                ("v1", "v1"): {"u1": -2, "u2": -4}}
    for i in range(n - 2):
        products[("e", f"u{i + 1}")] = {f"u{i + 1}": HALF}
    for i in range(1, n - 2):
        products[(f"u{i}", "v1")] = {f"u{i + 1}": 1}
    top = {f"u{i + 1}": b for i, b in enumerate(betas) if b}
    products[(f"u{n - 2}", "v1")] = top
    table = AlgebraTable.build(labels, products, weight={"e": 1},
                               name=f"free_single({n})")
    a = table.element_from({"e": 1, "u1": 2, "v1": 1})
    if analyze_element(a).degree != n:
        raise InternalCheckError("e + 2u1 + v1 failed to generate the model")
    return table


def adjoin_idempotent(nil_table, u_indices, v_indices, name=""):
    """Attach an idempotent to a weightless table N split as U + V.

    Requires U^2 = 0, U V inside U and V^2 inside U; the result carries
    e^2 = e, e u = u/2, e v = 0 and the original products, and is then
    a Bernstein algebra with N as its weight kernel.
    """
    if nil_table.has_weight:
        raise AlgebraError("the table to extend must be weightless")
    u_indices = list(u_indices)
    v_indices = list(v_indices)
    dim = nil_table.dim
    if sorted(u_indices + v_indices) != list(range(dim)):
        raise AlgebraError("U and V indices must partition the basis")
    uset = set(u_indices)
    for i in u_indices:
        for j in u_indices:
            if nil_table.product_vector(i, j):
                raise AlgebraError("U is not a zero-multiplication subspace")
    for i in u_indices:
        for j in v_indices:
            if set(nil_table.product_vector(i, j)) - uset:
                raise AlgebraError("U V does not lie in U")
    for i in v_indices:
        for j in v_indices:
            if set(nil_table.product_vector(i, j)) - uset:
                raise AlgebraError("V^2 does not lie in U")
    if "e" in nil_table.labels:
        raise AlgebraError("label 'e' is already taken")

    labels = ("e",) + nil_table.labels
    products = {("e", "e"): {"e": 1}}
    for i in u_indices:
        products[("e", nil_table.labels[i])] = {nil_table.labels[i]: HALF}
    for (i, j), vec in nil_table.product_items():
        products[(nil_table.labels[i], nil_table.labels[j])] = {
            nil_table.labels[k]: c for k, c in vec.items()}
    table = AlgebraTable.build(
        labels, products, weight={"e": 1},
        name=name or (f"adjoin({nil_table.name})" if nil_table.name
                      else "adjoin"),
        notes=nil_table.notes)
    if not is_bernstein(table):
        raise InternalCheckError("adjoining an idempotent must give a "
                                 "Bernstein algebra")
    return table


def zhevlakov_truncated(num_vars, max_len):
    """Nil table on regular words (strictly increasing letter indexes)
    of length up to max_len, with the signed insertion product.

    A word times a letter inserts the letter with the sign of the
    permutation sorting it in, and vanishes when the letter repeats or
    does not exceed the first letter; longer words and all products of
    two genuine words vanish.  Returns (table, word_indices,
    letter_indices).
    """
    if not isinstance(num_vars, int) or num_vars < 2:
        raise AlgebraError("need at least two letters")
    if not isinstance(max_len, int) or not 1 <= max_len <= num_vars:
        raise AlgebraError("word length bound must lie in 1..num_vars")
    words = []
    for length in range(1, max_len + 1):
        words.extend(combinations(range(1, num_vars + 1), length))
    labels = ["".join(f"x{i}" for i in w) for w in words]
    index = {w: k for k, w in enumerate(words)}

    products = {}
    for a, wa in enumerate(words):
        for b in range(a, len(words)):
            wb = words[b]
            if len(wa) > 1 and len(wb) > 1:
                continue
            if len(wa) == 1 and len(wb) == 1:
                i, j = wa[0], wb[0]
                if i == j or max_len < 2:
                    continue
                target = (min(i, j), max(i, j))
                products[(labels[a], labels[b])] = {labels[index[target]]: 1}
                continue
            word, letter = (wa, wb[0]) if len(wb) == 1 else (wb, wa[0])
            if letter in word or letter <= word[0]:
                continue
            merged = tuple(sorted(word + (letter,)))
            if len(merged) > max_len:
                continue
            sign = (-1) ** sum(1 for g in word if g > letter)
            products[(labels[a], labels[b])] = {labels[index[merged]]: sign}

    table = AlgebraTable.build(
        labels, products, weight=None,
        name=f"regular_words({num_vars},{max_len})")
    word_idx = tuple(k for k, w in enumerate(words) if len(w) > 1)
    letter_idx = tuple(k for k, w in enumerate(words) if len(w) == 1)
    return table, word_idx, letter_idx


def zhevlakov_bernstein(num_vars, max_len):
    """Regular-word table with an idempotent adjoined: words of length
    at least two form U, single letters form V."""
    table, word_idx, letter_idx = zhevlakov_truncated(num_vars, max_len)
    return adjoin_idempotent(table, word_idx, letter_idx,
                             name=f"zhevlakov({num_vars},{max_len})")


def from_associative(assoc, s_indices, name=""):
    """Bernstein table K x C x S built from a truncated associative
    table C and a generating set S of basis vectors.

    The product of (a1, b1) and (a2, b2) in the non-unit part has C
    component a1 b2 + a2 b1 (with the copy of S mapped back into C) and
    zero S component; U = C is a zero-multiplication subspace, so the
    result is an exceptional Bernstein algebra.
    """
    assoc.verify()
    s_indices = list(s_indices)
    if len(set(s_indices)) != len(s_indices) or not s_indices:
        raise AlgebraError("S indices must be distinct and nonempty")
    if any(not 0 <= i < assoc.dim for i in s_indices):
        raise AlgebraError("S index out of range")

    dim = assoc.dim
    span = []
    for i in s_indices:
        vec = [ZERO] * dim
        vec[i] = ONE
        span.append(vec)
    rank = linalg.span_rank(span)
    while True:
        products = []
        for va in span:
            for vb in span:
                acc = [ZERO] * dim
                for i, ca in enumerate(va):
                    if not ca:
                        continue
                    for j, cb in enumerate(vb):
                        if not cb:
                            continue
                        for k, c in assoc.product(i, j).items():
                            acc[k] += ca * cb * c
                if any(acc):
                    products.append(acc)
        new_rank = linalg.span_rank(span + products)
        if new_rank == rank:
            break
        rows, _ = linalg.rref(span + products)
        span = [r for r in rows if any(r)]
        rank = new_rank
    if rank != dim:
        raise AlgebraError("S does not generate the associative algebra")

    clabels = [f"c_{lbl}" for lbl in assoc.labels]
    slabels = [f"s_{assoc.labels[i]}" for i in s_indices]
    labels = ["e"] + clabels + slabels
    products = {("e", "e"): {"e": 1}}
    for cl in clabels:
        products[("e", cl)] = {cl: HALF}
    truncated = 0
    for pos, i in enumerate(s_indices):
        for j in range(dim):
            if (j, i) in assoc.overflow_pairs:
                truncated += 1
                continue
            vec = assoc.product(j, i)
            if vec:
                products[(clabels[j], slabels[pos])] = {
                    clabels[k]: c for k, c in vec.items()}
    notes = ()
    if truncated:
        notes = (f"{truncated} products truncated to zero by the "
                 f"degree bound {assoc.up_to}",)
    table = AlgebraTable.build(
        labels, products, weight={"e": 1},
        name=name or (f"baric({assoc.name})" if assoc.name else "baric"),
        notes=notes)
    if not is_bernstein(table):
        raise InternalCheckError("the associative construction must give "
                                 "a Bernstein algebra")
    return table


def nil_power_presentation(num_gens, power):
    """Relations stating that every k-th power vanishes: for each
    multiset of generators, the sum of all orderings is a relation."""
    if not isinstance(num_gens, int) or num_gens < 1:
        raise AlgebraError("need at least one generator")
    if not isinstance(power, int) or power < 2:
        raise AlgebraError("the nil power must be at least 2")
    if num_gens <= 4:
        gens = tuple("xyzw"[:num_gens])
    else:
        gens = tuple(f"x{i + 1}" for i in range(num_gens))
    relations = []
    for multiset in combinations_with_replacement(range(num_gens), power):
        orderings = sorted(set(permutations(multiset)))
        relations.append(NcPoly({w: 1 for w in orderings}))
    return Presentation(gens, tuple(relations))


def kurosh_presentation():
    """Two generators with all cubes vanishing."""
    return nil_power_presentation(2, 3)


def kurosh_algebra(max_degree=12, truncate_at=6):
    """Full pipeline: complete the two-generator cube-zero relations,
    truncate the quotient, and adjoin the baric structure with V
    spanned by the generators.  Returns (state, assoc_table, algebra).
    """
    presentation = kurosh_presentation()
    state = buchberger_truncated(presentation, max_degree)
    ctable = truncated_algebra_table(state, truncate_at)
    s_indices = [i for i, w in enumerate(ctable.words) if len(w) == 1]
    algebra = from_associative(ctable, s_indices,
                               name=f"kurosh(deg<={truncate_at})")
    return state, ctable, algebra


def quotient(table, ideal_basis, name=""):
    """Quotient by the span of the given elements, which must be an
    ideal; with a weight present the ideal must lie in the weight
    kernel so the weight can descend."""
    vectors = [list(g.coords) for g in ideal_basis if g]
    if vectors:
        rows, _ = linalg.rref(vectors)
        vectors = [r for r in rows if any(r)]
    span_elems = [table.element(v) for v in vectors]
    for b in table.basis():
        for g in span_elems:
            if not linalg.span_contains(vectors, list((b * g).coords)):
                raise AlgebraError("the given span is not an ideal")
    if table.has_weight:
        for g in span_elems:
            if g.weight():
                raise AlgebraError(
                    "ideal is not contained in the weight kernel")
    kept = linalg.extend_with_standard(vectors, table.dim)
    full = vectors + [[ONE if k == i else ZERO for k in range(table.dim)]
                      for i in kept]
    r = len(vectors)

    def project(el):
        coords = linalg.express(full, list(el.coords))
        if coords is None:
            raise InternalCheckError("projection failed on a basis vector")
        return coords[r:]

    labels = [table.labels[i] for i in kept]
    products = {}
    for a, i in enumerate(kept):
        for b in range(a, len(kept)):
            j = kept[b]
            vec = project(table.basis_element(i) * table.basis_element(j))
            entry = {labels[k]: c for k, c in enumerate(vec) if c}
            if entry:
                products[(labels[a], labels[b])] = entry
    weight = None
    if table.has_weight:
        weight = {labels[a]: table.weight[i]
                  for a, i in enumerate(kept) if table.weight[i]}
    return AlgebraTable.build(labels, products, weight=weight,
                              name=name or (f"{table.name}/ideal"
                                            if table.name else "quotient"))


def subalgebra(table, generators, name=""):
    """Smallest subalgebra containing the generators.  Returns the
    sub-table on an echelonised basis together with the list of ambient
    elements realising that basis."""
    vectors = [list(g.coords) for g in generators if g]
    if vectors:
        rows, _ = linalg.rref(vectors)
        vectors = [r for r in rows if any(r)]
    while True:
        elems = [table.element(v) for v in vectors]
        prods = []
        for i, x in enumerate(elems):
            for y in elems[i:]:
                p = x * y
                if p:
                    prods.append(list(p.coords))
        if linalg.span_rank(vectors + prods) == len(vectors):
            break
        rows, _ = linalg.rref(vectors + prods)
        vectors = [r for r in rows if any(r)]
    basis_elems = [table.element(v) for v in vectors]
    labels = [f"b{k + 1}" for k in range(len(vectors))]
    products = {}
    for i, x in enumerate(basis_elems):
        for b in range(i, len(basis_elems)):
            p = x * basis_elems[b]
            coords = linalg.express(vectors, list(p.coords))
            if coords is None:
                raise InternalCheckError("closure produced a non-member")
            entry = {labels[k]: c for k, c in enumerate(coords) if c}
            if entry:
                products[(labels[i], labels[b])] = entry
    weight = None
    if table.has_weight:
        wvals = [table.weight_of(v) for v in vectors]
        if any(wvals):
            weight = {labels[k]: w for k, w in enumerate(wvals) if w}
    sub = AlgebraTable.build(labels, products, weight=weight,
                             name=name or "subalgebra")
    return sub, basis_elems

"""Bernstein structure theory: idempotents, Peirce decomposition,
classification flags and the annihilator ideal of the U component.

A baric algebra (A, w) is Bernstein when (x^2)^2 = w(x)^2 x^2 holds
identically.  Relative to an idempotent e of weight 1 the weight
kernel N splits as U + V with U the 1/2-eigenspace and V the kernel
of left multiplication by e.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .core import (AlgebraError, AlgebraTable, Element, InternalCheckError,
                   ZERO, ONE, HALF)
from .multipoly import MultiPoly
from .symbolic import IdentityCheck, check_identity, generic_element


def is_bernstein(table):
    """Symbolic check of (x^2)^2 = w(x)^2 x^2; cached on the table."""
    if table.weight is None:
        raise AlgebraError("Bernstein check needs a weighted algebra")
    cached = table._cache.get("bernstein")
    if cached is not None:
        return cached
    result = check_identity(
        table, lambda x: (x ** 2) ** 2 - (x ** 2).scale(x.weight() ** 2))
    table._cache["bernstein"] = result
    return result


def find_idempotent(table):
    """Nonzero idempotent of weight 1, from the first basis vector of
    nonzero weight (deterministic)."""
    if table.weight is None:
        raise AlgebraError("idempotent search needs a weighted algebra")
    i = next((i for i, w in enumerate(table.weight) if w), None)
    if i is None:
        raise AlgebraError("weight vanishes on the whole basis")
    x = table.basis_element(i).scale(ONE / table.weight[i])
    e = x * x
    if e * e != e or e.weight() != 1:
        raise AlgebraError("no idempotent found; algebra is not Bernstein")
    return e


@dataclass
class PeirceDecomposition:
    """Splitting A = Ke + U + V for an idempotent e of weight 1."""
    table: AlgebraTable
    idempotent: Element
    u_basis: list
    v_basis: list
    _adapted_inverse: list = None

    @property
    def type_pair(self):
        return (1 + len(self.u_basis), len(self.v_basis))

    def _inverse(self):
        if self._adapted_inverse is None:
            cols = [list(self.idempotent.coords)]
            cols += [list(u.coords) for u in self.u_basis]
            cols += [list(v.coords) for v in self.v_basis]
            self._adapted_inverse = linalg.invert(linalg.transpose(cols))
        return self._adapted_inverse

    def adapted_coords(self, element):
        """(e-coordinate, U-coordinates, V-coordinates) of an element;
        works for polynomial coordinates as well."""
        inv = self._inverse()
        coords = list(element.coords)
        out = []
        for row in inv:
            acc = None
            for f, c in zip(row, coords):
                if not f or not c:
                    continue
                acc = f * c if acc is None else acc + f * c
            out.append(acc if acc is not None else _zero_like(coords))
        r = len(self.u_basis)
        return out[0], out[1:1 + r], out[1 + r:]

    def in_u(self, element):
        alpha, _, vc = self.adapted_coords(element)
        return not alpha and not any(vc)

    def in_v(self, element):
        alpha, uc, _ = self.adapted_coords(element)
        return not alpha and not any(uc)


def _zero_like(coords):
    for c in coords:
        if isinstance(c, MultiPoly):
            return MultiPoly.zero()
    return ZERO


def peirce(table, e=None):
    """Peirce decomposition for the idempotent e (found if omitted)."""
    if e is None:
        e = find_idempotent(table)
    if e * e != e or e.weight() != 1:
        raise AlgebraError("peirce needs an idempotent of weight 1")
    nbasis = table.barideal_basis()
    if not nbasis:
        return PeirceDecomposition(table, e, [], [])
    nvecs = [list(b.coords) for b in nbasis]
    images = []
    for b in nbasis:
        coords = linalg.express(nvecs, list((e * b).coords))
        if coords is None:
            raise AlgebraError("weight kernel is not invariant under the idempotent")
        images.append(coords)
    n = len(nbasis)
    m = [[images[j][i] for j in range(n)] for i in range(n)]
    mu = [[m[i][j] - (HALF if i == j else ZERO) for j in range(n)]
          for i in range(n)]
    ucoords = linalg.kernel(mu, ncols=n)
    vcoords = linalg.kernel(m, ncols=n)
    if len(ucoords) + len(vcoords) != n:
        raise AlgebraError("not a Bernstein Peirce decomposition")

    def lift(cs):
        acc = table.zero()
        for c, b in zip(cs, nbasis):
            if c:
                acc = acc + b.scale(c)
        return acc

    return PeirceDecomposition(table, e,
                               [lift(c) for c in ucoords],
                               [lift(c) for c in vcoords])


def idempotent_family(table, e, u):
    """The idempotent e + u + u^2 attached to u in U (checked)."""
    dec = peirce(table, e)
    if not dec.in_u(u):
        raise AlgebraError("element is not in the U component")
    f = e + u + u * u
    if f * f != f:
        raise InternalCheckError("e + u + u^2 failed to be idempotent")
    return f


def lyubich_ideal(table, dec=None):
    """Basis of {u in U : uU = 0}, the annihilator of U inside U."""
    if dec is None:
        dec = peirce(table)
    ub = dec.u_basis
    if not ub:
        return []
    rows = []
    for j, uj in enumerate(ub):
        prods = [ui * uj for ui in ub]
        for k in range(table.dim):
            rows.append([p.coords[k] for p in prods])
    coords = linalg.kernel(rows, ncols=len(ub))
    out = []
    for cs in coords:
        acc = table.zero()
        for c, u in zip(cs, ub):
            if c:
                acc = acc + u.scale(c)
        out.append(acc)
    return out


@dataclass
class StructureReport:
    """Classification flags for a weighted table.  When the algebra is
    not Bernstein only ``is_bernstein`` and its witness are filled."""
    is_bernstein: bool
    bernstein_witness: IdentityCheck | None = None
    is_nuclear: bool | None = None
    is_exceptional: bool | None = None
    is_jordan: bool | None = None
    lyubich_basis: list | None = None
    type_pair: tuple | None = None
    idempotent: Element | None = None


def _jordan_by_identity(table):
    return check_identity(
        table, lambda x, y: x * (x * x * y) - (x * x) * (x * y), arity=2)


def _jordan_by_peirce(table, dec):
    vsq_zero = all(not (vi * vj)
                   for i, vi in enumerate(dec.v_basis)
                   for vj in dec.v_basis[i:])
    if not vsq_zero:
        return False
    if not dec.u_basis or not dec.v_basis:
        return True
    uv_v = check_identity(table, lambda u, v: (u * v) * v, arity=2,
                          restrict=[dec.u_basis, dec.v_basis],
                          prefixes=("s", "t"))
    return bool(uv_v)


def classify(table):
    """Structure report: Bernstein, nuclear (U^2 = V), exceptional
    (U^2 = 0), Jordan, the annihilator ideal of U and the type."""
    bern = is_bernstein(table)
    if not bern:
        return StructureReport(False, bernstein_witness=bern)
    dec = peirce(table)
    usq = [ui * uj
           for i, ui in enumerate(dec.u_basis) for uj in dec.u_basis[i:]]
    usq_vectors = [list(p.coords) for p in usq if p]
    v_vectors = [list(v.coords) for v in dec.v_basis]
    nuclear = linalg.span_equal(usq_vectors, v_vectors)
    exceptional = not usq_vectors

    jid = bool(_jordan_by_identity(table))
    jpe = _jordan_by_peirce(table, dec)
    if jid != jpe:
        raise InternalCheckError(
            "Jordan identity and Peirce criterion disagree")

    return StructureReport(
        is_bernstein=True,
        is_nuclear=nuclear,
        is_exceptional=exceptional,
        is_jordan=jid,
        lyubich_basis=lyubich_ideal(table, dec),
        type_pair=dec.type_pair,
        idempotent=dec.idempotent,
    )


def zero_v_squared(table, dec=None):
    """The same multiplication with every V x V product replaced by
    zero, rebuilt on a basis adapted to the decomposition; the result
    is verified to be Bernstein."""
    if dec is None:
        dec = peirce(table)
    adapted = [dec.idempotent] + list(dec.u_basis) + list(dec.v_basis)

    pure = _pure_basis_positions(table, dec)
    if pure is not None:
        vset = {i for i, kind in enumerate(pure) if kind == "v"}
        products = {}
        for (i, j), vec in table.product_items():
            if i in vset and j in vset:
                continue
            products[(i, j)] = dict(vec)
        out = AlgebraTable(table.labels, products, weight=table.weight,
                           name=table.name + "/V2=0" if table.name else "")
    else:
        labels = ["e"]
        labels += [f"u{i + 1}" for i in range(len(dec.u_basis))]
        labels += [f"v{i + 1}" for i in range(len(dec.v_basis))]
        nv = len(dec.v_basis)
        vstart = 1 + len(dec.u_basis)
        vectors = [list(a.coords) for a in adapted]
        products = {}
        for i in range(len(adapted)):
            for j in range(i, len(adapted)):
                if i >= vstart and j >= vstart:
                    continue
                prod = adapted[i] * adapted[j]
                coords = linalg.express(vectors, list(prod.coords))
                if coords is None:
                    raise InternalCheckError("adapted basis does not span a subalgebra")
                vec = {k: c for k, c in enumerate(coords) if c}
                if vec:
                    products[(i, j)] = vec
        weight = [ONE] + [ZERO] * (len(labels) - 1)
        out = AlgebraTable(labels, products, weight=weight,
                           name=table.name + "/V2=0" if table.name else "")
    verdict = is_bernstein(out)
    if not verdict:
        raise AlgebraError(
            "zeroing V x V products did not leave a Bernstein algebra")
    return out


def _pure_basis_positions(table, dec):
    """If every basis vector lies in Ke, U or V, return its kind per
    position ("e"/"u"/"v"); otherwise None."""
    kinds = []
    for i in range(table.dim):
        b = table.basis_element(i)
        alpha, uc, vc = dec.adapted_coords(b)
        flags = (bool(alpha), any(uc), any(vc))
        if sum(flags) != 1:
            return None
        kinds.append("e" if flags[0] else ("u" if flags[1] else "v"))
    return kinds

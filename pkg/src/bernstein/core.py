"""Structure-constant algebras over the rationals.

An :class:`AlgebraTable` presents a finite-dimensional commutative
algebra by its basis labels and the products of unordered basis pairs.
An optional weight row makes it a baric algebra; multiplicativity of
the weight is checked on construction.  Elements, left-multiplication
operators and univariate polynomials (used with zero constant term for
evaluation at elements) live here as well.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


class AlgebraError(ValueError):
    """Invalid input or violated precondition."""


class InternalCheckError(RuntimeError):
    """A cross-check that should be impossible to fail has failed."""


def as_scalar(value):
    """Coerce int, str ("p/q") or Fraction to Fraction; reject floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise AlgebraError(f"bad scalar {value!r}: {exc}") from None
    raise AlgebraError(f"bad scalar {value!r} of type {type(value).__name__}")


def parse_scalar(text):
    if not isinstance(text, str):
        raise AlgebraError(f"scalar must be a string, got {type(text).__name__}")
    return as_scalar(text)


def format_scalar(q):
    return str(Fraction(q))


_EMPTY = {}


class AlgebraTable:
    """Commutative algebra given by structure constants on a labelled basis."""

    __slots__ = ("labels", "weight", "name", "notes", "_index", "_products",
                 "_cache")

    def __init__(self, labels, products, weight=None, name="", notes=()):
        labels = tuple(str(l) for l in labels)
        if len(set(labels)) != len(labels):
            raise AlgebraError("basis labels must be distinct")
        if not labels:
            raise AlgebraError("algebra needs at least one basis element")
        for lab in labels:
            if not lab or not (lab[0].isalpha() or lab[0] == "_") \
                    or not all(ch.isalnum() or ch == "_" for ch in lab):
                raise AlgebraError(f"label {lab!r} is not an identifier")
        self.labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}
        dim = len(labels)

        table = {}
        for key, vec in products.items():
            i, j = key
            if not (0 <= i < dim and 0 <= j < dim):
                raise AlgebraError(f"product pair {key} out of range")
            if i > j:
                i, j = j, i
            clean = {}
            for k, c in vec.items():
                if not 0 <= k < dim:
                    raise AlgebraError(f"product target {k} out of range")
                c = as_scalar(c)
                if c:
                    clean[k] = c
            if (i, j) in table and table[(i, j)] != clean:
                raise AlgebraError(
                    f"conflicting products for pair ({labels[i]}, {labels[j]})")
            if clean:
                table[(i, j)] = clean
        self._products = table

        if weight is not None:
            weight = tuple(as_scalar(w) for w in weight)
            if len(weight) != dim:
                raise AlgebraError("weight row has wrong length")
            if not any(weight):
                raise AlgebraError("weight must be a nonzero functional")
            for i in range(dim):
                for j in range(i, dim):
                    vec = table.get((i, j), _EMPTY)
                    w = sum((c * weight[k] for k, c in vec.items()), ZERO)
                    if w != weight[i] * weight[j]:
                        raise AlgebraError(
                            "weight is not multiplicative on pair "
                            f"({labels[i]}, {labels[j]})")
        self.weight = weight
        self.name = str(name)
        self.notes = tuple(notes)
        self._cache = {}

    @classmethod
    def build(cls, labels, products, weight=None, name="", notes=()):
        """Label-keyed constructor: products maps (left, right) label pairs
        to {label: scalar} dictionaries."""
        labels = tuple(str(l) for l in labels)
        index = {lab: i for i, lab in enumerate(labels)}

        def look(lab):
            if lab not in index:
                raise AlgebraError(f"unknown basis label {lab!r}")
            return index[lab]

        table = {}
        for (a, b), vec in products.items():
            table[(look(a), look(b))] = {look(k): as_scalar(c)
                                         for k, c in vec.items()}
        wrow = None
        if weight is not None:
            wrow = [ZERO] * len(labels)
            for lab, c in weight.items():
                wrow[look(lab)] = as_scalar(c)
        return cls(labels, table, weight=wrow, name=name, notes=notes)

    @property
    def dim(self):
        return len(self.labels)

    @property
    def has_weight(self):
        return self.weight is not None

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise AlgebraError(f"unknown basis label {label!r}") from None

    def product_vector(self, i, j):
        """Sparse product of basis elements i and j (read-only dict)."""
        if i > j:
            i, j = j, i
        return self._products.get((i, j), _EMPTY)

    def product_items(self):
        return sorted(self._products.items())

    def element(self, coords):
        coords = tuple(as_scalar(c) for c in coords)
        if len(coords) != self.dim:
            raise AlgebraError("coordinate vector has wrong length")
        return Element(self, coords)

    def element_from(self, parts):
        coords = [ZERO] * self.dim
        for lab, c in parts.items():
            coords[self.index(lab)] = as_scalar(c)
        return Element(self, tuple(coords))

    def basis_element(self, i):
        coords = [ZERO] * self.dim
        coords[i] = ONE
        return Element(self, tuple(coords))

    def basis(self):
        return [self.basis_element(i) for i in range(self.dim)]

    def zero(self):
        return Element(self, (ZERO,) * self.dim)

    def weight_of(self, coords):
        if self.weight is None:
            raise AlgebraError("algebra has no weight")
        acc = ZERO
        for c, w in zip(coords, self.weight):
            if c and w:
                acc += c * w
        return acc

    def barideal_basis(self):
        """Basis of the weight kernel N, deterministic."""
        if self.weight is None:
            raise AlgebraError("algebra has no weight")
        vecs = linalg.kernel([list(self.weight)])
        return [Element(self, tuple(v)) for v in vecs]

    def structural_key(self):
        return (self.labels,
                tuple((pair, tuple(sorted(vec.items())))
                      for pair, vec in self.product_items()),
                self.weight)

    def __eq__(self, other):
        if not isinstance(other, AlgebraTable):
            return NotImplemented
        return self.structural_key() == other.structural_key()

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        tag = self.name or "algebra"
        return f"<AlgebraTable {tag} dim={self.dim}>"


def bilinear_product(table, xcoords, ycoords, zero):
    """Bilinear extension of the structure constants; works for Fraction
    and for polynomial coordinates."""
    out = [zero] * table.dim
    for i, xi in enumerate(xcoords):
        if not xi:
            continue
        for j, yj in enumerate(ycoords):
            if not yj:
                continue
            vec = table.product_vector(i, j)
            if not vec:
                continue
            c = xi * yj
            for k, s in vec.items():
                out[k] = out[k] + c * s
    return out


class Element:
    """Element of an AlgebraTable, held as exact rational coordinates."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = coords

    def _check_same(self, other):
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise AlgebraError("elements live in different algebras")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check_same(other)
        return Element(self.algebra,
                       tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check_same(other)
        return Element(self.algebra,
                       tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Element(self.algebra, tuple(-a for a in self.coords))

    def scale(self, c):
        c = as_scalar(c)
        return Element(self.algebra, tuple(c * a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check_same(other)
            return Element(self.algebra, tuple(bilinear_product(
                self.algebra, self.coords, other.coords, ZERO)))
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        """Principal (right) power: x^(k+1) = x^k * x."""
        if not isinstance(k, int) or k < 1:
            raise AlgebraError("principal powers need an integer exponent >= 1")
        acc = self
        for _ in range(k - 1):
            acc = acc * self
        return acc

    def weight(self):
        return self.algebra.weight_of(self.coords)

    def is_zero(self):
        return not any(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, Element):
            return (self.algebra == other.algebra
                    and self.coords == other.coords)
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for lab, c in zip(self.algebra.labels, self.coords):
            if not c:
                continue
            if c == 1:
                term = lab
            elif c == -1:
                term = f"-{lab}"
            else:
                term = f"{format_scalar(c)}*{lab}"
            parts.append(term)
        text = parts[0]
        for term in parts[1:]:
            text += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return text


def principal_powers(x, k_max):
    """[x, x^2, ..., x^k_max] with right powers; works for symbolic
    elements as well."""
    if k_max < 1:
        return []
    powers = [x]
    for _ in range(k_max - 1):
        powers.append(powers[-1] * x)
    return powers


class Operator:
    """Linear operator on a coordinate space, stored as a dense matrix
    acting on column vectors."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        self.matrix = tuple(tuple(row) for row in matrix)

    @classmethod
    def identity(cls, n):
        return cls(linalg.identity_matrix(n))

    @property
    def dim(self):
        return len(self.matrix)

    def apply(self, coords):
        return linalg.mat_vec(self.matrix, list(coords))

    def compose(self, other):
        return Operator(linalg.mat_mul(self.matrix, other.matrix))

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise AlgebraError("operator powers need an integer exponent >= 0")
        acc = Operator.identity(self.dim)
        for _ in range(k):
            acc = acc.compose(self)
        return acc

    def __sub__(self, other):
        return Operator(tuple(tuple(a - b for a, b in zip(ra, rb))
                              for ra, rb in zip(self.matrix, other.matrix)))

    def is_zero(self):
        return not any(any(row) for row in self.matrix)

    def __eq__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"<Operator dim={self.dim}>"


def left_mult_operator(x, carrier):
    """Matrix of left multiplication by x on the span of ``carrier``.

    The carrier must be linearly independent and invariant under the
    operator; both are checked.
    """
    carrier = list(carrier)
    vectors = [list(c.coords) for c in carrier]
    if not linalg.independent(vectors):
        raise AlgebraError("carrier basis is linearly dependent")
    cols = []
    for c in carrier:
        image = x * c
        coords = linalg.express(vectors, list(image.coords))
        if coords is None:
            raise AlgebraError("carrier is not invariant under the operator")
        cols.append(coords)
    n = len(carrier)
    return Operator([[cols[j][i] for j in range(n)] for i in range(n)])


class UnivariatePoly:
    """Polynomial in one variable over Fraction, stored densely by
    exponent.  Most callers keep the constant term zero so the
    polynomial can be evaluated at algebra elements."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [as_scalar(c) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, k, c=ONE):
        return cls([ZERO] * k + [c])

    @classmethod
    def x(cls):
        return cls.monomial(1)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    @property
    def constant_term(self):
        return self.coeff(0)

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePoly([self.coeff(k) + other.coeff(k)
                               for k in range(n)])

    def __sub__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePoly([self.coeff(k) - other.coeff(k)
                               for k in range(n)])

    def __neg__(self):
        return UnivariatePoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UnivariatePoly([as_scalar(other) * c for c in self.coeffs])
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return UnivariatePoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return UnivariatePoly(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise AlgebraError("polynomial powers need an exponent >= 0")
        acc = UnivariatePoly([ONE])
        for _ in range(k):
            acc = acc * self
        return acc

    @staticmethod
    def _coerce(other):
        if isinstance(other, UnivariatePoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UnivariatePoly([as_scalar(other)])
        raise AlgebraError(f"cannot combine polynomial with {other!r}")

    def divmod(self, divisor):
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise AlgebraError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = divisor.degree
        lead = divisor.coeffs[-1]
        quot = [ZERO] * max(0, len(rem) - dq)
        while len(rem) - 1 >= dq and any(rem):
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) - 1 < dq:
                break
            f = rem[-1] / lead
            shift = len(rem) - 1 - dq
            quot[shift] = f
            for i, c in enumerate(divisor.coeffs):
                rem[shift + i] -= f * c
        return UnivariatePoly(quot), UnivariatePoly(rem)

    def divisible_by(self, divisor):
        return self.divmod(divisor)[1].is_zero()

    def __call__(self, value):
        """Evaluate at a scalar (constant term allowed here)."""
        value = as_scalar(value)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __eq__(self, other):
        if isinstance(other, UnivariatePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if not c:
                continue
            if k == 0:
                body = format_scalar(abs(c))
            else:
                var = "X" if k == 1 else f"X^{k}"
                body = var if abs(c) == 1 else f"{format_scalar(abs(c))}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        sign, body = parts[0]
        text = body if sign == "+" else f"-{body}"
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def poly_eval(x, poly):
    """Evaluate a polynomial with zero constant term at an element."""
    if not isinstance(poly, UnivariatePoly):
        raise AlgebraError("poly_eval needs a UnivariatePoly")
    if poly.constant_term:
        raise AlgebraError("polynomial has a nonzero constant term")
    if poly.is_zero():
        return x.algebra.zero() if isinstance(x, Element) else x - x
    powers = principal_powers(x, poly.degree)
    acc = None
    for k in range(1, poly.degree + 1):
        c = poly.coeff(k)
        if not c:
            continue
        term = powers[k - 1].scale(c)
        acc = term if acc is None else acc + term
    return acc

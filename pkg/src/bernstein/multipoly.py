"""Sparse multivariate polynomials over the rationals.

Terms are keyed by sorted tuples of (variable name, exponent) pairs;
coefficients are Fractions and zero coefficients are never stored, so
a polynomial is zero exactly when its term dict is empty.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def _merge_keys(k1, k2):
    exps = dict(k1)
    for name, e in k2:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


class MultiPoly:
    """Polynomial in named commuting variables with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms) if terms else {}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        c = Fraction(c)
        return cls({(): c} if c else None)

    @classmethod
    def var(cls, name):
        return cls({((str(name), 1),): ONE})

    @staticmethod
    def _coerce(other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return None

    def _combined(self, other, sign):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for key, c in other.terms.items():
            val = terms.get(key, ZERO) + sign * c
            if val:
                terms[key] = val
            else:
                terms.pop(key, None)
        return MultiPoly(terms)

    def __add__(self, other):
        return self._combined(other, ONE)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combined(other, -ONE)

    def __rsub__(self, other):
        return (-self)._combined(other, ONE)

    def __neg__(self):
        return MultiPoly({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if not f:
                return MultiPoly()
            return MultiPoly({k: c * f for k, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = _merge_keys(k1, k2)
                val = out.get(key, ZERO) + c1 * c2
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
        return MultiPoly(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (ONE / Fraction(other))
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial power needs an exponent >= 0")
        acc = MultiPoly.const(1)
        for _ in range(k):
            acc = acc * self
        return acc

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def variables(self):
        names = set()
        for key in self.terms:
            for name, _ in key:
                names.add(name)
        return sorted(names)

    def total_degree(self):
        if not self.terms:
            return -1
        return max((sum(e for _, e in key) for key in self.terms), default=0)

    def constant_value(self):
        """The Fraction value of a constant polynomial."""
        if not self.terms:
            return ZERO
        if list(self.terms) == [()]:
            return self.terms[()]
        raise ValueError("polynomial is not constant")

    def evaluate(self, assignment):
        acc = ZERO
        for key, c in self.terms.items():
            val = c
            for name, e in key:
                val *= Fraction(assignment[name]) ** e
            acc += val
        return acc

    def substitute(self, name, value):
        value = Fraction(value)
        out = {}
        for key, c in self.terms.items():
            exp = 0
            rest = []
            for n, e in key:
                if n == name:
                    exp = e
                else:
                    rest.append((n, e))
            val = c * value ** exp if exp else c
            if not val:
                continue
            rkey = tuple(rest)
            acc = out.get(rkey, ZERO) + val
            if acc:
                out[rkey] = acc
            else:
                out.pop(rkey, None)
        return MultiPoly(out)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=lambda k: (sum(e for _, e in k), k)):
            c = self.terms[key]
            factors = [f"{n}^{e}" if e > 1 else n for n, e in key]
            body = "*".join(factors) if factors else str(abs(c))
            if factors and abs(c) != 1:
                body = f"{abs(c)}*{body}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = body if sign == "+" else f"-{body}"
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

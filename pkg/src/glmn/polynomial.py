"""Commutative polynomials in the weight coordinates of gl(m|n).

Variables are ordered (first block of m, second block of n); ``names``
selects how they print: ``("lambda", "mu")`` or ``("x", "y")``.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import format_scalar


class WeightPolynomial:
    __slots__ = ("m", "n", "names", "terms")

    def __init__(self, m: int, n: int, terms=None, names=("x", "y")):
        self.m = m
        self.n = n
        self.names = tuple(names)
        self.terms = {tuple(e): Fraction(c) for e, c in (terms or {}).items() if c}
        for e in self.terms:
            if len(e) != m + n:
                raise ValueError("exponent vector has the wrong length")

    # ---- constructors ----
    @classmethod
    def const(cls, m, n, c, names=("x", "y")):
        return cls(m, n, {(0,) * (m + n): c}, names)

    @classmethod
    def var(cls, m, n, k, names=("x", "y")):
        """The k-th variable, 0-based over the concatenated (x, y) list."""
        e = [0] * (m + n)
        e[k] = 1
        return cls(m, n, {tuple(e): 1}, names)

    def x(self, i):
        return WeightPolynomial.var(self.m, self.n, i - 1, self.names)

    def y(self, j):
        return WeightPolynomial.var(self.m, self.n, self.m + j - 1, self.names)

    def _like(self, terms):
        return WeightPolynomial(self.m, self.n, terms, self.names)

    def _coerce(self, other):
        if isinstance(other, WeightPolynomial):
            if (other.m, other.n) != (self.m, self.n):
                raise ValueError("polynomials over different variable sets")
            return other
        return WeightPolynomial.const(self.m, self.n, Fraction(other), self.names)

    # ---- arithmetic ----
    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, WeightPolynomial):
            c = Fraction(other)
            return self._like({e: v * c for e, v in self.terms.items()})
        other = self._coerce(other)
        terms: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(a + b for a, b in zip(ea, eb))
                terms[e] = terms.get(e, 0) + ca * cb
        return self._like(terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = WeightPolynomial.const(self.m, self.n, 1, self.names)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, WeightPolynomial):
            return (self.m, self.n) == (other.m, other.n) and self.terms == other.terms
        try:
            return self.terms == self._coerce(other).terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def as_scalar(self):
        if not self.terms:
            return Fraction(0)
        zero = (0,) * (self.m + self.n)
        if len(self.terms) == 1 and zero in self.terms:
            return self.terms[zero]
        return None

    def with_names(self, names):
        return WeightPolynomial(self.m, self.n, self.terms, names)

    def substitute(self, images) -> "WeightPolynomial":
        """Replace variable k by images[k] (polynomials) and expand."""
        images = list(images)
        proto = images[0]
        out = WeightPolynomial(proto.m, proto.n, {}, proto.names)
        cache: dict = {}
        for e, c in self.terms.items():
            term = WeightPolynomial.const(proto.m, proto.n, c, proto.names)
            for k, p in enumerate(e):
                if p:
                    key = (k, p)
                    if key not in cache:
                        cache[key] = images[k] ** p
                    term = term * cache[key]
            out = out + term
        return out

    def swap(self, a: int, b: int) -> "WeightPolynomial":
        """Exchange variables a and b (0-based)."""
        terms = {}
        for e, c in self.terms.items():
            e = list(e)
            e[a], e[b] = e[b], e[a]
            terms[tuple(e)] = c
        return self._like(terms)

    # ---- output ----
    def var_name(self, k: int) -> str:
        if k < self.m:
            return f"{self.names[0]}{k + 1}"
        return f"{self.names[1]}{k - self.m + 1}"

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-a for a in kv[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = [self.var_name(k) + (f"^{p}" if p > 1 else "") for k, p in enumerate(e) if p]
            if factors:
                parts.append(f"{format_scalar(c)} * " + "*".join(factors))
            else:
                parts.append(format_scalar(c))
        return " + ".join(parts)

    def __repr__(self):
        return f"WeightPolynomial({self})"

    def to_json(self) -> dict:
        return {
            "vars": [self.var_name(k) for k in range(self.m + self.n)],
            "terms": [{"coeff": format_scalar(c), "exponents": list(e)} for e, c in self.sorted_terms()],
        }

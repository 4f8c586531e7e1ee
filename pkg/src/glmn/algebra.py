"""Exact arithmetic in U(gl(m|n)) and in a free associative algebra.

Elements of both rings are finite linear combinations of monomials with
exact rational coefficients.  A monomial of U(gl(m|n)) is a nondecreasing
tuple of generator codes (a PBW monomial, repeats encode exponents); a
monomial of the free algebra is an arbitrary word of letter codes.

The generator codes of U(gl(m|n)) follow the canonical order

    lowering (i > j)  <  diagonal (i = j)  <  raising (i < j),

lexicographic by (i, j) inside each class, so raising generators always sit
rightmost in a normal-ordered monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

Scalar = Fraction
Monomial = tuple  # tuple[int, ...]


def _scalar(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"expected an exact rational scalar, got {type(c).__name__}")


def format_scalar(c: Fraction) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class SuperDims:
    m: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise TypeError("block sizes must be integers")
        if self.m < 1 or self.n < 1:
            raise ValueError(f"gl(m|n) needs m >= 1 and n >= 1, got ({self.m}|{self.n})")

    @property
    def size(self) -> int:
        return self.m + self.n

    def parity(self, i: int) -> int:
        if not 1 <= i <= self.size:
            raise IndexError(f"index {i} out of range 1..{self.size}")
        return 0 if i <= self.m else 1


class Element:
    """Linear combination of monomials of a parent ring.

    Treat instances as immutable; ``terms`` maps monomial -> nonzero Fraction.
    """

    __slots__ = ("parent", "terms")

    def __init__(self, parent, terms: dict | None = None):
        self.parent = parent
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    # ---- coercion helpers ----
    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            if other.parent is not self.parent and other.parent != self.parent:
                raise ValueError("elements belong to different algebras")
            return other
        return self.parent.scalar(_scalar(other))

    # ---- ring operations ----
    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, 0) + c
        return Element(self.parent, terms)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.parent, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Element):
            c = _scalar(other)
            if not c:
                return Element(self.parent)
            return Element(self.parent, {k: v * c for k, v in self.terms.items()})
        other = self._coerce(other)
        mul = self.parent.mul_monomials
        acc: dict = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                c = ca * cb
                for mono, cm in mul(ma, mb).items():
                    acc[mono] = acc.get(mono, 0) + c * cm
        return Element(self.parent, acc)

    def __rmul__(self, other):
        # scalars commute with everything
        return self * other

    def __truediv__(self, other):
        return self * (1 / _scalar(other))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = self.parent.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.parent == other.parent and self.terms == other.terms
        try:
            return self.terms == self.parent.scalar(_scalar(other)).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # ---- inspection ----
    def as_scalar(self):
        """The scalar c if this element equals c * 1, else None."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and () in self.terms:
            return Fraction(self.terms[()])
        return None

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=-1)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (-len(kv[0]), kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            if mono:
                parts.append(f"{format_scalar(c)} * {self.parent.format_monomial(mono)}")
            else:
                parts.append(format_scalar(c))
        return " + ".join(parts)

    def __repr__(self):
        return f"Element({self})"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"coeff": format_scalar(c), "monomial": self.parent.monomial_json(mono)}
                for mono, c in self.sorted_terms()
            ]
        }


class Envelope:
    """The universal enveloping algebra U(gl(m|n)).

    Products are straightened into the PBW basis by rewriting the rightmost
    out-of-order adjacent pair, x*y -> (-1)^{p(x)p(y)} y*x + [x, y].
    Products of a PBW monomial by a single generator are memoized on the
    instance; the memo only ever stores deterministic results, so sharing an
    instance between threads is safe.
    """

    def __init__(self, m: int, n: int):
        self.dims = SuperDims(m, n)
        N = self.dims.size
        lowering = [(i, j) for i in range(1, N + 1) for j in range(1, N + 1) if i > j]
        diagonal = [(i, i) for i in range(1, N + 1)]
        raising = [(i, j) for i in range(1, N + 1) for j in range(1, N + 1) if i < j]
        self.generators: list[tuple[int, int]] = lowering + diagonal + raising
        self.code = {ij: c for c, ij in enumerate(self.generators)}
        self.odd = [(self.dims.parity(i) + self.dims.parity(j)) % 2 for i, j in self.generators]
        self._bracket = {}
        for a, (i, j) in enumerate(self.generators):
            for b, (k, l) in enumerate(self.generators):
                self._bracket[a, b] = self._gen_bracket(i, j, k, l)
        self._mono_gen: dict = {}

    @property
    def m(self):
        return self.dims.m

    @property
    def n(self):
        return self.dims.n

    def __eq__(self, other):
        return isinstance(other, Envelope) and other.dims == self.dims

    def __hash__(self):
        return hash(("Envelope", self.dims))

    def __repr__(self):
        return f"Envelope(m={self.m}, n={self.n})"

    # ---- structure ----
    def parity(self, i: int) -> int:
        return self.dims.parity(i)

    def generator_parity(self, i: int, j: int) -> int:
        return (self.parity(i) + self.parity(j)) % 2

    def _gen_bracket(self, i, j, k, l) -> dict:
        pa = (self.parity(i) + self.parity(j)) % 2
        pb = (self.parity(k) + self.parity(l)) % 2
        out: dict = {}
        if k == j:
            c = self.code[i, l]
            out[c] = out.get(c, 0) + 1
        if i == l:
            c = self.code[k, j]
            out[c] = out.get(c, 0) - (-1) ** (pa * pb)
        return {g: v for g, v in out.items() if v}

    def _check(self, i, j):
        N = self.dims.size
        if not (1 <= i <= N and 1 <= j <= N):
            raise IndexError(f"generator E[{i},{j}] out of range for gl({self.m}|{self.n})")

    # ---- constructors ----
    def zero(self) -> Element:
        return Element(self)

    def one(self) -> Element:
        return Element(self, {(): Fraction(1)})

    def scalar(self, c) -> Element:
        return Element(self, {(): _scalar(c)})

    def gen(self, i: int, j: int) -> Element:
        self._check(i, j)
        return Element(self, {(self.code[i, j],): Fraction(1)})

    def bracket(self, a: tuple[int, int], b: tuple[int, int]) -> Element:
        """Super-bracket [E_a, E_b] of two generators."""
        self._check(*a)
        self._check(*b)
        lin = self._bracket[self.code[a], self.code[b]]
        return Element(self, {(g,): Fraction(c) for g, c in lin.items()})

    # ---- straightening kernel ----
    def _times_gen(self, mono: tuple, g: int) -> dict:
        key = (mono, g)
        hit = self._mono_gen.get(key)
        if hit is not None:
            return hit
        if not mono or g > mono[-1] or (g == mono[-1] and not self.odd[g]):
            res = {mono + (g,): 1}
        elif g == mono[-1]:
            # odd generators square to zero
            res = {}
        else:
            x = mono[-1]
            head = mono[:-1]
            sign = -1 if (self.odd[x] and self.odd[g]) else 1
            res = {}
            for m2, c2 in self._times_gen(head, g).items():
                for m3, c3 in self._times_gen(m2, x).items():
                    res[m3] = res.get(m3, 0) + sign * c2 * c3
            for h, ch in self._bracket[x, g].items():
                for m3, c3 in self._times_gen(head, h).items():
                    res[m3] = res.get(m3, 0) + ch * c3
            res = {k: v for k, v in res.items() if v}
        self._mono_gen[key] = res
        return res

    def mul_monomials(self, a: tuple, b: tuple) -> dict:
        cur = {a: 1}
        for g in b:
            nxt: dict = {}
            for mono, c in cur.items():
                for m2, c2 in self._times_gen(mono, g).items():
                    nxt[m2] = nxt.get(m2, 0) + c * c2
            cur = {k: v for k, v in nxt.items() if v}
        return cur

    def normal_order(self, word: Iterable[tuple[int, int]]) -> Element:
        """Canonical PBW form of the product of a word of generators."""
        codes = []
        for ij in word:
            self._check(*ij)
            codes.append(self.code[tuple(ij)])
        return Element(self, {k: Fraction(v) for k, v in self.mul_monomials((), tuple(codes)).items()})

    def multiply(self, a: Element, b: Element) -> Element:
        if a.parent != self or b.parent != self:
            raise ValueError("dims mismatch")
        return a * b

    def linear_combine(self, pairs: Iterable[tuple]) -> Element:
        acc = self.zero()
        for c, a in pairs:
            acc = acc + a * c
        return acc

    # ---- formatting ----
    def monomial_factors(self, mono: tuple) -> list[tuple[int, int, int]]:
        """Run-length form [(i, j, exponent), ...] of a PBW monomial."""
        out: list[list[int]] = []
        for g in mono:
            i, j = self.generators[g]
            if out and out[-1][0] == i and out[-1][1] == j:
                out[-1][2] += 1
            else:
                out.append([i, j, 1])
        return [tuple(f) for f in out]

    def format_monomial(self, mono: tuple) -> str:
        parts = []
        for i, j, e in self.monomial_factors(mono):
            parts.append(f"E[{i},{j}]" + (f"^{e}" if e > 1 else ""))
        return "*".join(parts)

    def monomial_json(self, mono: tuple) -> list:
        return [list(f) for f in self.monomial_factors(mono)]

    def word_of(self, mono: tuple) -> list[tuple[int, int]]:
        return [self.generators[g] for g in mono]

    def element_parity(self, mono: tuple) -> int:
        return sum(self.odd[g] for g in mono) % 2


class FreeAlgebra:
    """Free associative algebra over Q on named noncommuting letters."""

    def __init__(self, names: Sequence[str]):
        self.names = tuple(names)
        self.index = {s: k for k, s in enumerate(self.names)}

    def __eq__(self, other):
        return isinstance(other, FreeAlgebra) and other.names == self.names

    def __hash__(self):
        return hash(("FreeAlgebra", self.names))

    def zero(self) -> Element:
        return Element(self)

    def one(self) -> Element:
        return Element(self, {(): Fraction(1)})

    def scalar(self, c) -> Element:
        return Element(self, {(): _scalar(c)})

    def letter(self, name: str) -> Element:
        return Element(self, {(self.index[name],): Fraction(1)})

    def mul_monomials(self, a: tuple, b: tuple) -> dict:
        return {a + b: 1}

    def format_monomial(self, mono: tuple) -> str:
        return "*".join(self.names[g] for g in mono)

    def monomial_json(self, mono: tuple) -> list:
        return [self.names[g] for g in mono]


def formal_matrix(size: int, symbol: str = "A") -> list[list[Element]]:
    """Square matrix of free noncommuting letters A11, A12, ..."""
    names = [f"{symbol}{i}{j}" for i in range(1, size + 1) for j in range(1, size + 1)]
    F = FreeAlgebra(names)
    return [[F.letter(f"{symbol}{i}{j}") for j in range(1, size + 1)] for i in range(1, size + 1)]


# ---- functional surface ----

def parity(dims: SuperDims | Envelope, i: int) -> int:
    d = dims.dims if isinstance(dims, Envelope) else dims
    return d.parity(i)


def bracket(U: Envelope, a: tuple[int, int], b: tuple[int, int]) -> Element:
    return U.bracket(a, b)


def normal_order(U: Envelope, word: Iterable[tuple[int, int]]) -> Element:
    return U.normal_order(word)


def multiply(a: Element, b: Element) -> Element:
    if a.parent != b.parent:
        raise ValueError("dims mismatch")
    return a * b


def linear_combine(pairs: Iterable[tuple]) -> Element:
    pairs = list(pairs)
    if not pairs:
        raise ValueError("linear_combine needs at least one term to know the algebra")
    parent = pairs[0][1].parent
    acc = parent.zero()
    for c, a in pairs:
        acc = acc + a * c
    return acc


def super_bracket(x: Element, y: Element) -> Element:
    """Graded commutator of arbitrary elements of U(gl(m|n)), extended bilinearly."""
    U = x.parent
    acc = U.zero()
    for mx, cx in x.terms.items():
        px = U.element_parity(mx)
        ex = Element(U, {mx: cx})
        for my, cy in y.terms.items():
            py = U.element_parity(my)
            ey = Element(U, {my: cy})
            acc = acc + ex * ey - (ey * ex) * ((-1) ** (px * py))
    return acc


def renormalize(z: Element) -> Element:
    """Re-expand every monomial of z as a word and straighten it again."""
    U = z.parent
    acc = U.zero()
    for mono, c in z.terms.items():
        acc = acc + U.normal_order(U.word_of(mono)) * c
    return acc

"""Truncated power series in t over a (noncommutative) coefficient ring.

Coefficients are any ring elements supporting ``+``, ``*``, scalar
multiplication, truthiness for zero and ``as_scalar()``; in practice
:class:`glmn.algebra.Element` or :class:`glmn.polynomial.WeightPolynomial`.
Products keep the left-to-right order of factors.
"""

from __future__ import annotations

from fractions import Fraction


class SeriesError(ArithmeticError):
    pass


class TruncSeries:
    """c_0 + c_1 t + ... + c_K t^K modulo t^{K+1}."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int):
        coeffs = list(coeffs)
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if not coeffs:
            raise ValueError("need at least the constant coefficient")
        zero = coeffs[0] * 0
        coeffs = coeffs[: order + 1]
        coeffs += [zero] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def constant(cls, c, order: int) -> "TruncSeries":
        return cls([c], order)

    @property
    def ring_zero(self):
        return self.coeffs[0] * 0

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return TruncSeries(self.coeffs[: order + 1], order)

    def _same_order(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries.constant(self.coeffs[0] * 0 + other, self.order)
        if other.order != self.order:
            raise SeriesError(f"order mismatch: {self.order} vs {other.order}")
        return other

    def __add__(self, other):
        other = self._same_order(other)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._same_order(other))

    def __rsub__(self, other):
        return self._same_order(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries([a * other for a in self.coeffs], self.order)
        other = self._same_order(other)
        K = self.order
        out = [self.ring_zero for _ in range(K + 1)]
        for p, a in enumerate(self.coeffs):
            if not a:
                continue
            for q in range(K + 1 - p):
                b = other.coeffs[q]
                if b:
                    out[p + q] = out[p + q] + a * b
        return TruncSeries(out, K)

    def __rmul__(self, other):
        # only scalars reach here
        return TruncSeries([other * a for a in self.coeffs], self.order)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.order, tuple(hash(c) for c in self.coeffs)))

    def substitute_neg(self) -> "TruncSeries":
        """a(-t)."""
        return TruncSeries([c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)], self.order)

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            s = str(c)
            if k == 0:
                parts.append(s if " + " not in s else f"({s})")
            else:
                parts.append(f"({s})*t" + (f"^{k}" if k > 1 else ""))
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"TruncSeries({self}, order={self.order})"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [c.to_json() for c in self.coeffs]}


def series_arith(a: TruncSeries, b: TruncSeries, kind: str) -> TruncSeries:
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown series operation {kind!r}")


def geometric_sum(u: TruncSeries) -> TruncSeries:
    """sum_{k>=0} u^k for u with zero constant term."""
    one = TruncSeries.constant(u.ring_zero + 1, u.order)
    total = one
    power = one
    for _ in range(u.order):
        power = power * u
        total = total + power
    return total


def series_invert(a: TruncSeries) -> TruncSeries:
    s = a.coeffs[0].as_scalar()
    if s is None or s == 0:
        raise SeriesError("constant term is not an invertible scalar")
    inv_s = 1 / Fraction(s)
    # a = s(1 - u)
    u = TruncSeries.constant(a.ring_zero + 1, a.order) - a * inv_s
    return geometric_sum(u) * inv_s


def series_diff(a: TruncSeries) -> TruncSeries:
    coeffs = [a.coeffs[k + 1] * (k + 1) for k in range(a.order)]
    coeffs.append(a.ring_zero)
    return TruncSeries(coeffs, a.order)


def series_log(a: TruncSeries) -> TruncSeries:
    c0 = a.coeffs[0].as_scalar()
    if c0 != 1:
        raise SeriesError("log needs constant term 1")
    s = a - TruncSeries.constant(a.ring_zero + 1, a.order)
    total = TruncSeries.constant(a.ring_zero, a.order)
    power = TruncSeries.constant(a.ring_zero + 1, a.order)
    for j in range(1, a.order + 1):
        power = power * s
        total = total + power * Fraction((-1) ** (j - 1), j)
    return total


class SeriesMatrix:
    """Square matrix of TruncSeries sharing one truncation order."""

    __slots__ = ("entries", "order")

    def __init__(self, entries, order: int | None = None):
        rows = [list(r) for r in entries]
        l = len(rows)
        if l == 0 or any(len(r) != l for r in rows):
            raise ValueError("series matrix must be square and nonempty")
        K = rows[0][0].order if order is None else order
        if any(e.order != K for r in rows for e in r):
            raise SeriesError("entries must share one truncation order")
        self.entries = rows
        self.order = K

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def from_linear(cls, const, lin, order: int) -> "SeriesMatrix":
        """Matrix with entries const[i][j] + lin[i][j] * t (ring elements)."""
        l = len(lin)
        return cls(
            [[TruncSeries([const[i][j], lin[i][j]], order) for j in range(l)] for i in range(l)],
            order,
        )

    @classmethod
    def identity_plus_t(cls, A, order: int, sign: int = 1) -> "SeriesMatrix":
        """1 + sign * t * A for a square matrix A of ring elements."""
        l = len(A)
        zero = A[0][0] * 0
        const = [[zero + (1 if i == j else 0) for j in range(l)] for i in range(l)]
        lin = [[A[i][j] * sign for j in range(l)] for i in range(l)]
        return cls.from_linear(const, lin, order)

    def identity_like(self) -> "SeriesMatrix":
        zero = self.entries[0][0].ring_zero
        l = self.size
        return SeriesMatrix(
            [[TruncSeries.constant(zero + (1 if i == j else 0), self.order) for j in range(l)] for i in range(l)],
            self.order,
        )

    def __add__(self, other):
        return SeriesMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)], self.order
        )

    def __sub__(self, other):
        return SeriesMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)], self.order
        )

    def __mul__(self, other):
        l = self.size
        out = []
        for i in range(l):
            row = []
            for j in range(l):
                acc = TruncSeries.constant(self.entries[0][0].ring_zero, self.order)
                for k in range(l):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return SeriesMatrix(out, self.order)

    def __eq__(self, other):
        if not isinstance(other, SeriesMatrix):
            return NotImplemented
        return self.order == other.order and self.entries == other.entries

    def constant_is_identity(self) -> bool:
        l = self.size
        return all(
            self.entries[i][j].coeffs[0].as_scalar() == (1 if i == j else 0) for i in range(l) for j in range(l)
        )


def matrix_invert(M: SeriesMatrix) -> SeriesMatrix:
    """Two-sided inverse of M = I + tN by the Neumann series sum (I - M)^k."""
    if not M.constant_is_identity():
        raise SeriesError("constant term of the matrix is not the identity")
    I = M.identity_like()
    U = I - M
    total = I
    power = I
    for _ in range(M.order):
        power = power * U
        total = total + power
    return total


def quasideterminant(X: SeriesMatrix, i: int, j: int) -> TruncSeries:
    """|X|_ij = ((X^{-1})_ji)^{-1}; indices are 1-based."""
    l = X.size
    if not (1 <= i <= l and 1 <= j <= l):
        raise IndexError(f"quasideterminant index ({i},{j}) out of range for size {l}")
    inv = matrix_invert(X)
    try:
        return series_invert(inv.entries[j - 1][i - 1])
    except SeriesError as exc:
        raise SeriesError(f"quasideterminant |X|_{i}{j} is undefined: {exc}") from None

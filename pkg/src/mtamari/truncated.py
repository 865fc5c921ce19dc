"""
Truncated power series in one variable over an exact coefficient ring.

Coefficients may be :class:`fractions.Fraction`, plain ``int`` or elements of
a sympy sparse polynomial ring (``sympy.polys.rings``).  A series of order
``N`` stores the coefficients of ``T^0 .. T^N``; every operation keeps the
smaller order of its operands.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence


def _unit_inverse(c):
    if hasattr(c, "ring"):
        if not c.is_ground or c.is_zero:
            raise ZeroDivisionError(f"constant term {c} is not a unit")
        return c.ring.ground_new(c.ring.domain.quo(c.ring.domain.one, c.LC))
    if c == 0:
        raise ZeroDivisionError("constant term is zero")
    return Fraction(1) / c


class TruncatedSeries:
    __slots__ = ("coeffs", "zero")

    def __init__(self, coeffs: Sequence, order: int | None = None, zero: Any = 0):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = coeffs[:order + 1]
        coeffs += [zero] * (order + 1 - len(coeffs))
        self.coeffs = coeffs
        self.zero = zero

    # -- construction ---------------------------------------------------------
    @classmethod
    def constant(cls, c, order: int, zero: Any = 0) -> "TruncatedSeries":
        return cls([c], order, zero)

    @classmethod
    def variable(cls, order: int, one: Any = 1, zero: Any = 0) -> "TruncatedSeries":
        return cls([zero, one], order, zero)

    def _like(self, coeffs) -> "TruncatedSeries":
        return TruncatedSeries(coeffs, None, self.zero)

    # -- accessors -----------------------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.zero

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.coeffs!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))

    __hash__ = None

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, min(order, self.order), self.zero)

    def map(self, f: Callable) -> "TruncatedSeries":
        return TruncatedSeries([f(c) for c in self.coeffs], None, f(self.zero))

    # -- arithmetic ------------------------------------------------------------
    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries([other], self.order, self.zero)

    def __add__(self, other):
        o = self._coerce(other)
        n = min(self.order, o.order)
        return self._like([self.coeffs[k] + o.coeffs[k] for k in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return self._like([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self._like([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = self.zero
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return self._like(out)

    def __rmul__(self, other):
        return self._like([other * c for c in self.coeffs])

    def shift(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by ``T^k``, keeping the order."""
        return self._like(([self.zero] * k + self.coeffs)[:len(self.coeffs)])

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be a unit."""
        inv0 = _unit_inverse(self.coeffs[0])
        a = self.coeffs
        out = [inv0]
        for k in range(1, len(a)):
            acc = self.zero
            for i in range(1, k + 1):
                if a[i]:
                    acc = acc + a[i] * out[k - i]
            out.append(-acc * inv0)
        return self._like(out)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return self * _unit_inverse(other)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self._one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def _one(self) -> "TruncatedSeries":
        one = self.zero + 1
        return TruncatedSeries([one], self.order, self.zero)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """``self(inner)`` for ``inner`` with zero constant term (Horner)."""
        if inner.coeffs[0]:
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        acc = TruncatedSeries([self.coeffs[n]], n, inner.zero)
        for k in range(n - 1, -1, -1):
            acc = acc * inner + self.coeffs[k]
        return acc


def geometric(c, order: int, zero: Any = 0, one: Any = 1) -> TruncatedSeries:
    """``1/(1 - c T)`` truncated at ``order``."""
    out, p = [], one
    for _ in range(order + 1):
        out.append(p)
        p = p * c
    return TruncatedSeries(out, order, zero)


def from_terms(terms: Iterable[tuple[int, Any]], order: int, zero: Any = 0) -> TruncatedSeries:
    coeffs = [zero] * (order + 1)
    for k, c in terms:
        if k <= order:
            coeffs[k] = coeffs[k] + c
    return TruncatedSeries(coeffs, order, zero)

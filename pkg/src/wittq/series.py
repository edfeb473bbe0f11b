"""Truncated t-adic series with Element coefficients (characteristic 0).

A Series of order N stores coefficients for t^0 .. t^N and silently discards
anything beyond t^N, so every identity checked through this class is an
identity "up to t^{N+1}".  Coefficients are rank-homogeneous Elements; the
ring is noncommutative, and inversion uses the unit-leading-term recursion.
"""

from __future__ import annotations

from fractions import Fraction

from .uwitt import Element


class Series:
    __slots__ = ("order", "rank", "coeffs")

    def __init__(self, order: int, rank: int, coeffs=()):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.order = order
        self.rank = rank
        cs = list(coeffs)[: order + 1]
        for c in cs:
            if c.rank != rank:
                raise ValueError("coefficient rank mismatch")
        while len(cs) < order + 1:
            cs.append(Element.zero(rank))
        self.coeffs = tuple(cs)

    @staticmethod
    def zero(order: int, rank: int = 1) -> "Series":
        return Series(order, rank)

    @staticmethod
    def one(order: int, rank: int = 1) -> "Series":
        return Series(order, rank, [Element.one(rank)])

    @staticmethod
    def const(x: Element, order: int) -> "Series":
        return Series(order, x.rank, [x])

    def coeff(self, n: int) -> Element:
        return self.coeffs[n] if 0 <= n <= self.order else Element.zero(self.rank)

    def __add__(self, other):
        other = self._promote(other)
        n = min(self.order, other.order)
        return Series(n, self.rank, [self.coeffs[d] + other.coeffs[d] for d in range(n + 1)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Series(self.order, self.rank, [-c for c in self.coeffs])

    def _promote(self, other) -> "Series":
        if isinstance(other, Series):
            if other.rank != self.rank:
                raise ValueError("rank mismatch")
            return other
        if isinstance(other, Element):
            return Series.const(other, self.order)
        if isinstance(other, (int, Fraction)):
            return Series.const(Element.one(self.rank) * other, self.order)
        raise TypeError(f"cannot combine Series with {type(other)!r}")

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series(self.order, self.rank, [c * other for c in self.coeffs])
        other = self._promote(other)
        n = min(self.order, other.order)
        out = []
        for d in range(n + 1):
            acc = Element.zero(self.rank)
            for j in range(d + 1):
                a, b = self.coeffs[j], other.coeffs[d - j]
                if a.terms and b.terms:
                    acc = acc + a * b
            out.append(acc)
        return Series(n, self.rank, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        if isinstance(other, Element):
            return Series.const(other, self.order) * self
        return NotImplemented

    def shift(self, d: int) -> "Series":
        """Multiply by t^d."""
        return Series(self.order, self.rank, [Element.zero(self.rank)] * d + list(self.coeffs))

    def invert(self) -> "Series":
        """Two-sided inverse of a series with leading coefficient 1."""
        if self.coeffs[0] != Element.one(self.rank):
            raise ValueError("leading coefficient must be the unit")
        inv = [Element.one(self.rank)]
        for n in range(1, self.order + 1):
            acc = Element.zero(self.rank)
            for j in range(1, n + 1):
                if self.coeffs[j].terms and inv[n - j].terms:
                    acc = acc + self.coeffs[j] * inv[n - j]
            inv.append(-acc)
        return Series(self.order, self.rank, inv)

    def swap(self) -> "Series":
        return Series(self.order, self.rank, [c.swap() for c in self.coeffs])

    def truncate(self, order: int) -> "Series":
        return Series(order, self.rank, self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self.order == other.order
            and self.rank == other.rank
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __hash__(self):
        return hash((self.order, self.rank, self.coeffs))

    def __str__(self):
        lines = [f"t^{d}: {c}" for d, c in enumerate(self.coeffs) if c.terms]
        return "\n".join(lines) if lines else "0"

    __repr__ = __str__


def first_mismatch(a: Series, b: Series) -> str | None:
    """Human-readable first differing coefficient, or None if equal."""
    n = min(a.order, b.order)
    for d in range(n + 1):
        ca, cb = a.coeffs[d], b.coeffs[d]
        if ca != cb:
            keys = sorted(set(ca.terms) | set(cb.terms))
            for key in keys:
                va, vb = ca.coeff(key), cb.coeff(key)
                if va != vb:
                    return f"t^{d} at {key}: {va} != {vb}"
    return None

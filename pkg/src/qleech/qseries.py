"""Exact truncated Laurent series in the nome q, with integer coefficients.

A series is a finite window of coefficients: everything from q^valuation up
to (but excluding) q^order is known exactly, everything at q^order and beyond
is unknown.  Coefficients are plain Python ints, so all arithmetic here is
exact.  Asking for a coefficient at or past the truncation order raises
instead of silently returning zero; that silent zero is the classic source
of wrong q-expansion identities.

Truncation orders propagate pessimistically but tightly:

    add:  order = min(a.order, b.order)
    mul:  order = min(a.order + b.valuation, b.order + a.valuation)
    inv:  valuation = -v, order = a.order - 2 v      (unit leading coeff)

so a product of series each correct to N relative terms is again correct to
N relative terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class TruncationError(LookupError):
    """A coefficient at or beyond the truncation order was requested."""


class NonUnitError(ValueError):
    """Inversion needs a leading coefficient of +1 or -1 over the integers."""


@dataclass(frozen=True)
class LaurentSeries:
    """Truncation of sum_m c_m q^m, known exactly for valuation <= m < order.

    Invariants: for a nonzero series, coeffs[0] != 0 (the valuation is tight)
    and len(coeffs) == order - valuation.  The zero series is the single
    distinguished shape with coeffs == () and valuation == order; its order
    still records how far the series is known to vanish.
    """

    valuation: int
    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.order - self.valuation:
            raise ValueError("coefficient window does not match order - valuation")
        if self.coeffs:
            if self.coeffs[0] == 0:
                raise ValueError("valuation is not tight")
            if not all(isinstance(c, int) for c in self.coeffs):
                raise ValueError("coefficients must be integers")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_coeffs(
        cls, valuation: int, coeffs: Sequence[int], order: int | None = None
    ) -> "LaurentSeries":
        """Build a series from the window starting at q^valuation.

        Leading zeros are stripped (tightening the valuation); an all-zero
        window yields the zero series at the same order.
        """
        coeffs = tuple(int(c) for c in coeffs)
        if order is None:
            order = valuation + len(coeffs)
        elif order != valuation + len(coeffs):
            raise ValueError("order must equal valuation + len(coeffs)")
        k = 0
        while k < len(coeffs) and coeffs[k] == 0:
            k += 1
        if k == len(coeffs):
            return cls(order, order, ())
        return cls(valuation + k, order, coeffs[k:])

    @classmethod
    def zero(cls, order: int) -> "LaurentSeries":
        """The zero series, known to vanish below q^order."""
        return cls(order, order, ())

    @classmethod
    def one(cls, order: int) -> "LaurentSeries":
        """The constant 1, known modulo q^order."""
        if order <= 0:
            # below q^0 the constant term is already out of the window
            return cls.zero(order)
        return cls(0, order, (1,) + (0,) * (order - 1))

    @classmethod
    def monomial(cls, exponent: int, order: int, coefficient: int = 1) -> "LaurentSeries":
        """coefficient * q^exponent, known modulo q^order."""
        if coefficient == 0:
            return cls.zero(order)
        if order <= exponent:
            return cls.zero(order)
        return cls(exponent, order, (coefficient,) + (0,) * (order - exponent - 1))

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, m: int) -> int:
        """Coefficient of q^m.  Raises TruncationError for m >= order."""
        if m >= self.order:
            raise TruncationError(
                f"coefficient of q^{m} requested but series is truncated at q^{self.order}"
            )
        if m < self.valuation:
            return 0
        return self.coeffs[m - self.valuation]

    def coefficients(self) -> dict[int, int]:
        """All known coefficients, keyed by exponent, in ascending order."""
        return {self.valuation + k: c for k, c in enumerate(self.coeffs)}

    # -- ring operations ----------------------------------------------------

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.valuation, self.order, tuple(-c for c in self.coeffs))

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        order = min(self.order, other.order)
        if self.is_zero and other.is_zero:
            return LaurentSeries.zero(order)
        val = min(self.valuation, other.valuation, order)
        out = [0] * (order - val)
        for src in (self, other):
            base = src.valuation - val
            for k, c in enumerate(src.coeffs):
                if src.valuation + k >= order:
                    break
                out[base + k] += c
        return LaurentSeries.from_coeffs(val, out, order)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._scale(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        # a zero factor: its order acts as the valuation bound, so the
        # product is known to vanish to order zero.order + other.valuation
        if self.is_zero or other.is_zero:
            a_val = self.order if self.is_zero else self.valuation
            b_val = other.order if other.is_zero else other.valuation
            return LaurentSeries.zero(min(self.order + b_val, other.order + a_val))
        order = min(self.order + other.valuation, other.order + self.valuation)
        val = self.valuation + other.valuation
        n = order - val  # equals min of the two relative precisions
        out = [0] * n
        a, b = self.coeffs, other.coeffs
        for i in range(min(n, len(a))):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(min(n - i, len(b))):
                out[i + j] += ai * b[j]
        # leading term a0*b0 is nonzero over the integers, no re-tightening
        return LaurentSeries(val, order, tuple(out))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self._scale(other)
        return NotImplemented

    def _scale(self, c: int) -> "LaurentSeries":
        if c == 0:
            return LaurentSeries.zero(self.order)
        return LaurentSeries(self.valuation, self.order, tuple(c * a for a in self.coeffs))

    def __pow__(self, k: int) -> "LaurentSeries":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("negative powers are spelled invert() then pow")
        if k == 0:
            # empty product: the constant 1 at the base's relative precision
            if self.is_zero:
                return LaurentSeries.one(max(self.order, 1))
            return LaurentSeries.one(max(self.order - self.valuation, 1))
        # binary powering without an identity seed keeps truncation orders
        # identical to repeated multiplication
        result: LaurentSeries | None = None
        square = self
        e = k
        while True:
            if e & 1:
                result = square if result is None else result * square
            e >>= 1
            if e == 0:
                break
            square = square * square
        assert result is not None
        return result

    def invert(self) -> "LaurentSeries":
        """Multiplicative inverse; requires leading coefficient +-1.

        The result has valuation -v and order reduced by 2v, so that
        self * self.invert() is 1 at the original relative precision.
        """
        if self.is_zero:
            raise NonUnitError("the zero series has no inverse")
        lead = self.coeffs[0]
        if lead not in (1, -1):
            raise NonUnitError(f"non-unit leading coefficient {lead}")
        n = self.order - self.valuation
        u = self.coeffs
        w = [0] * n
        w[0] = lead
        for m in range(1, n):
            acc = 0
            for k in range(1, m + 1):
                if u[k]:
                    acc += u[k] * w[m - k]
            w[m] = -lead * acc
        return LaurentSeries(-self.valuation, self.order - 2 * self.valuation, tuple(w))

    # -- reshaping -----------------------------------------------------------

    def truncate(self, order: int) -> "LaurentSeries":
        """Forget coefficients at q^order and beyond.  Cannot extend."""
        if order > self.order:
            raise TruncationError(
                f"cannot extend truncation from q^{self.order} to q^{order}"
            )
        if order == self.order:
            return self
        if self.is_zero or order <= self.valuation:
            return LaurentSeries.zero(order)
        return LaurentSeries(self.valuation, order, self.coeffs[: order - self.valuation])

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by q^k (exact, shifts the whole window)."""
        return LaurentSeries(self.valuation + k, self.order + k, self.coeffs)

    # -- display -----------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return f"O(q^{self.order})"
        parts = []
        shown = 0
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            m = self.valuation + k
            if m == 0:
                term = f"{c}"
            elif m == 1:
                term = f"{c}*q"
            else:
                term = f"{c}*q^{m}"
            parts.append(term)
            shown += 1
            if shown == 6:
                parts.append("...")
                break
        parts.append(f"O(q^{self.order})")
        return " + ".join(parts)


def euler_product(order: int) -> LaurentSeries:
    """prod_{n>=1} (1 - q^n) as a power series modulo q^order.

    Direct expansion: factors with n >= order do not touch the window, so
    the product over n < order is already exact to this order.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    out = [0] * order
    out[0] = 1
    for n in range(1, order):
        # multiply by (1 - q^n) in place, descending to reuse old values
        for m in range(order - 1, n - 1, -1):
            out[m] -= out[m - n]
    return LaurentSeries.from_coeffs(0, out, order)


def euler_product_pentagonal(order: int) -> LaurentSeries:
    """Same product via the pentagonal number expansion.

    prod (1 - q^n) = sum_{k in Z} (-1)^k q^{k(3k-1)/2}; only O(sqrt(order))
    terms land inside the window, so this route is effectively free and is
    arithmetically independent of the term-by-term product.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    out = [0] * order
    k = 0
    while True:
        hit = False
        for kk in (k, -k) if k else (0,):
            e = kk * (3 * kk - 1) // 2
            if e < order:
                out[e] += -1 if kk % 2 else 1
                hit = True
        if not hit:
            break
        k += 1
    return LaurentSeries.from_coeffs(0, out, order)

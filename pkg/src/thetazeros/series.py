"""Exact truncated power-series and Laurent-series arithmetic over the integers.

IntSeries stores the coefficients of a formal power series in q modulo
q^(order+1) as arbitrary-precision Python ints.  Truncation is explicit and
sticky: the order of any arithmetic result is the minimum of the operands'
orders, so a value never claims coefficients it has not earned.

LaurentSeries attaches an integer valuation to an IntSeries body, allowing
finitely many negative powers of q.  Coefficients below the valuation are
exactly zero, coefficients inside the window [valuation, top] are known, and
asking for anything above the window raises InsufficientOrderError.

All values are immutable after construction and every operation is a pure
function, so series can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass


class NonInvertibleError(ValueError):
    """The constant term is not +1 or -1, so no integer-coefficient inverse exists."""


class InsufficientOrderError(ValueError):
    """A coefficient beyond the reliable truncation window was requested."""


def convolve_truncated(a, b, order):
    """Schoolbook product of two coefficient lists, truncated at ``order``.

    The outer loop runs over the operand with fewer nonzero entries, which
    makes products against sparse series (Euler products, the signed
    odd-number series) cheap without changing the worst-case O(n^2)
    algorithm.
    """
    if sum(1 for c in a if c) > sum(1 for c in b if c):
        a, b = b, a
    out = [0] * (order + 1)
    top_b = len(b) - 1
    for i, ai in enumerate(a):
        if i > order:
            break
        if not ai:
            continue
        hi = min(top_b, order - i)
        for k in range(hi + 1):
            bk = b[k]
            if bk:
                out[i + k] += ai * bk
    return out


@dataclass(frozen=True)
class IntSeries:
    """A power series known modulo q^(order+1); coeffs[k] holds the q^k coefficient."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least its constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        """Coefficient of q^k; negative k gives 0, k beyond the order raises."""
        if k < 0:
            return 0
        if k > self.order:
            raise InsufficientOrderError(
                f"coefficient of q^{k} lies beyond truncation order {self.order}"
            )
        return self.coeffs[k]

    def truncate(self, order: int) -> "IntSeries":
        """Drop coefficients above ``order``.  Raising the order is not possible."""
        if order < 0:
            raise ValueError("order must be non-negative")
        if order > self.order:
            raise InsufficientOrderError(
                f"cannot extend a series of order {self.order} to order {order}"
            )
        return IntSeries(self.coeffs[: order + 1])

    def __add__(self, other: "IntSeries") -> "IntSeries":
        n = min(self.order, other.order)
        return IntSeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1)))

    def __sub__(self, other: "IntSeries") -> "IntSeries":
        n = min(self.order, other.order)
        return IntSeries(tuple(self.coeffs[k] - other.coeffs[k] for k in range(n + 1)))

    def __neg__(self) -> "IntSeries":
        return IntSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "IntSeries") -> "IntSeries":
        """Exact Cauchy product truncated to the smaller of the two orders."""
        n = min(self.order, other.order)
        return IntSeries(tuple(convolve_truncated(self.coeffs, other.coeffs, n)))

    def __pow__(self, n: int) -> "IntSeries":
        """Repeated product, truncated to this series' order; n = 0 gives 1."""
        if n < 0:
            raise ValueError("negative powers need inverse() first")
        result = one(self.order)
        for _ in range(n):
            result = result * self
        return result

    def inverse(self) -> "IntSeries":
        """Multiplicative inverse through the same order.

        Requires a unit constant term (+1 or -1) so that all coefficients of
        the inverse stay integral.  The back-substitution skips zero
        coefficients of the input, so inverting sparse series costs
        O(order * nonzeros).
        """
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise NonInvertibleError(
                f"constant term {c0} is not a unit in the integer coefficient ring"
            )
        n = self.order
        support = [(k, ck) for k, ck in enumerate(self.coeffs) if k and ck]
        b = [0] * (n + 1)
        b[0] = c0
        for m in range(1, n + 1):
            acc = 0
            for k, ck in support:
                if k > m:
                    break
                acc += ck * b[m - k]
            b[m] = -c0 * acc
        return IntSeries(tuple(b))

    def __str__(self) -> str:
        return _format_terms(enumerate(self.coeffs)) + f" + O(q^{self.order + 1})"


def make_series(coeffs) -> IntSeries:
    """Build an IntSeries from a non-empty list of ints; order = len - 1."""
    coeffs = list(coeffs)
    if not coeffs:
        raise ValueError("empty coefficient list")
    for c in coeffs:
        if not isinstance(c, int):
            raise TypeError(f"coefficients must be exact ints, got {type(c).__name__}")
    return IntSeries(tuple(coeffs))


def one(order: int) -> IntSeries:
    """The constant series 1 carried at the given truncation order."""
    if order < 0:
        raise ValueError("order must be non-negative")
    return IntSeries((1,) + (0,) * order)


def euler_product(order: int) -> IntSeries:
    """prod_{k=1}^{order} (1 - q^k), truncated at ``order``.

    Factors with k > order cannot change any retained coefficient, so this
    equals the infinite product through q^order.  The expansion is the
    familiar signed pentagonal-number series, hence very sparse.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    c = [0] * (order + 1)
    c[0] = 1
    for k in range(1, order + 1):
        for i in range(order, k - 1, -1):
            ci = c[i - k]
            if ci:
                c[i] -= ci
    return IntSeries(tuple(c))


@dataclass(frozen=True)
class LaurentSeries:
    """The series q^valuation * body, reliable on degrees [valuation, top].

    Degrees below the valuation are exactly zero.  Addition and
    multiplication propagate the reliable window pessimistically (the
    windows of well-formed operands always overlap), and ``coeff_at``
    raises InsufficientOrderError above the window.
    """

    valuation: int
    body: IntSeries

    @classmethod
    def from_coeffs(cls, valuation: int, coeffs) -> "LaurentSeries":
        return cls(valuation, make_series(coeffs))

    @property
    def top(self) -> int:
        return self.valuation + self.body.order

    def coeff_at(self, degree: int) -> int:
        if degree < self.valuation:
            return 0
        if degree > self.top:
            raise InsufficientOrderError(
                f"coefficient of q^{degree} lies above the reliable window "
                f"[{self.valuation}, {self.top}]"
            )
        return self.body.coeffs[degree - self.valuation]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.body.coeffs)

    def first_nonzero(self):
        """(degree, coefficient) of the lowest nonzero term, or None."""
        for i, c in enumerate(self.body.coeffs):
            if c:
                return self.valuation + i, c
        return None

    def normalize(self) -> "LaurentSeries":
        """Strip leading zeros so the body starts with a nonzero coefficient.

        The zero series is returned unchanged.
        """
        fz = self.first_nonzero()
        if fz is None or fz[0] == self.valuation:
            return self
        drop = fz[0] - self.valuation
        return LaurentSeries(fz[0], IntSeries(self.body.coeffs[drop:]))

    def shift(self, offset: int) -> "LaurentSeries":
        """Multiply by q^offset (valuations add, window slides)."""
        return LaurentSeries(self.valuation + offset, self.body)

    def truncate_top(self, new_top: int) -> "LaurentSeries":
        if new_top > self.top:
            raise InsufficientOrderError(
                f"cannot extend window top {self.top} to {new_top}"
            )
        if new_top < self.valuation:
            raise InsufficientOrderError("truncation would leave an empty window")
        return LaurentSeries(self.valuation, self.body.truncate(new_top - self.valuation))

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.valuation, -self.body)

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        v = min(self.valuation, other.valuation)
        t = min(self.top, other.top)
        if t < v:
            raise InsufficientOrderError("truncation windows have empty intersection")
        out = [0] * (t - v + 1)
        for term in (self, other):
            lo = max(term.valuation, v)
            hi = min(term.top, t)
            for d in range(lo, hi + 1):
                out[d - v] += term.body.coeffs[d - term.valuation]
        return LaurentSeries.from_coeffs(v, out)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        """Valuations add; the window top is the smaller of the two cross tops."""
        v = self.valuation + other.valuation
        t = min(self.valuation + other.top, other.valuation + self.top)
        if t < v:
            raise InsufficientOrderError("truncation windows have empty intersection")
        out = convolve_truncated(self.body.coeffs, other.body.coeffs, t - v)
        return LaurentSeries.from_coeffs(v, out)

    def __str__(self) -> str:
        pairs = ((self.valuation + i, c) for i, c in enumerate(self.body.coeffs))
        return _format_terms(pairs) + f" + O(q^{self.top + 1})"


def _format_terms(pairs, max_terms: int = 10) -> str:
    shown = []
    for degree, c in pairs:
        if not c:
            continue
        if len(shown) == max_terms:
            shown.append("...")
            break
        mag = abs(c)
        if degree == 0:
            body = str(mag)
        else:
            head = "q" if mag == 1 else f"{mag}*q"
            body = head if degree == 1 else f"{head}^{degree}"
        sign = "-" if c < 0 else "+"
        shown.append(f"{sign} {body}" if shown else (f"-{body}" if c < 0 else body))
    return " ".join(shown) if shown else "0"

"""Exact univariate and bivariate polynomials over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import InvalidInput


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _render_coeff_term(c: Fraction, monomial: str, first: bool) -> str:
    sign = "-" if c < 0 else "+"
    mag = -c if c < 0 else c
    if monomial and mag == 1:
        body = monomial
    elif monomial:
        body = f"{mag}*{monomial}"
    else:
        body = str(mag)
    if first:
        return body if sign == "+" else f"-{body}"
    return f" {sign} {body}"


def _render_power(var: str, n: int) -> str:
    if n == 0:
        return ""
    return var if n == 1 else f"{var}^{n}"


class Polynomial:
    """Univariate polynomial, coefficients ascending by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls([c])

    @classmethod
    def variable(cls) -> Polynomial:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    evaluate = __call__

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Polynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def compose_negate(self) -> Polynomial:
        """p(-x)."""
        return Polynomial(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def int_coeffs(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"non-integral coefficients in {self}")
        return tuple(int(c) for c in self.coeffs)

    def render(self, var: str = "k") -> str:
        """Ascending monomials, e.g. ``2 - 3*k + k^2``."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(_render_coeff_term(c, _render_power(var, i), not parts))
        return "".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Polynomial({self.render()})"


def interpolate(points: Iterable[tuple[int, object]]) -> Polynomial:
    """Unique polynomial of degree < len(points) through ``points`` (Newton form)."""
    pts = [(_frac(x), _frac(y)) for x, y in points]
    if not pts:
        raise InvalidInput("interpolation needs at least one point")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise InvalidInput("duplicate abscissa")
    # divided differences, in place
    coef = [y for _, y in pts]
    n = len(pts)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    result = Polynomial([coef[-1]])
    for i in range(n - 2, -1, -1):
        result = result * Polynomial([-xs[i], 1]) + coef[i]
    return result


def evaluate(p: Polynomial, k) -> Fraction:
    return p(k)


class BivariatePolynomial:
    """Integer polynomial in x, y stored as ``{(i, j): coefficient}`` for x^i y^j."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms: dict[tuple[int, int], int] = {
            k: v for k, v in (terms or {}).items() if v
        }

    @classmethod
    def one(cls) -> BivariatePolynomial:
        return cls({(0, 0): 1})

    @classmethod
    def x(cls) -> BivariatePolynomial:
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> BivariatePolynomial:
        return cls({(0, 1): 1})

    def __add__(self, other: BivariatePolynomial) -> BivariatePolynomial:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BivariatePolynomial(out)

    def __mul__(self, other: BivariatePolynomial) -> BivariatePolynomial:
        out: dict[tuple[int, int], int] = {}
        for (i, j), a in self.terms.items():
            for (p, q), b in other.terms.items():
                key = (i + p, j + q)
                out[key] = out.get(key, 0) + a * b
        return BivariatePolynomial(out)

    def __eq__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __call__(self, x, y) -> Fraction:
        x, y = _frac(x), _frac(y)
        return sum((c * x**i * y**j for (i, j), c in self.terms.items()), Fraction(0))

    def render(self) -> str:
        """Graded ascending, higher x-power first within a degree: ``x + y + y^2``."""
        if not self.terms:
            return "0"
        parts = []
        for i, j in sorted(self.terms, key=lambda ij: (ij[0] + ij[1], -ij[0])):
            mono = "*".join(p for p in (_render_power("x", i), _render_power("y", j)) if p)
            parts.append(_render_coeff_term(Fraction(self.terms[(i, j)]), mono, not parts))
        return "".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"BivariatePolynomial({self.render()})"


def bivariate_eval(t: BivariatePolynomial, x, y) -> Fraction:
    return t(x, y)

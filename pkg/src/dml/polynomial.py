"""Univariate polynomials with exact rational coefficients."""

from dataclasses import dataclass

from .exact import as_rational, format_rational, mpq


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial stored by ascending coefficients.

    Trailing zeros are stripped on construction, so ``degree`` is honest and
    the zero polynomial has an empty coefficient tuple.
    """

    coefficients: tuple

    def __post_init__(self):
        coeffs = [as_rational(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self):
        return self.coefficients[-1] if self.coefficients else mpq(0)

    def __call__(self, x):
        x = as_rational(x)
        acc = mpq(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __len__(self):
        return len(self.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i] if i < len(self.coefficients) else mpq(0)

    def __add__(self, other):
        n = max(len(self), len(other))
        return RationalPolynomial(tuple(self[i] + other[i] for i in range(n)))

    def __sub__(self, other):
        n = max(len(self), len(other))
        return RationalPolynomial(tuple(self[i] - other[i] for i in range(n)))

    def __mul__(self, other):
        if not isinstance(other, RationalPolynomial):
            c = as_rational(other)
            return RationalPolynomial(tuple(a * c for a in self.coefficients))
        if not self.coefficients or not other.coefficients:
            return RationalPolynomial(())
        out = [mpq(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return RationalPolynomial(tuple(out))

    __rmul__ = __mul__

    def derivative(self):
        return RationalPolynomial(tuple(i * c for i, c in enumerate(self.coefficients) if i))

    def antiderivative(self):
        return RationalPolynomial((mpq(0),) + tuple(c / (i + 1) for i, c in enumerate(self.coefficients)))

    def integer_coefficients(self) -> list:
        """Coefficients as Python ints; raises if any is non-integral."""
        out = []
        for c in self.coefficients:
            if c.denominator != 1:
                raise ValueError(f"coefficient {format_rational(c)} is not an integer")
            out.append(int(c.numerator))
        return out

    def __str__(self):
        terms = [f"({format_rational(c)})*k^{i}" for i, c in enumerate(self.coefficients) if c]
        return " + ".join(terms) if terms else "0"


def linear(a, b) -> RationalPolynomial:
    """The polynomial ``a + b k``."""
    return RationalPolynomial((a, b))


def interpolate(xs, ys) -> RationalPolynomial:
    """Exact Lagrange interpolation through the points ``(xs[i], ys[i])``.

    Newton divided differences are formed in rationals and expanded into
    the monomial basis.
    """
    xs = [as_rational(x) for x in xs]
    table = [as_rational(y) for y in ys]
    if len(xs) != len(table):
        raise ValueError("xs and ys differ in length")
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    n = len(xs)
    coef = list(table)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    # expand the Newton form, innermost first
    poly = RationalPolynomial((coef[-1],))
    for i in range(n - 2, -1, -1):
        poly = poly * linear(-xs[i], 1) + RationalPolynomial((coef[i],))
    return poly

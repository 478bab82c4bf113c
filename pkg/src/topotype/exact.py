"""Exact integer and rational arithmetic helpers.

Everything in this module is exact: integers are arbitrary precision,
rationals are ``fractions.Fraction``, and polynomial evaluation is Horner
over exact types.  No floating point anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the 0-for-out-of-range convention.

    Returns 0 when k < 0 or k > n, so degenerate cases of the counting
    formulas can be written uniformly.
    """
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multichoose(N: int, M: int) -> int:
    """Number of N-element multisets drawn from an M-element set."""
    return binomial(N + M - 1, N)


def euler_phi(d: int) -> int:
    """Euler totient of a positive integer."""
    if d < 1:
        raise ValueError("euler_phi requires a positive integer")
    result = d
    m = d
    q = 2
    while q * q <= m:
        if m % q == 0:
            while m % q == 0:
                m //= q
            result -= result // q
        q += 1
    if m > 1:
        result -= result // m
    return result


def divisors_greater_than_one(d: int) -> list[int]:
    """All divisors d' of d with d' > 1, ascending."""
    if d < 1:
        raise ValueError("need a positive integer")
    small, large = [], []
    q = 1
    while q * q <= d:
        if d % q == 0:
            small.append(q)
            if q != d // q:
                large.append(d // q)
        q += 1
    divs = small + large[::-1]
    return [x for x in sorted(divs) if x > 1]


def is_prime(n: int) -> bool:
    """Trial-division primality check (inputs here are small)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    q = 3
    while q * q <= n:
        if n % q == 0:
            return False
        q += 2
    return True


def exact_div(a: int, b: int) -> int:
    """Integer division that must be exact; inexactness is an internal bug."""
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"inexact division: {a} / {b}")
    return q


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense univariate polynomial, exact rational coefficients, index = degree."""

    coeffs: tuple

    def __post_init__(self):
        cs = tuple(Fraction(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial conventionally at -1."""
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def pretty(self, var: str = "p") -> str:
        """Render as an integer-coefficient polynomial over a common denominator."""
        if not self.coeffs:
            return "0"
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        terms = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power] * den
            assert c.denominator == 1
            c = c.numerator
            if c == 0:
                continue
            if power == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c)) + "*"
                body = f"{mag}{var}" + (f"^{power}" if power > 1 else "")
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        if den != 1:
            text = f"({text})/{den}"
        return text


def interpolate(points) -> RationalPolynomial:
    """Lagrange interpolation through exact points (x, y).

    Returns the unique polynomial of degree < len(points); raises if two
    abscissae coincide.
    """
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissa in interpolation input")
    n = len(points)
    acc = [Fraction(0)] * max(n, 1)
    for i in range(n):
        # numerator polynomial prod_{j != i} (x - x_j), built coefficient-wise
        num = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            num = _mul_linear(num, -xs[j])
            denom *= xs[i] - xs[j]
        scale = ys[i] / denom
        for k, c in enumerate(num):
            acc[k] += scale * c
    return RationalPolynomial(tuple(acc))


def _mul_linear(coeffs, c0):
    """Multiply a coefficient list by (x + c0)."""
    out = [Fraction(0)] * (len(coeffs) + 1)
    for k, c in enumerate(coeffs):
        out[k] += c * c0
        out[k + 1] += c
    return out


@dataclass(frozen=True)
class GaussianBinomial:
    """q-binomial [m+n, m]_q as its integer coefficient list t_0..t_{mn}.

    t_l is the number of partitions of l into at most m parts each of size
    at most n; the list is palindromic and sums to binomial(m+n, m).
    """

    m: int
    n: int
    coeffs: tuple

    def __call__(self, q: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc


def gaussian_binomial(m: int, n: int) -> GaussianBinomial:
    """Compute the q-binomial coefficient by the q-Pascal recurrence.

    G(m, n) = G(m-1, n) + q^m * G(m, n-1), with G(m, 0) = G(0, n) = 1.
    """
    if m < 0 or n < 0:
        raise ValueError("need nonnegative arguments")
    # table[j] holds the coefficient list of G(i, j) for the current row i
    table = [[1] for _ in range(n + 1)]
    for i in range(1, m + 1):
        new = [[1]]
        for j in range(1, n + 1):
            a = new[j - 1]  # G(i, j-1)
            b = table[j]  # G(i-1, j)
            out = [0] * (i * j + 1)
            for k, c in enumerate(b):
                out[k] += c
            for k, c in enumerate(a):
                out[k + i] += c
            new.append(out)
        table = new
    return GaussianBinomial(m, n, tuple(table[n]))

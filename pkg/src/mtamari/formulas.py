"""
Closed formulas for m-Tamari counts, in exact integer arithmetic.

Every division that should be exact is checked; a remainder raises
:class:`~mtamari.errors.NonIntegral`.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import NonIntegral, OutOfRange


def binomial(a: int, b: int) -> int:
    """Binomial coefficient with ``C(a, b) = 0`` for ``b < 0``.

    Negative ``a`` uses the polynomial extension
    ``a(a-1)...(a-b+1)/b! = (-1)^b C(b-a-1, b)``.
    """
    if b < 0:
        return 0
    if a >= 0:
        return comb(a, b)
    return (-1) ** b * comb(b - a - 1, b)


def _exact(num, den, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise NonIntegral(f"{what}: {num}/{den} is not an integer")
    return q


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise NonIntegral(f"{what}: {x} is not an integer")
    return x.numerator


def count_paths(m: int, n: int) -> int:
    """Fuss-Catalan number: m-ballot paths of size ``n``."""
    if m < 1 or n < 0:
        raise OutOfRange("need m >= 1 and n >= 0")
    return _exact(comb((m + 1) * n, n), m * n + 1, "count_paths")


def count_intervals(m: int, n: int) -> int:
    """Number of intervals of the m-Tamari lattice of size ``n``."""
    if m < 1 or n < 1:
        raise OutOfRange("need m >= 1 and n >= 1")
    num = (m + 1) * comb((m + 1) ** 2 * n + m, n - 1)
    return _exact(num, n * (m * n + 1), "count_intervals")


def pol_terms(m: int, n: int, i: int) -> tuple[Fraction, Fraction, Fraction]:
    """The three summands whose total is ``i(i-1) P_m(n, i)``.

    Order: the leading negative term, the sum over ``k = 1..m-2`` (empty,
    hence 0, when ``m <= 2``), and the trailing ``m!^2`` term.
    """
    mb = m + 1
    big = n * m * (m + 2) - i * m + 2 * m
    first = -(factorial(mb) * factorial(m - 1) * (n - i + 1)
              * binomial(i * mb, m) * binomial(big, m - 1))
    middle = 0
    for k in range(1, m - 1):
        middle += (k * factorial(k) ** 2 * factorial(m - k - 2) * factorial(m - k - 1)
                   * ((i + 1) * m * mb + 2 * mb + k) * (n - i) * (n - i + 1)
                   * binomial(i * mb - k - 1, m - k - 1) * binomial(i * m, k)
                   * binomial(n * mb ** 2 - i * mb + m + k, k)
                   * binomial(big, m - k - 2))
    top = n * mb ** 2 - i * mb + 2 * m
    last = factorial(m) ** 2 * binomial(i * m, m - 1) * (
        i * binomial(top, m)
        - Fraction((m - 1) * (i * mb + 2) * (n - i + 1), m) * binomial(top - 1, m - 1))
    return Fraction(first), Fraction(middle), Fraction(last)


def pol_times_i_im1(m: int, n: int, i: int) -> Fraction:
    return sum(pol_terms(m, n, i), Fraction(0))


def pol(m: int, n: int, i: int) -> int:
    """The polynomial ``P_m(n, i)``, for ``i >= 2``."""
    if i < 2:
        raise OutOfRange("P_m(n, i) is recovered by division only for i >= 2")
    total = _as_int(pol_times_i_im1(m, n, i), "i(i-1)P_m(n,i)")
    return _exact(total, i * (i - 1), "P_m(n,i)")


def count_by_contacts(m: int, n: int, i: int) -> int:
    """Intervals of size ``n`` whose lower path has ``i`` contacts."""
    if m < 1 or n < 1:
        raise OutOfRange("need m >= 1 and n >= 1")
    if not 2 <= i <= n + 1:
        raise OutOfRange(f"i={i} outside 2..{n + 1}")
    mb = m + 1
    num = factorial(n * mb ** 2 - i * mb + m) * factorial(i * mb - m)
    den = (factorial(n * mb ** 2 - n - i * m + 2 * m) * factorial(n - i + 1)
           * factorial(m * i) * factorial(i - 2))
    return _exact(num * pol(m, n, i), den, "count_by_contacts")


def count_by_contacts_m1(n: int, i: int) -> int:
    """The m = 1 specialisation, written with its own closed form."""
    if not 2 <= i <= n + 1:
        raise OutOfRange(f"i={i} outside 2..{n + 1}")
    num = (i - 1) * factorial(4 * n - 2 * i + 1) * comb(2 * i, i)
    return _exact(num, factorial(3 * n - i + 2) * factorial(n - i + 1), "f_{n,i}^(1)")


def contact_row(m: int, n: int) -> dict[int, int]:
    return {i: count_by_contacts(m, n, i) for i in range(2, n + 2)}

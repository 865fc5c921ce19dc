"""
Exact power-series solution of the interval functional equation.

``F(t; x, y)`` counts m-Tamari intervals by size (``t``), contacts of the lower
path (``x``), initial rise of the upper path (``y``) and, optionally, the
longest chain between the two paths (``q``).  It is the unique series with

    F(x, y) = x + x*y*t * (F(x, 1) . D)^m (F(x, y))

where ``D`` is the divided difference in ``x`` and ``(F(x,1) . D)^m`` means
``G -> F(x, 1) * D(G)`` applied ``m`` times.  With ``q`` the divided
difference becomes ``(S(qx) - S(1)) / (qx - 1)``.

Coefficients of ``t^n`` live in ``RING = ZZ[x, y, q]`` (sympy sparse ring).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable

from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

from .errors import DegenerateEvaluation
from .truncated import TruncatedSeries

RING, X, Y, Q = ring("x,y,q", ZZ)

__all__ = [
    "RING", "X", "Y", "Q", "delta", "delta_q", "solve_f", "residual",
    "check_symmetry", "swap_xy", "evaluate", "specialize", "invert_t_to_z",
    "check_f11_parametrization", "check_full_parametrization",
    "f11_closed_form", "full_parametrization_rhs",
]


def _divided(S, with_q: bool):
    out: dict = {}
    for (i, r, k), c in S.items():
        for j in range(i):
            key = (j, r, k + j if with_q else k)
            out[key] = out.get(key, 0) + c
    return RING.from_dict({e: c for e, c in out.items() if c})


def delta(S):
    """``(S(x) - S(1)) / (x - 1)``, expanded term by term."""
    return _divided(S, False)


def delta_q(S):
    """``(S(qx) - S(1)) / (qx - 1)``; reduces to :func:`delta` at ``q = 1``."""
    return _divided(S, True)


def _at_y1(p):
    return p.subs(Y, 1)


def solve_f(m: int, N: int, with_y: bool = True, with_q: bool = False) -> TruncatedSeries:
    """Solve the functional equation through ``t^N``, one order at a time.

    ``[t^n] F`` only needs ``[t^j] F`` for ``j < n`` (the equation carries an
    explicit factor ``t``), so each order is extracted once.  The operator
    ``G -> F(x,1) * D(G)`` is never expanded; the ``t``-coefficients of its
    ``k``-fold iterates are kept in ``iterates[k]``.
    """
    if m < 1 or N < 0:
        raise ValueError("need m >= 1 and N >= 0")
    D = delta_q if with_q else delta
    lead = X * Y if with_y else X
    F = [X]
    F1 = [X]
    # iterates[k][j] = [t^j] (F(x,1).D)^k F ;  dels[k][j] = D(iterates[k][j])
    iterates = [F] + [[] for _ in range(m)]
    dels = [[D(X)]] + [[] for _ in range(m)]
    for n in range(1, N + 1):
        j = n - 1
        for k in range(1, m + 1):
            acc = RING.zero
            prev = dels[k - 1]
            for a in range(j + 1):
                acc += F1[a] * prev[j - a]
            iterates[k].append(acc)
            if k < m:
                dels[k].append(D(acc))
        fn = lead * iterates[m][j]
        F.append(fn)
        F1.append(_at_y1(fn) if with_y else fn)
        dels[0].append(D(fn))
    return TruncatedSeries(F, N, RING.zero)


def residual(F: TruncatedSeries, m: int, with_y: bool = True, with_q: bool = False) -> TruncatedSeries:
    """``x + x y t (F(x,1) . D)^m F - F``, computed with whole-series arithmetic."""
    D = delta_q if with_q else delta
    F1 = F.map(_at_y1) if with_y else F
    G = F
    for _ in range(m):
        G = F1 * G.map(D)
    lead = X * Y if with_y else X
    rhs = (G * lead).shift(1) + X
    return rhs - F


def swap_xy(p):
    return RING.from_dict({(r, i, k): c for (i, r, k), c in p.items()})


def check_symmetry(F: TruncatedSeries) -> bool:
    """True iff ``y * [t^n] F`` is symmetric in ``x`` and ``y`` for every ``n``."""
    for c in F:
        yc = Y * c
        if yc != swap_xy(yc):
            return False
    return True


def evaluate(p, x=1, y=1, q=1) -> Fraction:
    """Exact value of a ``ZZ[x, y, q]`` element at rational ``(x, y, q)``."""
    x, y, q = Fraction(x), Fraction(y), Fraction(q)
    total = Fraction(0)
    for (i, r, k), c in p.items():
        total += int(c) * x ** i * y ** r * q ** k
    return total


def specialize(F: TruncatedSeries, x=1, y=1, q=1) -> TruncatedSeries:
    return TruncatedSeries([evaluate(c, x, y, q) for c in F], F.order, Fraction(0))


# -- parametrization --------------------------------------------------------------

def _fixed_point(step: Callable[[TruncatedSeries], TruncatedSeries],
                 start: TruncatedSeries, N: int) -> TruncatedSeries:
    s = start
    for _ in range(N + 1):
        s = step(s)
    return s


def invert_t_to_z(m: int, N: int) -> TruncatedSeries:
    """The series ``z(t) = t + O(t^2)`` with ``t = z (1 - z)^(m^2 + 2m)``.

    Iterates ``z <- t / (1 - z)^(m^2 + 2m)``; each pass fixes one more order.
    """
    if m < 1:
        raise ValueError("m must be positive")
    M = m * m + 2 * m
    t = TruncatedSeries.variable(N, Fraction(1), Fraction(0))
    return _fixed_point(lambda z: t * (1 - z) ** (-M), TruncatedSeries([Fraction(0)], N), N)


def f11_closed_form(m: int, N: int) -> TruncatedSeries:
    """``(1 - (m+1) z) / (1 - z)^(m+2)`` as a series in ``t``."""
    zvar = TruncatedSeries.variable(N, Fraction(1), Fraction(0))
    in_z = (1 - zvar * (m + 1)) * (1 - zvar) ** (-(m + 2))
    return in_z.compose(invert_t_to_z(m, N))


def check_f11_parametrization(m: int, N: int) -> bool:
    lhs = specialize(solve_f(m, N, with_y=False), 1, 1)
    return lhs == f11_closed_form(m, N)


def _solve_u(x0: Fraction, m: int, N: int) -> TruncatedSeries:
    # u <- x0 (1 + z u)^(m+1) - 1 ; starts at the constant x0 - 1
    zvar = TruncatedSeries.variable(N, Fraction(1), Fraction(0))
    start = TruncatedSeries([x0 - 1], N, Fraction(0))
    return _fixed_point(lambda u: (1 + zvar * u) ** (m + 1) * x0 - 1, start, N)


def full_parametrization_rhs(m: int, N: int, x0, y0) -> TruncatedSeries:
    """Right side of the rational parametrization of ``y F``, as a series in ``t``."""
    x0, y0 = Fraction(x0), Fraction(y0)
    if x0 == y0:
        raise DegenerateEvaluation("x0 = y0 puts u = v on the pole of 1/(u - v)")
    zvar = TruncatedSeries.variable(N, Fraction(1), Fraction(0))
    u = _solve_u(x0, m, N)
    v = _solve_u(y0, m, N)
    wu, wv = 1 + zvar * u, 1 + zvar * v
    num = (1 + u) * wu * (1 + v) * wv
    den = (u - v) * (1 - zvar * u * v) * (1 - zvar) ** (m + 2)
    bracket = (1 + u) * wu ** (-(m + 1)) - (1 + v) * wv ** (-(m + 1))
    return (num / den * bracket).compose(invert_t_to_z(m, N))


def check_full_parametrization(m: int, N: int, x0, y0) -> bool:
    x0, y0 = Fraction(x0), Fraction(y0)
    rhs = full_parametrization_rhs(m, N, x0, y0)
    lhs = specialize(solve_f(m, N, with_y=True), x0, y0) * y0
    return lhs == rhs

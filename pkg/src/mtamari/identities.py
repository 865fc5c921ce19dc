"""
Exact checks of the Lambda-operator identities behind the rational solution.

Series in ``z`` are :class:`~mtamari.truncated.TruncatedSeries` whose
coefficients lie in ``UV = QQ[u, v]``; ``w`` stands for ``1 + z*u``.  The
operator is

    Lambda H(z; u, v) = (1 + u)(1 + z u) (H(z; u, v) - H(z; 0, v)) / u

and every rational-function identity is compared coefficient by coefficient
up to ``z^N``.
"""
from __future__ import annotations

from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import ring

from .errors import NonDivisible
from .formulas import binomial
from .truncated import TruncatedSeries, geometric

UV, U, V = ring("u,v", QQ)
ZR, Z = ring("z", QQ)

DEFAULT_ORDER = 20


# -- series helpers -------------------------------------------------------------

def zseries(coeffs, order: int) -> TruncatedSeries:
    return TruncatedSeries([UV(c) for c in coeffs], order, UV.zero)


def const(c, order: int) -> TruncatedSeries:
    return zseries([c], order)


def zvar(order: int) -> TruncatedSeries:
    return zseries([0, 1], order)


def w_power(p: int, order: int, var=U) -> TruncatedSeries:
    """``(1 + z*var)^p`` for any integer ``p``."""
    return zseries([1, var], order) ** p


def one_minus_z_power(p: int, order: int) -> TruncatedSeries:
    return (const(1, order) - zvar(order)) ** p


def _drop_u(c):
    # (c(u, v) - c(0, v)) / u on exponent dicts; exact by construction
    return UV.from_dict({(a - 1, b): x for (a, b), x in c.items() if a > 0})


def lambda_op(H: TruncatedSeries) -> TruncatedSeries:
    """Apply Lambda once, keeping the z-order of ``H``."""
    d = [_drop_u(c) for c in H]
    one_u = 1 + U
    out = [one_u * d[0]]
    for k in range(1, len(d)):
        out.append(one_u * (d[k] + U * d[k - 1]))
    return TruncatedSeries(out, H.order, UV.zero)


def lambda_power(H: TruncatedSeries, k: int) -> TruncatedSeries:
    for _ in range(k):
        H = lambda_op(H)
    return H


def exact_divide(S: TruncatedSeries, d) -> TruncatedSeries:
    """Divide every coefficient by the z-free polynomial ``d``; no remainder allowed."""
    out = []
    for k, c in enumerate(S):
        try:
            out.append(c.exquo(d))
        except ExactQuotientFailed:
            raise NonDivisible(f"z^{k} coefficient is not divisible by {d}") from None
    return TruncatedSeries(out, S.order, UV.zero)


def swap_uv(S: TruncatedSeries) -> TruncatedSeries:
    return S.map(lambda c: UV.from_dict({(b, a): x for (a, b), x in c.items()}))


def at_v0(S: TruncatedSeries) -> TruncatedSeries:
    return S.map(lambda c: c.subs(V, 0))


def u_to_v(S: TruncatedSeries) -> TruncatedSeries:
    """Rename ``u`` to ``v`` in a series that does not involve ``v``."""
    return S.map(lambda c: UV.from_dict({(0, a): x for (a, b), x in c.items()}))


# -- elementary images ------------------------------------------------------------

def lambda_elem_rhs(p: int, order: int) -> TruncatedSeries:
    """Closed form of ``Lambda(w^p)`` for any integer ``p``."""
    z = zvar(order)
    w = w_power(1, order)
    if p == 0:
        return const(0, order)
    if p > 0:
        s = (z - 1) * w + w_power(p + 1, order)
        for a in range(2, p + 1):
            s = s + z * w_power(a, order)
        return s
    q = -p
    s = (1 - z) * w_power(-(q - 1), order) - w
    for a in range(q - 1):
        s = s - z * w_power(-a, order)
    return s


def verify_lambda_elem(p: int, order: int = DEFAULT_ORDER) -> bool:
    """Check ``Lambda(1) = 0`` and the images of ``w^p`` and ``w^-p``."""
    ok = lambda_op(const(1, order)) == const(0, order)
    if p >= 1:
        for e in (p, -p):
            ok &= lambda_op(w_power(e, order)) == lambda_elem_rhs(e, order)
    return ok


def verify_lemma_id(m: int, order: int = DEFAULT_ORDER) -> bool:
    """``Lambda^m(w^-m) = (1 - z)^m - w^m``."""
    lhs = lambda_power(w_power(-m, order), m)
    return lhs == one_minus_z_power(m, order) - w_power(m, order)


def identity_k_rhs(m: int, k: int, order: int) -> TruncatedSeries:
    """The closed form of ``Lambda^k(w^-m)`` for ``1 <= k <= m``."""
    z = zvar(order)
    s = one_minus_z_power(k, order) * w_power(-(m - k), order) - w_power(k, order)
    for i in range(k, m):
        for j in range(1, k + 1):
            c = (-1) ** (k + j) * binomial(k, j - 1) * binomial(i - j + 1, k - j)
            if c:
                s = s - (z ** (k - j + 1)) * w_power(-(m - i - 1), order) * c
    for i in range(1, k):
        for j in range(1, i + 1):
            c = (-1) ** (j - 1) * binomial(i - 1, j - 1) * binomial(m - k + j - 1, j)
            if c:
                s = s + (z ** j) * w_power(k - i, order) * c
    return s


def verify_identity_k(m: int, k: int, order: int = DEFAULT_ORDER) -> bool:
    if not 1 <= k <= m:
        raise ValueError("need 1 <= k <= m")
    return lambda_power(w_power(-m, order), k) == identity_k_rhs(m, k, order)


# -- the bivariate series H ---------------------------------------------------------

def build_h(m: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """The symmetric series ``H(u, v)`` obtained from ``y (1-z)^(m+2) F``.

    The antisymmetric numerator is divided exactly by ``u - v``; the factor
    ``1/(1 - z u v)`` is a geometric series.
    """
    wu, wv = w_power(1, order, U), w_power(1, order, V)
    au = (1 + U) * w_power(-(m + 1), order, U)
    av = (1 + V) * w_power(-(m + 1), order, V)
    num = wu * wv * (1 + U) * (1 + V) * (au - av)
    quotient = exact_divide(num, U - V)
    return quotient * geometric(U * V, order, UV.zero, UV.one)


def final_id_sides(m: int, order: int = DEFAULT_ORDER) -> tuple[TruncatedSeries, TruncatedSeries]:
    H = build_h(m, order)
    lhs = lambda_power(H, m).shift(1)
    scaled = w_power(m + 1, order, U) * w_power(m + 1, order, V) * H
    rhs = exact_divide(scaled, (1 + U) * (1 + V)) - one_minus_z_power(m + 2, order)
    return lhs, rhs


def final_id_simple_sides(m: int, order: int = DEFAULT_ORDER) -> tuple[TruncatedSeries, TruncatedSeries]:
    """The ``v = 0`` case: ``z Lambda^(m+1)((1+u)/w^(m+1))`` and its closed form."""
    a = (1 + U) * w_power(-(m + 1), order)
    lhs = lambda_power(a, m + 1).shift(1)
    w = w_power(1, order)
    num = (1 + U) * w - w_power(m + 2, order)
    rhs = exact_divide(num, U) - one_minus_z_power(m + 2, order)
    return lhs, rhs


def verify_final_id(m: int, order: int = DEFAULT_ORDER) -> bool:
    lhs, rhs = final_id_sides(m, order)
    slhs, srhs = final_id_simple_sides(m, order)
    return lhs == rhs and slhs == srhs


def sym_form_holds(H: TruncatedSeries) -> bool:
    """``(u-v)(1-zuv) H = u(1+v)(1+zv) H(u,0) - v(1+u)(1+zu) H(v,0)``."""
    order = H.order
    z = zvar(order)
    h0 = at_v0(H)
    lhs = H * (U - V) * (1 - z * U * V)
    rhs = (h0 * (U * (1 + V)) * w_power(1, order, V)
           - u_to_v(h0) * (V * (1 + U)) * w_power(1, order, U))
    return lhs == rhs


def verify_sym_form(H: TruncatedSeries, k_max: int = 0) -> bool:
    """Check the symmetric form for ``H`` and ``Lambda^k H``, ``k <= k_max``."""
    for _ in range(k_max + 1):
        if H != swap_uv(H) or not sym_form_holds(H):
            return False
        H = lambda_op(H)
    return True


# -- Lagrange inversion and a hypergeometric sum -----------------------------

def kernel_root(N: int) -> TruncatedSeries:
    """``S(t, z)`` with ``S(0) = 0`` and ``S = t + S^2 + t (z - 1) S``.

    This is the quadratic ``1 - t z/(1 - S) - t/S = 0`` cleared of
    denominators; each pass of the iteration fixes one more order in ``t``.
    """
    t = TruncatedSeries([ZR.zero, ZR.one], N, ZR.zero)
    S = TruncatedSeries([ZR.zero], N, ZR.zero)
    for _ in range(N + 1):
        S = t + S * S + (t * S) * (Z - 1)
    return S


def lagrange_closed_form(n: int, k: int):
    """``[t^n] S^k (S - 1)`` for ``n >= 1`` as an element of ``QQ[z]``."""
    if n < k:
        return ZR.zero
    if n == k:
        return -ZR.one
    if n == k + 1:
        return 1 - k * Z
    total = ZR.zero
    for p in range(1, n - k + 1):
        c = Fraction(binomial(n, p) * binomial(n - k - 1, p - 1) * (n - p - k * p),
                     n * (n - k - 1))
        total += QQ(c.numerator, c.denominator) * Z ** p
    return total


def verify_appendix_lagrange(N: int) -> bool:
    if N < 2:
        raise ValueError("need N >= 2")
    S = kernel_root(N)
    for k in range(N + 3):
        series = (S ** k) * (S - 1)
        for n in range(1, N + 1):
            if series[n] != lagrange_closed_form(n, k):
                return False
    return True


def hypergeometric_sum(m: int, i: int, p: int) -> Fraction:
    d = m - i
    total = Fraction(0)
    for j in range(d - 1):
        total += Fraction(binomial(j + 1, p) * binomial(d - j - 1, p - 1)
                          * (j + 1 - p * (2 * j + i - m + 2)),
                          (j + 1) * (d - j - 1))
    return total


def verify_hypergeometric(m: int, i: int, p: int) -> bool:
    if m - i < 2 or not 1 <= p <= m - i:
        raise ValueError("need m - i >= 2 and 1 <= p <= m - i")
    return hypergeometric_sum(m, i, p) == (m - i - 1 if p == 1 else 0)


def verify_telescoping(a: int, b: int, r1: int, r2: int) -> bool:
    """Closed form of ``sum_{r=r1}^{r2} C(r - a, b)``."""
    lhs = sum(binomial(r - a, b) for r in range(r1, r2 + 1))
    rhs = (Fraction(r2 + 1 - a - b, b + 1) * binomial(r2 + 1 - a, b)
           - Fraction(r1 - a - b, b + 1) * binomial(r1 - a, b))
    return lhs == rhs

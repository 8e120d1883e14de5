"""Recursion engine for the intersection-number tables and their series.

Two families of numbers are tabulated exactly:

* degree 2: L2(g), seeded by L2(0) = 1/2, satisfying
      L2(g) = (1/2g) * sum_{i<g} (-1)^(g-i+1) C(2g+1, 2i) L2(i),
  with generating function sum L2(g) x^(2g+1)/(2g+1)! = tan(x/2);
* degree 3: L3(g), determined together with the degree-2 family by
      0 = (2/3) sum_{i<=g} C(2g+3, 2i+1) (-1)^(g-i+1) P3_full(g-i) L3(i)
        + sum_{i<=g} C(2g+3, 2i) (-1)^(g-i) P3_trans(g-i) L2(i),
  where P3_full(g) = 9^g and P3_trans(g) = (9^(g+1)-1)/2 are branched-cover
  counts; the generating function is (9/2)(1/(1+2 cos x) - 1/3).

The one-point invariants are I2(g) = -L2(g)/2 and I3(g) = (2/9) L3(g); the
two-point invariants satisfy the square identity J_d = d * I_d^2.  A single
closed form covers both degrees (and conjecturally all d >= 1):

      I_d(x) = (-1)^(d-1) (1/d) (2 sin(x/2))^d / (2 sin(dx/2)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .series import TruncatedSeries, cos_scaled, div, egf_value, sin_scaled

__all__ = [
    "HodgeTable",
    "p2_closed",
    "p3_full_closed",
    "p3_trans_closed",
    "l2_table",
    "l3_table",
    "l_series",
    "closed_form_L2",
    "closed_form_L3",
    "conjecture_series",
    "i_series",
    "j_series",
    "p3_full_series",
    "p3_trans_series",
    "j_relation_check",
    "ode_residual_deg2",
    "ode_residual_deg3",
]


@dataclass(frozen=True)
class HodgeTable:
    """Exact tables indexed by genus, for one of the two computed degrees.

    ``P_full``/``P_trans`` hold the branched-cover counts entering the
    degree-3 relation and are None at degree 2.
    """

    degree: int
    gmax: int
    L: dict[int, Fraction]
    I: dict[int, Fraction]
    J: dict[int, Fraction]
    P_full: dict[int, Fraction] | None = None
    P_trans: dict[int, Fraction] | None = None


def p2_closed(g: int) -> Fraction:
    """Count of genus-g connected double covers (any g): always 1/2."""
    if g < 0:
        raise ValueError("genus must be >= 0")
    return Fraction(1, 2)


def p3_full_closed(g: int) -> Fraction:
    """Closed form 9^g for the triple-point branched-cover count."""
    if g < 0:
        raise ValueError("genus must be >= 0")
    return Fraction(9) ** g


def p3_trans_closed(g: int) -> Fraction:
    """Closed form (9^(g+1)-1)/2 for the all-simple branched-cover count."""
    if g < 0:
        raise ValueError("genus must be >= 0")
    return Fraction(9 ** (g + 1) - 1, 2)


def _j_values(d: int, I: dict[int, Fraction], gmax: int) -> dict[int, Fraction]:
    # J_d(g) is the EGF-product expansion of d * I_d^2: the exponent carried
    # by I_d(i) is 2i+d-1, so the binomial splits 2g+2d-2 slots accordingly.
    out: dict[int, Fraction] = {}
    for g in range(gmax + 1):
        total = Fraction(0)
        for i in range(g + 1):
            total += comb(2 * g + 2 * d - 2, 2 * i + d - 1) * I[i] * I[g - i]
        out[g] = d * total
    return out


def l2_table(gmax: int) -> HodgeTable:
    """L2, I2, J2 for all genera up to gmax, from the recursion."""
    if gmax < 0:
        raise ValueError("gmax must be >= 0")
    L: dict[int, Fraction] = {0: Fraction(1, 2)}
    for g in range(1, gmax + 1):
        acc = Fraction(0)
        for i in range(g):
            acc += (-1) ** (g - i + 1) * comb(2 * g + 1, 2 * i) * L[i]
        L[g] = acc / (2 * g)
    I = {g: -L[g] / 2 for g in range(gmax + 1)}
    J = _j_values(2, I, gmax)
    return HodgeTable(degree=2, gmax=gmax, L=L, I=I, J=J)


def l3_table(gmax: int) -> HodgeTable:
    """L3, I3, J3 up to gmax, by solving the mixed-degree relation.

    The genus-g instance of the relation involves L3(i) for i <= g; the
    i = g term carries the nonzero coefficient -(2/3) C(2g+3, 2), so it can
    be solved for L3(g) once all lower entries are known.  No seed value is
    assumed: g = 0 already determines L3(0) = 1.
    """
    if gmax < 0:
        raise ValueError("gmax must be >= 0")
    L2 = l2_table(gmax).L
    P_full = {g: p3_full_closed(g) for g in range(gmax + 1)}
    P_trans = {g: p3_trans_closed(g) for g in range(gmax + 1)}
    L3: dict[int, Fraction] = {}
    for g in range(gmax + 1):
        acc = Fraction(0)
        for i in range(g):
            acc += (
                Fraction(2, 3)
                * comb(2 * g + 3, 2 * i + 1)
                * (-1) ** (g - i + 1)
                * P_full[g - i]
                * L3[i]
            )
        for i in range(g + 1):
            acc += (
                comb(2 * g + 3, 2 * i)
                * (-1) ** (g - i)
                * P_trans[g - i]
                * L2[i]
            )
        L3[g] = acc / (Fraction(2, 3) * comb(2 * g + 3, 2))
    I = {g: Fraction(2, 9) * L3[g] for g in range(gmax + 1)}
    J = _j_values(3, I, gmax)
    return HodgeTable(
        degree=3, gmax=gmax, L=L3, I=I, J=J, P_full=P_full, P_trans=P_trans
    )


def _exponent(degree: int, g: int) -> int:
    # Both L-families sit at exponent 2g + d - 1 in their EGF.
    return 2 * g + degree - 1


def l_series(table: HodgeTable, order: int) -> TruncatedSeries:
    """EGF of the table's L-values, truncated at the given order."""
    return TruncatedSeries.from_egf(
        (
            (_exponent(table.degree, g), table.L[g])
            for g in range(table.gmax + 1)
            if _exponent(table.degree, g) <= order
        ),
        order,
    )


def _table_for_order(degree: int, order: int) -> HodgeTable:
    gmax = max(0, (order - degree + 1) // 2)
    return l2_table(gmax) if degree == 2 else l3_table(gmax)


def closed_form_L2(N: int) -> TruncatedSeries:
    """tan(x/2) to order N, computed as sin(x/2)/cos(x/2)."""
    if N < 1:
        raise ValueError("order must be >= 1")
    return div(sin_scaled(Fraction(1, 2), N), cos_scaled(Fraction(1, 2), N))


def closed_form_L3(N: int) -> TruncatedSeries:
    """(9/2)(1/(1+2 cos x) - 1/3) to order N.

    The denominator 1 + 2 cos x has constant term 3, so plain unit division
    applies; the equivalent 4 cos^2(x/2) - 1 form would give the same series.
    """
    if N < 1:
        raise ValueError("order must be >= 1")
    one = TruncatedSeries.one(N)
    inv = div(one, 2 * cos_scaled(1, N) + 1)
    return Fraction(9, 2) * (inv - Fraction(1, 3))


def conjecture_series(d: int, N: int) -> TruncatedSeries:
    """(-1)^(d-1) (1/d) (2 sin(x/2))^d / (2 sin(dx/2)) to order N.

    Proven to agree with i_series for d in {2, 3}; for d >= 4 the output is
    conjectural data.  d = 1 collapses to the constant series 1.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    if N < d - 1:
        raise ValueError("order must be >= d - 1")
    # The quotient loses one order to the denominator's valuation.
    work = N + 1
    numerator = (2 * sin_scaled(Fraction(1, 2), work)) ** d
    denominator = 2 * sin_scaled(Fraction(d, 2), work)
    sign = (-1) ** (d - 1)
    return div(numerator, denominator) * Fraction(sign, d)


def i_series(d: int, N: int) -> TruncatedSeries:
    """EGF of the one-point invariants I_d(g), from the tables."""
    if d not in (2, 3):
        raise ValueError("one-point tables exist only for degrees 2 and 3")
    table = _table_for_order(d, N)
    return TruncatedSeries.from_egf(
        (
            (_exponent(d, g), table.I[g])
            for g in range(table.gmax + 1)
            if _exponent(d, g) <= N
        ),
        N,
    )


def j_series(d: int, N: int) -> TruncatedSeries:
    """d times the square of i_series; the identity proven for d in {2, 3}."""
    if d not in (2, 3):
        raise ValueError("the square identity is only available for degrees 2 and 3")
    base = i_series(d, N)
    return d * base * base


def p3_full_series(N: int) -> TruncatedSeries:
    """(1 - cos 3x)/9: the alternating EGF of the 9^g counts."""
    return (1 - cos_scaled(3, N)) * Fraction(1, 9)


def p3_trans_series(N: int) -> TruncatedSeries:
    """(3 sin x - sin 3x)/6: the alternating EGF of the (9^(g+1)-1)/2 counts."""
    return (3 * sin_scaled(1, N) - sin_scaled(3, N)) * Fraction(1, 6)


def j_relation_check(g: int) -> bool:
    """Compare the binomial-sum J2(g) with the square-identity route."""
    if g < 0:
        raise ValueError("genus must be >= 0")
    L2 = l2_table(g).L
    binomial_sum = Fraction(0)
    for i in range(g + 1):
        binomial_sum += comb(2 * g + 2, 2 * i + 1) * L2[i] * L2[g - i]
    binomial_sum /= 2
    return binomial_sum == egf_value(j_series(2, 2 * g + 2), 2 * g + 2)


def ode_residual_deg2(
    N: int, l2_series: TruncatedSeries | None = None
) -> TruncatedSeries:
    """L2'(x) sin(x) - L2(x) to order N; zero for the true table.

    Passing an explicit ``l2_series`` (order N+1) substitutes a candidate
    generating function, e.g. to confirm the residual detects perturbations.
    """
    if N < 2:
        raise ValueError("order must be >= 2")
    if l2_series is None:
        l2_series = l_series(_table_for_order(2, N + 1), N + 1)
    return l2_series.derivative() * sin_scaled(1, N) - l2_series.truncate(N)


def ode_residual_deg3(
    N: int,
    l3_series: TruncatedSeries | None = None,
    l2_series: TruncatedSeries | None = None,
) -> TruncatedSeries:
    """(2/3) P3_full-series * L3' - P3_trans-series * L2' to order N."""
    if N < 2:
        raise ValueError("order must be >= 2")
    if l3_series is None:
        l3_series = l_series(_table_for_order(3, N + 1), N + 1)
    if l2_series is None:
        l2_series = l_series(_table_for_order(2, N + 1), N + 1)
    full_part = Fraction(2, 3) * p3_full_series(N) * l3_series.derivative()
    trans_part = p3_trans_series(N) * l2_series.derivative()
    return full_part - trans_part

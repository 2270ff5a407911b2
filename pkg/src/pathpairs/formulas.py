"""Closed-form pair counts and meeting probabilities, evaluated exactly.

Everything is computed in Fraction arithmetic; results that are counts are
asserted to reduce to nonnegative integers at the boundary, and a failed
reduction raises instead of rounding. The prefactors of the rectangle-count
formulas are not termwise integral, so the assertion is load bearing.

Binomials follow the factorial convention used throughout: a term whose
denominator would contain the factorial of a negative integer vanishes.
``binom`` implements that reading for nonnegative upper arguments; the
separate ``binom_gen`` is the falling-factorial binomial, defined for any
integer upper argument, which the two convolution identities in
``vandermonde_a``/``vandermonde_b`` need to hold without restrictions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from . import oracle


def binom(a: int, b: int) -> int:
    """C(a, b) with the factorial convention: zero when b < 0 or b > a."""
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def binom_gen(x: int, m: int) -> int:
    """Falling-factorial binomial x(x-1)...(x-m+1)/m!, any integer x."""
    if m < 0:
        return 0
    num = 1
    for t in range(m):
        num *= x - t
    return num // factorial(m)


def _as_count(value: Fraction, context: str) -> int:
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"{context}: expected a nonnegative integer, got {value}")
    return int(value)


def _check_rect_args(n: int, r: int, k: int) -> None:
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    if not 0 <= k <= n - 2:
        raise ValueError(f"need 0 <= k <= n-2, got k={k}, n={n}")


def rect_pair_count_a(n: int, r: int, k: int) -> int:
    """Ordered corner-to-corner pairs with k interior meetings, first form:

        2(k+1)/(n-k-1) * sum_i C(k,i) C(n-k+i-1, r) C(n-i-1, n-r)
    """
    _check_rect_args(n, r, k)
    total = sum(
        binom(k, i) * binom(n - k + i - 1, r) * binom(n - i - 1, n - r)
        for i in range(k + 1)
    )
    return _as_count(Fraction(2 * (k + 1), n - k - 1) * total, f"rect_pair_count_a{(n, r, k)}")


def rect_pair_count_b(n: int, r: int, k: int) -> int:
    """Same count, second form:

        2(k+1)/r * sum_i (-1)^i C(k,i) C(k-i,i) C(n-i-2,r-1) C(n-i-1,r-i-1)
                                 / C(n-i-2,i)

    Terms are evaluated in factorial form so the division is exact and the
    vanishing convention applies uniformly. The r = 0 column is defined by
    the transpose symmetry with r = n.
    """
    _check_rect_args(n, r, k)
    if r == 0:
        return rect_pair_count_a(n, n, k)
    total = Fraction(0)
    for i in range(k // 2 + 1):
        denom_args = (i, k - 2 * i, r - 1, n - i - 1 - r, r - i - 1, n - r)
        if any(d < 0 for d in denom_args):
            continue
        num = factorial(k) * factorial(n - i - 1) * factorial(n - 2 * i - 2)
        den = 1
        for d in denom_args:
            den *= factorial(d)
        total += (-1) ** i * Fraction(num, den)
    return _as_count(Fraction(2 * (k + 1), r) * total, f"rect_pair_count_b{(n, r, k)}")


def narayana(n: int, r: int) -> int:
    """Half the nonmeeting pair count: C(n-1, r) C(n-1, n-r) / (n-1)."""
    if n < 2 or not 1 <= r <= n - 1:
        raise ValueError(f"need n >= 2 and 1 <= r <= n-1, got n={n}, r={r}")
    return _as_count(
        Fraction(binom(n - 1, r) * binom(n - 1, n - r), n - 1), f"narayana{(n, r)}"
    )


# --- pairs with two prescribed endpoints ------------------------------------

#: Readings of the typographically ambiguous leading fraction in the
#: two-endpoint count. "printed" is (s-j-r+1+2t)/(n-1-j-2t) as displayed and
#: is the reading the enumeration oracle confirms; the others are the
#: plausible mis-groupings it rules out.
ENDPOINT_COUNT_READINGS = ("printed", "minus-2t", "r-plus-1")

RESOLVED_ENDPOINT_READING = "printed"


def _endpoint_raw(n: int, r: int, s: int, k: int, reading: str) -> Fraction:
    """Two-term expression for pairs ending at (r, n-r) and (s, n-s) that
    share exactly k vertices beyond the start. Valid for r <= s; at r = s
    the second term vanishes and the double sum reduces to the same-endpoint
    count."""
    if reading not in ENDPOINT_COUNT_READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    second = Fraction(0)
    if k < n:
        tot = sum(
            binom(k, j) * binom(n - k, r - j) * binom(n - k, s - j) for j in range(k + 1)
        )
        second = Fraction(s - r, n - k) * tot
    first = Fraction(0)
    for t in range(k // 2 + 1):
        c1 = binom(k, 2 * t + 1)
        if not c1:
            continue
        for j in range(k):  # the j binomial vanishes past k-1-2t
            c2 = binom(k - 1 - 2 * t, j)
            c3 = binom(n - 1 - j - 2 * t, s - j)
            c4 = binom(n - 1 - j - 2 * t, r - 1 - 2 * t)
            if not (c2 and c3 and c4):
                continue
            if reading == "printed":
                pref = Fraction(s - j - r + 1 + 2 * t, n - 1 - j - 2 * t)
            elif reading == "minus-2t":
                pref = Fraction(s - j - r + 1 - 2 * t, n - 1 - j - 2 * t)
            else:  # "r-plus-1"
                pref = Fraction(s - j - (r + 1) + 2 * t, n - 1 - j - 2 * t)
            first += (-1) ** j * pref * c1 * c2 * c3 * c4
    return 2 * first + second


@dataclass
class EndpointCountMismatch(Exception):
    """Raised in validation mode when the formula disagrees with enumeration."""

    n: int
    r: int
    s: int
    k: int
    formula: str
    oracle: str
    reading: str

    def __str__(self) -> str:
        return (
            f"two-endpoint count mismatch at n={self.n}, r={self.r}, s={self.s}, "
            f"k={self.k} (reading {self.reading!r}): formula {self.formula} vs "
            f"enumeration {self.oracle}"
        )


def endpoint_pair_count(
    n: int, r: int, s: int, k: int, validate: bool = False, reading: str | None = None
) -> int:
    """Pairs from the origin to (r, n-r) and (s, n-s) sharing exactly k
    vertices beyond the start.

    For r == s the shared final vertex always contributes, and the count is
    by definition the rectangle count at k-1 meetings. For r < s the closed
    form is the fast path; ``validate=True`` recomputes by enumeration and
    raises :class:`EndpointCountMismatch` rather than returning silently
    wrong values.
    """
    if not 0 <= r <= s <= n:
        raise ValueError(f"need 0 <= r <= s <= n, got r={r}, s={s}, n={n}")
    reading = RESOLVED_ENDPOINT_READING if reading is None else reading
    if r == s:
        if not 0 <= k <= n:
            raise ValueError(f"equal endpoints need 0 <= k <= n, got k={k}")
        if k == 0:
            value = 0  # the shared endpoint alone already gives one meeting
        elif k == n:
            value = binom(n, r)  # identical-path pairs
        else:
            value = rect_pair_count_a(n, r, k - 1)
        if validate and 1 <= k <= n - 1:
            expect = oracle.rect_pair_table(n, r).get(k - 1)
            if value != expect:
                raise EndpointCountMismatch(n, r, s, k, str(value), str(expect), reading)
        return value
    if not 0 <= k <= n - 1:
        raise ValueError(f"distinct endpoints need 0 <= k <= n-1, got k={k}")
    value = _as_count(_endpoint_raw(n, r, s, k, reading), f"endpoint_pair_count{(n, r, s, k)}")
    if validate:
        expect = oracle.endpoint_pair_table(n, r, s).get(k)
        if value != expect:
            raise EndpointCountMismatch(n, r, s, k, str(value), str(expect), reading)
    return value


def endpoint_pair_count_k0(n: int, r: int, s: int) -> int:
    """The no-meeting case in closed form: (s-r)/n * C(n, r) C(n, s)."""
    if not 0 <= r < s <= n:
        raise ValueError(f"need 0 <= r < s <= n, got r={r}, s={s}, n={n}")
    return _as_count(
        Fraction((s - r) * binom(n, r) * binom(n, s), n), f"endpoint_pair_count_k0{(n, r, s)}"
    )


def endpoint_reading_discrepancies(reading: str, n_max: int = 8) -> list[dict[str, str]]:
    """Machine-readable mismatch table for one reading of the two-endpoint
    formula against the enumeration oracle and the equal-endpoint boundary.

    Empty means the reading reproduces every instance with n <= n_max.
    """
    out: list[dict[str, str]] = []
    for n in range(1, n_max + 1):
        for r in range(n + 1):
            for s in range(r, n + 1):
                if r == s:
                    table = oracle.rect_pair_table(n, r)
                    expected = {k: table.get(k - 1) for k in range(1, n)}
                else:
                    table = oracle.endpoint_pair_table(n, r, s)
                    expected = {k: table.get(k) for k in range(n)}
                for k, want in expected.items():
                    got = _endpoint_raw(n, r, s, k, reading)
                    if got != want:
                        out.append(
                            {
                                "n": str(n),
                                "r": str(r),
                                "s": str(s),
                                "k": str(k),
                                "formula": str(got),
                                "oracle": str(want),
                                "reading": reading,
                            }
                        )
    return out


def resolve_endpoint_reading(n_max: int = 8) -> tuple[str | None, dict[str, list[dict[str, str]]]]:
    """Test every candidate reading; return the accepted one (or None) plus
    the per-reading discrepancy tables."""
    tables = {rd: endpoint_reading_discrepancies(rd, n_max) for rd in ENDPOINT_COUNT_READINGS}
    accepted = next((rd for rd in ENDPOINT_COUNT_READINGS if not tables[rd]), None)
    return accepted, tables


# --- free and same-endpoint pairs -------------------------------------------


def free_pair_count(n: int, k: int) -> int:
    """Ordered pairs of free n-step walks sharing exactly k vertices after
    the origin: 2^k C(2n-k, n)."""
    if n < 0 or not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return (1 << k) * binom(2 * n - k, n)


def same_endpoint_pair_count(n: int, k: int) -> int:
    """Ordered same-endpoint pairs of n-step walks with k interior meetings:

        2^(k+1) (k+1) (2n-k-2)! / (n! (n-k-1)!)

    Also the diagonal sum of the rectangle counts over every split r.
    """
    if n < 1 or not 0 <= k <= n - 1:
        raise ValueError(f"need n >= 1 and 0 <= k <= n-1, got n={n}, k={k}")
    return _as_count(
        Fraction((1 << (k + 1)) * (k + 1) * factorial(2 * n - k - 2), factorial(n) * factorial(n - k - 1)),
        f"same_endpoint_pair_count{(n, k)}",
    )


def same_endpoint_meet_prob(n: int, k: int) -> Fraction:
    """Probability that a uniform same-endpoint pair has k interior meetings:

        2^(k+1) (k+1) (2n-k-2)! n! / ((n-k-1)! (2n)!)
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0 <= k <= n - 1:
        raise ValueError(f"need 0 <= k <= n-1, got k={k}, n={n}")
    return Fraction(
        (1 << (k + 1)) * (k + 1) * factorial(2 * n - k - 2) * factorial(n),
        factorial(n - k - 1) * factorial(2 * n),
    )


def meet_prob_or_zero(n: int, k: int) -> Fraction:
    """``same_endpoint_meet_prob`` extended by zero outside 0 <= k <= n-1."""
    if k < 0 or k > n - 1:
        return Fraction(0)
    return same_endpoint_meet_prob(n, k)


def telescoping_companion(n: int, k: int) -> Fraction:
    """Companion term whose k-difference matches the n-difference of the
    meeting probabilities:

        g(n, k) = -(k+1) p(n, k-1) / (2n+1)

    so that p(n+1, k) - p(n, k) = g(n, k+1) - g(n, k) and the k-sum
    telescopes to zero (both tails vanish outside the support of p).
    """
    return Fraction(-(k + 1), 2 * n + 1) * meet_prob_or_zero(n, k - 1)


def average_crossings(n: int) -> Fraction:
    """Exact mean number of shared vertices (after the origin) over all 4^n
    pairs of free n-step walks: (2n+1)! / (4^n n!^2) - 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Fraction(factorial(2 * n + 1), (1 << (2 * n)) * factorial(n) ** 2) - 1


def average_crossings_asymptote(n: int) -> float:
    """Leading asymptotic form 2 sqrt(n / pi) - 1 of the mean crossing count."""
    from math import pi, sqrt

    return 2.0 * sqrt(n / pi) - 1.0


# --- meeting-at-the-origin probabilities ------------------------------------


def barrier_meet_formula(a: int, b: int, x: int, p) -> Fraction:
    """Closed form for the constant-rate barrier walk:

        sum_{t=0..x} C(a+b+x, a+t) p^(a+t) q^(b+x-t),  q = 1 - p.
    """
    if a < 0 or b < 0 or x < 0:
        raise ValueError("a, b, x must be nonnegative")
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"probability {p} outside [0, 1]")
    q = 1 - p
    total = Fraction(0)
    for t in range(x + 1):
        total += binom(a + b + x, a + t) * p ** (a + t) * q ** (b + x - t)
    return total


def same_start_meet_formula(a: int, b: int, p) -> Fraction:
    """Closed form for two walkers released from the same point (a+1, b+1):

        2 C(a+b, a) p^(a+1) q^(b+1).
    """
    if a < 0 or b < 0:
        raise ValueError("a and b must be nonnegative")
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"probability {p} outside [0, 1]")
    return 2 * binom(a + b, a) * p ** (a + 1) * (1 - p) ** (b + 1)


def vandermonde_a(a: int, b: int, m: int) -> bool:
    """sum_i C(a,i) C(b,m-i) == C(a+b,m), falling-factorial binomials."""
    lhs = sum(binom_gen(a, i) * binom_gen(b, m - i) for i in range(m + 1))
    return lhs == binom_gen(a + b, m)


def vandermonde_b(a: int, c: int, m: int) -> bool:
    """sum_i (-1)^i C(a,i) C(c-i,m-i) == C(c-a,m), falling-factorial binomials."""
    lhs = sum((-1) ** i * binom_gen(a, i) * binom_gen(c - i, m - i) for i in range(m + 1))
    return lhs == binom_gen(c - a, m)

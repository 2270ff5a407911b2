"""Truncated formal power series over exact rationals.

``UniSeries`` is a dense one-variable series up to a fixed degree.
``BiSeries`` keeps coefficients for every monomial of total degree at most D;
since total degree is additive, ring operations on truncated series are exact
in every retained coefficient. Binary operations require equal truncation
degrees so silent precision loss cannot happen.

Square roots expand (1 + w)^(1/2) binomially, where w is the input minus its
constant term; they demand constant term 1 and return the branch whose
constant term is +1. Inverses require a nonzero constant term and are grown
by Newton steps v <- v(2 - s v), which double the number of correct
coefficients each pass.

The builders at the bottom produce the generating series whose coefficients
the enumeration oracle and the closed forms must reproduce, plus a direct
Lagrange-inversion coefficient extractor for solutions of f = x g(f).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, ceil, log2


def _half_binomials(count: int) -> list[Fraction]:
    """C(1/2, m) for m = 0 .. count-1."""
    out = [Fraction(1)]
    for m in range(1, count):
        out.append(out[-1] * (Fraction(1, 2) - (m - 1)) / m)
    return out


@dataclass(frozen=True)
class SeriesCheck:
    """Outcome of a coefficientwise identity check."""

    passed: bool
    instances: int
    first_failure: tuple | None = None


class UniSeries:
    """One-variable series with Fraction coefficients, exact up to ``degree``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, degree: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if degree is not None:
            cs = cs[: degree + 1] + [Fraction(0)] * (degree + 1 - len(cs))
        if not cs:
            raise ValueError("a series needs at least its constant term")
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        if not 0 <= i <= self.degree:
            raise IndexError(f"coefficient {i} beyond truncation degree {self.degree}")
        return self.coeffs[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, UniSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniSeries({list(self.coeffs)!r})"

    def _coerce(self, other) -> "UniSeries":
        if isinstance(other, UniSeries):
            if other.degree != self.degree:
                raise ValueError(
                    f"mixed truncation degrees {self.degree} and {other.degree}"
                )
            return other
        return UniSeries([other], self.degree)

    def __add__(self, other) -> "UniSeries":
        o = self._coerce(other)
        return UniSeries([a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "UniSeries":
        return UniSeries([-a for a in self.coeffs])

    def __sub__(self, other) -> "UniSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UniSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UniSeries":
        if not isinstance(other, UniSeries):
            c = Fraction(other)
            return UniSeries([a * c for a in self.coeffs])
        o = self._coerce(other)
        d = self.degree
        out = [Fraction(0)] * (d + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(d + 1 - i):
                b = o.coeffs[j]
                if b:
                    out[i + j] += a * b
        return UniSeries(out)

    __rmul__ = __mul__

    def pow(self, m: int) -> "UniSeries":
        if m < 0:
            raise ValueError("negative powers go through inverse()")
        acc = UniSeries([1], self.degree)
        for _ in range(m):
            acc = acc * self
        return acc

    def sqrt(self) -> "UniSeries":
        if self.coeffs[0] != 1:
            raise ValueError(f"sqrt needs constant term 1, got {self.coeffs[0]}")
        w = self - 1
        halves = _half_binomials(self.degree + 1)
        acc = UniSeries([1], self.degree)
        wpow = UniSeries([1], self.degree)
        for m in range(1, self.degree + 1):
            wpow = wpow * w
            acc = acc + wpow * halves[m]
        return acc

    def inverse(self) -> "UniSeries":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ValueError("inverse needs a nonzero constant term")
        v = UniSeries([1 / c0], self.degree)
        for _ in range(max(1, ceil(log2(self.degree + 1)))):
            v = v * (2 - self * v)
        return v


class BiSeries:
    """Two-variable series truncated by total degree.

    Coefficients live in a dict keyed by exponent pairs (i, j) with
    i + j <= degree; absent keys are zero.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs=None):
        if degree < 0:
            raise ValueError("truncation degree must be nonnegative")
        self.degree = degree
        cleaned: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent pair {(i, j)}")
            if i + j > degree:
                continue
            c = Fraction(c)
            if c:
                cleaned[(i, j)] = c
        self.coeffs = cleaned

    def coeff(self, i: int, j: int) -> Fraction:
        if i < 0 or j < 0 or i + j > self.degree:
            raise IndexError(f"monomial {(i, j)} beyond total degree {self.degree}")
        return self.coeffs.get((i, j), Fraction(0))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BiSeries)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        return f"BiSeries(degree={self.degree}, terms={len(self.coeffs)})"

    def _coerce(self, other) -> "BiSeries":
        if isinstance(other, BiSeries):
            if other.degree != self.degree:
                raise ValueError(
                    f"mixed truncation degrees {self.degree} and {other.degree}"
                )
            return other
        return BiSeries(self.degree, {(0, 0): Fraction(other)})

    def __add__(self, other) -> "BiSeries":
        o = self._coerce(other)
        out = dict(self.coeffs)
        for key, c in o.coeffs.items():
            out[key] = out.get(key, Fraction(0)) + c
        return BiSeries(self.degree, out)

    __radd__ = __add__

    def __neg__(self) -> "BiSeries":
        return BiSeries(self.degree, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other) -> "BiSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "BiSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "BiSeries":
        if not isinstance(other, BiSeries):
            c = Fraction(other)
            return BiSeries(self.degree, {k: v * c for k, v in self.coeffs.items()})
        o = self._coerce(other)
        d = self.degree
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in o.coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i + j > d:
                    continue
                key = (i, j)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return BiSeries(d, out)

    __rmul__ = __mul__

    def pow(self, m: int) -> "BiSeries":
        if m < 0:
            raise ValueError("negative powers go through inverse()")
        acc = BiSeries(self.degree, {(0, 0): Fraction(1)})
        for _ in range(m):
            acc = acc * self
        return acc

    def sqrt(self) -> "BiSeries":
        if self.coeff(0, 0) != 1:
            raise ValueError(f"sqrt needs constant term 1, got {self.coeff(0, 0)}")
        w = self - 1
        halves = _half_binomials(self.degree + 1)
        acc = BiSeries(self.degree, {(0, 0): Fraction(1)})
        wpow = acc
        for m in range(1, self.degree + 1):
            wpow = wpow * w
            if not wpow.coeffs:
                break
            acc = acc + wpow * halves[m]
        return acc

    def inverse(self) -> "BiSeries":
        c0 = self.coeff(0, 0)
        if c0 == 0:
            raise ValueError("inverse needs a nonzero constant term")
        v = BiSeries(self.degree, {(0, 0): 1 / c0})
        for _ in range(max(1, ceil(log2(self.degree + 1)))):
            v = v * (2 - self * v)
        return v


def series_sqrt(s):
    """Principal square root of a unit-constant-term series (either kind)."""
    return s.sqrt()


# --- the generating series under study ---------------------------------------


def _rect_kernel(degree: int) -> BiSeries:
    # 1 - 2x(y+1) + x^2 (y-1)^2, exponents ordered (x, y)
    return BiSeries(
        degree,
        {(0, 0): 1, (1, 0): -2, (1, 1): -2, (2, 0): 1, (2, 1): -2, (2, 2): 1},
    )


def rect_pair_base(degree: int) -> BiSeries:
    """Generating series whose (x^n y^r) coefficient counts nonmeeting
    ordered pair walks across an r x (n-r) rectangle: 1 - sqrt(kernel)."""
    return 1 - _rect_kernel(degree).sqrt()


def rect_pair_power(k: int, degree: int) -> BiSeries:
    """(k+1)-th power of the base series; its (x^n y^r) coefficient counts
    ordered pairs with exactly k interior meetings."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return rect_pair_base(degree).pow(k + 1)


def total_pairs_identity_check(degree: int) -> SeriesCheck:
    """Coefficientwise check that 1/sqrt(kernel) expands to sum C(n,r)^2 x^n y^r.

    The kernel is the classical Legendre-polynomial generating kernel
    evaluated along (x(y-1), (y+1)/(y-1)); here only the exact rational
    expansion matters.
    """
    inv = _rect_kernel(degree).sqrt().inverse()
    instances = 0
    for n in range(degree + 1):
        for r in range(degree + 1 - n):
            instances += 1
            want = comb(n, r) ** 2 if r <= n else 0
            got = inv.coeff(n, r)
            if got != want:
                return SeriesCheck(False, instances, ((n, r), str(got), str(want)))
    return SeriesCheck(True, instances)


def narayana_base(degree: int) -> BiSeries:
    """The series f(y, z) with f = (y+f)(z+f) and f(0,0) = 0, in closed form
    ((1-y-z) - sqrt((1-y-z)^2 - 4yz)) / 2. Its (y^r z^(n-r)) coefficient is
    half the nonmeeting rectangle pair count."""
    disc = BiSeries(
        degree,
        {(0, 0): 1, (1, 0): -2, (0, 1): -2, (2, 0): 1, (1, 1): -2, (0, 2): 1},
    )
    linear = BiSeries(degree, {(0, 0): 1, (1, 0): -1, (0, 1): -1})
    return (linear - disc.sqrt()) * Fraction(1, 2)


def meeting_poly_power(k: int, degree: int) -> BiSeries:
    """(y + z + 2 f)^(k+1); its (y^r z^(n-r)) coefficient is the rectangle
    pair count with k interior meetings."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    f = narayana_base(degree)
    base = BiSeries(degree, {(1, 0): 1, (0, 1): 1}) + 2 * f
    return base.pow(k + 1)


def free_pair_series(k: int, degree: int) -> UniSeries:
    """(1 - sqrt(1-4x))^k / sqrt(1-4x); the x^n coefficient counts free pair
    walks with exactly k post-origin meetings (zero for n < k)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    sq = UniSeries([1, -4], degree).sqrt()
    return (1 - sq).pow(k) * sq.inverse()


# --- Lagrange inversion -------------------------------------------------------


def _poly_mul(a: list[Fraction], b: list[Fraction], cap: int) -> list[Fraction]:
    out = [Fraction(0)] * (cap + 1)
    for i, x in enumerate(a):
        if not x or i > cap:
            continue
        for j, y in enumerate(b):
            if i + j > cap:
                break
            if y:
                out[i + j] += x * y
    return out


def lagrange_coefficient(phi_coeffs, g_coeffs, n: int) -> Fraction:
    """[x^n] phi(f) for the solution of f = x g(f), with phi and g given as
    polynomial coefficient sequences: (1/n) [t^(n-1)] phi'(t) g(t)^n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    g = [Fraction(c) for c in g_coeffs]
    if not g or g[0] == 0:
        raise ValueError("g must have a nonzero constant term")
    phi = [Fraction(c) for c in phi_coeffs]
    dphi = [i * c for i, c in enumerate(phi)][1:] or [Fraction(0)]
    cap = n - 1
    gn = [Fraction(1)] + [Fraction(0)] * cap
    for _ in range(n):
        gn = _poly_mul(gn, g, cap)
    res = _poly_mul(dphi, gn, cap)
    return res[cap] / n

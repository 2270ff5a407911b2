"""Identity-check suites tying the enumeration oracle, closed forms, series,
correspondence, and walker probabilities together.

Each check sweeps a bounded grid of instances, comparing two or more
independently computed exact values, and returns one :class:`CheckReport`.
Reports are reproducible: enumeration order is fixed and the pseudo-random
level-rate sequences come from a fixed seed with denominators at most 16 so
the walker arithmetic stays small. A failing report always carries the first
counterexample in scan order, with every input and both computed values.

``run_all`` executes a configurable selection of suites in a fixed order and
is the engine behind the command line's ``verify`` subcommand.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import bijection, formulas, oracle, series


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    passed: bool
    instances: int
    first_failure: dict | None = None

    def __post_init__(self) -> None:
        if self.passed and self.first_failure is not None:
            raise ValueError("a passing report cannot carry a counterexample")


class _Recorder:
    """Collects instance counts and the first failing comparison."""

    def __init__(self, check_id: str):
        self.check_id = check_id
        self.instances = 0
        self.failure: dict | None = None

    def expect_equal(self, left, right, **context) -> None:
        self.instances += 1
        if self.failure is None and left != right:
            self.failure = {
                "left": str(left),
                "right": str(right),
                **{k: str(v) for k, v in context.items()},
            }

    def expect(self, ok: bool, **context) -> None:
        self.instances += 1
        if self.failure is None and not ok:
            self.failure = {k: str(v) for k, v in context.items()}

    def report(self) -> CheckReport:
        return CheckReport(self.check_id, self.failure is None, self.instances, self.failure)


@lru_cache(maxsize=None)
def _rect_table(n: int, r: int) -> oracle.CountTable:
    return oracle.rect_pair_table(n, r)


# --- formula-level checks -----------------------------------------------------


def check_theorem1(n_max: int = 9) -> CheckReport:
    """The two rectangle-count closed forms agree on their whole range."""
    rec = _Recorder("theorem1")
    for n in range(2, n_max + 1):
        for r in range(n + 1):
            for k in range(n - 1):
                rec.expect_equal(
                    formulas.rect_pair_count_a(n, r, k),
                    formulas.rect_pair_count_b(n, r, k),
                    n=n, r=r, k=k, sides="form a vs form b",
                )
    return rec.report()


def check_recurrence(n_max: int = 8) -> CheckReport:
    """Splitting pairs at their last meeting: the k-meeting count is the
    convolution of the (k-1)-meeting counts with the nonmeeting counts."""
    rec = _Recorder("recurrence")
    for n in range(2, n_max + 1):
        for r in range(n + 1):
            table = _rect_table(n, r)
            for k in range(1, n):
                conv = 0
                for m in range(1, n):
                    for q in range(max(0, r - (n - m)), min(r, m) + 1):
                        conv += _rect_table(m, q).get(k - 1) * _rect_table(n - m, r - q).get(0)
                rec.expect_equal(table.get(k), conv, n=n, r=r, k=k, sides="oracle vs convolution")
    return rec.report()


def check_eq8(n_max: int = 8) -> CheckReport:
    """Free pairs with k meetings decompose over the first same-endpoint
    meeting: convolving same-endpoint tables against nonmeeting free counts
    reproduces the free table. Checked on oracle tables and on closed forms."""
    rec = _Recorder("eq8")
    free = {n: oracle.free_pair_table(n) for n in range(n_max + 1)}
    same = {n: oracle.same_endpoint_pair_table(n) for n in range(1, n_max + 1)}
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            conv = sum(same[j].get(k - 1) * free[n - j].get(0) for j in range(k, n + 1))
            rec.expect_equal(free[n].get(k), conv, n=n, k=k, sides="oracle table vs convolution")
            closed = sum(
                formulas.same_endpoint_pair_count(j, k - 1) * formulas.free_pair_count(n - j, 0)
                for j in range(k, n + 1)
            )
            rec.expect_equal(
                formulas.free_pair_count(n, k), closed, n=n, k=k, sides="closed forms"
            )
    return rec.report()


def check_wz(n_max: int = 40, sum_n_max: int = 60) -> CheckReport:
    """Telescoping certificate for the meeting-probability distribution:
    p(n+1,k) - p(n,k) = g(n,k+1) - g(n,k) exactly, the k-sums are exactly 1,
    and p(n,1) = 2 p(n,0)."""
    rec = _Recorder("wz")
    for n in range(1, n_max + 1):
        for k in range(n + 2):
            lhs = formulas.meet_prob_or_zero(n + 1, k) - formulas.meet_prob_or_zero(n, k)
            rhs = formulas.telescoping_companion(n, k + 1) - formulas.telescoping_companion(n, k)
            rec.expect_equal(lhs, rhs, n=n, k=k, sides="difference vs companion")
    for n in range(1, sum_n_max + 1):
        total = sum(formulas.same_endpoint_meet_prob(n, k) for k in range(n))
        rec.expect_equal(total, Fraction(1), n=n, sides="probability total")
    for n in range(2, n_max + 1):
        rec.expect_equal(
            formulas.same_endpoint_meet_prob(n, 1),
            2 * formulas.same_endpoint_meet_prob(n, 0),
            n=n, sides="k=1 vs twice k=0",
        )
    return rec.report()


# --- oracle-vs-formula sweeps ---------------------------------------------------


def check_nkr(n_max: int = 9) -> CheckReport:
    """Both closed forms reproduce the enumerated rectangle tables, and the
    tables total C(n, r)^2."""
    rec = _Recorder("nkr")
    for n in range(2, n_max + 1):
        for r in range(n + 1):
            table = _rect_table(n, r)
            rec.expect_equal(table.total, comb(n, r) ** 2, n=n, r=r, sides="total")
            rec.expect_equal(
                table.entries, _rect_table(n, n - r).entries, n=n, r=r, sides="reflection"
            )
            for k in range(n - 1):
                count = table.get(k)
                rec.expect_equal(
                    formulas.rect_pair_count_a(n, r, k), count, n=n, r=r, k=k, sides="form a vs oracle"
                )
                rec.expect_equal(
                    formulas.rect_pair_count_b(n, r, k), count, n=n, r=r, k=k, sides="form b vs oracle"
                )
    return rec.report()


def check_doubling(n_max: int = 10) -> CheckReport:
    """One-meeting pairs are exactly twice the nonmeeting pairs, on the
    closed forms."""
    rec = _Recorder("doubling")
    for n in range(3, n_max + 1):
        for r in range(1, n):
            rec.expect_equal(
                formulas.rect_pair_count_a(n, r, 1),
                2 * formulas.rect_pair_count_a(n, r, 0),
                n=n, r=r, sides="k=1 vs twice k=0",
            )
            rec.expect_equal(
                2 * formulas.narayana(n, r),
                formulas.rect_pair_count_a(n, r, 0),
                n=n, r=r, sides="half count",
            )
    return rec.report()


def check_bijection(total_max: int = 9) -> CheckReport:
    """The correspondence verifies on every rectangle with r + s <= total_max."""
    rec = _Recorder("bijection")
    for total in range(2, total_max + 1):
        for r in range(1, total):
            report = bijection.verify_correspondence(r, total - r)
            rec.expect(
                report.passed,
                r=r, s=total - r,
                failures="; ".join(report.failures[:3]) or "none",
            )
    return rec.report()


def check_mrs(n_max: int = 8) -> CheckReport:
    """The two-endpoint closed form reproduces the enumerated tables, its
    k = 0 specialization matches both, and the equal-endpoint boundary
    reduces to the rectangle counts. A reading that failed resolution would
    surface here as a nonempty discrepancy table."""
    rec = _Recorder("mrs")
    discrepancies = formulas.endpoint_reading_discrepancies(
        formulas.RESOLVED_ENDPOINT_READING, n_max
    )
    rec.expect(
        not discrepancies,
        reading=formulas.RESOLVED_ENDPOINT_READING,
        mismatches=len(discrepancies),
        first=discrepancies[0] if discrepancies else "none",
    )
    for n in range(1, n_max + 1):
        for r in range(n + 1):
            for s in range(r + 1, n + 1):
                table = oracle.endpoint_pair_table(n, r, s)
                rec.expect_equal(table.total, comb(n, r) * comb(n, s), n=n, r=r, s=s, sides="total")
                rec.expect_equal(
                    formulas.endpoint_pair_count_k0(n, r, s), table.get(0),
                    n=n, r=r, s=s, sides="k0 form vs oracle",
                )
                for k in range(n):
                    rec.expect_equal(
                        formulas.endpoint_pair_count(n, r, s, k), table.get(k),
                        n=n, r=r, s=s, k=k, sides="formula vs oracle",
                    )
            for k in range(1, n):
                rec.expect_equal(
                    formulas.endpoint_pair_count(n, r, r, k),
                    _rect_table(n, r).get(k - 1),
                    n=n, r=r, s=r, k=k, sides="equal endpoints vs rectangle table",
                )
    return rec.report()


def check_fnk(n_max: int = 8, identity_n_max: int = 40) -> CheckReport:
    """Free-pair closed form versus enumeration; the powers-of-two totals
    sum to 4^n; the nonmeeting probability is C(2n,n)/4^n."""
    rec = _Recorder("fnk")
    for n in range(n_max + 1):
        table = oracle.free_pair_table(n)
        rec.expect_equal(table.total, 4 ** n, n=n, sides="total")
        for k in range(n + 1):
            rec.expect_equal(
                formulas.free_pair_count(n, k), table.get(k), n=n, k=k, sides="formula vs oracle"
            )
    for n in range(identity_n_max + 1):
        total = sum(formulas.free_pair_count(n, k) for k in range(n + 1))
        rec.expect_equal(total, 4 ** n, n=n, sides="sum vs 4^n")
        rec.expect_equal(
            Fraction(formulas.free_pair_count(n, 0), 4 ** n),
            Fraction(comb(2 * n, n), 4 ** n),
            n=n, sides="nonmeeting probability",
        )
    return rec.report()


def check_pnk(n_max: int = 8) -> CheckReport:
    """Meeting-probability closed form versus normalized enumeration."""
    rec = _Recorder("pnk")
    for n in range(1, n_max + 1):
        table = oracle.same_endpoint_pair_table(n)
        denom = comb(2 * n, n)
        for k in range(n):
            rec.expect_equal(
                formulas.same_endpoint_meet_prob(n, k),
                Fraction(table.get(k), denom),
                n=n, k=k, sides="formula vs oracle",
            )
            rec.expect_equal(
                formulas.same_endpoint_pair_count(n, k), table.get(k),
                n=n, k=k, sides="count form vs oracle",
            )
    return rec.report()


def check_diag(n_max: int = 12, oracle_n_max: int = 9) -> CheckReport:
    """Summing the rectangle counts over every split r gives the
    same-endpoint count, in closed form and against enumeration."""
    rec = _Recorder("diag")
    for n in range(2, n_max + 1):
        for k in range(n - 1):
            row = sum(formulas.rect_pair_count_a(n, r, k) for r in range(n + 1))
            rec.expect_equal(
                formulas.same_endpoint_pair_count(n, k), row, n=n, k=k, sides="closed form vs row sum"
            )
    for n in range(1, oracle_n_max + 1):
        table = oracle.same_endpoint_pair_table(n)
        for k in range(n):
            rec.expect_equal(
                formulas.same_endpoint_pair_count(n, k), table.get(k),
                n=n, k=k, sides="closed form vs oracle",
            )
    return rec.report()


def check_avg(n_max: int = 8, asymptotic_n: int = 1000, rel_tol: float = 0.02) -> CheckReport:
    """Exact mean crossing count versus the enumerated mean, and the float
    value of the exact mean against its asymptotic form at a large n."""
    rec = _Recorder("avg")
    for n in range(n_max + 1):
        rec.expect_equal(
            formulas.average_crossings(n),
            oracle.free_pair_table(n).mean,
            n=n, sides="closed form vs oracle mean",
        )
    exact = float(formulas.average_crossings(asymptotic_n))
    approx = formulas.average_crossings_asymptote(asymptotic_n)
    rec.expect(
        abs(exact - approx) <= rel_tol * abs(approx),
        n=asymptotic_n, exact=exact, asymptote=approx, rel_tol=rel_tol,
    )
    return rec.report()


# --- walker probability checks ---------------------------------------------------


def _level_rates(seed: int, count: int, length: int) -> list[oracle.LevelRate]:
    """Deterministic pseudo-random level-rate tables, denominators <= 16."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        values = []
        for _ in range(length):
            den = rng.randint(2, 16)
            values.append(Fraction(rng.randint(0, den), den))
        out.append(oracle.LevelRate(tuple(values)))
    return out


def _axis_target_checks(rec, config: oracle.BarrierConfig, b_value: Fraction) -> None:
    """Theorem-4 style cross checks for one configuration."""
    a, b, x, rate = config.a, config.b, config.x, config.rate
    steps = a + b + x
    single = oracle.endpoint_probability(
        (a, b + x + 1), steps, [(-t, 1 + t) for t in range(x + 1)], rate
    )
    rec.expect_equal(b_value, single, a=a, b=b, x=x, sides="pair walk vs single walker")
    u = oracle.endpoint_probability(
        (a, b + x + 1), steps, [(-t, 1 + t) for t in range(b + x + 1)], rate
    )
    l = oracle.endpoint_probability(
        (a + x + 1, b), steps, [(1 + t, -t) for t in range(a + x + 1)], rate
    )
    rec.expect_equal(b_value, u + l - 1, a=a, b=b, x=x, sides="pair walk vs u + l - 1")


def check_barrier(
    const_limit: int = 4,
    probs=(Fraction(1, 2), Fraction(1, 3), Fraction(2, 5)),
    level_total: int = 10,
    level_seeds: int = 20,
    seed: int = 20114,
) -> CheckReport:
    """Three-way agreement for the two-walker meeting probability.

    Constant rates: pair DP == binomial closed form == single-walker DP,
    and u + l - 1. Level-dependent rates: pair DP == single-walker DP and
    u + l - 1 over seeded pseudo-random rate tables.
    """
    rec = _Recorder("barrier")
    for p in probs:
        rate = oracle.ConstantRate(Fraction(p))
        for a in range(const_limit + 1):
            for b in range(const_limit + 1):
                for x in range(const_limit + 1):
                    config = oracle.BarrierConfig(a, b, x, rate)
                    value = oracle.barrier_meet_prob(config)
                    rec.expect_equal(
                        value, formulas.barrier_meet_formula(a, b, x, p),
                        a=a, b=b, x=x, p=p, sides="pair walk vs closed form",
                    )
                    _axis_target_checks(rec, config, value)
    for rate in _level_rates(seed, level_seeds, level_total + 2):
        for a in range(level_total + 1):
            for b in range(level_total + 1 - a):
                for x in range(level_total + 1 - a - b):
                    config = oracle.BarrierConfig(a, b, x, rate)
                    _axis_target_checks(rec, config, oracle.barrier_meet_prob(config))
    return rec.report()


def check_same_start(limit: int = 4, probs=(Fraction(1, 2), Fraction(1, 3), Fraction(2, 5))) -> CheckReport:
    """Two walkers released together: the DP equals 2 C(a+b, a) p^(a+1) q^(b+1)."""
    rec = _Recorder("same-start")
    for p in probs:
        for a in range(limit + 1):
            for b in range(limit + 1):
                rec.expect_equal(
                    oracle.same_start_meet_prob(a, b, p),
                    formulas.same_start_meet_formula(a, b, p),
                    a=a, b=b, p=p, sides="pair walk vs closed form",
                )
    return rec.report()


# --- series checks -----------------------------------------------------------------


def check_vandermonde(span: int = 8) -> CheckReport:
    """Both convolution identities over a grid including negative upper
    arguments (falling-factorial binomials)."""
    rec = _Recorder("vandermonde")
    for a in range(-span // 2, span + 1):
        for b in range(-span // 2, span + 1):
            for m in range(span + 1):
                rec.expect(formulas.vandermonde_a(a, b, m), a=a, b=b, m=m, identity="plain")
                rec.expect(formulas.vandermonde_b(a, b, m), a=a, c=b, m=m, identity="alternating")
    return rec.report()


def check_legendre(degree: int = 12) -> CheckReport:
    """The reciprocal square root of the rectangle kernel expands to the
    squared binomials."""
    result = series.total_pairs_identity_check(degree)
    failure = None
    if not result.passed:
        (n, r), got, want = result.first_failure
        failure = {"n": str(n), "r": str(r), "left": got, "right": want}
    return CheckReport("legendre", result.passed, result.instances, failure)


def check_series_uk(n_max: int = 9) -> CheckReport:
    """Three-way agreement: power-series coefficients == closed form ==
    enumeration, for every rectangle with n <= n_max."""
    rec = _Recorder("series-uk")
    degree = 2 * n_max
    base = series.rect_pair_base(degree)
    power = base
    for k in range(n_max - 1):
        if k:
            power = power * base
        for n in range(k + 1, n_max + 1):
            for r in range(n + 1):
                coeff = power.coeff(n, r)
                if k <= n - 2:
                    rec.expect_equal(
                        coeff, formulas.rect_pair_count_a(n, r, k),
                        n=n, r=r, k=k, sides="series vs closed form",
                    )
                rec.expect_equal(
                    coeff, _rect_table(n, r).get(k), n=n, r=r, k=k, sides="series vs oracle"
                )
    return rec.report()


def check_series_f(degree: int = 12) -> CheckReport:
    """The quadratic functional equation holds coefficientwise, and the
    meeting polynomial powers reproduce the rectangle counts."""
    rec = _Recorder("series-f")
    f = series.narayana_base(degree)
    y = series.BiSeries(degree, {(1, 0): 1})
    z = series.BiSeries(degree, {(0, 1): 1})
    residual = f - (y + f) * (z + f)
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            rec.expect_equal(residual.coeff(i, j), Fraction(0), i=i, j=j, sides="residual")
    for k in range(min(6, degree - 2) + 1):
        poly = series.meeting_poly_power(k, degree)
        for n in range(k + 2, degree + 1):
            for r in range(n + 1):
                if k <= n - 2:
                    rec.expect_equal(
                        poly.coeff(r, n - r),
                        formulas.rect_pair_count_a(n, r, k),
                        n=n, r=r, k=k, sides="meeting polynomial vs closed form",
                    )
    return rec.report()


def check_series_fk(degree: int = 20) -> CheckReport:
    """Free-pair generating series coefficients equal 2^k C(2n-k, n), and
    vanish below the k-th power."""
    rec = _Recorder("series-fk")
    for k in range(degree + 1):
        fk = series.free_pair_series(k, degree)
        for n in range(degree + 1):
            want = formulas.free_pair_count(n, k) if n >= k else 0
            rec.expect_equal(fk.coeff(n), want, n=n, k=k, sides="series vs closed form")
    return rec.report()


_LAGRANGE_POINTS = (
    (Fraction(1), Fraction(1)),
    (Fraction(2), Fraction(1)),
    (Fraction(1), Fraction(3)),
    (Fraction(1, 2), Fraction(3, 4)),
    (Fraction(2, 3), Fraction(5, 2)),
)


def check_lagrange(n_max: int = 8) -> CheckReport:
    """Coefficient extraction through f = x (y+f)(z+f) reproduces the first
    closed form, at rational specializations of (y, z)."""
    rec = _Recorder("lagrange")
    for y0, z0 in _LAGRANGE_POINTS:
        for n in range(2, n_max + 1):
            for k in range(n - 1):
                order = n - k - 1
                base = y0 + z0
                phi = [
                    comb(k + 1, m) * base ** (k + 1 - m) * Fraction(2) ** m
                    for m in range(k + 2)
                ]
                g = [y0 * z0, base, Fraction(1)]
                extracted = series.lagrange_coefficient(phi, g, order)
                direct = sum(
                    formulas.rect_pair_count_a(n, r, k) * y0 ** r * z0 ** (n - r)
                    for r in range(n + 1)
                )
                rec.expect_equal(extracted, direct, y=y0, z=z0, n=n, k=k, sides="extraction vs row")
    return rec.report()


# --- the aggregate runner -----------------------------------------------------------


@dataclass(frozen=True)
class VerifyConfig:
    """Which suites to run and an optional sweep-size override."""

    suites: tuple[str, ...] | None = None  # None selects every suite
    n_max: int | None = None


def _sized(default: int, n_max: int | None) -> int:
    return default if n_max is None else max(1, min(default, n_max))


def _suite_runners(n_max: int | None):
    s = lambda d: _sized(d, n_max)
    return {
        "theorem1": lambda: check_theorem1(max(2, s(9))),
        "recurrence": lambda: check_recurrence(max(2, s(8))),
        "eq8": lambda: check_eq8(s(8)),
        "wz": lambda: check_wz(s(40), s(60)),
        "barrier": lambda: check_barrier(const_limit=min(4, s(10)), level_total=s(10)),
        "same-start": lambda: check_same_start(limit=min(4, s(10))),
        "bijection": lambda: check_bijection(max(2, s(9))),
        "nkr": lambda: check_nkr(max(2, s(9))),
        "doubling": lambda: check_doubling(max(3, s(10))),
        "mrs": lambda: check_mrs(s(8)),
        "fnk": lambda: check_fnk(s(8), s(40)),
        "pnk": lambda: check_pnk(s(8)),
        "diag": lambda: check_diag(max(2, s(12)), max(1, s(9))),
        "avg": lambda: check_avg(s(8)),
        "vandermonde": lambda: check_vandermonde(s(8)),
        "legendre": lambda: check_legendre(s(12)),
        "series-uk": lambda: check_series_uk(max(2, s(9))),
        "series-f": lambda: check_series_f(max(3, s(12))),
        "series-fk": lambda: check_series_fk(s(20)),
        "lagrange": lambda: check_lagrange(max(2, s(8))),
    }


SUITE_NAMES = tuple(_suite_runners(None))


def run_all(config: VerifyConfig = VerifyConfig()) -> list[CheckReport]:
    """Run the selected suites in registry order and return their reports."""
    runners = _suite_runners(config.n_max)
    selected = SUITE_NAMES if config.suites is None else config.suites
    unknown = [name for name in selected if name not in runners]
    if unknown:
        raise ValueError(f"unknown suite names: {unknown}; known: {list(SUITE_NAMES)}")
    return [runners[name]() for name in SUITE_NAMES if name in selected]

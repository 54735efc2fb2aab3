"""Cross-representation verification suites.

Each suite returns a list of Check records (PASS / WARN / FAIL). WARN is
reserved for documented discrepancies between computed values and the
published tables (expected, reported with both values); FAIL means a
mathematical identity the engine is supposed to satisfy does not hold.

The trace-asymptotics suite compares the direct spectral trace with the
coefficient expansion in 60-digit arithmetic (mpmath): at J = 8 and
t = 0.01 the truncation error is ~1e-20, far below binary64 resolution,
so the order-t^{J+1} scaling can only be observed in extended precision.
The binary64 entry points are separately checked against the same
high-precision sums.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np
from mpmath import mp, mpf

from .exactnum import (
    bernoulli_number,
    bernoulli_polynomial,
    power_sum,
    rational_str,
    theta2_series_coefficient,
)
from .heat import heat_kernel_integral, heat_kernel_integral_hi, heat_kernel_series, theta_deriv, trace_direct
from .heatcoeff import asymptotic_trace, b_coefficients, c_coefficients, nu_zero_u
from .kernels import (
    fs_distance,
    kernel_diagonal_volume_check,
    monopole_norm_sq,
    reproducing_kernel,
    zaremba_sum_n1,
)
from .spectrum import (
    SpectralPoint,
    decompose_multiplicity,
    dimension_gamma_form,
    dimension_poly_form,
    dimension_product_form,
)

__all__ = ["Check", "SCOPES", "run_verify", "suite_trace_scaled_errors"]


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # PASS | WARN | FAIL
    detail: str

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


def _check(name: str, ok: bool, detail: str) -> Check:
    return Check(name, "PASS" if ok else "FAIL", detail)


# ---------------------------------------------------------------- dims

def suite_dims(nmax: int = 6, two_nu_max: int = 8, m_max: int = 30) -> list[Check]:
    """Exact triple agreement: Gamma form = product form = decomposition form."""
    bad = []
    count = 0
    for n in range(1, nmax + 1):
        for tn in range(two_nu_max + 1):
            for m in range(m_max + 1):
                pt = SpectralPoint(n, tn, m)
                g, p, s = dimension_gamma_form(pt), dimension_product_form(pt), dimension_poly_form(pt)
                count += 1
                if not (g == p == s and g > 0):
                    bad.append((pt, g, p, s))
    return [_check(
        "dims.triple_agreement",
        not bad,
        f"{count} (n, 2nu, m) triples exactly equal across three formulas"
        if not bad else f"first mismatch: {bad[0]}",
    )]


# ---------------------------------------------------------------- paper8

def suite_paper8() -> list[Check]:
    """Published coefficient tables against the computed decomposition."""
    checks: list[Check] = []

    ok = all(decompose_multiplicity(1, Fraction(tn, 2)).coeffs == (Fraction(1),)
             for tn in range(9))
    checks.append(_check("paper8.gamma_n1", ok, "gamma^(nu,1) = [1]"))

    ok = all(
        decompose_multiplicity(2, Fraction(tn, 2)).coeffs
        == (-Fraction(tn, 2) ** 2, Fraction(1))
        for tn in range(9)
    )
    checks.append(_check("paper8.tau_n2", ok, "tau^(nu,2) = [-nu^2, 1]"))

    ok = True
    for nu in range(5):
        c = c_coefficients(3, nu, 2)
        ok &= c[1] == -(Fraction(1, 4) + nu * nu)
        ok &= c[2] == Fraction(1, 2) * (Fraction(1, 4) - nu * nu) ** 2
    checks.append(_check("paper8.c_head_n3", ok,
                         "c_1 = -(1/4+nu^2), c_2 = (1/4-nu^2)^2/2 for nu <= 4"))

    # published gamma^(nu,3) labels are shifted; report, don't assert
    nu = 2
    g = decompose_multiplicity(3, nu).coeffs
    printed_g0 = -2 * (Fraction(1, 4) + nu * nu)
    checks.append(Check(
        "paper8.gamma_n3_labels",
        "WARN" if g[0] != printed_g0 and g[1] == printed_g0 else "FAIL",
        f"published gamma_0 = {rational_str(printed_g0)} is the computed gamma_1; "
        f"computed gamma = {[rational_str(x) for x in g]} (label shift, nu={nu})",
    ))

    # published tau^(nu,4) is odd in nu; equality only at nu = 0
    for nu in (0, 1, 2):
        tau = decompose_multiplicity(4, nu).coeffs
        printed = (Fraction(nu) * (nu * nu - 1), Fraction(-nu * nu + 2 * nu + 1),
                   Fraction(-nu - 2), Fraction(1))
        if tau == printed:
            checks.append(_check(f"paper8.tau_n4_nu{nu}", True, "matches published table"))
        else:
            checks.append(Check(
                f"paper8.tau_n4_nu{nu}", "WARN",
                f"computed {[rational_str(x) for x in tau]} vs published "
                f"{[rational_str(x) for x in printed]} (published entries odd in nu)",
            ))

    J = 12
    for n in (1, 3):
        ok = c_coefficients(n, 0, J) == nu_zero_u(n, J)
        checks.append(_check(f"paper8.u_n{n}", ok, f"c(n={n}, nu=0) = printed u^{n} up to i={J}"))

    c2, u2 = c_coefficients(2, 0, J), nu_zero_u(2, J)
    sign_flip = all(c2[i] == -u2[i] for i in range(2, J + 1)) and c2[:2] == u2[:2]
    closed = all(
        c2[i] == Fraction((-1) ** (i - 1)) * bernoulli_number(2 * i) / (i * factorial(i - 2))
        for i in range(2, J + 1)
    )
    checks.append(Check(
        "paper8.u_n2", "WARN" if sign_flip and closed else "FAIL",
        "published u_i^2 has the tail sign flipped (theta_3 asymptotics erratum): "
        f"computed c_2 = {rational_str(c2[2])} vs printed {rational_str(u2[2])}; "
        "computed tail equals (-1)^(i-1) B_2i/(i (i-2)!) exactly"
        if sign_flip and closed else "unexpected n=2 nu=0 relation",
    ))

    c4, u4 = c_coefficients(4, 0, J), nu_zero_u(4, J)
    head_ok = c4[:4] == u4[:4]
    checks.append(_check("paper8.u_n4_head", head_ok, "c(n=4, nu=0) head i <= 3 matches printed"))
    tail_flip = all(c4[i] == -u4[i] for i in range(4, J + 1))
    checks.append(Check(
        "paper8.u_n4_tail", "WARN" if tail_flip else "FAIL",
        "published u^4 tail inherits the sign erratum (computed = -printed)"
        if tail_flip else "unexpected n=4 nu=0 tail relation",
    ))

    # published b_j^{(0,2)} base writes (1/4)^{j-i}; theorem gives (n^2/4)^{j-i} = 1
    b = b_coefficients(2, 0, 6)
    u = c_coefficients(2, 0, 6)
    printed_b6 = Fraction(16, 2) * sum(
        Fraction(1, 4) ** (6 - i) * u[i] / factorial(6 - i) for i in range(7)
    )
    checks.append(Check(
        "paper8.b_n2_base", "WARN" if printed_b6 != b[6][0] else "FAIL",
        f"theorem b_6/pi^2 = {rational_str(b[6][0])}; with the published (1/4)^(j-i) base "
        f"it would be {rational_str(printed_b6)} (copy from the n=1 case)",
    ))

    # published n=4 head c-values are odd in nu; report at nu = 1
    c41 = c_coefficients(4, 1, 3)
    printed_c41 = [Fraction(1), Fraction(-1), Fraction(2, 6), Fraction(0)]
    checks.append(Check(
        "paper8.c_head_n4_nu1", "WARN" if c41 != printed_c41 else "FAIL",
        f"computed {[rational_str(x) for x in c41]} vs published "
        f"{[rational_str(x) for x in printed_c41]}",
    ))
    return checks


# ---------------------------------------------------------------- zaremba

def suite_zaremba(seed: int = 2024, pairs: int = 20) -> list[Check]:
    """The n=1 monopole Zaremba sum equals the closed-form kernel."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    worst_at = None
    for tn in range(5):
        for m in range(4):
            for _ in range(pairs):
                z = complex(*rng.normal(0.0, 0.8, 2))
                w = complex(*rng.normal(0.0, 0.8, 2))
                s = zaremba_sum_n1(tn, m, z, w)
                k = reproducing_kernel(1, tn, m, z, w).value
                rel = abs(s - k) / (1.0 + abs(k))
                if rel > worst:
                    worst, worst_at = rel, (tn, m)
    return [_check(
        "zaremba.lemma_n1", worst <= 1e-10,
        f"max |sum - closed|/(1+|closed|) = {worst:.3e} at (2nu, m) = {worst_at} "
        f"over m <= 3, 2nu <= 4, {pairs} pairs (tol 1e-10)",
    )]


# ---------------------------------------------------------------- heat kernels

def _sample_pair(rng, n: int, rho_max: float = 1.2):
    while True:
        z = tuple(complex(a, b) for a, b in rng.normal(0.0, 0.6, (n, 2)))
        w = tuple(complex(a, b) for a, b in rng.normal(0.0, 0.6, (n, 2)))
        if fs_distance(z, w) < rho_max:
            return z, w


def suite_heat(seed: int = 2024, pairs: int = 5) -> list[Check]:
    """Spectral series vs integral representation (and the nu=0 classical form)."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    worst_at = None
    for n in (1, 2):
        for tn in (0, 1, 2):
            for t in (0.3, 0.5, 1.0):
                for _ in range(pairs):
                    z, w = _sample_pair(rng, n)
                    hs = heat_kernel_series(n, tn, t, z, w).value
                    hi = heat_kernel_integral(n, tn, t, z, w).value
                    rel = abs(hs - hi) / (1.0 + abs(hs))
                    if rel > worst:
                        worst, worst_at = rel, (n, tn, t)
    checks = [_check(
        "heat.series_vs_integral", worst <= 1e-6,
        f"max |series - integral|/(1+|series|) = {worst:.3e} at (n, 2nu, t) = {worst_at} "
        "over n in {1,2}, 2nu in {0,1,2}, t in {0.3,0.5,1.0} (tol 1e-6)",
    )]
    worst = 0.0
    for n in (1, 2):
        for t in (0.3, 1.0):
            for _ in range(3):
                z, w = _sample_pair(rng, n)
                hs = heat_kernel_series(n, 0, t, z, w).value
                hh = heat_kernel_integral_hi(n, t, z, w).value
                worst = max(worst, abs(hs - hh) / (1.0 + abs(hs)))
    checks.append(_check(
        "heat.irhk_hi_nu0", worst <= 1e-6,
        f"classical nu=0 integral form vs series: max rel diff {worst:.3e} (tol 1e-6)",
    ))
    return checks


# ---------------------------------------------------------------- trace

def _trace_direct_mp(n: int, two_nu: int, t: mpf) -> mpf:
    shift = mpf(n * n + two_nu * two_nu) / 4
    total = mpf(0)
    m = 0
    while True:
        d = dimension_product_form(SpectralPoint(n, two_nu, m))
        term = d * mp.exp((shift - mpf((2 * m + n + two_nu) ** 2) / 4) * t)
        total += term
        if m >= 8 and term < total * mpf(10) ** (-(mp.dps + 10)):
            return total
        m += 1


def _asymptotic_trace_mp(n: int, nu: int, t: mpf, J: int) -> mpf:
    total = mpf(0)
    for j, (factor, p) in enumerate(b_coefficients(n, nu, J)):
        total += mpf(factor.numerator) / factor.denominator * mp.pi**p * t**j
    return total / (4 * mp.pi * t) ** n


def suite_trace_scaled_errors(
    grid=((1, 0), (1, 1), (2, 0), (2, 1), (3, 0)),
    orders=(4, 6, 8),
    times=(0.1, 0.05, 0.02, 0.01),
    dps: int = 60,
) -> dict:
    """Scaled truncation errors E(t,J) (4 pi t)^n / t^{J+1} on the test grid."""
    out = {}
    with mp.workdps(dps):
        for n, nu in grid:
            direct = {t: _trace_direct_mp(n, 2 * nu, mpf(t)) for t in times}
            for J in orders:
                scaled = []
                for t in times:
                    tt = mpf(t)
                    err = abs(direct[t] - _asymptotic_trace_mp(n, nu, tt, J))
                    scaled.append(float(err * (4 * mp.pi * tt) ** n / tt ** (J + 1)))
                out[(n, nu, J)] = scaled
    return out


def suite_trace() -> list[Check]:
    """Order-t^{J+1} truncation of the asymptotic trace, plus binary64 checks."""
    times = (0.1, 0.05, 0.02, 0.01)
    scaled = suite_trace_scaled_errors(times=times)
    worst_ratio = 1.0
    worst_at = None
    for key, vals in scaled.items():
        for a, b in zip(vals, vals[1:]):
            ratio = max(a / b, b / a)
            if ratio > worst_ratio:
                worst_ratio, worst_at = ratio, key
    checks = [_check(
        "trace.scaled_error_order", worst_ratio < 4.0,
        f"scaled error E(t,J)(4 pi t)^n/t^(J+1) varies by <= {worst_ratio:.3f} "
        f"between successive t (limit 4) over the (n,nu,J) grid; worst at {worst_at}",
    )]

    worst = 0.0
    with mp.workdps(40):
        for n, nu in ((1, 0), (1, 1), (2, 0), (2, 1), (3, 0)):
            for t in (0.1, 0.05):
                ref = float(_trace_direct_mp(n, 2 * nu, mpf(t)))
                worst = max(worst, abs(trace_direct(n, 2 * nu, t) - ref) / ref)
                ref_a = float(_asymptotic_trace_mp(n, nu, mpf(t), 6))
                worst = max(worst, abs(asymptotic_trace(n, nu, t, 6) - ref_a) / abs(ref_a))
    checks.append(_check(
        "trace.binary64_vs_mp", worst <= 1e-12,
        f"binary64 trace_direct/asymptotic_trace vs 40-digit reference: "
        f"max rel diff {worst:.3e} (tol 1e-12)",
    ))
    return checks


# ---------------------------------------------------------------- theta

def _theta2_asym(p: int, t: float, terms: int) -> tuple[float, float]:
    """Truncated (-d/dt)^p theta_2 asymptotic and its first omitted term."""
    val = factorial(p) / t ** (1 + p)
    val += (-1) ** p * sum(
        float(theta2_series_coefficient(s + p)) * t**s / factorial(s) for s in range(terms)
    )
    omitted = abs(float(theta2_series_coefficient(terms + p))) * t**terms / factorial(terms)
    return val, omitted


def _theta3_asym(l: int, t: float, terms: int) -> tuple[float, float]:
    """Truncated (-d/dt)^l theta_3 asymptotic (corrected sign) and omitted term."""
    val = factorial(l) / t ** (1 + l)
    val += (-1) ** l * sum(
        (-1) ** (j + 1) * float(bernoulli_number(2 * j + 2)) * t ** (j - l)
        / ((j + 1) * factorial(j - l))
        for j in range(l, l + terms)
    )
    j = l + terms
    omitted = abs(float(bernoulli_number(2 * j + 2))) * t**terms / ((j + 1) * factorial(terms))
    return val, omitted


def suite_theta(t: float = 0.05, terms: int = 6) -> list[Check]:
    """Small-time theta-derivative asymptotics at the stated truncation."""
    checks = []
    ok = True
    detail = []
    for p in range(4):
        exact = theta_deriv(2, p, t, eps=1e-14)
        asym, omitted = _theta2_asym(p, t, terms)
        good = abs(exact - asym) <= 1.5 * omitted
        ok &= good
        detail.append(f"p={p}: |diff|={abs(exact - asym):.2e} within 1.5x omitted {omitted:.2e}")
    checks.append(_check("theta.theta2_asymptotics", ok, "; ".join(detail)))
    ok = True
    detail = []
    for l in range(4):
        exact = theta_deriv(3, l, t, eps=1e-14)
        asym, omitted = _theta3_asym(l, t, terms)
        good = abs(exact - asym) <= 1.5 * omitted
        ok &= good
        detail.append(f"l={l}: |diff|={abs(exact - asym):.2e} within 1.5x omitted {omitted:.2e}")
    checks.append(_check("theta.theta3_asymptotics", ok, "; ".join(detail)))

    # the published theta_3 correction-series sign fails by O(1); report it
    exact = theta_deriv(3, 0, t, eps=1e-14)
    printed = 1.0 / t + sum(
        (-1) ** j * float(bernoulli_number(2 * j + 2)) * t**j / ((j + 1) * factorial(j))
        for j in range(terms)
    )
    checks.append(Check(
        "theta.theta3_printed_sign", "WARN",
        f"published correction-series sign leaves |theta_3 - printed| = "
        f"{abs(exact - printed):.3e} at t={t} (corrected sign: "
        f"{abs(exact - _theta3_asym(0, t, terms)[0]):.3e})",
    ))
    return checks


# ---------------------------------------------------------------- bernoulli

def suite_bernoulli() -> list[Check]:
    """Exact Bernoulli identities and the kernel-diagonal dimension check."""
    checks = []
    ok = all(
        bernoulli_polynomial(2 * d + 2, Fraction(1, 2))
        == Fraction((-1) ** (d + 1)) * (d + 1) * theta2_series_coefficient(d)
        for d in range(21)
    )
    checks.append(_check("bernoulli.half_argument_rescaled", ok,
                         "B_{2(d+1)}(1/2) = (-1)^(d+1)(d+1) Btilde_d for d <= 20"))

    ok = all(
        bernoulli_polynomial(d, Fraction(1, 2))
        == -(1 - Fraction(2) ** (1 - d)) * bernoulli_number(d)
        for d in range(41)
    )
    checks.append(_check("bernoulli.half_argument_textbook", ok,
                         "B_d(1/2) = -(1-2^(1-d)) B_d for d <= 40"))

    ok = True
    for m in range(11):
        for q in range(1, 10):
            for a in (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2)):
                brute = sum(Fraction(k + a) ** q for k in range(m + 1))
                ok &= power_sum(m, q, a) == brute
    ok &= all(
        power_sum(20, q, a) == sum(Fraction(k + a) ** q for k in range(21))
        for q in range(1, 21) for a in (Fraction(0), Fraction(1, 2))
    )
    checks.append(_check("bernoulli.power_sums", ok,
                         "closed form = brute force for m <= 10, q <= 9, and q <= 20 spot grid"))

    ok = all(
        kernel_diagonal_volume_check(n, tn, m) == dimension_gamma_form(SpectralPoint(n, tn, m))
        for n in range(1, 5) for tn in range(5) for m in range(11)
    )
    checks.append(_check("bernoulli.kernel_diagonal_volume", ok,
                         "K(z,z) Vol = dim exactly for n <= 4, 2nu <= 4, m <= 10"))
    return checks


# ---------------------------------------------------------------- monopole

def suite_monopole() -> list[Check]:
    """Monopole-harmonic L2 normalization under the volume-normalized measure."""
    worst = 0.0
    worst_at = None
    for tn in range(4):
        for m in range(3):
            for k in range(-m, tn + m + 1):
                err = abs(monopole_norm_sq(tn, m, k) ** 0.5 - 1.0)
                if err > worst:
                    worst, worst_at = err, (tn, m, k)
    return [_check(
        "monopole.normalization", worst <= 1e-8,
        f"max | ||Phi|| - 1 | = {worst:.3e} at (2nu, m, k) = {worst_at} (tol 1e-8)",
    )]


SCOPES = {
    "dims": suite_dims,
    "paper8": suite_paper8,
    "zaremba": suite_zaremba,
    "heat": suite_heat,
    "trace": suite_trace,
    "theta": suite_theta,
    "bernoulli": suite_bernoulli,
    "monopole": suite_monopole,
}


def worker_count() -> int:
    """Parallelism cap from PROJHEAT_THREADS (default 4, at least 1)."""
    raw = os.environ.get("PROJHEAT_THREADS", "")
    try:
        return max(1, int(raw)) if raw else 4
    except ValueError:
        return 4


def run_verify(scope: str = "all", **kwargs) -> list[Check]:
    """Run one scope or all of them (scopes in parallel, results in order)."""
    names = list(SCOPES) if scope == "all" else [scope]
    if any(name not in SCOPES for name in names):
        raise ValueError(f"unknown scope {scope!r}; valid: all, {', '.join(SCOPES)}")
    suites = []
    for name in names:
        fn = SCOPES[name]
        accepted = {k: v for k, v in kwargs.items() if k in fn.__code__.co_varnames[: fn.__code__.co_argcount]}
        suites.append((fn, accepted))
    if len(suites) == 1:
        fn, accepted = suites[0]
        return fn(**accepted)
    with ThreadPoolExecutor(max_workers=min(worker_count(), len(suites))) as pool:
        futures = [pool.submit(fn, **accepted) for fn, accepted in suites]
        results: list[Check] = []
        for fut in futures:
            results.extend(fut.result())
    return results

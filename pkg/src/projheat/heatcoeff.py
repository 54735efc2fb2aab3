"""Exact heat-trace coefficients c_i^{(nu,n)} and b_j^{(nu,n)}.

The head segment (i < n) comes from the multiplicity decomposition; the
tail (i >= n) from an n-term Bernoulli-polynomial recurrence, with the
parity of n selecting the Bernoulli argument: nu + 1/2 for odd n (the
half-integer theta lattice) and nu for even n (the integer lattice).

Both recurrences carry an overall (-1)^{i-n+1}/(i-n)! and weights
1/((i-q)(n-1-q)!) on the previously computed c_q. This is the form forced
by the trace ground truth (and by the proof's ledger in the odd case); the
published statement differs in two places (an index transposition in the
odd tail, a sign-flipped bracket in the even tail) and those as-printed
variants are available behind printed=True so discrepancy reports can show
computed-versus-printed values side by side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, pi

from .errors import NonPositiveTime, UnsupportedN, UnsupportedNu
from .exactnum import bernoulli_number, bernoulli_polynomial, rational_str, theta2_series_coefficient
from .spectrum import decompose_multiplicity

__all__ = [
    "HeatCoeffTable",
    "c_coefficients",
    "b_coefficients",
    "nu_zero_u",
    "asymptotic_trace",
    "heat_coeff_table",
]


def _check_args(n: int, nu, J: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    if J < 0:
        raise ValueError("J must be >= 0")
    nu = Fraction(nu)
    if nu.denominator != 1 or nu < 0:
        raise UnsupportedNu(f"parity-branch coefficients need integer nu >= 0, got {nu}")
    return int(nu)


def c_coefficients(n: int, nu, J: int, printed: bool = False) -> list[Fraction]:
    """Exact c_0..c_J for integer nu >= 0.

    printed=True reproduces the published tail formulas instead (odd n: the
    statement's transposed 1/p! weights; even n: the [2B - B(nu)] bracket);
    used only for discrepancy reporting.
    """
    nu = _check_args(n, nu, J)
    coeffs = decompose_multiplicity(n, nu).coeffs
    c: list[Fraction] = []
    for i in range(min(n, J + 1)):
        c.append(coeffs[n - 1 - i] * Fraction(factorial(n - i - 1), factorial(n - 1)))
    odd = n % 2 == 1
    for i in range(n, J + 1):
        acc = Fraction(0)
        if not printed:
            for q in range(n):
                val = bernoulli_polynomial(2 * (i - q), Fraction(2 * nu + 1, 2) if odd else nu)
                acc += c[q] * val / ((i - q) * factorial(n - 1 - q))
            c.append(Fraction((-1) ** (i - n + 1)) * acc / factorial(i - n))
        elif odd:
            for p in range(n):
                val = bernoulli_polynomial(2 * (i - p), Fraction(2 * nu + 1, 2))
                acc += c[p] * val / ((i - p) * factorial(p))
            c.append(Fraction((-1) ** (i - n + 1)) * acc / factorial(i - n))
        else:
            for p in range(n):
                k = i - p
                val = 2 * bernoulli_number(2 * k) - bernoulli_polynomial(2 * k, nu)
                acc += c[p] * val / (k * factorial(n - p - 1))
            c.append(Fraction((-1) ** (i - n)) * acc / factorial(i - n))
    return c


def b_coefficients(n: int, nu, J: int, printed: bool = False) -> list[tuple[Fraction, int]]:
    """b_j as (rational factor, pi power n): b_j = factor * pi^n.

    b_j = ((4 pi)^n / n!) sum_{i<=j} (n^2/4 + nu^2)^{j-i} c_i / (j-i)!.
    """
    nu_int = _check_args(n, nu, J)
    c = c_coefficients(n, nu_int, J, printed=printed)
    shift = Fraction(n * n, 4) + nu_int * nu_int
    out = []
    for j in range(J + 1):
        acc = sum((shift ** (j - i) * c[i] / factorial(j - i) for i in range(j + 1)), Fraction(0))
        out.append((Fraction(4**n, factorial(n)) * acc, n))
    return out


def nu_zero_u(n: int, J: int) -> list[Fraction]:
    """The published nu = 0 closed forms u_i^n, n in {1,2,3,4}, as printed.

    Pure test vectors: the n=2 tail (and the n=4 tail) carry a sign erratum
    relative to the trace asymptotics, which the comparison suites report.
    """
    if J < 0:
        raise ValueError("J must be >= 0")
    if n not in (1, 2, 3, 4):
        raise UnsupportedN(f"printed u-tables exist for n in 1..4, got {n}")
    u: list[Fraction] = []
    for i in range(J + 1):
        if n == 1:
            u.append(Fraction(1) if i == 0 else theta2_series_coefficient(i - 1) / factorial(i - 1))
        elif n == 2:
            if i == 0:
                u.append(Fraction(1))
            elif i == 1:
                u.append(Fraction(0))
            else:
                u.append(Fraction((-1) ** i) * bernoulli_number(2 * i) / (i * factorial(i - 2)))
        elif n == 3:
            if i <= 2:
                u.append((Fraction(1), Fraction(-1, 4), Fraction(1, 32))[i])
            else:
                bt = theta2_series_coefficient
                acc = bt(i - 1) + bt(i - 2) / 2 + bt(i - 3) / 16
                u.append(acc / (2 * factorial(i - 3)))
        else:
            if i <= 3:
                u.append((Fraction(1), Fraction(-2, 3), Fraction(1, 6), Fraction(0))[i])
            else:
                acc = Fraction(0)
                for p in range(4):
                    acc += u[3 - p] * bernoulli_number(2 * (p + i - 3)) / ((i + p - 3) * factorial(p))
                u.append(Fraction((-1) ** (i - 4)) * acc / factorial(i - 4))
    return u


def asymptotic_trace(n: int, nu, t: float, J: int) -> float:
    """(4 pi t)^{-n} sum_{j<=J} b_j t^j from the exact coefficient table."""
    if t <= 0:
        raise NonPositiveTime(f"t = {t}")
    b = b_coefficients(n, nu, J)
    total = sum(float(factor) * pi**n * t**j for j, (factor, _) in enumerate(b))
    return total / (4 * pi * t) ** n


@dataclass(frozen=True)
class HeatCoeffTable:
    """Exact coefficient table with the as-printed discrepancy report."""

    n: int
    two_nu: int
    J: int
    c: tuple[Fraction, ...]
    b: tuple[tuple[Fraction, int], ...]
    paper_reported_diffs: tuple[dict, ...] = field(default_factory=tuple)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "twoNu": self.two_nu,
            "J": self.J,
            "c": [rational_str(x) for x in self.c],
            "b": [{"factor": rational_str(f), "piPower": p} for f, p in self.b],
            "paper_reported_diffs": list(self.paper_reported_diffs),
        }


def _sect8_printed_head(n: int, nu: int) -> list[Fraction] | None:
    """Head values as printed in the published n = 4 table (odd in nu)."""
    if n != 4:
        return None
    return [
        Fraction(1),
        -Fraction(nu + 2, 3),
        Fraction(-nu * nu + 2 * nu + 1, 6),
        Fraction(nu, 6) * (nu * nu - 1),
    ]


def heat_coeff_table(n: int, nu, J: int) -> HeatCoeffTable:
    """Assemble the authoritative table plus computed-vs-printed diffs."""
    nu_int = _check_args(n, nu, J)
    c = c_coefficients(n, nu_int, J)
    b = b_coefficients(n, nu_int, J)
    diffs: list[dict] = []

    printed = c_coefficients(n, nu_int, J, printed=True)
    for i, (ours, theirs) in enumerate(zip(c, printed)):
        if ours != theirs:
            diffs.append({
                "quantity": "c",
                "index": i,
                "computed": rational_str(ours),
                "paper_printed": rational_str(theirs),
                "origin": "theorem tail formula as printed",
            })
    head = _sect8_printed_head(n, nu_int)
    if head is not None:
        for i, val in enumerate(head[: J + 1]):
            if c[i] != val:
                diffs.append({
                    "quantity": "c",
                    "index": i,
                    "computed": rational_str(c[i]),
                    "paper_printed": rational_str(val),
                    "origin": "published n=4 head table",
                })
    if nu_int == 0 and n in (1, 2, 3, 4):
        for i, val in enumerate(nu_zero_u(n, J)):
            if c[i] != val:
                diffs.append({
                    "quantity": "c",
                    "index": i,
                    "computed": rational_str(c[i]),
                    "paper_printed": rational_str(val),
                    "origin": "published nu=0 reduction u-table",
                })
    return HeatCoeffTable(n=n, two_nu=2 * nu_int, J=J, c=tuple(c), b=tuple(b),
                          paper_reported_diffs=tuple(diffs))

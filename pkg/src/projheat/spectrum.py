"""Spectrum of the magnetic Laplacian on P^n(C): eigenvalues and multiplicities.

Eigenspaces are indexed by (n, 2*nu, m); the eigenvalue is
beta_m = -4(m+nu)(m+nu+n) + 4 nu^2 and the multiplicity is an odd polynomial
in r = m + nu + n/2 whose even-part coefficient list (gamma for odd n, tau
for even n) drives the heat-coefficient recurrences. Everything here is
exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import NonIntegerDimension

__all__ = [
    "SpectralPoint",
    "DecompositionPoly",
    "lambda_cap",
    "eigenvalue_beta",
    "landau_tau",
    "dimension_gamma_form",
    "dimension_product_form",
    "dimension_poly_form",
    "decompose_multiplicity",
    "spherical_harmonic_dims",
]


@dataclass(frozen=True)
class SpectralPoint:
    """Eigenspace label: complex dimension n, integer 2*nu, level m."""

    n: int
    two_nu: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.two_nu < 0:
            raise ValueError("2*nu must be >= 0")
        if self.m < 0:
            raise ValueError("m must be >= 0")

    @property
    def nu(self) -> Fraction:
        return Fraction(self.two_nu, 2)

    @property
    def r(self) -> Fraction:
        """The shifted level r = m + nu + n/2."""
        return self.m + Fraction(self.two_nu + self.n, 2)


@dataclass(frozen=True)
class DecompositionPoly:
    """Coefficients of the multiplicity product as sum_p coeffs[p] r^{2p}."""

    parity: str  # "odd" | "even", the parity of n
    coeffs: tuple[Fraction, ...]


def lambda_cap(n: int, nu: Fraction | int, lam: Fraction | int) -> Fraction:
    """The spectral parameter map n^2 - lambda^2 + 4 nu^2."""
    nu, lam = Fraction(nu), Fraction(lam)
    return n * n - lam * lam + 4 * nu * nu


def eigenvalue_beta(pt: SpectralPoint) -> Fraction:
    """Eigenvalue beta_m = -4(m+nu)(m+nu+n) + 4 nu^2 of the m-th eigenspace."""
    s = pt.m + pt.nu
    return -4 * s * (s + pt.n) + 4 * pt.nu * pt.nu


def landau_tau(nu: Fraction | int, m: int) -> Fraction:
    """Spherical Landau level (2m+1) nu + m(m+1) of the n=1 monopole."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return (2 * m + 1) * Fraction(nu) + m * (m + 1)


def _as_integer(value: Fraction, pt: SpectralPoint) -> int:
    if value.denominator != 1 or value <= 0:
        raise NonIntegerDimension(f"dimension {value} at {pt} is not a positive integer")
    return int(value)


def dimension_gamma_form(pt: SpectralPoint) -> int:
    """dim A_m^nu via the Gamma-quotient formula (all arguments integers)."""
    n, tn, m = pt.n, pt.two_nu, pt.m
    num = (2 * m + n + tn) * factorial(m + n - 1) * factorial(m + n + tn - 1)
    den = n * factorial(n - 1) ** 2 * factorial(m) * factorial(m + tn)
    return _as_integer(Fraction(num, den), pt)


def dimension_product_form(pt: SpectralPoint) -> int:
    """dim A_m^nu via the product form (2m+n+2nu)/(n!(n-1)!) prod (m+j)(m+2nu+j)."""
    n, tn, m = pt.n, pt.two_nu, pt.m
    num = 2 * m + n + tn
    for j in range(1, n):
        num *= (m + j) * (m + tn + j)
    return _as_integer(Fraction(num, factorial(n) * factorial(n - 1)), pt)


def dimension_poly_form(pt: SpectralPoint) -> int:
    """dim A_m^nu via the parity decomposition: (2/(n!(n-1)!)) sum c_p r^{2p+1}."""
    poly = decompose_multiplicity(pt.n, pt.nu)
    r = pt.r
    acc = sum((c * r ** (2 * p + 1) for p, c in enumerate(poly.coeffs)), Fraction(0))
    return _as_integer(2 * acc / (factorial(pt.n) * factorial(pt.n - 1)), pt)


def _poly_mul_linear(coeffs: list[Fraction], root: Fraction) -> list[Fraction]:
    """Multiply a coefficient list (ascending powers) by (r - root)."""
    out = [Fraction(0)] * (len(coeffs) + 1)
    for i, ci in enumerate(coeffs):
        out[i + 1] += ci
        out[i] -= ci * root
    return out


def _poly_mul_quadratic(coeffs: list[Fraction], rho2: Fraction) -> list[Fraction]:
    """Multiply a coefficient list in y = r^2 by (y - rho2)."""
    out = [Fraction(0)] * (len(coeffs) + 1)
    for i, ci in enumerate(coeffs):
        out[i + 1] += ci
        out[i] -= ci * rho2
    return out


@lru_cache(maxsize=None)
def _decompose(n: int, two_nu: int) -> tuple[Fraction, ...]:
    nu = Fraction(two_nu, 2)
    half_n = Fraction(n, 2)
    full = [Fraction(1)]
    for j in range(1, n):
        full = _poly_mul_linear(full, half_n + nu - j)
        full = _poly_mul_linear(full, half_n - nu - j)
    if any(full[i] for i in range(1, len(full), 2)):
        raise AssertionError("multiplicity product is not even in r")
    coeffs = tuple(full[2 * p] for p in range(n))

    # cross-check against the paired-root factorization used by the trace proof
    if n % 2 == 1:
        halves = (n - 1) // 2
        squares = [(nu + Fraction(2 * i + 1, 2)) ** 2 for i in range(halves)]
        squares += [(Fraction(1, 2) - nu + i) ** 2 for i in range(halves)]
    else:
        squares = [(nu + i) ** 2 for i in range(n // 2)]
        squares += [(1 - nu + i) ** 2 for i in range(n // 2 - 1)]
    paired = [Fraction(1)]
    for rho2 in squares:
        paired = _poly_mul_quadratic(paired, rho2)
    if tuple(paired) != coeffs:
        raise AssertionError("paired-root factorization disagrees with direct expansion")
    return coeffs


def decompose_multiplicity(n: int, nu: Fraction | int) -> DecompositionPoly:
    """Expand prod_{j=1}^{n-1} (r - n/2 - nu + j)(r - n/2 + nu + j) in powers r^{2p}.

    Returns the gamma (n odd) or tau (n even) coefficient list, verified
    against the paired-root factorization. Half-integer nu is supported.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    two_nu = Fraction(nu) * 2
    if two_nu.denominator != 1 or two_nu < 0:
        raise ValueError("2*nu must be a non-negative integer")
    coeffs = _decompose(n, int(two_nu))
    return DecompositionPoly(parity="odd" if n % 2 else "even", coeffs=coeffs)


def spherical_harmonic_dims(n: int, p: int, q: int) -> tuple[int, int]:
    """(delta, d): dims of bidegree-(p,q) polynomials and spherical harmonics."""
    if n < 1 or p < 0 or q < 0:
        raise ValueError("need n >= 1 and p, q >= 0")

    def delta(pp: int, qq: int) -> int:
        if pp < 0 or qq < 0:
            return 0
        return comb(pp + n - 1, n - 1) * comb(qq + n - 1, n - 1)

    dlt = delta(p, q)
    if p == 0 or q == 0:
        return dlt, dlt
    return dlt, dlt - delta(p - 1, q - 1)

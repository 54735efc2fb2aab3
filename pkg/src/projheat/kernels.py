"""Fubini-Study geometry, reproducing kernels, and the n=1 monopole oracle.

Convention: the Hermitian pairing herm(z, w) = sum z_j conj(w_j) is linear
in its first slot, so the kernel phase base (1 + herm(z, w)) is holomorphic
in z and the half-integer-nu power is taken as an integer power of a single
complex number (no branch ambiguity).

The monopole harmonics of the n=1 chart are orthonormal against dmu_1/pi
(the n=1 volume-normalized measure); the Zaremba sum therefore carries an
explicit 1/pi, calibrated once against the closed form at m=0, z=w=0 and
required to be uniform across all (m, nu) by the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import acos, factorial, pi, sqrt

import numpy as np

from .errors import DimensionMismatch, IndexOutOfRange
from .exactnum import pochhammer
from .orthopoly import jacobi
from .quadrature import radial_mu1_rule

__all__ = [
    "ProjPoint",
    "KernelEval",
    "as_point",
    "herm",
    "fs_distance",
    "cos_2dfs",
    "phase_base",
    "reproducing_kernel",
    "monopole_basis",
    "zaremba_sum_n1",
    "monopole_norm_sq",
    "kernel_diagonal_volume_check",
]

ProjPoint = tuple[complex, ...]


@dataclass(frozen=True)
class KernelEval:
    """Kernel value with truncation metadata (0 terms for closed forms)."""

    value: complex
    terms_used: int
    error_bound: float


def as_point(coords) -> ProjPoint:
    """Coerce a scalar or sequence of complex numbers to a chart point."""
    if isinstance(coords, (complex, float, int)):
        return (complex(coords),)
    return tuple(complex(c) for c in coords)


def herm(z: ProjPoint, w: ProjPoint) -> complex:
    """Hermitian pairing sum z_j conj(w_j), linear in the first slot."""
    if len(z) != len(w):
        raise DimensionMismatch(f"points of dimension {len(z)} and {len(w)}")
    return sum(a * np.conjugate(b) for a, b in zip(z, w))


def _norms(z: ProjPoint, w: ProjPoint) -> tuple[float, float, complex]:
    zw = herm(z, w)
    return 1.0 + herm(z, z).real, 1.0 + herm(w, w).real, 1.0 + zw


def fs_distance(z, w) -> float:
    """Fubini-Study distance in [0, pi/2]: cos^2 d = |1+<z,w>|^2 / ((1+|z|^2)(1+|w|^2))."""
    z, w = as_point(z), as_point(w)
    az, aw, num = _norms(z, w)
    c2 = abs(num) ** 2 / (az * aw)
    return acos(sqrt(min(1.0, c2)))


def cos_2dfs(z, w) -> float:
    """cos(2 d_FS(z,w)) = 2|1+<z,w>|^2 / ((1+|z|^2)(1+|w|^2)) - 1, computed directly."""
    z, w = as_point(z), as_point(w)
    az, aw, num = _norms(z, w)
    return min(1.0, max(-1.0, 2.0 * abs(num) ** 2 / (az * aw) - 1.0))


def phase_base(z, w) -> complex:
    """q = (1 + herm(z,w)) / sqrt((1+|z|^2)(1+|w|^2)); |q| = cos d_FS."""
    z, w = as_point(z), as_point(w)
    az, aw, num = _norms(z, w)
    return num / sqrt(az * aw)


def reproducing_kernel(n: int, two_nu: int, m: int, z, w) -> KernelEval:
    """Closed-form reproducing kernel K_{nu,m}(z,w) of the m-th eigenspace.

    ((2m+2nu+n) Gamma(m+n+2nu) / (pi^n Gamma(m+2nu+1))) q^{2nu}
    P_m^{(n-1,2nu)}(cos 2 d_FS), with q the phase base above.
    """
    if two_nu < 0 or m < 0 or n < 1:
        raise ValueError("need n >= 1, 2*nu >= 0, m >= 0")
    z, w = as_point(z), as_point(w)
    if len(z) != n or len(w) != n:
        raise DimensionMismatch(f"expected dimension {n}, got {len(z)} and {len(w)}")
    gamma_ratio = pochhammer(m + two_nu + 1, n - 1)  # Gamma(m+n+2nu)/Gamma(m+2nu+1)
    pref = (2 * m + two_nu + n) * float(gamma_ratio) / pi**n
    q = phase_base(z, w)
    value = pref * q**two_nu * jacobi(m, n - 1, two_nu, cos_2dfs(z, w))
    return KernelEval(value=complex(value), terms_used=0, error_bound=0.0)


def monopole_basis(two_nu: int, m: int, k: int, z: complex) -> complex:
    """Monopole harmonic Phi_k^{nu,m}(z) on the n=1 chart, -m <= k <= 2nu+m.

    Negative k is the literal z^k; the Jacobi factor P_m^{(k,2nu-k)} carries
    a structural zero of order |k| at z = 0, so the product is regular.
    """
    if two_nu < 0 or m < 0:
        raise ValueError("need 2*nu >= 0 and m >= 0")
    if not -m <= k <= two_nu + m:
        raise IndexOutOfRange(f"k={k} outside [{-m}, {two_nu + m}]")
    z = complex(z)
    norm = sqrt(
        (two_nu + 2 * m + 1)
        * factorial(two_nu + m)
        * factorial(m)
        / (factorial(m + k) * factorial(two_nu + m - k))
    )
    zz = (z * z.conjugate()).real
    if z == 0:
        # P_m^{(k,2nu-k)}(1) = (k+1)_m/m! vanishes for -m <= k < 0
        return complex(norm) if k == 0 else 0j
    s = (1.0 - zz) / (1.0 + zz)
    return norm * (1.0 + zz) ** (-two_nu / 2.0) * z**k * jacobi(m, k, two_nu - k, s)


def zaremba_sum_n1(two_nu: int, m: int, z: complex, w: complex) -> complex:
    """Orthonormal-basis expansion sum_k Phi_k(z) conj(Phi_k(w)) / pi.

    The 1/pi converts the dmu_1/pi orthonormality of the monopole harmonics
    to the measure convention of the closed-form kernel; it is pinned by the
    m=0, z=w=0 diagonal value (2nu+1)/pi.
    """
    total = 0j
    for k in range(-m, two_nu + m + 1):
        total += monopole_basis(two_nu, m, k, z) * np.conjugate(monopole_basis(two_nu, m, k, w))
    return total / pi


def monopole_norm_sq(two_nu: int, m: int, k: int, nr: int = 400) -> float:
    """Numerical ||Phi_k^{nu,m}||^2 against dmu_1/pi (radial Gauss-Legendre).

    |Phi_k| depends only on |z|, so the angular integral is exact.
    """
    rho, wgt = radial_mu1_rule(nr)
    vals = np.array([abs(monopole_basis(two_nu, m, k, complex(r, 0.0))) ** 2 for r in rho])
    return float(np.sum(vals * wgt) / pi)


def kernel_diagonal_volume_check(n: int, two_nu: int, m: int) -> Fraction:
    """Exact K_{nu,m}(z,z) * Vol(P^n) with Vol = pi^n/n!; the pi^n cancels.

    Equals (2m+2nu+n) Gamma(m+n+2nu) (n)_m / (n! Gamma(m+2nu+1) m!), which the
    tests require to match the eigenspace dimension exactly.
    """
    if n < 1 or two_nu < 0 or m < 0:
        raise ValueError("need n >= 1, 2*nu >= 0, m >= 0")
    gamma_ratio = pochhammer(m + two_nu + 1, n - 1)
    jac_at_one = pochhammer(n, m) / factorial(m)  # P_m^{(n-1,2nu)}(1)
    return (2 * m + two_nu + n) * gamma_ratio * jac_at_one / factorial(n)

"""Quadrature grids shared by the kernel and heat-kernel checks.

The plane C (one affine chart of P^1) is integrated in polar coordinates:
Gauss-Legendre in radius after the substitution rho = tan(theta) mapping
[0, inf) to [0, pi/2), periodic trapezoid in angle. Under that substitution
the mu_1 radial weight rho (1+rho^2)^{-2} drho collapses to the smooth
sin(theta) cos(theta) dtheta, so the rule converges spectrally.
"""

from __future__ import annotations

import numpy as np

__all__ = ["gauss_legendre", "radial_mu1_rule", "plane_mu1_rule"]


def gauss_legendre(nodes: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [a, b]."""
    x, w = np.polynomial.legendre.leggauss(nodes)
    half = 0.5 * (b - a)
    return a + half * (x + 1.0), half * w


def radial_mu1_rule(nr: int = 200) -> tuple[np.ndarray, np.ndarray]:
    """Radii and weights so that sum f(rho) w = integral_C f(|z|) dmu_1(z).

    Only valid for radially symmetric integrands (the 2*pi angular factor
    is folded into the weights).
    """
    theta, wt = gauss_legendre(nr, 0.0, np.pi / 2)
    rho = np.tan(theta)
    w = 2.0 * np.pi * wt * np.sin(theta) * np.cos(theta)
    return rho, w


def plane_mu1_rule(nr: int = 200, ntheta: int = 200) -> tuple[np.ndarray, np.ndarray]:
    """Flattened complex nodes and weights for integral_C f(z) dmu_1(z)."""
    theta, wt = gauss_legendre(nr, 0.0, np.pi / 2)
    rho = np.tan(theta)
    wr = wt * np.sin(theta) * np.cos(theta)
    ang = 2.0 * np.pi * np.arange(ntheta) / ntheta
    pts = rho[:, None] * np.exp(1j * ang)[None, :]
    w = wr[:, None] * np.full(ntheta, 2.0 * np.pi / ntheta)[None, :]
    return pts.ravel(), w.ravel()

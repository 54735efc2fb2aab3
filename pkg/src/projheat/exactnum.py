"""Exact rational arithmetic and the Bernoulli-family sequences.

Every exact scalar in the package is a ``fractions.Fraction`` (alias
``Rational``): always in lowest terms, denominator > 0, zero is 0/1.

Two distinct Bernoulli-type sequences live here and are never mixed up:

* ``bernoulli_number(d)`` -- the standard numbers B_d with the recursion
  convention B_1 = -1/2 (so sum_{k<=d} C(d+1,k) B_k = 0 for d >= 1).
* ``theta2_series_coefficient(d)`` -- the rescaled sequence
  ((-1)^d/(d+1)) (1 - 2^{-2d-1}) B_{2d+2} that appears as the small-time
  Taylor tail of the lattice theta series sum (2j+1) e^{-(j+1/2)^2 t}.

Both caches grow under a lock and are append-only, so values are safe for
concurrent reads once computed.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

Rational = Fraction

__all__ = [
    "Rational",
    "bernoulli_number",
    "bernoulli_polynomial",
    "theta2_series_coefficient",
    "pochhammer",
    "binomial_general",
    "power_sum",
    "rational_str",
    "parse_rational",
]


class _BernoulliCache:
    """Memoized B_0..B_D plus the rescaled theta-series sequence."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._standard: list[Fraction] = [Fraction(1)]
        self._theta2: list[Fraction] = []

    def standard(self, d: int) -> Fraction:
        if d >= len(self._standard):
            with self._lock:
                while len(self._standard) <= d:
                    m = len(self._standard)
                    # defining recursion: sum_{k=0}^{m} C(m+1, k) B_k = 0
                    acc = Fraction(0)
                    for k, bk in enumerate(self._standard):
                        if bk:
                            acc += comb(m + 1, k) * bk
                    self._standard.append(-acc / (m + 1))
        return self._standard[d]

    def theta2(self, d: int) -> Fraction:
        if d >= len(self._theta2):
            self.standard(2 * d + 2)
            with self._lock:
                while len(self._theta2) <= d:
                    j = len(self._theta2)
                    b = self._standard[2 * j + 2]
                    scale = Fraction((-1) ** j, j + 1) * (1 - Fraction(1, 2 ** (2 * j + 1)))
                    self._theta2.append(scale * b)
        return self._theta2[d]


_CACHE = _BernoulliCache()


def bernoulli_number(d: int) -> Fraction:
    """Standard Bernoulli number B_d (convention B_1 = -1/2)."""
    if d < 0:
        raise ValueError("Bernoulli index must be >= 0")
    return _CACHE.standard(d)


def bernoulli_polynomial(d: int, x: Fraction | int) -> Fraction:
    """Exact value of the Bernoulli polynomial B_d(x) = sum C(d,k) B_k x^{d-k}."""
    if d < 0:
        raise ValueError("Bernoulli index must be >= 0")
    bernoulli_number(d)  # warm cache in one lock pass
    x = Fraction(x)
    acc = Fraction(0)
    for k in range(d + 1):
        bk = _CACHE.standard(k)
        if bk:
            acc += comb(d, k) * bk * x ** (d - k)
    return acc


def theta2_series_coefficient(d: int) -> Fraction:
    """Rescaled sequence ((-1)^d/(d+1)) (1 - 2^{-2d-1}) B_{2d+2}.

    Distinct from bernoulli_number on purpose; the literature overloads the
    symbol B_d for both. Satisfies B_{2(d+1)}(1/2) = (-1)^{d+1} (d+1) * value.
    """
    if d < 0:
        raise ValueError("index must be >= 0")
    return _CACHE.theta2(d)


def pochhammer(a: Fraction | int, k: int) -> Fraction:
    """Shifted factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1."""
    if k < 0:
        raise ValueError("pochhammer order must be >= 0")
    a = Fraction(a)
    out = Fraction(1)
    for j in range(k):
        out *= a + j
        if not out:
            break
    return out


def binomial_general(a: Fraction | int, k: int) -> Fraction:
    """Generalized binomial coefficient a(a-1)...(a-k+1)/k! for any rational a."""
    if k < 0:
        raise ValueError("binomial order must be >= 0")
    a = Fraction(a)
    num = Fraction(1)
    for j in range(k):
        num *= a - j
        if not num:
            return Fraction(0)
    den = 1
    for j in range(2, k + 1):
        den *= j
    return num / den


def power_sum(m: int, q: int, a: Fraction | int) -> Fraction:
    """Exact sum_{k=0}^{m} (k+a)^q via Bernoulli polynomials, q >= 1."""
    if q < 1:
        raise ValueError("exponent q must be >= 1")
    if m < 0:
        raise ValueError("upper limit m must be >= 0")
    a = Fraction(a)
    return (bernoulli_polynomial(q + 1, m + 1 + a) - bernoulli_polynomial(q + 1, a)) / (q + 1)


def rational_str(x: Fraction | int) -> str:
    """Canonical "p/q" form with an explicit denominator (zero is "0/1")."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    """Inverse of rational_str; also accepts bare integers."""
    return Fraction(s)

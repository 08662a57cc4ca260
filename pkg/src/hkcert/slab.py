"""Exact volumes of hypercube slabs ``{x in [0,1]^d : sum(x) <= s}``.

The slab volume v_s is the distribution function of a sum of d
independent uniform [0,1] variables (Irwin-Hall).  Pointwise values use
the classical inclusion-exclusion finite sum

    v_s = sum_{n=0}^{floor(s)} (-1)^n (s-n)^d / (n! (d-n)!)

clamped to 0 for s <= 0 and to 1 for s >= d.  As a function of s the
volume is a continuous piecewise polynomial of degree d with integer
breakpoints; ``slab_polynomial`` builds that representation explicitly.

Pointwise evaluation always uses the finite sum directly rather than the
piecewise object, so there is a single source of truth; the piecewise
form exists for apex analysis and documentation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, floor

from .rationals import Rational, RationalPolynomial

__all__ = ["SlabVolumePolynomial", "slab_polynomial", "vol_slab"]


def vol_slab(d: int, s: Rational) -> Fraction:
    """Exact volume of ``{x in [0,1]^d : x_1 + ... + x_d <= s}``.

    Total in s: returns 0 for s <= 0 and 1 for s >= d, so shifted
    evaluations like v_{s-t} with s < t are well defined.
    """
    if d < 1:
        raise ValueError("dimension must be >= 1")
    s = Fraction(s)
    if s <= 0:
        return Fraction(0)
    if s >= d:
        return Fraction(1)
    total = Fraction(0)
    for n in range(floor(s) + 1):
        term = (s - n) ** d / (factorial(n) * factorial(d - n))
        total += -term if n % 2 else term
    return total


@dataclass(frozen=True)
class SlabVolumePolynomial:
    """Piecewise-polynomial form of ``s -> vol_slab(dimension, s)``.

    ``pieces[k]`` is the pair ``(k, p_k)`` where p_k gives the volume on
    the half-open interval [k, k+1).  The piece for [d, d+1) collapses to
    the constant 1 after cancellation.
    """

    dimension: int
    pieces: tuple[tuple[int, RationalPolynomial], ...]

    def piece(self, k: int) -> RationalPolynomial:
        """Polynomial valid on [k, k+1)."""
        if not 0 <= k <= self.dimension:
            raise ValueError(f"no piece for interval [{k}, {k + 1})")
        return self.pieces[k][1]

    def evaluate(self, s: Rational) -> Fraction:
        """Evaluate the piecewise form; agrees with ``vol_slab`` everywhere."""
        s = Fraction(s)
        if s <= 0:
            return Fraction(0)
        if s >= self.dimension:
            return Fraction(1)
        return self.piece(floor(s))(s)


def slab_polynomial(d: int) -> SlabVolumePolynomial:
    """Build the full piecewise representation of v_s for dimension ``d``."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    pieces = []
    acc = RationalPolynomial()
    for k in range(d + 1):
        sign = -1 if k % 2 else 1
        acc = acc + RationalPolynomial.shifted_power(k, d, Fraction(sign, factorial(k) * factorial(d - k)))
        pieces.append((k, acc))
    return SlabVolumePolynomial(dimension=d, pieces=tuple(pieces))

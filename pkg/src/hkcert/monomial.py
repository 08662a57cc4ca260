"""Frobenius-power colengths of m-primary monomial ideals.

For a monomial ideal I in n variables, the bracket power I^[q] is
generated by the q-scaled exponent vectors, and the colength of R/I^[q]
is the number of lattice points outside the scaled staircase.  Counting
is a deterministic row-major scan of the bounding box given by the pure
powers in I (the m-primary witness), with the innermost axis collapsed
to a threshold test: once a point enters the ideal every later point in
the row is inside too, by upward closure.

This realizes the Hilbert-Kunz numerator exactly at finite q and serves
as the desk-scale oracle for the slab-volume machinery via
``mixed_colength`` (colength of J^{floor(sq)} + J^[q] for a pure-power
parameter ideal J, whose normalization converges to e(J) * v_s).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from pathlib import Path
from typing import Sequence

from .rationals import Rational

__all__ = [
    "ColengthEntry",
    "ColengthSequence",
    "MonomialIdeal",
    "ehk_estimate",
    "frobenius_colength",
    "load_ideal",
    "mixed_colength",
    "parse_generators",
]


@dataclass(frozen=True)
class MonomialIdeal:
    """m-primary monomial ideal given by exponent vectors.

    The constructor rejects ideals without a pure power of every
    variable (the m-primariness witness) and stores the generator list
    minimally and sorted: no generator componentwise-dominates another.
    """

    num_vars: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise ValueError("need at least one variable")
        gens = [tuple(int(c) for c in g) for g in self.generators]
        if not gens:
            raise ValueError("generator list must be non-empty")
        for g in gens:
            if len(g) != self.num_vars:
                raise ValueError(f"generator {g} does not have {self.num_vars} exponents")
            if any(c < 0 for c in g):
                raise ValueError(f"generator {g} has a negative exponent")
            if not any(g):
                raise ValueError("the unit monomial generates the whole ring")
        minimal: list[tuple[int, ...]] = []
        for g in sorted(set(gens)):
            if not any(_dominates(g, h) for h in gens if h != g):
                minimal.append(g)
        for i in range(self.num_vars):
            if not any(_is_pure_power(g, i) for g in minimal):
                raise ValueError(f"not m-primary: no pure power of variable {i} among the generators")
        object.__setattr__(self, "generators", tuple(minimal))

    def pure_power_exponents(self) -> tuple[int, ...]:
        """Exponent c_i of the (minimal) pure power of each variable."""
        return tuple(
            min(g[i] for g in self.generators if _is_pure_power(g, i)) for i in range(self.num_vars)
        )

    def is_parameter_ideal(self) -> bool:
        """True when the generators are exactly one pure power per variable."""
        return len(self.generators) == self.num_vars


def _dominates(g: tuple[int, ...], h: tuple[int, ...]) -> bool:
    return all(a >= b for a, b in zip(g, h))


def _is_pure_power(g: tuple[int, ...], i: int) -> bool:
    return g[i] > 0 and all(c == 0 for j, c in enumerate(g) if j != i)


def frobenius_colength(ideal: MonomialIdeal, q: int) -> int:
    """Number of lattice points outside the bracket power I^[q].

    Scans the box prod [0, q*c_i) row-major; for each prefix of the
    first n-1 coordinates the points outside the ideal along the last
    axis form an initial segment, whose length is the smallest last
    exponent among generators already dominated in the prefix.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    box = [q * c for c in ideal.pure_power_exponents()]
    scaled = [tuple(q * c for c in g) for g in ideal.generators]
    count = 0
    for prefix in itertools.product(*(range(b) for b in box[:-1])):
        threshold = box[-1]
        for g in scaled:
            if g[-1] < threshold and all(prefix[i] >= g[i] for i in range(len(prefix))):
                threshold = g[-1]
                if threshold == 0:
                    break
        count += threshold
    return count


def mixed_colength(ideal: MonomialIdeal, s: Rational, q: int) -> int:
    """Colength of J^{floor(s*q)} + J^[q] for a pure-power ideal J.

    Membership of a point a in J^k is decided by sum_i floor(a_i / c_i)
    >= k, so the complement of the union consists of the points of the
    bracket-power box whose floor-sum stays below floor(s*q).
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    if not ideal.is_parameter_ideal():
        raise ValueError("mixed_colength requires a pure-power (parameter) ideal")
    s = Fraction(s)
    if s < 0:
        raise ValueError("s must be >= 0")
    cut = floor(s * q)
    if cut <= 0:
        return 0
    cs = ideal.pure_power_exponents()
    budget = cut - 1
    last = cs[-1]
    count = 0
    for prefix in itertools.product(*(range(q * c) for c in cs[:-1])):
        remaining = budget - sum(a // c for a, c in zip(prefix, cs))
        if remaining >= 0:
            count += min(q * last, (remaining + 1) * last)
    return count


@dataclass(frozen=True)
class ColengthEntry:
    q: int
    colength: int
    normalized: Fraction


@dataclass(frozen=True)
class ColengthSequence:
    """Raw colength sequence lambda(R/I^[q]) / q^n; no extrapolation."""

    ideal: MonomialIdeal
    entries: tuple[ColengthEntry, ...]


def ehk_estimate(ideal: MonomialIdeal, q_list: Sequence[int]) -> ColengthSequence:
    """Colengths and normalized values for each q in an increasing list."""
    qs = list(q_list)
    if not qs:
        raise ValueError("q_list must be non-empty")
    if any(b <= a for a, b in zip(qs, qs[1:])) or qs[0] < 1:
        raise ValueError("q_list must be strictly increasing and positive")
    entries = []
    for q in qs:
        colength = frobenius_colength(ideal, q)
        entries.append(ColengthEntry(q=q, colength=colength, normalized=Fraction(colength, q**ideal.num_vars)))
    return ColengthSequence(ideal=ideal, entries=tuple(entries))


def parse_generators(text: str) -> MonomialIdeal:
    """Parse the ideal file format: one generator per line, space-separated exponents.

    Blank lines and lines starting with '#' are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append(tuple(int(tok) for tok in line.split()))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: expected space-separated integers, got {raw!r}") from exc
    if not rows:
        raise ValueError("no generators found")
    width = len(rows[0])
    return MonomialIdeal(num_vars=width, generators=tuple(rows))


def load_ideal(path: str | Path) -> MonomialIdeal:
    return parse_generators(Path(path).read_text())

"""Lower-bound engine for Hilbert-Kunz multiplicities.

All bounds are exact rationals.  The central inequality is the volume
bound

    e_HK >= e * (v_s - sum_i v_{s - t_i})

for a ring of dimension d and multiplicity e, where v is the hypercube
slab volume, s >= 0 is a rational slice parameter, and the t_i are
valuations of the generators counted against a minimal reduction (all
t_i = 1 in the uniform case with generator count r).  On top of it sit:

* interval certification: with r = e - 2 the bound becomes the quadratic
  G(e) = e (v_s - (e-2) v_{s-1}) in e, a downward parabola whose apex
  (v_s + 2 v_{s-1}) / (2 v_{s-1}) locates the maximum, so an entire
  integer range [a, b] of multiplicities is certified by min(G(a), G(b))
  when the apex is interior, and by the appropriate endpoint otherwise;
* duality bounds e/(e-t+1), e/(e-nu+d), e/2 for Cohen-Macaulay type t,
  Gorenstein embedding dimension nu, and minimal multiplicity;
* closed forms for the quadric hypersurface x_0^2 + ... + x_d^2 in
  characteristic p for d in {5, 6};
* recursive bounds obtained from degree-n radical ring extensions, and
  their closed forms depending only on the dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, factorial
from typing import Optional, Sequence

from .rationals import Rational, format_rational
from .slab import vol_slab

__all__ = [
    "BoundQuery",
    "IntervalCertRow",
    "RadicalParams",
    "certify_interval",
    "duality_bound_cm",
    "duality_bound_gorenstein",
    "fixed_dimension_bound",
    "minimal_multiplicity_bound",
    "optimize_slice",
    "quadratic_apex",
    "quadratic_bound",
    "quadric_ehk",
    "radical_recursion_bound",
    "radical_step_bound",
    "volume_lower_bound",
]


@dataclass(frozen=True)
class BoundQuery:
    """Input to the volume bound.

    Generators are given either uniformly (``generator_count`` = r, each
    with valuation 1) or explicitly (``valuations`` = t_1..t_r); the
    uniform form is equivalent to valuations (1, ..., 1).
    """

    dimension: int
    multiplicity: Fraction
    slice_point: Fraction
    generator_count: Optional[int] = None
    valuations: Optional[tuple[Fraction, ...]] = None

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ValueError("dimension must be >= 1")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be >= 1")
        if self.slice_point < 0:
            raise ValueError("slice parameter must be >= 0")
        if (self.generator_count is None) == (self.valuations is None):
            raise ValueError("exactly one of generator_count / valuations is required")
        if self.generator_count is not None and self.generator_count < 0:
            raise ValueError("generator count must be >= 0")
        if self.valuations is not None and any(t <= 0 for t in self.valuations):
            raise ValueError("valuations must be positive")

    def effective_valuations(self) -> tuple[Fraction, ...]:
        if self.valuations is not None:
            return self.valuations
        return (Fraction(1),) * int(self.generator_count or 0)


def volume_lower_bound(
    d: int,
    e: Rational,
    s: Rational,
    r: Optional[int] = None,
    valuations: Optional[Sequence[Rational]] = None,
) -> Fraction:
    """Exact value of ``e * (v_s - sum_i v_{s - t_i})``.

    May be <= 0 (a vacuous bound); the caller decides usefulness.
    Volumes at negative index are 0 by definition.
    """
    vals = None if valuations is None else tuple(Fraction(t) for t in valuations)
    query = BoundQuery(d, Fraction(e), Fraction(s), generator_count=r, valuations=vals)
    s = query.slice_point
    total = vol_slab(d, s)
    for t in query.effective_valuations():
        total -= vol_slab(d, s - t)
    return query.multiplicity * total


def optimize_slice(d: int, e: Rational, r: int, grid_resolution: int) -> tuple[Fraction, Fraction]:
    """Best-found slice parameter for the uniform volume bound.

    Scans the grid {k/grid_resolution : 0 <= k <= d*grid_resolution},
    then refines around the best point by 8 rounds of step halving.
    Every evaluation is exact, so the returned bound is always valid;
    only the optimality of s is best-effort.
    """
    if grid_resolution < 2:
        raise ValueError("grid_resolution must be >= 2")
    best_s = Fraction(0)
    best_bound = volume_lower_bound(d, e, best_s, r=r)
    for k in range(1, d * grid_resolution + 1):
        s = Fraction(k, grid_resolution)
        bound = volume_lower_bound(d, e, s, r=r)
        if bound > best_bound:
            best_s, best_bound = s, bound
    step = Fraction(1, grid_resolution)
    for _ in range(8):
        step /= 2
        for candidate in (best_s - step, best_s + step):
            if 0 <= candidate <= d:
                bound = volume_lower_bound(d, e, candidate, r=r)
                if bound > best_bound:
                    best_s, best_bound = candidate, bound
    return best_s, best_bound


def duality_bound_cm(e: Rational, t: int) -> Fraction:
    """Bound e/(e - t + 1) for a Cohen-Macaulay ring of type t."""
    e = Fraction(e)
    if t < 1:
        raise ValueError("type must be >= 1")
    if e - t + 1 <= 0:
        raise ValueError("requires e - t + 1 > 0")
    return e / (e - t + 1)


def duality_bound_gorenstein(e: Rational, nu: int, d: int) -> Fraction:
    """Bound e/(e - nu + d) for a non-F-regular Gorenstein ring of embedding dimension nu."""
    e = Fraction(e)
    if nu < 1 or d < 1:
        raise ValueError("nu and d must be >= 1")
    if e - nu + d <= 0:
        raise ValueError("requires e - nu + d > 0")
    return e / (e - nu + d)


def minimal_multiplicity_bound(e: Rational) -> Fraction:
    """Bound e/2 for a Cohen-Macaulay ring of minimal multiplicity."""
    e = Fraction(e)
    if e < 1:
        raise ValueError("multiplicity must be >= 1")
    return e / 2


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def quadric_ehk(p: int, d: int) -> Fraction:
    """Hilbert-Kunz multiplicity of the quadric hypersurface in d+1 variables.

    Closed forms, valid for odd primes p:

        d = 5:  (17 p^2 + 12) / (15 p^2 + 10)
        d = 6:  (781 p^4 + 656 p^2 + 315) / (720 p^4 + 570 p^2 + 270)
    """
    if not _is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if d == 5:
        return Fraction(17 * p**2 + 12, 15 * p**2 + 10)
    if d == 6:
        return Fraction(781 * p**4 + 656 * p**2 + 315, 720 * p**4 + 570 * p**2 + 270)
    raise ValueError(f"unsupported dimension {d} (closed forms exist for d in {{5, 6}})")


def quadratic_bound(d: int, e: Rational, s: Rational) -> Fraction:
    """G(e) = e * (v_s - (e - 2) v_{s-1}), the volume bound at r = e - 2."""
    e, s = Fraction(e), Fraction(s)
    if d < 1:
        raise ValueError("dimension must be >= 1")
    return e * (vol_slab(d, s) - (e - 2) * vol_slab(d, s - 1))


def quadratic_apex(d: int, s: Rational) -> Optional[Fraction]:
    """Apex (v_s + 2 v_{s-1}) / (2 v_{s-1}) of the parabola e -> G(e).

    Returns None when v_{s-1} = 0: G is then linear and increasing in e,
    so there is no interior maximum.
    """
    s = Fraction(s)
    if d < 1:
        raise ValueError("dimension must be >= 1")
    v_prev = vol_slab(d, s - 1)
    if v_prev == 0:
        return None
    return (vol_slab(d, s) + 2 * v_prev) / (2 * v_prev)


@dataclass(frozen=True)
class IntervalCertRow:
    """Certified lower bound for G(e) over all integers e in [e_low, e_high]."""

    e_low: int
    e_high: int
    s: Fraction
    apex: Optional[Fraction]
    certified_bound: Fraction
    target: Fraction
    passed: bool
    branch: str
    notes: str


def certify_interval(d: int, e_low: int, e_high: int, s: Rational, target: Rational) -> IntervalCertRow:
    """Certify ``min G(e) >= target`` over integer e in [e_low, e_high].

    G is a downward parabola in e (leading coefficient -v_{s-1}), so when
    the apex is interior the minimum over the interval sits at an
    endpoint and min(G(e_low), G(e_high)) certifies; when the apex lies
    right (left) of the interval G is increasing (decreasing) there and
    the left (right) endpoint certifies.  If v_{s-1} = 0 the parabola
    degenerates to a line with slope v_s >= 0 and the left endpoint
    certifies; the branch field reports the monotonicity direction.
    """
    if e_low > e_high:
        raise ValueError("e_low must be <= e_high")
    s, target = Fraction(s), Fraction(target)
    g_low = quadratic_bound(d, e_low, s)
    g_high = quadratic_bound(d, e_high, s)
    apex = quadratic_apex(d, s)
    if apex is None:
        branch = "degenerate-linear-increasing"
        certified = g_low
        notes = f"v_(s-1) = 0: G(e) = e*v_s is linear increasing; G({e_low}) certifies"
    elif e_low <= apex <= e_high:
        branch = "apex-interior"
        certified = min(g_low, g_high)
        notes = (
            f"apex {format_rational(apex)} inside [{e_low}, {e_high}]; "
            f"G({e_low}) = {format_rational(g_low)}, G({e_high}) = {format_rational(g_high)}"
        )
    elif apex > e_high:
        branch = "increasing"
        certified = g_low
        notes = f"apex {format_rational(apex)} right of [{e_low}, {e_high}]; G increasing; G({e_low}) certifies"
    else:
        branch = "decreasing"
        certified = g_high
        notes = f"apex {format_rational(apex)} left of [{e_low}, {e_high}]; G decreasing; G({e_high}) certifies"
    return IntervalCertRow(
        e_low=e_low,
        e_high=e_high,
        s=s,
        apex=apex,
        certified_bound=certified,
        target=target,
        passed=certified >= target,
        branch=branch,
        notes=notes,
    )


def radical_step_bound(e: Rational, k: int, n: int, b: int, ehk_next: Rational) -> Fraction:
    """One-step lower bound across a degree-n radical extension R -> S.

    Given e_HK(S) = ehk_next, with k the embedding codimension and b the
    fraction-field degree of the extension:

        k = e - 2:  e(n-1)/(en-2)       + n(e-2)/(b(en-2))       * ehk_next
        k < e - 2:  e(n-1)/((n-1)e+k+1) + n(k+1)/(b((n-1)e+k+1)) * ehk_next

    With b = n both maps fix the value 1 and contract toward it.
    """
    e, ehk_next = Fraction(e), Fraction(ehk_next)
    if n < 2:
        raise ValueError("root degree n must be >= 2")
    if not 1 <= b <= n:
        raise ValueError("field-extension degree b must satisfy 1 <= b <= n")
    if not 3 <= k <= e - 2:
        raise ValueError("embedding codimension k must satisfy 3 <= k <= e - 2")
    if ehk_next < 1:
        raise ValueError("ehk_next must be >= 1")
    if k == e - 2:
        den = e * n - 2
        return e * (n - 1) / den + Fraction(n) * (e - 2) / (b * den) * ehk_next
    den = (n - 1) * e + k + 1
    return e * (n - 1) / den + Fraction(n * (k + 1)) / (b * den) * ehk_next


@dataclass(frozen=True)
class RadicalParams:
    """Parameters of the iterated radical-extension recursion.

    ``iterations`` is the number of contraction steps applied to the base
    bound (the recursion depth); ``b`` defaults to ``n``, the case in
    which the per-step closed form below is derived.
    """

    dimension: int
    multiplicity: Fraction
    codimension: int
    root_degree: int
    iterations: int
    field_degree: Optional[int] = None

    def __post_init__(self) -> None:
        if self.dimension < 2:
            raise ValueError("dimension must be >= 2")
        if self.multiplicity < 6:
            raise ValueError("multiplicity must be >= 6")
        if not 3 <= self.codimension <= self.multiplicity - 2:
            raise ValueError("codimension must satisfy 3 <= k <= e - 2")
        if self.root_degree < 2:
            raise ValueError("root degree must be >= 2")
        if self.iterations < 0:
            raise ValueError("iterations must be >= 0")
        b = self.root_degree if self.field_degree is None else self.field_degree
        if not 1 <= b <= self.root_degree:
            raise ValueError("field degree must satisfy 1 <= b <= n")


def radical_recursion_bound(params: RadicalParams) -> Fraction:
    """Closed form of the iterated recursion (b = n case).

        k = e - 2:  1 + ((e-2)/(en-2))**iterations * (e/2 - 1)
        k < e - 2:  1 + ((k+1)/((n-1)e+k+1))**iterations * (1/d)

    The base values e/2 and 1 + 1/d are the bounds available at the first
    non-F-regular stage of the extension tower.
    """
    e = Fraction(params.multiplicity)
    k, n, it = params.codimension, params.root_degree, params.iterations
    if k == e - 2:
        return 1 + ((e - 2) / (e * n - 2)) ** it * (e / 2 - 1)
    return 1 + ((k + 1) / ((n - 1) * e + k + 1)) ** it * Fraction(1, params.dimension)


def fixed_dimension_bound(d: int, e: Rational, case: str) -> Fraction:
    """Dimension-only lower bound for Gorenstein F-regular non-complete-intersections.

    For e >= d! + 1 the bound 1 + 1/d! applies directly.  Otherwise the
    radical-extension recursion run d times with n = ceil(d/2) (if the
    codimension is maximal, ``case="minimal_gap"``) or n = ceil(d/3)
    (``case="general"``) gives

        minimal_gap:  1 + (4 / (6*ceil(d/2) - 2))**d * 2
        general:      1 + (4 / (ceil(d/3)*d! + 4))**d * (1/d)
    """
    e = Fraction(e)
    if d < 2:
        raise ValueError("dimension must be >= 2")
    if e < 6:
        raise ValueError("multiplicity must be >= 6")
    if e >= factorial(d) + 1:
        return 1 + Fraction(1, factorial(d))
    if case == "minimal_gap":
        return 1 + Fraction(4, 6 * ceil(Fraction(d, 2)) - 2) ** d * 2
    if case == "general":
        return 1 + Fraction(4, ceil(Fraction(d, 3)) * factorial(d) + 4) ** d * Fraction(1, d)
    raise ValueError(f"case must be 'minimal_gap' or 'general', got {case!r}")

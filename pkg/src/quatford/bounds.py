"""Generator-size bounds: Chalk's generating-set estimates and the
Johansson-style radius cutoff derived from the covolume.

The exact radius of an isometric circle here is r = 1/sqrt(beta_sq), which
equals 2/sqrt(norm - 2) for the Chalk norm; a `literal_radius` switch also
exposes the cruder variant r = 1/sqrt(norm - 2) for comparison output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import euler_phi


@dataclass(frozen=True)
class ChalkBounds:
    n: int
    a1: float
    growth_factor: float


@dataclass(frozen=True)
class CoordBounds:
    x0: int
    x1: int
    x2: int
    x3: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.x0, self.x1, self.x2, self.x3)


@dataclass(frozen=True)
class BoundReport:
    chalk_n: int
    chalk_a1: float
    chalk_growth_factor: float
    johansson_eps: float
    norm_bound: float
    coord_bounds: CoordBounds


def chalk_bounds(p: int, d_h: int) -> ChalkBounds:
    """Chalk's bounds for a generating set of the unit group of a maximal
    order presented as (p, d_H / Q):

        N <= 6 + phi(d_H),   |A_1| < 2 + 4 N / pi,
        |A_{i+1}| < (9/64) (p^2 / d_H^2) N |A_i|^5.

    The quintic recursion constant is reported as-is; it grows far too fast
    to be usable in practice and is provided for comparison only.
    """
    n = 6 + euler_phi(d_h)
    a1 = 2.0 + 4.0 * n / math.pi
    growth = (9.0 / 64.0) * (p * p) / (d_h * d_h) * n
    return ChalkBounds(n=n, a1=a1, growth_factor=growth)


def johansson_epsilon(vol_over_pi: Fraction | float, k: float = 3.0) -> float:
    """Radius cutoff eps = (1/k) (1 - sqrt(V / (2 + V))) for V the covolume.

    Requires k > 2.  When the fundamental domain fits inside the disc of
    Euclidean radius 1 - eps, every side's isometric circle radius exceeds
    eps, which bounds the entries of a generating set.  The constant is a
    coarse area-based estimate, not a proven containment radius: domains
    with deep thin parts can have generators a few percent below it (the
    certified (17,12) domain does, at k = 3).  It is only a heuristic;
    domain certification never relies on it.
    """
    if k <= 2:
        raise ValueError(f"k must exceed 2, got {k}")
    vol = float(vol_over_pi) * math.pi
    if vol <= 0:
        raise ValueError("volume must be positive")
    return (1.0 - math.sqrt(vol / (2.0 + vol))) / k


def entry_bounds(
    p: int, a: int, eps: float, literal_radius: bool = False
) -> CoordBounds:
    """Per-coordinate bounds for elements whose circle radius exceeds eps.

    radius > eps gives beta_sq = a x1^2 + p x2^2 < 1/eps^2 and therefore
    alpha_sq = x0^2 + a p x3^2 < 1 + 1/eps^2; the bounds are the floors of
    the implied per-coordinate maxima.  With `literal_radius` the cruder
    radius convention shrinks the right-hand side by a factor of 4.
    """
    if not 0 < eps <= 1:
        raise ValueError(f"eps must lie in (0, 1], got {eps}")
    beta_cap = 1.0 / (eps * eps)
    if literal_radius:
        beta_cap /= 4.0
    alpha_cap = 1.0 + beta_cap
    return CoordBounds(
        x0=int(math.floor(math.sqrt(alpha_cap))),
        x1=int(math.floor(math.sqrt(beta_cap / a))),
        x2=int(math.floor(math.sqrt(beta_cap / p))),
        x3=int(math.floor(math.sqrt(alpha_cap / (a * p)))),
    )


def norm_bound(eps: float, literal_radius: bool = False) -> float:
    """Upper bound on the Chalk norm of a generator with radius > eps.

    From radius = 2/sqrt(norm - 2): norm < 2 + 4/eps^2 (or 2 + 1/eps^2 with
    the literal radius convention).
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    scale = 1.0 if literal_radius else 4.0
    return 2.0 + scale / (eps * eps)


def bound_report(
    p: int, a: int, d_h: int, vol_over_pi: Fraction, k: float = 3.0
) -> BoundReport:
    chalk = chalk_bounds(p, d_h)
    eps = johansson_epsilon(vol_over_pi, k)
    return BoundReport(
        chalk_n=chalk.n,
        chalk_a1=chalk.a1,
        chalk_growth_factor=chalk.growth_factor,
        johansson_eps=eps,
        norm_bound=norm_bound(eps),
        coord_bounds=entry_bounds(p, a, eps),
    )

"""Poincare disc geometry for the unit group: the SU(1,1) representation,
isometric circles, element classification, and the height and norm functions
used to order and bound group elements.

Floating point enters here, but key circle invariants (center modulus
squared, radius squared) are kept as exact rationals alongside the floats.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .unitgroup import UnitElement

TWO_PI = 2.0 * math.pi


class NoIsometricCircle(ValueError):
    """Element fixes the origin, so it has no isometric circle."""


class ParabolicElementError(RuntimeError):
    """Trace +-2 for a non-identity element: impossible in these cocompact
    unit groups, so it signals corrupted input."""


@dataclass(frozen=True)
class DiscMatrix:
    """The element as a matrix (alpha, conj(beta); beta, conj(alpha)) in
    SU(1,1), acting on the unit disc."""

    element: UnitElement
    alpha: complex
    beta: complex

    @property
    def alpha_sq(self) -> int:
        return self.element.alpha_sq

    @property
    def beta_sq(self) -> int:
        return self.element.beta_sq

    def apply(self, z: complex) -> complex:
        return (self.alpha * z + self.beta.conjugate()) / (
            self.beta * z + self.alpha.conjugate()
        )

    def image_of_zero(self) -> complex:
        return self.beta.conjugate() / self.alpha.conjugate()


def to_disc(e: UnitElement) -> DiscMatrix:
    """Embed: alpha = x0 + i x3 sqrt(ap), beta = x1 sqrt(a) + i x2 sqrt(p)."""
    x0, x1, x2, x3 = e.x
    sa = math.sqrt(e.a)
    sp = math.sqrt(e.p)
    sap = math.sqrt(e.a * e.p)
    return DiscMatrix(
        element=e,
        alpha=complex(x0, x3 * sap),
        beta=complex(x1 * sa, x2 * sp),
    )


def classify(e: UnitElement) -> str:
    """'hyperbolic' (|trace| > 2) or 'elliptic' (trace 0).

    Traces here are even integers, so |trace| = 2 would mean x0 = +-1; for a
    non-identity element that would be parabolic, which cocompact unit
    groups of division algebras do not contain.
    """
    if e.is_identity:
        raise ValueError("identity has no type")
    x0 = e.x[0]
    if abs(x0) > 1:
        return "hyperbolic"
    if x0 == 0:
        return "elliptic"
    raise ParabolicElementError(
        f"element {e.x} has trace {2 * x0}: no parabolic elements can exist here"
    )


@dataclass(frozen=True)
class IsometricCircle:
    """Isometric circle of a group element: center -conj(alpha)/beta and
    radius 1/|beta|, orthogonal to the unit circle.

    `mid_angle` and `half_width` describe the arc the circle cuts out of the
    boundary |z| = 1: the open interval of polar angles covered by the open
    disc, of half-width arccos(1/|center|) around arg(center).
    """

    owner: UnitElement
    center: complex
    radius: float
    center_mod_sq: Fraction
    radius_sq: Fraction
    mid_angle: float
    half_width: float

    @property
    def closest_point_radius(self) -> float:
        """Distance from the origin to the nearest point of the circle."""
        return abs(self.center) - self.radius


def isometric_circle(m: DiscMatrix) -> IsometricCircle:
    if m.beta == 0:
        raise NoIsometricCircle(f"{m.element.x} fixes the origin")
    center = -m.alpha.conjugate() / m.beta
    radius = 1.0 / abs(m.beta)
    center_mod_sq = Fraction(m.alpha_sq, m.beta_sq)
    radius_sq = Fraction(1, m.beta_sq)
    mid = cmath.phase(center) % TWO_PI
    half_width = math.acos(min(1.0, 1.0 / abs(center)))
    return IsometricCircle(
        owner=m.element,
        center=center,
        radius=radius,
        center_mod_sq=center_mod_sq,
        radius_sq=radius_sq,
        mid_angle=mid,
        half_width=half_width,
    )


def circle_of(e: UnitElement) -> IsometricCircle:
    return isometric_circle(to_disc(e))


def hutchinson_height(e: UnitElement) -> float:
    """The height 2 / (|alpha| + 1) = 1 - |z|^2 at the point of the
    element's isometric circle nearest the origin.

    Monotone decreasing in |alpha|, so enumeration by ascending alpha_sq
    processes circles from the deepest inward reach outward.
    """
    return 2.0 / (math.sqrt(e.alpha_sq) + 1.0)


def chalk_norm(e: UnitElement) -> int:
    """Squared matrix norm a^2 + b^2 + c^2 + d^2 = 2 (alpha_sq + beta_sq).

    An even integer >= 2; equals 2 cosh of the hyperbolic displacement of i
    under the element in the upper half-plane model.
    """
    return 2 * (e.alpha_sq + e.beta_sq)


def upper_half_plane_matrix(e: UnitElement) -> tuple[float, float, float, float]:
    """The real SL(2) matrix of the element acting on the upper half-plane."""
    x0, x1, x2, x3 = e.x
    sa = math.sqrt(e.a)
    sp = math.sqrt(e.p)
    return (
        x0 + x1 * sa,
        sp * (x2 + x3 * sa),
        sp * (x2 - x3 * sa),
        x0 - x1 * sa,
    )


def hyperbolic_distance_uhp(z: complex, w: complex) -> float:
    """Hyperbolic distance in the upper half-plane (curvature -1)."""
    return math.acosh(1.0 + abs(z - w) ** 2 / (2.0 * z.imag * w.imag))

import cmath
import math
import random
from fractions import Fraction

import pytest

from quatford.geometry import (
    NoIsometricCircle,
    ParabolicElementError,
    chalk_norm,
    circle_of,
    classify,
    hutchinson_height,
    hyperbolic_distance_uhp,
    isometric_circle,
    to_disc,
    upper_half_plane_matrix,
)
from quatford.unitgroup import UnitElement, elements_up_to, identity


def test_to_disc_identity():
    m = to_disc(identity(5, 2))
    assert m.alpha == 1 and m.beta == 0


def test_to_disc_example():
    m = to_disc(UnitElement(5, 2, (3, 2, 0, 0)))
    assert m.alpha == pytest.approx(3.0)
    assert m.beta == pytest.approx(2.0 * math.sqrt(2.0))


def test_to_disc_trace_zero_alpha_imaginary():
    m = to_disc(UnitElement(11, 2, (0, 7, 3, 3)))
    assert m.alpha.real == 0.0
    assert abs(m.alpha.imag) > 0


def test_disc_matrix_invariants():
    for e in elements_up_to(5, 2, 500):
        m = to_disc(e)
        assert abs(abs(m.alpha) ** 2 - e.alpha_sq) <= 1e-12 * max(1, e.alpha_sq)
        assert abs(abs(m.beta) ** 2 - e.beta_sq) <= 1e-12 * max(1, e.beta_sq)
        det = abs(m.alpha) ** 2 - abs(m.beta) ** 2
        assert abs(det - 1.0) <= 1e-10


def test_to_disc_is_a_homomorphism():
    rng = random.Random(8)
    elems = elements_up_to(5, 2, 200)
    for _ in range(60):
        x, y = rng.choice(elems), rng.choice(elems)
        mx, my = to_disc(x), to_disc(y)
        mz = to_disc(x * y)
        prod_alpha = mx.alpha * my.alpha + mx.beta.conjugate() * my.beta
        prod_beta = mx.beta * my.alpha + mx.alpha.conjugate() * my.beta
        # the product may differ by the PSL sign normalization
        same = abs(prod_alpha - mz.alpha) + abs(prod_beta - mz.beta) < 1e-9
        flipped = abs(prod_alpha + mz.alpha) + abs(prod_beta + mz.beta) < 1e-9
        assert same or flipped


def test_classify():
    assert classify(UnitElement(5, 2, (3, 2, 0, 0))) == "hyperbolic"
    assert classify(UnitElement(11, 2, (0, 7, 3, 3))) == "elliptic"
    with pytest.raises(ValueError):
        classify(identity(5, 2))
    fake = UnitElement.__new__(UnitElement)
    object.__setattr__(fake, "p", 5)
    object.__setattr__(fake, "a", 2)
    object.__setattr__(fake, "x", (1, 1, 1, 1))  # trace 2, not identity
    with pytest.raises(ParabolicElementError):
        classify(fake)


def test_isometric_circle_example():
    e = UnitElement(5, 2, (3, 2, 0, 0))
    c = isometric_circle(to_disc(e))
    assert c.radius == pytest.approx(1.0 / (2.0 * math.sqrt(2.0)))
    assert c.center.real == pytest.approx(-3.0 / (2.0 * math.sqrt(2.0)))
    assert c.center.imag == pytest.approx(0.0)
    assert c.center_mod_sq - c.radius_sq == 1  # exact rational orthogonality
    assert c.center_mod_sq == Fraction(9, 8)
    assert c.half_width == pytest.approx(math.acos(1.0 / abs(c.center)))
    assert c.half_width == pytest.approx(0.33983690945412165)


def test_isometric_circle_orthogonality_exact():
    for e in elements_up_to(5, 2, 2000):
        if e.is_identity:
            continue
        c = circle_of(e)
        assert c.center_mod_sq - c.radius_sq == 1
        assert 0.0 < c.half_width < math.pi / 2


def test_no_circle_for_identity():
    with pytest.raises(NoIsometricCircle):
        circle_of(identity(5, 2))


def test_hutchinson_height():
    assert hutchinson_height(identity(5, 2)) == 1.0
    assert hutchinson_height(UnitElement(5, 2, (3, 2, 0, 0))) == pytest.approx(0.5)
    prev = 2.0
    for e in elements_up_to(5, 2, 10_000):
        h = hutchinson_height(e)
        assert 0.0 < h <= 1.0
        assert h <= prev + 1e-15  # non-increasing along the stream
        prev = h
        if not e.is_identity:
            c = circle_of(e)
            nearest = abs(c.center) - c.radius
            assert h == pytest.approx(1.0 - nearest * nearest, abs=1e-12)


def test_chalk_norm():
    assert chalk_norm(identity(5, 2)) == 2
    assert chalk_norm(UnitElement(5, 2, (3, 2, 0, 0))) == 34
    for e in elements_up_to(5, 2, 300):
        n = chalk_norm(e)
        assert n >= 2 and n % 2 == 0
        if not e.is_identity:
            # exact radius identity: 1/sqrt(beta_sq) = 2/sqrt(norm - 2)
            assert n - 2 == 4 * e.beta_sq


def test_chalk_norm_is_hyperbolic_displacement():
    elems = [e for e in elements_up_to(5, 2, 3000) if not e.is_identity]
    rng = random.Random(2)
    sample = rng.sample(elems, 100)
    for e in sample:
        a, b, c, d = upper_half_plane_matrix(e)
        gi = complex(a * 1j + b) / complex(c * 1j + d)
        rho = hyperbolic_distance_uhp(1j, gi)
        assert 2.0 * math.cosh(rho) == pytest.approx(chalk_norm(e), rel=1e-9)


def test_boundary_arc_geometry():
    # the arc endpoints e^(i(mid +- half_width)) lie on the circle
    for e in elements_up_to(5, 2, 200):
        if e.is_identity:
            continue
        c = circle_of(e)
        for sign in (-1, 1):
            z = cmath.rect(1.0, c.mid_angle + sign * c.half_width)
            assert abs(abs(z - c.center) - c.radius) < 1e-9

"""Acceptance gate: one test per criterion, each printing a pass/fail line
(run with `pytest tests/test_acceptance.py -v -s` to see them inline).
Every tolerance and time limit is pinned here.
"""

import math
import random
import time
from contextlib import contextmanager
from fractions import Fraction

from quatford.arith import (
    Factorization,
    hilbert_symbol,
    relevant_places,
    valid_pairs,
)
from quatford.bounds import entry_bounds, johansson_epsilon
from quatford.domain import ford_domain, reduce_to_domain, word_product
from quatford.quat import eichler_volume, johansson_volume
from quatford.unitgroup import _normalize, elements_up_to, identity


@contextmanager
def criterion(num: int, description: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"criterion {num:2d} [{description}]: FAIL")
        raise
    elapsed = time.perf_counter() - start
    print(f"criterion {num:2d} [{description}]: PASS ({elapsed:.2f}s)")


def test_criterion_01_hilbert_reciprocity():
    with criterion(1, "Hilbert reciprocity for |a|, |b| <= 30"):
        start = time.perf_counter()
        for a in range(-30, 31):
            if a == 0:
                continue
            for b in range(-30, 31):
                if b == 0:
                    continue
                product = 1
                for v in relevant_places(a, b):
                    product *= hilbert_symbol(a, b, v)
                assert product == 1, (a, b)
        assert time.perf_counter() - start < 1.0


def test_criterion_02_eichler_collapse():
    with criterion(2, "maximal-order collapse to (1/3) prod (q-1)"):
        for d_h in (6, 10, 22, 26):
            product = Fraction(d_h, 3)
            for q in Factorization.of(d_h).primes:
                # maximal local data: e = -1 and norm index 1 at each q | dH
                product *= Fraction(q * q - 1, q * (q + 1))
            assert product == eichler_volume(d_h)


def test_criterion_03_pair_5_2():
    with criterion(3, "(5,2): exact invariants + certified domain"):
        start = time.perf_counter()
        report = johansson_volume(5, 2)
        assert report.d_o == 40
        assert report.vol_over_pi == Fraction(8)
        assert report.d_h == 10
        assert report.unit_index == 6
        dom = ford_domain(5, 2)
        assert dom.certified
        assert abs(dom.area - 8.0 * math.pi) <= 1e-6 * 8.0 * math.pi
        assert dom.genus == 3
        for k, side in enumerate(dom.sides):
            j = side.paired_with
            assert j != k and dom.sides[j].paired_with == k
        assert time.perf_counter() - start <= 60.0


def test_criterion_04_pair_13_2():
    with criterion(4, "(13,2): exact invariants + certified domain"):
        start = time.perf_counter()
        report = johansson_volume(13, 2)
        assert report.vol_over_pi == Fraction(24)
        assert report.unit_index == 6
        dom = ford_domain(13, 2)
        assert dom.certified
        assert abs(dom.area - 24.0 * math.pi) <= 1e-6 * 24.0 * math.pi
        assert dom.genus == 7
        assert time.perf_counter() - start <= 600.0


def test_criterion_05_pair_11_7():
    with criterion(5, "(11,7): formula-level invariants"):
        report = johansson_volume(11, 7)
        assert report.vol_over_pi == Fraction(80)
        assert report.d_h == 22
        assert report.unit_index == 24


def test_criterion_06_torsion_freeness():
    with criterion(6, "no trace-zero elements for p in {5,13,17}"):
        start = time.perf_counter()
        for p, a in valid_pairs(17):
            if p not in (5, 13, 17):
                continue
            for e in elements_up_to(p, a, 10_000):
                assert e.x[0] != 0, (p, a, e.x)
        assert time.perf_counter() - start < 30.0


def test_criterion_07_enumeration_oracle():
    with criterion(7, "(5,2) enumeration equals brute-force loop"):
        start = time.perf_counter()
        p, a, bound = 5, 2, 12
        m_max = bound * bound + 1
        brute = set()
        for x0 in range(-bound, bound + 1):
            for x1 in range(-bound, bound + 1):
                partial = x0 * x0 - a * x1 * x1
                for x2 in range(-bound, bound + 1):
                    partial2 = partial - p * x2 * x2
                    for x3 in range(-bound, bound + 1):
                        if partial2 + a * p * x3 * x3 == 1:
                            brute.add(_normalize((x0, x1, x2, x3)))
        enumerated = {
            e.x
            for e in elements_up_to(p, a, m_max)
            if max(abs(c) for c in e.x) <= bound
        }
        # agreement on the shared range; the quadruple loop also reaches
        # alpha_sq beyond m_max (large |x3|), so restrict it symmetrically
        brute_in_range = {x for x in brute if x[0] ** 2 + a * p * x[3] ** 2 <= m_max}
        assert enumerated == brute_in_range
        assert enumerated <= brute
        assert time.perf_counter() - start < 10.0


def test_criterion_08_generator_soundness():
    with criterion(8, "(5,2) reduction: exact identity products"):
        start = time.perf_counter()
        dom = ford_domain(5, 2)
        assert dom.certified
        for e in elements_up_to(5, 2, 2000):
            word = reduce_to_domain(e, dom)
            assert (word_product(dom, word) * e).is_identity, e.x
        rng = random.Random(20240808)
        for _ in range(100):
            e = identity(5, 2)
            for _ in range(rng.randint(1, 6)):
                e = e * rng.choice(dom.generators)
            word = reduce_to_domain(e, dom)
            assert (word_product(dom, word) * e).is_identity
        assert time.perf_counter() - start <= 60.0


def test_criterion_09_bound_validation():
    with criterion(9, "p <= 17 survey: radii and x0 bounds hold"):
        start = time.perf_counter()
        for p, a in valid_pairs(17):
            if p < 5:
                continue
            report = johansson_volume(p, a)
            dom = ford_domain(p, a)
            assert dom.certified, (p, a)
            eps = johansson_epsilon(report.vol_over_pi, 3.0)
            x0_bound = entry_bounds(p, a, eps).x0
            for side in dom.sides:
                assert side.circle.radius > eps, (p, a, side.owner.x)
            assert max(abs(g.x[0]) for g in dom.generators) <= x0_bound, (p, a)
        assert time.perf_counter() - start <= 900.0


def test_criterion_10_unit_index_integrality():
    with criterion(10, "unit index integral for all valid (p,a), p <= 37"):
        start = time.perf_counter()
        for p, a in valid_pairs(37):
            report = johansson_volume(p, a)
            assert report.unit_index >= 1
            assert (
                Fraction(report.unit_index) * report.maximal_vol_over_pi
                == report.vol_over_pi
            )
        assert time.perf_counter() - start < 5.0

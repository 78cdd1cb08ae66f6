"""Exact enumeration of the unit group of the canonical order of (p, a):
integer solutions of x0^2 - a x1^2 - p x2^2 + a p x3^2 = 1, streamed in
ascending |alpha|^2 = x0^2 + a p x3^2.

Splitting the norm equation as alpha_sq - beta_sq = 1 with
beta_sq = a x1^2 + p x2^2 turns each level m into two independent binary
form equations, solved exactly with integer square roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterator

from .quat import check_group_parameters

Coords = tuple[int, int, int, int]


@dataclass(frozen=True)
class UnitElement:
    """A sign-normalized solution, with its exact |alpha|^2 and |beta|^2.

    Normalization identifies gamma with -gamma (the group acts through its
    image in PSL): x0 > 0, or x0 = 0 and the first nonzero of (x1, x2, x3)
    is positive.
    """

    p: int
    a: int
    x: Coords

    def __post_init__(self) -> None:
        x0, x1, x2, x3 = self.x
        a, p = self.a, self.p
        norm = x0 * x0 - a * x1 * x1 - p * x2 * x2 + a * p * x3 * x3
        if norm != 1:
            raise ValueError(f"{self.x} has norm {norm}, expected 1")
        if not _is_normalized(self.x):
            raise ValueError(f"{self.x} is not sign-normalized")

    @property
    def alpha_sq(self) -> int:
        x0, _, _, x3 = self.x
        return x0 * x0 + self.a * self.p * x3 * x3

    @property
    def beta_sq(self) -> int:
        _, x1, x2, _ = self.x
        return self.a * x1 * x1 + self.p * x2 * x2

    @property
    def is_identity(self) -> bool:
        return self.x == (1, 0, 0, 0)

    @property
    def trace(self) -> int:
        return 2 * self.x[0]

    @classmethod
    def from_coords(cls, p: int, a: int, coords: Coords) -> "UnitElement":
        """Construct from any solution quadruple, applying the sign
        normalization; rejects non-solutions."""
        return cls(p, a, _normalize(tuple(coords)))  # type: ignore[arg-type]

    def inverse(self) -> "UnitElement":
        """The quaternion conjugate, normalized (norm-1 inverse)."""
        x0, x1, x2, x3 = self.x
        return UnitElement(self.p, self.a, _normalize((x0, -x1, -x2, -x3)))

    def __mul__(self, other: "UnitElement") -> "UnitElement":
        """Exact group product (in PSL: result is sign-normalized)."""
        if (self.p, self.a) != (other.p, other.a):
            raise ValueError("cannot multiply elements of different groups")
        a, b = self.a, self.p
        x0, x1, x2, x3 = self.x
        y0, y1, y2, y3 = other.x
        z = (
            x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3,
            x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
            x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
            x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
        )
        return UnitElement(self.p, self.a, _normalize(z))


def identity(p: int, a: int) -> UnitElement:
    return UnitElement(p, a, (1, 0, 0, 0))


def _is_normalized(x: Coords) -> bool:
    if x[0] != 0:
        return x[0] > 0
    for v in x[1:]:
        if v != 0:
            return v > 0
    return False  # the zero tuple is not a unit anyway


def _normalize(x: Coords) -> Coords:
    if _is_normalized(x):
        return x
    return (-x[0], -x[1], -x[2], -x[3])


def _binary_range(
    c1: int, c2: int, lo: int, hi: int
) -> dict[int, list[tuple[int, int]]]:
    """Nonnegative solutions of c1 u^2 + c2 v^2 = m for every m in [lo, hi).

    Walks the lattice points of the form below hi instead of solving each m
    separately, so a whole window of levels costs O(hi / sqrt(c1 c2)).
    """
    out: dict[int, list[tuple[int, int]]] = {}
    lo = max(lo, 0)
    v = 0
    while c2 * v * v < hi:
        base = c2 * v * v
        need = lo - base
        if need > 0:
            u = isqrt((need - 1) // c1 + 1)
            while c1 * u * u < need:
                u += 1
        else:
            u = 0
        val = base + c1 * u * u
        while val < hi:
            out.setdefault(val, []).append((u, v))
            u += 1
            val = base + c1 * u * u
        v += 1
    return out


def binary_representations(c1: int, c2: int, m: int) -> list[tuple[int, int]]:
    """All (u, v) with u, v >= 0 and c1 u^2 + c2 v^2 = m, sorted by (u, v)."""
    if c1 < 1 or c2 < 1:
        raise ValueError("form coefficients must be positive")
    if m < 0:
        return []
    return sorted(_binary_range(c1, c2, m, m + 1).get(m, []))


def _sign_spread(u: int, v: int) -> list[tuple[int, int]]:
    us = (u, -u) if u else (0,)
    vs = (v, -v) if v else (0,)
    return [(su, sv) for su in us for sv in vs]


def _combine(
    p: int, a: int, alphas: list[tuple[int, int]], betas: list[tuple[int, int]]
) -> list[UnitElement]:
    seen: set[Coords] = set()
    for x0, x3 in alphas:
        for x1, x2 in betas:
            for s0, s3 in _sign_spread(x0, x3):
                for s1, s2 in _sign_spread(x1, x2):
                    seen.add(_normalize((s0, s1, s2, s3)))
    return [UnitElement(p, a, x) for x in sorted(seen)]


def levels_in_range(
    p: int, a: int, lo: int, hi: int
) -> Iterator[tuple[int, list[UnitElement]]]:
    """(m, elements at level m) for the nonempty levels with lo <= m < hi,
    in ascending m.  Levels are independent, so windows can be consumed
    lazily and in parallel."""
    ap = a * p
    alphas = _binary_range(1, ap, lo, hi)
    betas = _binary_range(a, p, lo - 1, hi - 1)
    for m in sorted(alphas):
        beta = betas.get(m - 1)
        if beta is None:
            continue
        yield m, _combine(p, a, alphas[m], beta)


def elements_at_level(p: int, a: int, m: int) -> list[UnitElement]:
    """All normalized elements with alpha_sq exactly m, sorted by coords.

    The alpha parts solve x0^2 + a p x3^2 = m and the beta parts solve
    a x1^2 + p x2^2 = m - 1; any combination has norm exactly 1.
    """
    if m < 1:
        return []
    for _, elems in levels_in_range(p, a, m, m + 1):
        return elems
    return []


def elements_up_to(p: int, a: int, m_max: int) -> list[UnitElement]:
    """All normalized elements with alpha_sq <= m_max, sorted by
    (alpha_sq, x0, x1, x2, x3)."""
    check_group_parameters(p, a)
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    out: list[UnitElement] = []
    for _, elems in levels_in_range(p, a, 1, m_max + 1):
        out.extend(elems)
    return out


def congruence_filter(elements: list[UnitElement], a: int) -> list[UnitElement]:
    """Keep elements with x2 divisible by a.

    These form a finite-index subgroup (the x2-congruence condition is
    preserved by products) which is torsion free: its elements satisfy
    x0^2 = 1 mod a, so none has trace zero.
    """
    return [e for e in elements if e.x[2] % a == 0]

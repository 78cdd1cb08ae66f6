"""Ford fundamental domain construction in the unit disc.

The domain of the unit group is the region exterior to every isometric
circle.  It is an intersection of hyperbolic half-planes containing the
origin, hence star-shaped about 0: its boundary is a polar graph of circular
arcs.  The builder maintains that boundary as a circular list of arcs (plus
"free" arcs on |z| = 1 while it is still open) and splices each new
isometric circle in as the element stream arrives in ascending alpha_sq.

Termination is certified, not assumed: once the region is closed, any
element at level m has circle radius 1/sqrt(m-1), which cannot reach the
region when m - 1 > (2 rho / (1 - rho^2))^2 for rho the largest vertex
modulus.  Every level below the cutoff is consumed and allowed to re-trim.
"""

from __future__ import annotations

import cmath
import math
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction

from .geometry import TWO_PI, IsometricCircle, circle_of, to_disc
from .quat import check_group_parameters, johansson_volume
from .unitgroup import UnitElement, identity, levels_in_range

_ANGLE_TOL = 1e-12
_INSIDE_MARGIN = 1e-13


class DomainError(RuntimeError):
    """Domain construction reached an inconsistent state."""


class ReductionError(RuntimeError):
    """Point reduction failed to terminate; would falsify generation."""


@dataclass
class DomainSide:
    """One boundary side: a sub-arc of its owner's isometric circle."""

    owner: UnitElement
    circle: IsometricCircle
    v_start: complex
    v_end: complex
    paired_with: int = -1


@dataclass
class FordDomain:
    p: int
    a: int
    sides: list[DomainSide]
    vertices: list[complex]
    area: float | None
    genus: int | None
    generators: list[UnitElement]
    level_reached: int
    certified: bool
    vol_over_pi: Fraction
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        """JSON-ready form: elements as integer quadruples, arcs as endpoint
        pairs, the pairing as an index list, plus area/genus/certification."""
        return {
            "p": self.p,
            "a": self.a,
            "certified": self.certified,
            "level_reached": self.level_reached,
            "area": self.area,
            "area_over_pi": None if self.area is None else self.area / math.pi,
            "genus": self.genus,
            "vol_over_pi": str(self.vol_over_pi),
            "generators": [list(g.x) for g in self.generators],
            "sides": [
                {
                    "owner": list(s.owner.x),
                    "start": [s.v_start.real, s.v_start.imag],
                    "end": [s.v_end.real, s.v_end.imag],
                    "circle_center": [s.circle.center.real, s.circle.center.imag],
                    "circle_radius": s.circle.radius,
                    "paired_with": s.paired_with,
                }
                for s in self.sides
            ],
            "vertices": [[v.real, v.imag] for v in self.vertices],
            "notes": self.notes,
        }


# ---------------------------------------------------------------------------
# boundary arcs


@dataclass
class _Arc:
    circle: IsometricCircle | None  # None: free arc on the unit circle
    start: float  # polar angle of v_start in [0, 2 pi)
    length: float  # angular extent, (0, 2 pi]
    v_start: complex
    v_end: complex

    @property
    def is_free(self) -> bool:
        return self.circle is None


def _norm_angle(t: float) -> float:
    t = math.fmod(t, TWO_PI)
    return t + TWO_PI if t < 0 else t


def _offset(t: float, origin: float) -> float:
    """Angular offset of t past origin, in [0, 2 pi)."""
    return _norm_angle(t - origin)


def _radial_on_circle(circle: IsometricCircle, theta: float) -> float:
    """Distance from 0 to the near branch of the circle along the ray theta."""
    s = abs(circle.center) * math.cos(theta - circle.mid_angle)
    if s < 1.0:
        s = 1.0
    return s - math.sqrt(max(s * s - 1.0, 0.0))


def _radial(arc: _Arc, theta: float) -> float:
    if arc.circle is None:
        return 1.0
    return _radial_on_circle(arc.circle, theta)


def _circle_intersections(
    c1: IsometricCircle, c2: IsometricCircle
) -> list[complex]:
    o1, o2 = c1.center, c2.center
    r1, r2 = c1.radius, c2.radius
    dvec = o2 - o1
    d = abs(dvec)
    if d < 1e-15:
        return []
    along = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    h_sq = r1 * r1 - along * along
    if h_sq < 0.0:
        if h_sq > -1e-14:  # tangent within noise
            h_sq = 0.0
        else:
            return []
    base = o1 + along * dvec / d
    if h_sq == 0.0:
        return [base]
    off = math.sqrt(h_sq) * complex(-dvec.imag, dvec.real) / d
    return [base + off, base - off]


class _Builder:
    """Incremental star-shaped boundary of the region exterior to all
    inserted circles, inside the unit disc."""

    def __init__(self, tolerance: float):
        self.tol = tolerance
        one = complex(1.0, 0.0)
        self.arcs: list[_Arc] = [_Arc(None, 0.0, TWO_PI, one, one)]
        self._starts: list[float] = [0.0]
        self.closed = False
        self.rho_max = 1.0

    # -- queries ------------------------------------------------------------

    def _anchor(self, theta: float) -> int:
        """Index of the arc whose range contains theta (arcs tile the
        circle, up to splice noise)."""
        i = bisect_right(self._starts, theta) - 1
        return i if i >= 0 else len(self.arcs) - 1

    def _overlapping(self, start: float, length: float) -> list[int]:
        """Indices of arcs whose angular range meets [start, start+length],
        in boundary order starting from the arc containing `start`."""
        n = len(self.arcs)
        i = self._anchor(_norm_angle(start))
        out = [i]
        j = (i + 1) % n
        while j != i and _offset(self.arcs[j].start, start) < length:
            out.append(j)
            j = (j + 1) % n
        return out

    def _arc_at(self, theta: float) -> _Arc:
        return self.arcs[self._anchor(_norm_angle(theta))]

    def _rho(self, theta: float) -> float:
        return _radial(self._arc_at(theta), theta)

    def reachable(self, circle: IsometricCircle) -> bool:
        """Can the circle possibly reach the current region?

        The boundary radius over the circle's angular window is at most the
        largest endpoint modulus of the overlapping arcs (1 on free arcs);
        if the circle's nearest point is farther out than that, it cannot
        cut anything.
        """
        start = circle.mid_angle - circle.half_width
        length = 2.0 * circle.half_width
        cap = 0.0
        for i in self._overlapping(_norm_angle(start), length):
            arc = self.arcs[i]
            if arc.is_free:
                return True
            cap = max(cap, abs(arc.v_start), abs(arc.v_end))
        return circle.closest_point_radius <= cap + 1e-12

    # -- insertion ----------------------------------------------------------

    def insert(self, circle: IsometricCircle) -> bool:
        """Splice one isometric circle into the boundary.

        Returns True if the region changed.  Collects the crossing events of
        the circle with the current boundary, finds the angular windows
        where the circle is strictly inside the region, and replaces the
        boundary there with the circle's own arc.
        """
        phi, w = circle.mid_angle, circle.half_width
        window_start = _norm_angle(phi - w)
        window_len = 2.0 * w

        events: list[tuple[float, complex, int]] = []  # (offset, point, arc idx)
        for i in self._overlapping(window_start, window_len):
            arc = self.arcs[i]
            if arc.is_free:
                for ang in (phi - w, phi + w):
                    rel = _offset(ang, arc.start)
                    if rel <= arc.length + _ANGLE_TOL:
                        off = _offset(ang, window_start)
                        events.append((min(off, window_len), cmath.rect(1.0, ang), i))
            else:
                for z in _circle_intersections(circle, arc.circle):
                    if abs(z) >= 1.0 - 1e-13:
                        continue
                    th = _norm_angle(cmath.phase(z))
                    if _offset(th, arc.start) > arc.length + _ANGLE_TOL:
                        continue
                    off = _offset(th, window_start)
                    if off > window_len + _ANGLE_TOL:
                        continue
                    events.append((min(off, window_len), z, i))
        if not events:
            return False

        events.sort(key=lambda e: e[0])
        deduped: list[tuple[float, complex, int]] = []
        for ev in events:
            if deduped and ev[0] - deduped[-1][0] < 1e-11 and abs(
                ev[1] - deduped[-1][1]
            ) < 10 * self.tol:
                continue
            deduped.append(ev)
        events = deduped

        # Sign of (circle depth - boundary depth) on the gaps between events.
        bounds = [0.0] + [e[0] for e in events] + [window_len]
        inside: list[bool] = []
        for k in range(len(bounds) - 1):
            mid = window_start + 0.5 * (bounds[k] + bounds[k + 1])
            if bounds[k + 1] - bounds[k] < _ANGLE_TOL:
                inside.append(False)
                continue
            t_c = _radial_on_circle(circle, mid)
            inside.append(t_c < self._rho(mid) - _INSIDE_MARGIN)

        # Windows: maximal runs of inside-gaps, delimited by real events.
        windows: list[tuple[tuple[float, complex, int], tuple[float, complex, int]]] = []
        k = 0
        while k < len(inside):
            if inside[k]:
                if k == 0 or k == len(inside) - 1:
                    # Strictly inside right at the circle's own arc edge can
                    # only be a tangency artifact; ignore it.
                    k += 1
                    continue
                j = k
                while j < len(inside) and inside[j]:
                    j += 1
                if j == len(inside):
                    break
                windows.append((events[k - 1], events[j - 1]))
                k = j
            else:
                k += 1

        applied = False
        for ev_in, ev_out in windows:
            if ev_out[0] - ev_in[0] < _ANGLE_TOL:
                continue
            self._splice(circle, window_start, ev_in, ev_out)
            applied = True
        if applied:
            self._refresh()
        return applied

    def _splice(
        self,
        circle: IsometricCircle,
        window_start: float,
        ev_in: tuple[float, complex, int],
        ev_out: tuple[float, complex, int],
    ) -> None:
        cut_lo = _norm_angle(window_start + ev_in[0])
        cut_len = ev_out[0] - ev_in[0]
        z_in, z_out = ev_in[1], ev_out[1]

        new_arcs: list[_Arc] = []
        for arc in self.arcs:
            rel = _offset(cut_lo, arc.start)
            covered: list[tuple[float, float]] = []
            for shift in (rel, rel - TWO_PI):
                lo = max(shift, 0.0)
                hi = min(shift + cut_len, arc.length)
                if hi > lo:
                    covered.append((lo, hi))
            if not covered:
                new_arcs.append(arc)
                continue
            # Keep the complement of the covered ranges within [0, length].
            kept: list[tuple[float, float]] = []
            cursor = 0.0
            for lo, hi in sorted(covered):
                if lo - cursor > _ANGLE_TOL:
                    kept.append((cursor, lo))
                cursor = max(cursor, hi)
            if arc.length - cursor > _ANGLE_TOL:
                kept.append((cursor, arc.length))
            for lo, hi in kept:
                v0 = (
                    arc.v_start
                    if lo <= _ANGLE_TOL
                    else self._cut_point(arc, lo, cut_lo, cut_len, z_in, z_out)
                )
                v1 = (
                    arc.v_end
                    if hi >= arc.length - _ANGLE_TOL
                    else self._cut_point(arc, hi, cut_lo, cut_len, z_in, z_out)
                )
                new_arcs.append(
                    _Arc(arc.circle, _norm_angle(arc.start + lo), hi - lo, v0, v1)
                )
        new_arcs.append(_Arc(circle, cut_lo, cut_len, z_in, z_out))
        new_arcs.sort(key=lambda a: a.start)
        self.arcs = new_arcs
        self._starts = [a.start for a in new_arcs]

    def _cut_point(
        self,
        arc: _Arc,
        offset_in_arc: float,
        cut_lo: float,
        cut_len: float,
        z_in: complex,
        z_out: complex,
    ) -> complex:
        """Endpoint for a piece boundary: the matching splice event point."""
        theta = _norm_angle(arc.start + offset_in_arc)
        if abs(_offset(theta, cut_lo)) < 1e-9 or abs(_offset(theta, cut_lo) - TWO_PI) < 1e-9:
            return z_in
        end_angle = _norm_angle(cut_lo + cut_len)
        if abs(_offset(theta, end_angle)) < 1e-9 or abs(_offset(theta, end_angle) - TWO_PI) < 1e-9:
            return z_out
        # Fall back to the geometric point on the arc (tangency noise).
        if arc.circle is None:
            return cmath.rect(1.0, theta)
        return cmath.rect(_radial_on_circle(arc.circle, theta), theta)

    def _refresh(self) -> None:
        self.closed = all(not a.is_free for a in self.arcs)
        if self.closed:
            self.rho_max = max(
                max(abs(a.v_start), abs(a.v_end)) for a in self.arcs
            )

    def cutoff_level_sq(self) -> float:
        rho = self.rho_max
        return (2.0 * rho / (1.0 - rho * rho)) ** 2


# ---------------------------------------------------------------------------
# area


def interior_angle(center_in: complex, center_out: complex, v: complex) -> float:
    """Interior angle at v between two boundary circles, measured inside the
    region that lies outside both disks (inward normals point away from the
    centers)."""
    u1 = (v - center_in) / abs(v - center_in)
    u2 = (v - center_out) / abs(v - center_out)
    dot = u1.real * u2.real + u1.imag * u2.imag
    return math.pi - math.acos(max(-1.0, min(1.0, dot)))


def geodesic_polygon_area(arcs: list[tuple[complex, complex, complex]]) -> float:
    """Gauss-Bonnet area (curvature -1) of a closed geodesic polygon.

    `arcs` lists (circle center, start vertex, end vertex) in boundary
    order; each circle must be orthogonal to the unit circle so its arc is a
    geodesic of the disc model.  Area = (n - 2) pi - sum of interior angles.
    """
    n = len(arcs)
    if n < 2:
        raise ValueError("polygon needs at least 2 sides")
    total = 0.0
    for i in range(n):
        center_in, _, v_end = arcs[i]
        center_out, v_start, _ = arcs[(i + 1) % n]
        v = 0.5 * (v_end + v_start)
        total += interior_angle(center_in, center_out, v)
    return (n - 2) * math.pi - total


def domain_area(domain: FordDomain) -> float:
    """Recompute the Gauss-Bonnet area of a closed domain."""
    if not domain.sides:
        raise ValueError("domain has no sides; cannot compute area")
    return geodesic_polygon_area(
        [(s.circle.center, s.v_start, s.v_end) for s in domain.sides]
    )


def vertex_cycles(domain: FordDomain) -> list[tuple[list[int], float]]:
    """Vertex identification cycles under the side pairing, with angle sums.

    Vertex i is the shared endpoint of sides i-1 and i.  Applying the owner
    of side i sends vertex i to an endpoint of the paired side; iterating
    that map partitions the vertices into the classes identified in the
    quotient surface.  Each class returns with its total interior angle:
    2 pi at a regular point of a closed surface, 2 pi / m at an orbifold
    point of order m.
    """
    if not domain.sides:
        raise ValueError("domain has no sides")
    if any(s.paired_with < 0 for s in domain.sides):
        raise ValueError("vertex cycles need a fully paired domain")
    n = len(domain.sides)
    sides = domain.sides
    angles = [
        interior_angle(
            sides[(i - 1) % n].circle.center,
            sides[i].circle.center,
            sides[i].v_start,
        )
        for i in range(n)
    ]

    def successor(i: int) -> int:
        side = sides[i]
        image = to_disc(side.owner).apply(side.v_start)
        j = side.paired_with
        partner = sides[j]
        if abs(image - partner.v_start) <= abs(image - partner.v_end):
            return j
        return (j + 1) % n

    cycles: list[tuple[list[int], float]] = []
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = successor(i)
        cycles.append((cycle, sum(angles[k] for k in cycle)))
    return cycles


# ---------------------------------------------------------------------------
# construction driver


def ford_domain(
    p: int,
    a: int,
    tolerance: float = 1e-9,
    hard_level_cap: int = 10_000_000,
) -> FordDomain:
    """Build the Ford fundamental domain of the unit group of (p, a).

    Consumes group elements in ascending alpha_sq.  Returns a certified
    domain once every level below the geometric cutoff has been consumed; if
    `hard_level_cap` is reached first the partial result is returned with
    certified=False.
    """
    check_group_parameters(p, a)
    report = johansson_volume(p, a)
    builder = _Builder(tolerance)
    notes: list[str] = []

    chunk = 1 << 14
    level_reached = 1
    certified = False
    while not certified:
        if level_reached >= hard_level_cap:
            notes.append(f"hard level cap {hard_level_cap} reached before cutoff")
            break
        lo = level_reached + 1
        hi = min(lo + chunk, hard_level_cap + 1)
        for m, elems in levels_in_range(p, a, lo, hi):
            if builder.closed and (m - 1) > builder.cutoff_level_sq():
                certified = True
                level_reached = m - 1
                break
            for e in elems:
                circle = circle_of(e)
                if builder.closed and not builder.reachable(circle):
                    continue
                builder.insert(circle)
            level_reached = m
        if not certified:
            level_reached = hi - 1
            if builder.closed and level_reached > builder.cutoff_level_sq():
                certified = True
    m = level_reached

    if not builder.closed:
        return FordDomain(
            p=p,
            a=a,
            sides=[],
            vertices=[],
            area=None,
            genus=None,
            generators=[],
            level_reached=m,
            certified=False,
            vol_over_pi=report.vol_over_pi,
            notes=notes + ["region never closed"],
        )

    sides = _finalize_sides(builder, tolerance, notes)
    vertices = [s.v_start for s in sides]
    paired_ok = _pair_sides(sides, notes)
    area = geodesic_polygon_area([(s.circle.center, s.v_start, s.v_end) for s in sides])

    degenerate = _near_duplicate_vertices(vertices, tolerance)
    if degenerate:
        certified = False
        notes.append("unmerged near-duplicate vertices; possible tangency degeneracy")
    if not paired_ok:
        certified = False
        notes.append("side pairing incomplete")

    genus = None
    if p % 4 == 1:
        g = round(area / (4.0 * math.pi) + 1.0)
        if abs(area - 4.0 * math.pi * (g - 1)) <= 1e-4 * max(area, 1.0):
            genus = g
        else:
            notes.append("area is not close to 4 pi (g - 1); genus left unset")

    generators: list[UnitElement] = []
    seen = set()
    for s in sides:
        if s.owner.x not in seen:
            seen.add(s.owner.x)
            generators.append(s.owner)

    return FordDomain(
        p=p,
        a=a,
        sides=sides,
        vertices=vertices,
        area=area,
        genus=genus,
        generators=generators,
        level_reached=m,
        certified=certified,
        vol_over_pi=report.vol_over_pi,
        notes=notes,
    )


def _finalize_sides(
    builder: _Builder, tolerance: float, notes: list[str]
) -> list[DomainSide]:
    arcs = [a for a in builder.arcs if a.length > 1e-10]
    if len(arcs) != len(builder.arcs):
        notes.append(f"dropped {len(builder.arcs) - len(arcs)} sliver arcs")
    n = len(arcs)
    # Weld consecutive endpoints (they may differ by splice noise).
    for i in range(n):
        nxt = arcs[(i + 1) % n]
        gap = abs(arcs[i].v_end - nxt.v_start)
        if gap > 1e-6:
            raise DomainError(f"boundary discontinuity of {gap:.2e}")
        mid = 0.5 * (arcs[i].v_end + nxt.v_start)
        arcs[i].v_end = mid
        nxt.v_start = mid

    sides = [
        DomainSide(
            owner=a.circle.owner,  # type: ignore[union-attr]
            circle=a.circle,  # type: ignore[arg-type]
            v_start=a.v_start,
            v_end=a.v_end,
        )
        for a in arcs
    ]
    return _split_self_paired(sides, tolerance)


def _split_self_paired(
    sides: list[DomainSide], tolerance: float
) -> list[DomainSide]:
    """Split sides owned by trace-zero elements at the owner's fixed point.

    A trace-zero element is an involution in PSL whose isometric circle is
    its own partner; the side maps onto itself with a half-turn about the
    fixed point, which is the point of the circle nearest the origin.
    Splitting there makes the side pairing fixed-point free.
    """
    out: list[DomainSide] = []
    for s in sides:
        if s.owner.trace != 0:
            out.append(s)
            continue
        circle = s.circle
        z_fix = (abs(circle.center) - circle.radius) * cmath.exp(
            1j * circle.mid_angle
        )
        d_start = abs(z_fix - s.v_start)
        d_end = abs(z_fix - s.v_end)
        if d_start < 10 * tolerance or d_end < 10 * tolerance:
            out.append(s)  # fixed point already a vertex; nothing to split
            continue
        a_start = _norm_angle(cmath.phase(s.v_start))
        span = _offset(_norm_angle(cmath.phase(s.v_end)), a_start)
        rel = _offset(_norm_angle(cmath.phase(z_fix)), a_start)
        if rel >= span:
            out.append(s)  # fixed point not on this sub-arc (partner differs)
            continue
        out.append(DomainSide(s.owner, circle, s.v_start, z_fix))
        out.append(DomainSide(s.owner, circle, z_fix, s.v_end))
    return out


def _pair_sides(sides: list[DomainSide], notes: list[str]) -> bool:
    """Match each side to the side its owner maps it onto.

    The owner maps its own isometric circle onto the circle of its inverse,
    so the partner of a side owned by g is a side owned by g^(-1) whose
    endpoints are the images of this side's endpoints.
    """
    ok = True
    by_owner: dict[tuple, list[int]] = {}
    for i, s in enumerate(sides):
        by_owner.setdefault(s.owner.x, []).append(i)
    for i, s in enumerate(sides):
        if s.paired_with >= 0:
            continue
        matrix = to_disc(s.owner)
        img0 = matrix.apply(s.v_start)
        img1 = matrix.apply(s.v_end)
        inv = s.owner.inverse()
        best_j, best_err = -1, math.inf
        for j in by_owner.get(inv.x, []):
            t = sides[j]
            err = min(
                abs(img0 - t.v_start) + abs(img1 - t.v_end),
                abs(img0 - t.v_end) + abs(img1 - t.v_start),
            )
            if err < best_err:
                best_err, best_j = err, j
        if best_j < 0 or best_err > 1e-6 or best_j == i:
            ok = False
            notes.append(f"no partner for side {i} (owner {s.owner.x})")
            continue
        sides[i].paired_with = best_j
        sides[best_j].paired_with = i
    return ok and all(s.paired_with >= 0 for s in sides)


def _near_duplicate_vertices(vertices: list[complex], tolerance: float) -> bool:
    n = len(vertices)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(vertices[i] - vertices[j]) < 10 * tolerance:
                return True
    return False


# ---------------------------------------------------------------------------
# reduction to the domain


def reduce_to_domain(
    e: UnitElement, domain: FordDomain, max_steps: int | None = None
) -> list[int]:
    """Express e through the domain's generators by Ford reduction.

    Tracks the point g(0); while it lies strictly inside some side's
    isometric disk, left-multiply g by that side's owner.  Every strict step
    lowers the integer alpha_sq of the running product, so the walk reaches
    +-identity, and the recorded word w = [i1, ..., ik] satisfies

        generators[ik] * ... * generators[i1] * e == identity   (in PSL).
    """
    if not domain.certified:
        raise ValueError("reduction requires a certified domain")
    index_of = {g.x: k for k, g in enumerate(domain.generators)}
    budget = max_steps if max_steps is not None else 10 * e.alpha_sq + 1000
    g = e
    word: list[int] = []
    plateau_seen: set[tuple] = set()
    for _ in range(budget):
        if g.is_identity:
            return word
        z = to_disc(g).image_of_zero()
        scored = sorted(
            (abs(z - s.circle.center) / s.circle.radius, k)
            for k, s in enumerate(domain.sides)
        )
        ratio, k = scored[0]
        side = domain.sides[k]
        if ratio < 1.0 - 1e-12:
            g = side.owner * g
            word.append(index_of[side.owner.x])
            plateau_seen.clear()
            continue
        if ratio < 1.0 + 1e-9:
            # On a side: step along any boundary circle that does not raise
            # alpha_sq and that we have not tried from this position.
            stepped = False
            for r, k2 in scored:
                if r > 1.0 + 1e-9:
                    break
                cand = domain.sides[k2].owner * g
                if cand.alpha_sq <= g.alpha_sq and cand.x not in plateau_seen:
                    plateau_seen.add(g.x)
                    g = cand
                    word.append(index_of[domain.sides[k2].owner.x])
                    stepped = True
                    break
            if stepped:
                continue
        raise ReductionError(
            f"element {e.x} stalled at {g.x}; point {z} not inside any side disk"
        )
    raise ReductionError(f"reduction of {e.x} exceeded {budget} steps")


def word_product(domain: FordDomain, word: list[int]) -> UnitElement:
    """The product generators[i_k] * ... * generators[i_1] for a word as
    returned by reduce_to_domain."""
    g = identity(domain.p, domain.a)
    for i in word:
        g = domain.generators[i] * g
    return g

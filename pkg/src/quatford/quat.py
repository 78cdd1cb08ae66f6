"""Quaternion algebras over Q, orders and discriminants, Eichler invariants,
and the exact covolume and unit-index formulas.

Volumes are carried as exact rationals `vol_over_pi`; a float pi only enters
at presentation and geometry boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .arith import Factorization, Ramification, is_prime, legendre, ramification


class NotAnOrderError(ValueError):
    """Lattice fails one of the order axioms, or its Gram determinant is not
    a perfect square."""


class UnsupportedFormShape(ValueError):
    """Ternary form falls outside the diagonal shapes handled here."""


class DefiniteAlgebraError(ValueError):
    """Operation requires an indefinite algebra."""


class VolumeConsistencyError(ArithmeticError):
    """A quantity that must be a positive integer came out fractional."""


@dataclass(frozen=True)
class QuatAlgebra:
    """The rational quaternion algebra with i^2 = a, j^2 = b, ij = -ji."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a == 0 or self.b == 0:
            raise ValueError("algebra parameters must be nonzero")

    @property
    def ramification(self) -> Ramification:
        return _cached_ramification(self.a, self.b)

    @property
    def discriminant(self) -> int:
        """d_H, the product of the finite ramified primes."""
        return self.ramification.d_h

    @property
    def is_definite(self) -> bool:
        return self.ramification.definite

    def one(self) -> "Quaternion":
        return Quaternion(self, (Fraction(1), Fraction(0), Fraction(0), Fraction(0)))

    def element(self, x0, x1, x2, x3) -> "Quaternion":
        return Quaternion(
            self, (Fraction(x0), Fraction(x1), Fraction(x2), Fraction(x3))
        )

    def basis(self) -> tuple["Quaternion", "Quaternion", "Quaternion", "Quaternion"]:
        """1, i, j, ij."""
        return (
            self.element(1, 0, 0, 0),
            self.element(0, 1, 0, 0),
            self.element(0, 0, 1, 0),
            self.element(0, 0, 0, 1),
        )


@lru_cache(maxsize=None)
def _cached_ramification(a: int, b: int) -> Ramification:
    return ramification(a, b)


@dataclass(frozen=True)
class Quaternion:
    """Element x0 + x1 i + x2 j + x3 ij with exact rational coordinates."""

    algebra: QuatAlgebra
    coords: tuple[Fraction, Fraction, Fraction, Fraction]

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        if self.algebra != other.algebra:
            raise ValueError("cannot multiply across different algebras")
        a, b = self.algebra.a, self.algebra.b
        x0, x1, x2, x3 = self.coords
        y0, y1, y2, y3 = other.coords
        return Quaternion(
            self.algebra,
            (
                x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3,
                x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
                x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
                x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
            ),
        )

    def __add__(self, other: "Quaternion") -> "Quaternion":
        if self.algebra != other.algebra:
            raise ValueError("cannot add across different algebras")
        return Quaternion(
            self.algebra,
            tuple(x + y for x, y in zip(self.coords, other.coords)),  # type: ignore[arg-type]
        )

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "Quaternion":
        s = Fraction(scalar)
        return Quaternion(self.algebra, tuple(s * x for x in self.coords))  # type: ignore[arg-type]

    def conjugate(self) -> "Quaternion":
        x0, x1, x2, x3 = self.coords
        return Quaternion(self.algebra, (x0, -x1, -x2, -x3))

    def trace(self) -> Fraction:
        return 2 * self.coords[0]

    def norm(self) -> Fraction:
        a, b = self.algebra.a, self.algebra.b
        x0, x1, x2, x3 = self.coords
        return x0 * x0 - a * x1 * x1 - b * x2 * x2 + a * b * x3 * x3

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)


def _solve_linear(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a small square system exactly by Gaussian elimination."""
    n = len(matrix)
    m = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise NotAnOrderError("singular coordinate matrix")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [v - factor * w for v, w in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def _det(m: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction-free-ish elimination on a copy."""
    n = len(m)
    a = [row[:] for row in m]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                factor = a[r][col] * inv
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
    return det


class OrderBasis:
    """A Z-basis of an order: four quaternions spanning a ring containing 1.

    On construction the lattice is checked to contain 1, to be closed under
    multiplication, and to consist of integral elements (integer trace and
    norm).  The trace Gram matrix tr(x_i x_j) is kept exactly.
    """

    def __init__(self, basis: tuple[Quaternion, ...], validate: bool = True):
        if len(basis) != 4:
            raise ValueError("an order basis needs exactly 4 elements")
        algebra = basis[0].algebra
        if any(q.algebra != algebra for q in basis):
            raise ValueError("basis elements must share one algebra")
        self.algebra = algebra
        self.basis = tuple(basis)
        self.gram = [
            [(x * y).trace() for y in self.basis] for x in self.basis
        ]
        if validate:
            self._validate()

    def coordinates(self, q: Quaternion) -> list[Fraction]:
        """Coordinates of q in this basis (exact)."""
        matrix = [
            [self.basis[j].coords[i] for j in range(4)] for i in range(4)
        ]
        return _solve_linear(matrix, list(q.coords))

    def contains(self, q: Quaternion) -> bool:
        return all(c.denominator == 1 for c in self.coordinates(q))

    def _validate(self) -> None:
        one = self.algebra.one()
        if not self.contains(one):
            raise NotAnOrderError("lattice does not contain 1")
        for x in self.basis:
            if x.trace().denominator != 1 or x.norm().denominator != 1:
                raise NotAnOrderError("basis element is not integral")
        for x in self.basis:
            for y in self.basis:
                if not self.contains(x * y):
                    raise NotAnOrderError("lattice not closed under multiplication")


def reduced_discriminant(order: OrderBasis) -> int:
    """d(O), the positive integer with d(O)^2 = |det tr(x_i x_j)|."""
    det = _det(order.gram)
    if det == 0:
        raise NotAnOrderError("degenerate trace form")
    mag = abs(det)
    if mag.denominator != 1:
        raise NotAnOrderError("trace Gram determinant is not an integer")
    root = isqrt(mag.numerator)
    if root * root != mag.numerator:
        raise NotAnOrderError(
            f"|det gram| = {mag.numerator} is not a perfect square; not an order"
        )
    return root


def is_maximal(order: OrderBasis) -> bool:
    """Maximality criterion: d(O) equals the algebra discriminant d_H."""
    return reduced_discriminant(order) == order.algebra.discriminant


@dataclass(frozen=True)
class TernaryForm:
    """Diagonal ternary quadratic form c1 X1^2 + c2 X2^2 + c3 X3^2.

    When the dual-basis computation does not diagonalize (non-canonical
    bases), `diagonal` is False and the full Gram matrix is kept instead.
    """

    coefficients: tuple[int, int, int] | None
    diagonal: bool = True
    gram: tuple[tuple[Fraction, ...], ...] | None = field(default=None, compare=False)


def dual_basis(order: OrderBasis) -> list[Quaternion]:
    """Trace-dual basis b_k with tr(b_k x_j) = delta_kj."""
    det = _det(order.gram)
    if det == 0:
        raise NotAnOrderError("trace form is degenerate; no dual basis")
    duals = []
    for k in range(4):
        rhs = [Fraction(1 if j == k else 0) for j in range(4)]
        coeffs = _solve_linear([row[:] for row in order.gram], rhs)
        q = order.algebra.element(0, 0, 0, 0)
        for c, x in zip(coeffs, order.basis):
            q = q + c * x
        duals.append(q)
    return duals


def ternary_form(order: OrderBasis) -> TernaryForm:
    """The form d(O) * n(X1 b1 + X2 b2 + X3 b3) on the trace-dual basis.

    Requires the basis to start with 1.  For the canonical orders used in the
    surveys the result is diagonal; the computed coefficients may differ from
    the conventional presentation by a global sign and a permutation, which
    leaves the Eichler invariant unchanged.
    """
    if order.basis[0] != order.algebra.one():
        raise ValueError("ternary form requires a basis starting with 1")
    d_o = reduced_discriminant(order)
    b = dual_basis(order)[1:]
    # Gram of the norm form: diagonal n(b_k), off-diagonal tr(b_k conj(b_l))/2.
    gram = [
        [
            d_o * ((b[k] * b[l].conjugate()).trace() / 2)
            for l in range(3)
        ]
        for k in range(3)
    ]
    off_diagonal = any(gram[k][l] != 0 for k in range(3) for l in range(3) if k != l)
    if off_diagonal:
        return TernaryForm(
            coefficients=None,
            diagonal=False,
            gram=tuple(tuple(row) for row in gram),
        )
    coeffs = []
    for k in range(3):
        c = gram[k][k]
        if c.denominator != 1:
            raise NotAnOrderError("ternary form has non-integral coefficients")
        coeffs.append(c.numerator)
    if any(c == 0 for c in coeffs):
        raise NotAnOrderError("ternary form is degenerate")
    return TernaryForm(coefficients=(coeffs[0], coeffs[1], coeffs[2]))


def eichler_invariant(form: TernaryForm, q: int) -> int:
    """Eichler invariant e(O_q) in {-1, 0, 1} from the diagonal ternary form.

    For q = 2 the relevant orders here always give 0.  For odd q the form
    must have exactly two q-unit coefficients ci, cj; then

        e = legendre(-ci*cj, q)

    which is invariant under permuting the variables and flipping the global
    sign of the form.
    """
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if q == 2:
        return 0
    if not form.diagonal or form.coefficients is None:
        raise UnsupportedFormShape("Eichler invariant needs a diagonal form")
    units = [c for c in form.coefficients if c % q != 0]
    if len(units) == 3:
        raise UnsupportedFormShape(f"all coefficients are units at {q}")
    if len(units) < 2:
        raise UnsupportedFormShape(
            f"{q} divides two or more coefficients; outside the supported shape"
        )
    return legendre(-units[0] * units[1], q)


def local_norm_index(q: int, a: int) -> int:
    """Index [Z_q^* : n(O_q^*)] for the canonical order of (a, p / Q), a < p,
    in the conventional statement: trivial at odd q; at q = 2 it is 2
    exactly when 4 divides a.

    The q = 2 criterion as stated is incomplete: it also needs p = 3 mod 4
    (see local_norm_index_at_two).  This function keeps the stated rule;
    the volume pipeline uses the corrected one.
    """
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if q != 2:
        return 1
    return 2 if a % 4 == 0 else 1


def local_norm_index_at_two(a: int, p: int) -> int:
    """[Z_2^* : n(O_2^*)] for the canonical order, from the classes mod 8.

    A 2-adic unit is a square iff it is 1 mod 8, so the index is decided by
    which odd classes mod 8 the norm form x0^2 - a x1^2 - p x2^2 + ap x3^2
    attains.  For 4 | a the x1 and x3 terms only contribute 0 or 4 mod 8,
    leaving the classes {1, 5} united with {-p, -p + 4}: all four classes
    when p = 1 mod 4 (index 1) but only {1, 5} when p = 3 mod 4 (index 2).
    For 4 not dividing a every class is attained and the index is 1.  This
    matches the measured areas of the certified fundamental domains, which
    the coarser 4 | a criterion does not for p = 1 mod 4.
    """
    if a % 4 == 0 and p % 4 == 3:
        return 2
    return 1


def eichler_volume(d_h: int) -> Fraction:
    """Covolume/pi of the unit group of a maximal order: (1/3) prod (q - 1).

    Only defined for indefinite division algebras, i.e. d_H a product of an
    even number >= 2 of distinct primes.
    """
    if d_h == 1:
        raise ValueError("split algebra: unit group is not cocompact")
    fact = Factorization.of(d_h)
    if not fact.squarefree:
        raise ValueError(f"d_H must be squarefree, got {d_h}")
    if len(fact.factors) % 2:
        raise DefiniteAlgebraError(
            f"{d_h} has an odd number of prime factors: definite algebra"
        )
    vol = Fraction(1, 3)
    for q in fact.primes:
        vol *= q - 1
    return vol


def canonical_algebra(p: int, a: int) -> QuatAlgebra:
    """The algebra with i^2 = a, j^2 = p whose canonical order has unit group
    cut out by x0^2 - a x1^2 - p x2^2 + a p x3^2 = 1."""
    return QuatAlgebra(a, p)


def canonical_order(p: int, a: int) -> OrderBasis:
    """The order Z[1, i, j, ij] in canonical_algebra(p, a)."""
    return OrderBasis(canonical_algebra(p, a).basis())


def check_group_parameters(p: int, a: int) -> None:
    """Validate the standing hypotheses: p an odd prime, 1 < a < p, and a a
    quadratic nonresidue mod p (which makes the unit group cocompact)."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")
    if not 1 < a < p:
        raise ValueError(f"a must satisfy 1 < a < p, got a={a}, p={p}")
    if legendre(a, p) != -1:
        raise ValueError(f"a={a} is a quadratic residue mod p={p}")


@dataclass(frozen=True)
class LocalFactor:
    q: int
    eichler: int
    norm_index: int
    factor: Fraction


@dataclass(frozen=True)
class VolumeReport:
    """Exact covolume data for the canonical order of a pair (p, a)."""

    p: int
    a: int
    d_o: int
    local_factors: tuple[LocalFactor, ...]
    vol_over_pi: Fraction
    d_h: int
    maximal_vol_over_pi: Fraction
    unit_index: int

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "a": self.a,
            "d_O": self.d_o,
            "local_factors": [
                {
                    "q": f.q,
                    "eichler_invariant": f.eichler,
                    "norm_index": f.norm_index,
                    "factor": str(f.factor),
                }
                for f in self.local_factors
            ],
            "vol_over_pi": str(self.vol_over_pi),
            "d_H": self.d_h,
            "maximal_vol_over_pi": str(self.maximal_vol_over_pi),
            "unit_index": self.unit_index,
        }


def johansson_volume(p: int, a: int) -> VolumeReport:
    """Exact covolume of the unit group of the canonical order of (p, a).

    vol/pi = (1/3) d(O) prod_{q | d(O)} [Z_q^*:n(O_q^*)]^(-1) (q^2-1)/(q(q-e_q))

    together with the maximal-order volume for the algebra discriminant and
    the integral index between the two.
    """
    check_group_parameters(p, a)
    order = canonical_order(p, a)
    d_o = reduced_discriminant(order)
    form = ternary_form(order)
    factors = []
    product = Fraction(1)
    for q in Factorization.of(d_o).primes:
        e = eichler_invariant(form, q)
        n_idx = local_norm_index_at_two(a, p) if q == 2 else 1
        f = Fraction(q * q - 1, q * (q - e)) / n_idx
        factors.append(LocalFactor(q=q, eichler=e, norm_index=n_idx, factor=f))
        product *= f
    vol = Fraction(d_o, 3) * product
    ram = canonical_algebra(p, a).ramification
    maximal = eichler_volume(ram.d_h)
    index = vol / maximal
    if index.denominator != 1 or index <= 0:
        raise VolumeConsistencyError(
            f"unit index {index} for (p, a) = ({p}, {a}) is not a positive integer"
        )
    return VolumeReport(
        p=p,
        a=a,
        d_o=d_o,
        local_factors=tuple(factors),
        vol_over_pi=vol,
        d_h=ram.d_h,
        maximal_vol_over_pi=maximal,
        unit_index=index.numerator,
    )

"""Elementary number theory over Q: primes, Legendre and Hilbert symbols,
ramification of quaternion algebras, and the companion-prime construction.

Everything here is exact integer arithmetic.  Places of Q are the rational
primes plus the single infinite (real) place.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

DEFAULT_FACTOR_BOUND = 10**6


class FactorBoundExceeded(ValueError):
    """Input too large for trial division with the configured bound."""


class CompanionPrimeNotFound(LookupError):
    """No companion prime below the requested search limit."""


def is_prime(n: int) -> bool:
    """Trial-division primality test; intended for the small inputs used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes(limit: int) -> list[int]:
    """All primes <= limit, by sieve."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for d in range(2, isqrt(limit) + 1):
        if sieve[d]:
            sieve[d * d :: d] = bytearray(len(sieve[d * d :: d]))
    return [i for i, flag in enumerate(sieve) if flag]


@dataclass(frozen=True)
class Place:
    """A place of Q: a rational prime, or the real place."""

    prime: int | None  # None marks the infinite place

    def __post_init__(self) -> None:
        if self.prime is not None and not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")

    @classmethod
    def finite(cls, p: int) -> "Place":
        return cls(p)

    @classmethod
    def infinite(cls) -> "Place":
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.prime is None

    def __str__(self) -> str:
        return "infinity" if self.prime is None else str(self.prime)


@dataclass(frozen=True)
class Factorization:
    """Signed prime factorization: value = sign * prod(p**e)."""

    value: int
    sign: int
    factors: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, n: int, bound: int = DEFAULT_FACTOR_BOUND) -> "Factorization":
        """Factor a nonzero integer by trial division up to `bound`.

        If an unfactored cofactor larger than bound**2 remains the input is
        rejected rather than silently stalling on it.
        """
        if n == 0:
            raise ValueError("cannot factor 0")
        sign = 1 if n > 0 else -1
        m = abs(n)
        factors: list[tuple[int, int]] = []
        for d in (2, 3):
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            if e:
                factors.append((d, e))
        d = 5
        step = 2
        while d * d <= m and d <= bound:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            if e:
                factors.append((d, e))
            d += step
            step = 6 - step  # alternate +2, +4 to skip multiples of 2 and 3
        if m > 1:
            if m > bound * bound:
                raise FactorBoundExceeded(
                    f"cofactor {m} exceeds trial-division bound {bound}"
                )
            factors.append((m, 1))
        return cls(value=n, sign=sign, factors=tuple(factors))

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) for an odd prime p: 0, 1 or -1."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def _two_adic_split(n: int) -> tuple[int, int]:
    """Write n = 2**v * u with u odd; return (v, u)."""
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return v, n


def _p_adic_split(n: int, p: int) -> tuple[int, int]:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def hilbert_symbol(a: int, b: int, v: Place) -> int:
    """Hilbert symbol (a, b)_v over Q, valued in {1, -1}.

    At the real place the symbol is -1 exactly when both arguments are
    negative.  At an odd prime p, with a = p^alpha * u and b = p^beta * w,

        (a, b)_p = (-1)^(alpha*beta*(p-1)/2) * (u|p)^beta * (w|p)^alpha.

    At p = 2, with odd parts u, w,

        (a, b)_2 = (-1)^(eps(u)eps(w) + alpha*omega(w) + beta*omega(u))

    where eps(u) = (u-1)/2 and omega(u) = (u^2-1)/8 mod 2.  The 2-adic
    formula is a closed form for the value forced by the product rule
    prod_v (a, b)_v = 1, which the unit tests check directly.
    """
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol arguments must be nonzero")
    if v.is_infinite:
        return -1 if (a < 0 and b < 0) else 1
    p = v.prime
    assert p is not None
    if p == 2:
        alpha, u = _two_adic_split(a)
        beta, w = _two_adic_split(b)
        eps_u = ((u - 1) // 2) % 2
        eps_w = ((w - 1) // 2) % 2
        omega_u = ((u * u - 1) // 8) % 2
        omega_w = ((w * w - 1) // 8) % 2
        exponent = eps_u * eps_w + alpha * omega_w + beta * omega_u
        return -1 if exponent % 2 else 1
    alpha, u = _p_adic_split(a, p)
    beta, w = _p_adic_split(b, p)
    sign = 1
    if (alpha * beta * (p - 1) // 2) % 2:
        sign = -sign
    if beta % 2:
        sign *= legendre(u, p)
    if alpha % 2:
        sign *= legendre(w, p)
    return sign


def relevant_places(a: int, b: int, bound: int = DEFAULT_FACTOR_BOUND) -> list[Place]:
    """The infinite place plus the primes dividing 2ab.

    Every other place has Hilbert symbol +1, so these suffice for
    ramification and for the product-formula check.
    """
    ps = {2}
    ps.update(Factorization.of(a, bound).primes)
    ps.update(Factorization.of(b, bound).primes)
    return [Place.infinite()] + [Place.finite(p) for p in sorted(ps)]


@dataclass(frozen=True)
class Ramification:
    places: tuple[Place, ...]
    d_h: int
    definite: bool


def ramification(a: int, b: int, bound: int = DEFAULT_FACTOR_BOUND) -> Ramification:
    """Ramified places of the quaternion algebra (a, b / Q).

    Returns the set of places where (a, b)_v = -1, the discriminant d_H
    (product of the finite ramified primes), and whether the algebra is
    definite (real place ramified).  The ramified set always has even
    cardinality by reciprocity.
    """
    ramified = [v for v in relevant_places(a, b, bound) if hilbert_symbol(a, b, v) == -1]
    if len(ramified) % 2:
        raise AssertionError(
            f"odd ramification set for ({a}, {b}): reciprocity violated"
        )
    d_h = 1
    definite = False
    for v in ramified:
        if v.is_infinite:
            definite = True
        else:
            d_h *= v.prime  # type: ignore[operator]
    return Ramification(places=tuple(ramified), d_h=d_h, definite=definite)


def euler_phi(n: int) -> int:
    """Euler totient."""
    if n < 1:
        raise ValueError("euler_phi requires n >= 1")
    result = n
    for p, _ in Factorization.of(n).factors:
        result -= result // p
    return result


def find_companion_prime(d: int, limit: int = 10**6) -> int:
    """Smallest prime q = 5 (mod 8) with (q|p) = -1 for every odd prime p | d.

    For such q the algebra (q, d / Q) ramifies exactly at the primes
    dividing d, so it realizes the discriminant d.  Raises
    CompanionPrimeNotFound if no such prime exists below `limit`.
    """
    fact = Factorization.of(d)
    if d <= 1 or not fact.squarefree:
        raise ValueError(f"d must be squarefree and > 1, got {d}")
    odd_divisors = [p for p in fact.primes if p != 2]
    for q in range(5, limit + 1, 8):
        if not is_prime(q):
            continue
        if all(legendre(q, p) == -1 for p in odd_divisors):
            return q
    raise CompanionPrimeNotFound(
        f"no prime q = 5 mod 8 with the required nonresidue conditions below {limit}"
    )


def valid_pairs(p_max: int) -> list[tuple[int, int]]:
    """All (p, a) with p an odd prime <= p_max and 1 < a < p a nonresidue mod p."""
    out = []
    for p in primes(p_max):
        if p == 2:
            continue
        for a in range(2, p):
            if legendre(a, p) == -1:
                out.append((p, a))
    return out

"""Integer factorization, proper divisor enumeration, and exponent-profile
comparison.

Everything downstream indexes the factorization in one canonical order:
exponents descending, ties broken by ascending prime. Fixing the order here
once means every formula can speak of "the first prime" unambiguously.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import FactorizationLimitError

# Trial divisors are swept up to this bound, which fully factors any
# n <= TRIAL_DIVISION_BOUND**2 (~10^12).  Larger n still factor whenever the
# cofactor left after the sweep is prime.
TRIAL_DIVISION_BOUND = 10**6

MAX_SUPPORTED = 2**64 - 1


@dataclass(frozen=True)
class Factorization:
    """Canonical prime-power decomposition of a positive integer.

    ``factors`` is a tuple of (prime, exponent) pairs with exponents sorted
    descending and ties broken by ascending prime.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def k(self) -> int:
        """Number of distinct prime divisors."""
        return len(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(a for _, a in self.factors)

    def is_prime_power(self) -> bool:
        return len(self.factors) == 1

    def is_squarefree(self) -> bool:
        return all(a == 1 for _, a in self.factors)

    def is_prime(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1


def factorize(n: int) -> Factorization:
    """Factor ``n`` by deterministic trial division.

    Raises ``ValueError`` for n < 2 or n beyond 64-bit unsigned range, and
    ``FactorizationLimitError`` when the unfactored cofactor is composite
    with no prime factor below the sweep bound.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n > MAX_SUPPORTED:
        raise ValueError(f"n exceeds 64-bit unsigned range: {n}")

    raw: list[tuple[int, int]] = []
    m = n

    def strip(p: int) -> None:
        nonlocal m
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            raw.append((p, e))

    strip(2)
    strip(3)
    d = 5
    while d * d <= m and d <= TRIAL_DIVISION_BOUND:
        strip(d)
        strip(d + 2)
        d += 6
    if m > 1:
        if m > TRIAL_DIVISION_BOUND * TRIAL_DIVISION_BOUND:
            raise FactorizationLimitError(
                f"factorization limit: smallest factor of cofactor {m} "
                f"exceeds the trial-division bound {TRIAL_DIVISION_BOUND}"
            )
        # cofactor has no divisor up to its square root, hence prime
        raw.append((m, 1))

    raw.sort(key=lambda pe: (-pe[1], pe[0]))
    return Factorization(n=n, factors=tuple(raw))


def proper_divisor_count(f: Factorization) -> int:
    """Count of divisors d with 1 < d < n."""
    count = 1
    for _, a in f.factors:
        count *= a + 1
    return count - 2


def proper_divisors(f: Factorization) -> list[int]:
    """All proper divisors of n, strictly ascending.

    Enumerated by iterating exponent vectors (s_1, ..., s_k) with
    0 <= s_i <= alpha_i, excluding the all-zero vector (d = 1) and the
    all-alpha vector (d = n).
    """
    divs = []
    ranges = [range(a + 1) for _, a in f.factors]
    for vec in product(*ranges):
        d = 1
        for (p, _), s in zip(f.factors, vec):
            d *= p**s
        if 1 < d < f.n:
            divs.append(d)
    divs.sort()
    return divs


def exponent_vector(f: Factorization, d: int) -> tuple[int, ...]:
    """Exponent vector of a divisor ``d`` of n relative to f's prime order.

    Raises ``ValueError`` if d does not divide n.
    """
    if d < 1 or f.n % d != 0:
        raise ValueError(f"{d} is not a divisor of {f.n}")
    vec = []
    m = d
    for p, _ in f.factors:
        s = 0
        while m % p == 0:
            m //= p
            s += 1
        vec.append(s)
    if m != 1:
        raise ValueError(f"{d} is not a divisor of {f.n}")
    return tuple(vec)


def similar(f1: Factorization, f2: Factorization) -> bool:
    """True when both integers have the same sorted exponent sequence
    over the same number of distinct primes."""
    return f1.exponents == f2.exponents

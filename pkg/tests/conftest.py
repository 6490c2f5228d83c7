import pytest

from divgraph.arith import Factorization, factorize


def admissible(lo: int, hi: int):
    """Factorizations of every n in [lo, hi] the parameter formulas accept:
    composite, and exponent >= 3 when n is a prime power."""
    out = []
    for n in range(lo, hi + 1):
        f = factorize(n)
        if f.is_prime() or (f.k == 1 and f.exponents[0] == 2):
            continue
        out.append(f)
    return out


@pytest.fixture(scope="session")
def admissible_to_500() -> list[Factorization]:
    return admissible(4, 500)

"""Closed-form graph parameters of the divisor graph, computed from the
factorization alone (never from the explicit graph).

Conventions used throughout: pi(d) counts the proper divisors of d, with
pi(1) = 0 and pi(prime) = 0 so the degree formula is total; all square-root
comparisons are exact integer comparisons of x*x against n.

A standing precondition applies to every operation here: n must be composite,
and when n is a prime power its exponent must be at least 3 (the one-vertex
graph of p^2 is excluded).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .arith import Factorization, exponent_vector, proper_divisor_count, proper_divisors, similar
from .errors import EmptyGraphError, TrivialGraphError


def require_standard(f: Factorization) -> None:
    """Enforce the standing precondition shared by all parameter formulas."""
    if f.is_prime():
        raise EmptyGraphError(f"empty graph: {f.n} is prime")
    if f.k == 1 and f.exponents[0] == 2:
        raise TrivialGraphError(
            f"prime-power exponent below 3: {f.n} is the square of a prime"
        )


def _pi_of_divisor(f: Factorization, d: int) -> int:
    if d == 1:
        return 0
    count = 1
    for s in exponent_vector(f, d):
        count *= s + 1
    return count - 2


def _n_over(f: Factorization, i: int) -> int:
    return f.n // f.factors[i][0]


def degree(f: Factorization, u: int) -> int:
    """Degree of vertex u: pi(u) when n | u^2, else pi(u) + 1."""
    require_standard(f)
    if u <= 1 or u >= f.n or f.n % u != 0:
        raise ValueError(f"{u} is not a proper divisor of {f.n}")
    pi_u = _pi_of_divisor(f, u)
    return pi_u if (u * u) % f.n == 0 else pi_u + 1


def pendant_vertices(f: Factorization) -> list[int]:
    """Vertices of degree one.

    For n = p^a these are p and p^2 when a is 3 or 4 and just p when a >= 5;
    for k >= 2 they are exactly the primes dividing n.
    """
    require_standard(f)
    if f.k == 1:
        p, a = f.factors[0]
        return [p, p * p] if a in (3, 4) else [p]
    return [p for p, _ in f.factors]


def pendant_count(f: Factorization) -> int:
    require_standard(f)
    if f.k >= 2:
        return f.k
    return 2 if f.exponents[0] in (3, 4) else 1


def degree_two_vertices(f: Factorization) -> list[int]:
    """Vertices of degree two, ascending.

    A handful of small shapes are exceptional; for everything else the
    answer is the squares of the primes with exponent at least 2.
    """
    require_standard(f)
    exps = f.exponents
    if f.k == 1:
        p = f.factors[0][0]
        a = exps[0]
        if a == 3:
            return []
        if a == 4:
            return [p**3]
        if a in (5, 6):
            return sorted([p**2, p**3])
    if f.k == 2:
        p1, p2 = f.primes
        if exps == (1, 1):
            return []
        if exps == (2, 1):
            return sorted([p1 * p1, p1 * p2])
        if exps == (2, 2):
            return sorted([p1 * p1, p2 * p2, p1 * p2])
    return sorted(p * p for p, a in f.factors if a >= 2)


def diameter(f: Factorization) -> int:
    """Graph diameter: 1, 2 or 3 depending only on the exponent shape."""
    require_standard(f)
    if f.exponents == (3,) or f.exponents == (1, 1):
        return 1
    if f.k == 1:
        return 2
    return 3


def largest_tied_index(f: Factorization) -> int:
    """Largest 1-based index t with alpha_t equal to the top exponent."""
    top = f.exponents[0]
    t = 1
    for i, a in enumerate(f.exponents):
        if a == top:
            t = i + 1
    return t


def max_degree_vertices(f: Factorization) -> list[int]:
    """Vertices attaining the maximum degree."""
    require_standard(f)
    if f.exponents == (3,):
        p = f.factors[0][0]
        return [p, p * p]
    if f.exponents == (2, 1):
        return [_n_over(f, 0), _n_over(f, 1)]
    t = largest_tied_index(f)
    return [_n_over(f, i) for i in range(t)]


def max_degree_count(f: Factorization) -> int:
    require_standard(f)
    if f.exponents == (3,) or f.exponents == (2, 1):
        return 2
    return largest_tied_index(f)


def delta(f: Factorization) -> int:
    """Maximum degree, attained at n/p_1."""
    require_standard(f)
    pi_top = _pi_of_divisor(f, _n_over(f, 0))
    if f.k == 1 or f.exponents[0] >= 2:
        return pi_top
    return pi_top + 1


def cut_vertices(f: Factorization) -> list[int]:
    """Cut vertices: n/p_i for every prime, except the two K2 shapes."""
    require_standard(f)
    if f.exponents == (3,) or f.exponents == (1, 1):
        return []
    return [_n_over(f, i) for i in range(f.k)]


@dataclass(frozen=True)
class CliqueWitness:
    """A maximum clique presented as the disjoint union of two pieces.

    ``set_a`` holds the divisors whose every exponent is at least half the
    corresponding exponent of n (n itself excluded); ``set_b`` adds, for each
    odd-exponent prime, the divisor obtained by knocking that prime just
    below half.
    """

    set_a: tuple[int, ...]
    set_b: tuple[int, ...]

    def members(self) -> list[int]:
        return list(self.set_a) + list(self.set_b)


def odd_exponent_count(f: Factorization) -> int:
    return sum(1 for a in f.exponents if a % 2 == 1)


def clique_number(f: Factorization) -> int:
    require_standard(f)
    size = 1
    odd = 0
    for a in f.exponents:
        if a % 2 == 1:
            size *= (a + 1) // 2
            odd += 1
        else:
            size *= a // 2 + 1
    return size + odd - 1


def clique_witness(f: Factorization) -> CliqueWitness:
    require_standard(f)
    from itertools import product as iproduct

    ranges = [range((a + 1) // 2, a + 1) for _, a in f.factors]
    set_a = []
    for vec in iproduct(*ranges):
        d = 1
        for (p, _), s in zip(f.factors, vec):
            d *= p**s
        if d != f.n:
            set_a.append(d)
    set_a.sort()
    set_b = [f.n // p ** ((a + 1) // 2) for p, a in f.factors if a % 2 == 1]
    return CliqueWitness(tuple(set_a), tuple(set_b))


def chromatic_number(f: Factorization) -> int:
    """Equal to the clique number."""
    return clique_number(f)


def matching_number(f: Factorization) -> int:
    require_standard(f)
    return proper_divisor_count(f) // 2


def matching_witness(f: Factorization) -> list[tuple[int, int]]:
    """The pairs {x, n/x} over proper divisors x below the square root."""
    require_standard(f)
    n = f.n
    return [(x, n // x) for x in proper_divisors(f) if x * x < n]


def has_perfect_matching(f: Factorization) -> bool:
    """True unless n is a perfect square (whose root stays unmatched)."""
    require_standard(f)
    return any(a % 2 == 1 for a in f.exponents)


def edge_cover_number(f: Factorization) -> int:
    require_standard(f)
    pi_n = proper_divisor_count(f)
    return pi_n - pi_n // 2


def vertex_cover_number(f: Factorization) -> int:
    require_standard(f)
    return proper_divisor_count(f) // 2


def independence_number(f: Factorization) -> int:
    require_standard(f)
    pi_n = proper_divisor_count(f)
    return pi_n - pi_n // 2


def independent_witness(f: Factorization) -> list[int]:
    """The proper divisors at or below the square root of n."""
    require_standard(f)
    n = f.n
    return [x for x in proper_divisors(f) if x * x <= n]


def domination_number(f: Factorization) -> int:
    require_standard(f)
    return 1 if f.exponents == (1, 1) else f.k


def dominating_witness(f: Factorization) -> list[int]:
    require_standard(f)
    if f.exponents == (1, 1):
        return [_n_over(f, 0)]
    return [_n_over(f, i) for i in range(f.k)]


def chromatic_index(f: Factorization) -> int:
    """Equal to the maximum degree."""
    return delta(f)


def is_perfect(f: Factorization) -> bool:
    """Perfectness from the exponent shape.

    Exactly four shapes qualify: a prime power, two primes with any
    exponents, three primes with the last two exponents equal to one, and
    four primes all squarefree.
    """
    require_standard(f)
    exps = f.exponents
    if f.k <= 2:
        return True
    if f.k == 3:
        return exps[1] == 1 and exps[2] == 1
    if f.k == 4:
        return exps == (1, 1, 1, 1)
    return False


def isomorphic(f1: Factorization, f2: Factorization) -> bool:
    """Graph isomorphism decided arithmetically.

    Similar integers give isomorphic graphs; the single exception is that a
    prime cube and a product of two distinct primes both give a one-edge
    graph.
    """
    require_standard(f1)
    require_standard(f2)
    if similar(f1, f2):
        return True
    shapes = {f1.exponents, f2.exponents}
    return shapes == {(3,), (1, 1)}


@dataclass(frozen=True)
class ParameterReport:
    """All closed-form parameters and witnesses for one n."""

    n: int
    pi_n: int
    pendant_vertices: tuple[int, ...]
    pendant_count: int
    degree_two_vertices: tuple[int, ...]
    diameter: int
    max_degree_vertices: tuple[int, ...]
    max_degree_count: int
    delta: int
    cut_vertices: tuple[int, ...]
    clique_number: int
    chromatic_number: int
    matching_number: int
    edge_cover_number: int
    independence_number: int
    vertex_cover_number: int
    domination_number: int
    chromatic_index: int
    is_perfect: bool
    odd_exponent_count: int
    largest_tied_index: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "pi_n": self.pi_n,
            "pendant_vertices": list(self.pendant_vertices),
            "pendant_count": self.pendant_count,
            "degree_two_vertices": list(self.degree_two_vertices),
            "diameter": self.diameter,
            "max_degree_vertices": list(self.max_degree_vertices),
            "max_degree_count": self.max_degree_count,
            "delta": self.delta,
            "cut_vertices": list(self.cut_vertices),
            "clique_number": self.clique_number,
            "chromatic_number": self.chromatic_number,
            "matching_number": self.matching_number,
            "edge_cover_number": self.edge_cover_number,
            "independence_number": self.independence_number,
            "vertex_cover_number": self.vertex_cover_number,
            "domination_number": self.domination_number,
            "chromatic_index": self.chromatic_index,
            "is_perfect": self.is_perfect,
            "odd_exponent_count": self.odd_exponent_count,
            "largest_tied_index": self.largest_tied_index,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def to_csv_row(self) -> list[str]:
        d = self.to_json_dict()
        row = []
        for key in CSV_HEADER:
            value = d[key]
            if isinstance(value, list):
                row.append("|".join(str(x) for x in value))
            elif isinstance(value, bool):
                row.append("true" if value else "false")
            else:
                row.append(str(value))
        return row


CSV_HEADER = [
    "n",
    "pi_n",
    "diameter",
    "delta",
    "pendant_count",
    "max_degree_count",
    "clique_number",
    "chromatic_number",
    "matching_number",
    "edge_cover_number",
    "independence_number",
    "vertex_cover_number",
    "domination_number",
    "chromatic_index",
    "is_perfect",
    "odd_exponent_count",
    "largest_tied_index",
    "pendant_vertices",
    "degree_two_vertices",
    "max_degree_vertices",
    "cut_vertices",
]


def parameter_report(f: Factorization) -> ParameterReport:
    require_standard(f)
    return ParameterReport(
        n=f.n,
        pi_n=proper_divisor_count(f),
        pendant_vertices=tuple(pendant_vertices(f)),
        pendant_count=pendant_count(f),
        degree_two_vertices=tuple(degree_two_vertices(f)),
        diameter=diameter(f),
        max_degree_vertices=tuple(max_degree_vertices(f)),
        max_degree_count=max_degree_count(f),
        delta=delta(f),
        cut_vertices=tuple(cut_vertices(f)),
        clique_number=clique_number(f),
        chromatic_number=chromatic_number(f),
        matching_number=matching_number(f),
        edge_cover_number=edge_cover_number(f),
        independence_number=independence_number(f),
        vertex_cover_number=vertex_cover_number(f),
        domination_number=domination_number(f),
        chromatic_index=chromatic_index(f),
        is_perfect=is_perfect(f),
        odd_exponent_count=odd_exponent_count(f),
        largest_tied_index=largest_tied_index(f),
    )

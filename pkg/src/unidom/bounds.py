"""Closed-form size bounds for graphs with a unique minimum dominating set.

Everything here is exact: integers throughout, with rationals where a
formula genuinely produces one (the adjacent-dominators case bound for
gamma = 2, and Vizing's bound at odd n - gamma).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


def _halves(gamma: int) -> tuple[int, int]:
    # (ceil(gamma/2), floor(gamma/2))
    return (gamma + 1) // 2, gamma // 2


def phi(n: int, gamma: int) -> int:
    """Size of the overflow tail in the extremal bipartite construction.

    The first two building stages hold 3*gamma + (2*ceil(g/2) - floor(g/2) + 1)
    vertices; phi counts how many vertices of an order-n graph spill past that.
    """
    if n < 1 or gamma < 1:
        raise ValueError("n and gamma must be positive")
    ch, fh = _halves(gamma)
    return max(0, n - 3 * gamma - (2 * ch - fh + 1))


def _tail_term(gamma: int, i: int) -> int:
    # edges contributed by the i-th overflow vertex
    ch, _ = _halves(gamma)
    return (2 * ch + 1) + (i + 1) // 2


def _bipartite_bound_summation(n: int, gamma: int) -> int:
    """Reference evaluation with the overflow tail summed term by term."""
    ch, fh = _halves(gamma)
    base = 2 * gamma + 2 * ch * fh
    middle = min(n - 3 * gamma, 2 * ch - fh + 1) * (2 * ch + 1)
    return base + middle + sum(_tail_term(gamma, i) for i in range(1, phi(n, gamma) + 1))


def bipartite_bound(n: int, gamma: int) -> int:
    """Conjectured maximum size of a bipartite graph with a unique minimum
    dominating set, for gamma >= 2 and n >= 3*gamma.

    Same three-part structure as the displayed formula (base, capped middle
    block, overflow tail); the tail sum is folded to a closed form that the
    test suite checks against the term-by-term evaluation.
    """
    if gamma < 2:
        raise ValueError("bound requires gamma >= 2 (see star_bound for gamma = 1)")
    if n < 3 * gamma:
        raise ValueError("bound requires n >= 3*gamma")
    ch, fh = _halves(gamma)
    base = 2 * gamma + 2 * ch * fh
    middle = min(n - 3 * gamma, 2 * ch - fh + 1) * (2 * ch + 1)
    m = phi(n, gamma)
    # sum of ceil(i/2) for i = 1..m
    tail = m * (2 * ch + 1) + ((m + 1) // 2) * ((m + 2) // 2)
    return base + middle + tail


def bipartite_bound_gamma2(n: int) -> int:
    """Closed form of the bipartite bound at gamma = 2, split by parity."""
    if n < 6:
        raise ValueError("closed form requires n >= 6")
    if n % 2 == 0:
        return n * (n - 2) // 4
    return (n - 1) ** 2 // 4


def star_bound(n: int) -> int:
    """Maximum size at gamma = 1: the star K_{1,n-1} with n - 1 edges."""
    if n < 3:
        raise ValueError("a unique dominator needs n >= 3")
    return n - 1


def n3g_bound(gamma: int) -> int:
    """Bipartite bound specialized to n = 3*gamma."""
    if gamma < 2:
        raise ValueError("requires gamma >= 2")
    ch, fh = _halves(gamma)
    return 2 * gamma + 2 * ch * fh


def fischermann_bound(n: int, gamma: int) -> int:
    """Fischermann et al.'s bound C(n-gamma, 2) - gamma*(gamma-2) for
    uniquely dominated graphs without the bipartite restriction."""
    if gamma < 2:
        raise ValueError("requires gamma >= 2")
    if n < 3 * gamma:
        raise ValueError("requires n >= 3*gamma")
    return comb(n - gamma, 2) - gamma * (gamma - 2)


def vizing_bound(n: int, gamma: int):
    """Vizing's maximum size (n-gamma)(n-gamma+2)/2 for domination number gamma.

    Returned exactly: an int when the product is even, otherwise a Fraction
    (the classical statement carries no floor, and none is guessed here).
    """
    if gamma < 2:
        raise ValueError("requires gamma >= 2")
    num = (n - gamma) * (n - gamma + 2)
    return num // 2 if num % 2 == 0 else Fraction(num, 2)


def tau(n: int) -> int:
    """Count of positive integers below ``n`` with the opposite parity."""
    if n < 1:
        raise ValueError("requires n >= 1")
    return n // 2


def min_forest_edges(n: int) -> int:
    """Minimum size of an order-n graph with no isolated vertex and no
    two-vertex component: ceil(2n/3)."""
    if n < 3:
        raise ValueError("requires n >= 3")
    return -(-2 * n // 3)


@dataclass(frozen=True)
class Gamma2CaseBounds:
    """The three case bounds for gamma = 2, by dominator placement:
    same side (m1), adjacent (m2), opposite sides non-adjacent (m3)."""

    m1: int
    m2: Fraction
    m3: int


def gamma2_case_bounds(n: int) -> Gamma2CaseBounds:
    """Evaluate all three gamma = 2 case bounds; m3 equals the full bound."""
    if n < 6:
        raise ValueError("requires n >= 6")
    m1 = 2 * (n - 2) - 4
    if n % 2 == 0:
        m2 = Fraction(3 * n * n - 6 * n - (2 * n - 8), 12)
    else:
        m2 = Fraction(3 * n * n - 6 * n + 3 - (2 * n - 2), 12)
    m3 = n - 2 + ((n - 2) // 2) * ((n - 3) // 2)
    return Gamma2CaseBounds(m1=m1, m2=m2, m3=m3)


def gamma2_m2_strict(n: int) -> int:
    """Adjacent-dominators case bound with the ceiling kept on the forest
    term; the default m2 drops it, which can only loosen the bound."""
    if n < 6:
        raise ValueError("requires n >= 6")
    product = ((n - 1) // 2) * ((n - 2) // 2)
    return n - 1 + product - (-(-2 * (n - 2) // 3))

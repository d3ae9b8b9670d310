"""Closed-form bounds on nu(m), the largest n with mu(K_n) <= m, and on mu(n)."""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, prod

# mu(K_n) for small n.  n = 1, 2 have no circuits (one free matroid suffices),
# K_3 is covered by a single system, K_4 needs three systems.
KNOWN_MU = {1: 1, 2: 1, 3: 1, 4: 3, **{n: 4 for n in range(5, 13)}, 13: 5, 14: 5, 15: 5}


def nu_lower(m: int) -> int:
    """Vertex count of the recursive cover: 3 * prod_{i=0}^{ceil(m/3)-2} (m - 3i)."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return 3 * prod(m - 3 * i for i in range(ceil(m / 3) - 1))


def nu_upper_exponent(m: int) -> int:
    return 2 ** (3 * m) - 1


def nu_upper(m: int) -> int:
    """2^(2^(3m) - 1) - 1, exactly."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return 2 ** nu_upper_exponent(m) - 1


def mu_bounds(n: int) -> tuple[int, int]:
    """(lower, upper) bounds on mu(n); exact values replace them for n <= 15."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n in KNOWN_MU:
        return KNOWN_MU[n], KNOWN_MU[n]
    # mu(n) is nondecreasing in n, so the largest tabulated value is a floor
    lower = KNOWN_MU[max(KNOWN_MU)]
    while nu_upper(lower) < n:
        lower += 1
    upper = 1
    while nu_lower(upper) < n:
        upper += 1
    return lower, upper


@dataclass(frozen=True)
class BoundsRow:
    m: int
    nu_lower: int
    nu_upper: int


def bounds_table(ms) -> list[BoundsRow]:
    return [BoundsRow(m, nu_lower(m), nu_upper(m)) for m in ms]

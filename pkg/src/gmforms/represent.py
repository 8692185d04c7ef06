"""Solving n = x^2 + d*y^2 with positive x, y.

Cornacchia descent for prime n, plus an exhaustive brute-force oracle for
small n.  Representations require x > 0 AND y > 0; solutions touching zero
are rejected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .arith import integer_sqrt, is_probable_prime, jacobi, sqrt_mod_prime

#: Brute-force search is refused above this (documented desk-scale cap).
BRUTEFORCE_CAP = 10**12


@dataclass(frozen=True)
class Representation:
    n: int
    d: int
    x: int
    y: int

    def __post_init__(self) -> None:
        if self.x <= 0 or self.y <= 0:
            raise ValueError("representation requires x > 0 and y > 0")
        if self.x * self.x + self.d * self.y * self.y != self.n:
            raise ValueError("x^2 + d*y^2 != n")


def cornacchia(n: int, d: int) -> Optional[Representation]:
    """Solve n = x^2 + d*y^2 for an odd prime n and 1 <= d < n.

    Euclidean descent seeded by a square root of -d mod n; returns None when
    -d is a non-residue or the descent yields no exact solution.  n must be
    a (probable) prime: the descent's completeness argument is prime-specific.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if n % 2 == 0 or n <= d:
        raise ValueError("need odd n > d")
    if jacobi(-d, n) == -1:
        return None
    r0 = sqrt_mod_prime((-d) % n, n)
    if r0 is None or r0 == 0:
        return None
    if 2 * r0 < n:
        r0 = n - r0  # take the root in (n/2, n)
    a, b = n, r0
    limit = math.isqrt(n)
    while b > limit:
        a, b = b, a % b
    if b == 0:
        return None
    rem = n - b * b
    if rem % d:
        return None
    y, exact = integer_sqrt(rem // d)
    if not exact or y == 0:
        return None
    x = b
    if d == 1 and x < y:
        # x^2 + y^2 is symmetric; normalize to the smallest-y pair.
        x, y = y, x
    return Representation(n=n, d=d, x=x, y=y)


def represent_bruteforce(n: int, d: int) -> Optional[Representation]:
    """Exhaustive solver: loop y upward, test n - d*y^2 for a positive square.

    Returns the solution with smallest y, or None.  Oracle-grade and
    deliberately independent of cornacchia.
    """
    if d < 1 or n < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if n > BRUTEFORCE_CAP:
        raise ValueError(f"n exceeds brute-force cap {BRUTEFORCE_CAP}")
    y = 1
    while d * y * y < n:
        x, exact = integer_sqrt(n - d * y * y)
        if exact and x > 0:
            return Representation(n=n, d=d, x=x, y=y)
        y += 1
    return None


def representable(n: int, d: int) -> bool:
    """Whether n = x^2 + d*y^2 has a solution with x > 0 and y > 0.

    Prime n goes through Cornacchia; composite (or tiny) n through the
    brute-force oracle, subject to its size cap.
    """
    if d < 1 or n < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if n > d and n % 2 == 1 and is_probable_prime(n):
        return cornacchia(n, d) is not None
    return represent_bruteforce(n, d) is not None

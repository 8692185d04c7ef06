"""Binary quadratic forms of negative discriminant: reduction, Gauss
composition, class numbers, and class-group structure.

Forms are primitive a*x^2 + b*x*y + c*y^2 with a > 0 and b^2 - 4ac < 0.
Imprimitive input is rejected, never silently divided down.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import jacobi, sqrt_mod_prime


@dataclass(frozen=True, order=True)
class QuadForm:
    a: int
    b: int
    c: int

    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not (abs(b) <= a <= c):
            return False
        if (abs(b) == a or a == c) and b < 0:
            return False
        return True


def _check_form(f: QuadForm) -> None:
    if f.a <= 0:
        raise ValueError("form must have a > 0")
    if f.discriminant() >= 0:
        raise ValueError("discriminant must be negative")
    if math.gcd(math.gcd(f.a, f.b), f.c) != 1:
        raise ValueError("form must be primitive")


def _check_discriminant(d: int) -> None:
    if d >= 0 or d % 4 not in (0, 1):
        raise ValueError("discriminant must be negative and = 0 or 1 (mod 4)")


def reduce(f: QuadForm) -> QuadForm:
    """The unique reduced form equivalent to f (|b| <= a <= c, boundary b >= 0)."""
    _check_form(f)
    a, b, c = f.a, f.b, f.c
    while True:
        if not -a < b <= a:
            # Normalize: b -> b + 2ra into (-a, a].
            r = (a - b) // (2 * a)
            b, c = b + 2 * r * a, a * r * r + b * r + c
        if a > c:
            a, b, c = c, -b, a
            continue
        break
    if a == c and b < 0:
        b = -b
    return QuadForm(a, b, c)


def principal_form(d: int) -> QuadForm:
    """Identity class of discriminant d: (1, 0, -d/4) or (1, 1, (1-d)/4)."""
    _check_discriminant(d)
    if d % 4 == 0:
        return QuadForm(1, 0, -d // 4)
    return QuadForm(1, 1, (1 - d) // 4)


def inverse(f: QuadForm) -> QuadForm:
    _check_form(f)
    return reduce(QuadForm(f.a, -f.b, f.c))


def enumerate_reduced(d: int) -> list[QuadForm]:
    """All primitive reduced forms of discriminant d, sorted by (a, b).

    The list length is the class number h(d).
    """
    _check_discriminant(d)
    forms = []
    a_max = math.isqrt(-d // 3)
    for a in range(1, a_max + 1):
        for b in range(-a + 1, a + 1):
            if (b * b - d) % (4 * a):
                continue
            c = (b * b - d) // (4 * a)
            if c < a:
                continue
            if b < 0 and a == c:
                continue
            if math.gcd(math.gcd(a, b), c) != 1:
                continue
            forms.append(QuadForm(a, b, c))
    return sorted(forms)


def _solve_linear_mod(a: int, b: int, m: int) -> tuple[int, int]:
    # Solve a*x = b (mod m); return (x0, period) so solutions are x0 + k*period.
    if m == 1:
        return 0, 1
    g = math.gcd(a, m)
    if b % g:
        raise ValueError("no solution to linear congruence")
    m_red = m // g
    x0 = (b // g) * pow(a // g, -1, m_red) % m_red
    return x0, m_red


def compose(f: QuadForm, g: QuadForm) -> QuadForm:
    """Gauss composition of form classes; returns the reduced composite."""
    _check_form(f)
    _check_form(g)
    if f.discriminant() != g.discriminant():
        raise ValueError("discriminants must match")
    a1, b1, c1 = reduce(f).a, reduce(f).b, reduce(f).c
    a2, b2, c2 = reduce(g).a, reduce(g).b, reduce(g).c
    gg = (b2 + b1) // 2
    h = (b2 - b1) // 2
    w = math.gcd(math.gcd(a1, a2), gg)
    j = w
    s = a1 // w
    t = a2 // w
    u = gg // w
    # Solve k*t - l*s = h, k*u - m*s = c2, l*u - m*t = c1 for integers k, l, m.
    k0, period = _solve_linear_mod(t * u, h * u + s * c1, s * t)
    n0, _ = _solve_linear_mod(t * period, h - t * k0, s)
    k = k0 + period * n0
    l = (t * k - h) // s
    m = (t * u * k - h * u - s * c1) // (s * t)
    a3 = s * t
    b3 = j * u - (k * t + l * s)
    c3 = k * l - j * m
    return reduce(QuadForm(a3, b3, c3))


def form_pow(f: QuadForm, k: int) -> QuadForm:
    """k-th power of a class under composition, k >= 0."""
    _check_form(f)
    result = principal_form(f.discriminant())
    base = reduce(f)
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


@dataclass(frozen=True)
class ClassGroupSummary:
    discriminant: int
    h: int
    cyclic_orders: list[int]  # invariant factors, largest first
    has_order_4_element: bool


def _invariant_factors(elements: list, op, identity) -> list[int]:
    # Generic decomposition of a finite abelian group: peel off a cyclic
    # subgroup of maximal order, recurse on the quotient.
    if len(elements) == 1:
        return []
    orders = {}
    for g in elements:
        k, power = 1, g
        while power != identity:
            power = op(power, g)
            k += 1
        orders[g] = k
    exponent = 1
    for k in orders.values():
        exponent = exponent * k // math.gcd(exponent, k)
    generator = next(g for g, k in orders.items() if k == exponent)
    # Cosets of <generator>.
    subgroup = [identity]
    power = generator
    while power != identity:
        subgroup.append(power)
        power = op(power, generator)
    coset_of = {}
    cosets = []
    for g in elements:
        if g in coset_of:
            continue
        coset = frozenset(op(g, s) for s in subgroup)
        cosets.append(coset)
        for member in coset:
            coset_of[member] = coset
    def coset_op(x: frozenset, y: frozenset) -> frozenset:
        return coset_of[op(next(iter(x)), next(iter(y)))]
    identity_coset = coset_of[identity]
    return [exponent] + _invariant_factors(cosets, coset_op, identity_coset)


def group_structure(d: int) -> ClassGroupSummary:
    """Class number and invariant-factor decomposition of the form class group."""
    forms = enumerate_reduced(d)
    identity = principal_form(d)
    factors = _invariant_factors(forms, compose, identity)
    if not factors:
        factors = [1]
    return ClassGroupSummary(
        discriminant=d,
        h=len(forms),
        cyclic_orders=factors,
        has_order_4_element=any(k % 4 == 0 for k in factors),
    )


def represented_by_class(n: int, d: int) -> set[QuadForm]:
    """Reduced form classes of discriminant d that represent the prime n.

    One class (and its inverse) per square root of d mod 4n; empty when d is
    a non-residue mod n.  Requires gcd(n, 2d) = 1.
    """
    _check_discriminant(d)
    if n < 3 or math.gcd(n, 2 * d) != 1:
        raise ValueError("need odd prime n with gcd(n, 2d) = 1")
    r = sqrt_mod_prime(d % n, n)
    if r is None:
        return set()
    classes = set()
    for root in {r, n - r}:
        b = root if (root - d) % 2 == 0 else root + n  # match parity of d
        c = (b * b - d) // (4 * n)
        classes.add(reduce(QuadForm(n, b, c)))
    return classes

"""Small integer helpers shared by the residue and difference-set modules."""

from __future__ import annotations

from functools import lru_cache


def is_prime(n: int) -> bool:
    """Deterministic trial division; intended for desk-scale moduli."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = smallest_prime_factor(n)
    while n % p == 0:
        n //= p
    return n == 1


def smallest_prime_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return n


@lru_cache(maxsize=None)
def residues(p: int, s: int) -> tuple[int, ...]:
    """The s-th power residues in the multiplicative group mod p, sorted."""
    return tuple(sorted({pow(z, s, p) for z in range(1, p)}))

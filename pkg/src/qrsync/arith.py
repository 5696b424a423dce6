"""Number theory for QR-code construction: residues, cosets, orders."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class ResidueClasses:
    p: int
    qr: tuple[int, ...]
    qnr: tuple[int, ...]


@dataclass(frozen=True)
class CosetPartition:
    n: int
    cosets: tuple[tuple[int, ...], ...]  # ordered by representative
    reps: tuple[int, ...]

    def coset_of(self, s: int) -> tuple[int, ...]:
        s %= self.n
        for c in self.cosets:
            if s in c:
                return c
        raise KeyError(s)  # unreachable for a full partition

    def rep_of(self, s: int) -> int:
        return min(self.coset_of(s))


def quadratic_residues(p: int) -> ResidueClasses:
    """Nonzero quadratic residues and non-residues modulo ``p``.

    Only primes with ``p = +-1 (mod 8)`` are accepted, since those are the
    lengths for which binary QR codes exist.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"p={p} is not an odd prime")
    if p % 8 not in (1, 7):
        raise ValueError(f"QR code condition violated: p={p} is not +-1 mod 8")
    qr = sorted({x * x % p for x in range(1, (p - 1) // 2 + 1)})
    qrs = set(qr)
    qnr = [i for i in range(1, p) if i not in qrs]
    return ResidueClasses(p, tuple(qr), tuple(qnr))


def cyclotomic_cosets(n: int) -> CosetPartition:
    """Partition of Z/n into 2-cyclotomic cosets ``{s, 2s, 4s, ...}``."""
    if n < 2 or n % 2 == 0:
        raise ValueError(f"n={n} must be odd and >= 3")
    seen = [False] * n
    cosets = []
    for s in range(n):
        if seen[s]:
            continue
        c, x = [], s
        while not seen[x]:
            seen[x] = True
            c.append(x)
            x = 2 * x % n
        cosets.append(tuple(c))
    return CosetPartition(n, tuple(cosets), tuple(c[0] for c in cosets))


def mult_order_of_two(n: int) -> int:
    """Smallest t >= 1 with n | 2^t - 1 (n odd)."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n={n} must be odd and >= 3")
    t, x = 1, 2 % n
    while x != 1:
        x = 2 * x % n
        t += 1
    return t


def mersenne_exponent(p: int) -> Optional[int]:
    """Return l when p = 2^l - 1, else None."""
    if p < 1:
        return None
    m = p + 1
    if m & (m - 1):
        return None
    return m.bit_length() - 1


is_mersenne_prime_exponent = mersenne_exponent

"""GF(2^t) arithmetic, roots of unity and minimal polynomials.

Field elements are bit-packed polynomials of degree < t reduced modulo an
irreducible ``modulus``.  The context is built for a target root order ``n``
(odd): ``t`` is the multiplicative order of 2 mod ``n``, so ``F_{2^t}``
contains a primitive ``n``-th root of unity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .arith import cyclotomic_cosets, mult_order_of_two, prime_factors
from .errors import ConsistencyError
from .poly2 import Poly, _clmul, _mod, gcd

# Above this degree a linear scan for an order-n element is too slow; see
# primitive_root_of_unity.
SCAN_LIMIT_T = 16


def _x_pow_2k_mod(k: int, f: int) -> int:
    """x^(2^k) mod f via k squarings."""
    r = _mod(2, f)
    for _ in range(k):
        r = _mod(_clmul(r, r), f)
    return r


def is_irreducible(f: Poly) -> bool:
    """Rabin's test: x^(2^t) = x mod f and gcd(x^(2^(t/q)) - x, f) = 1."""
    fv = f.value
    t = f.degree
    if t is None or t < 1:
        return False
    if t == 1:
        return True
    if not fv & 1:
        return False
    if _x_pow_2k_mod(t, fv) != 2:
        return False
    for q in prime_factors(t):
        h = _x_pow_2k_mod(t // q, fv) ^ 2
        if gcd(Poly(h), f).value != 1:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(t: int) -> Poly:
    """Irreducible of degree t with the smallest bit-packed value."""
    if t < 1:
        raise ValueError("degree must be >= 1")
    if t == 1:
        return Poly(0b10)
    for v in range((1 << t) | 1, 1 << (t + 1), 2):
        if is_irreducible(Poly(v)):
            return Poly(v)
    raise ConsistencyError(f"no irreducible polynomial of degree {t}")


@dataclass(frozen=True)
class FieldCtx:
    t: int
    modulus: Poly
    p: int

    @property
    def size(self) -> int:
        return 1 << self.t

    def mul(self, a: int, b: int) -> int:
        return _mod(_clmul(a, b), self.modulus.value)

    def pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def elem(self, rep: int) -> "FieldElem":
        return FieldElem(_mod(rep, self.modulus.value), self)

    def element_order_is(self, a: int, n: int) -> bool:
        """True iff the multiplicative order of ``a`` is exactly ``n``."""
        if a == 0 or self.pow(a, n) != 1:
            return False
        return all(self.pow(a, n // q) != 1 for q in prime_factors(n))


@dataclass(frozen=True)
class FieldElem:
    rep: int
    ctx: FieldCtx

    def __add__(self, other: "FieldElem") -> "FieldElem":
        return FieldElem(self.rep ^ other.rep, self.ctx)

    __sub__ = __add__

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        return FieldElem(self.ctx.mul(self.rep, other.rep), self.ctx)

    def __pow__(self, e: int) -> "FieldElem":
        return FieldElem(self.ctx.pow(self.rep, e % (self.ctx.size - 1)), self.ctx)

    def is_zero(self) -> bool:
        return self.rep == 0

    def is_one(self) -> bool:
        return self.rep == 1

    def __repr__(self) -> str:
        return f"FieldElem({Poly(self.rep).to_text()} mod {self.ctx.modulus.to_text()})"


def build_field(p: int) -> FieldCtx:
    """Smallest field F_{2^t} holding a primitive p-th root of unity.

    The modulus is the irreducible polynomial of degree t with the smallest
    bit-packed value.  ``p`` need only be odd; callers in this package pass
    primes.
    """
    t = mult_order_of_two(p)
    return FieldCtx(t, smallest_irreducible(t), p)


def primitive_root_of_unity(ctx: FieldCtx) -> FieldElem:
    """Canonical element of multiplicative order exactly ``ctx.p``.

    For ``t <= 16`` this is the element with the smallest representation.
    For larger fields the scan would visit on the order of ``2^t / p``
    elements, so instead the first ``b^((2^t-1)/p)`` (b = 2, 3, ...) of the
    right order is returned.  Both rules are deterministic.
    """
    n = ctx.p
    if ctx.t <= SCAN_LIMIT_T:
        for b in range(2 if ctx.size > 2 else 1, ctx.size):
            if ctx.element_order_is(b, n):
                return FieldElem(b, ctx)
    else:
        cof = (ctx.size - 1) // n
        for b in range(2, ctx.size):
            a = ctx.pow(b, cof)
            if ctx.element_order_is(a, n):
                return FieldElem(a, ctx)
    raise ConsistencyError(f"no element of order {n} in GF(2^{ctx.t})")


def root_product(ctx: FieldCtx, alpha: FieldElem, exponents: Iterable[int]) -> Poly:
    """prod (x - alpha^i) over ``exponents``, checked to lie in GF(2)[x]."""
    coeffs = [1]  # field reps, index = power of x
    for i in exponents:
        root = ctx.pow(alpha.rep, i % ctx.p)
        nxt = [0] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j + 1] ^= c
            nxt[j] ^= ctx.mul(c, root)
        coeffs = nxt
    bad = [j for j, c in enumerate(coeffs) if c > 1]
    if bad:
        raise ConsistencyError(
            f"coefficients of x^{bad} lie outside GF(2); exponent set is not "
            "closed under doubling"
        )
    return Poly.from_bits(coeffs)


def minimal_polynomial(ctx: FieldCtx, alpha: FieldElem, s: int) -> Poly:
    """M_s(x) = prod over the cyclotomic coset of s of (x - alpha^i)."""
    if not 0 <= s < ctx.p:
        raise ValueError(f"s={s} outside [0, {ctx.p})")
    coset = cyclotomic_cosets(ctx.p).coset_of(s)
    return root_product(ctx, alpha, coset)


def evaluate(f: Poly, a: FieldElem) -> FieldElem:
    """Horner evaluation of a GF(2) polynomial at a field element."""
    ctx = a.ctx
    r = 0
    for e in range(f.degree if f else -1, -1, -1):
        r = ctx.mul(r, a.rep) ^ f.coeff(e)
    return FieldElem(r, ctx)


def factor_x_n_minus_1(n: int) -> dict[int, Poly]:
    """Irreducible factors of x^n - 1 keyed by coset representative."""
    ctx = build_field(n)
    alpha = primitive_root_of_unity(ctx)
    part = cyclotomic_cosets(n)
    return {s: root_product(ctx, alpha, c) for s, c in zip(part.reps, part.cosets)}

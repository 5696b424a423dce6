"""Polynomials over GF(2), bit-packed into Python integers.

Bit ``i`` of the backing integer is the coefficient of ``x^i``.  Addition is
XOR and multiplication is carry-less.  Values are immutable and hashable, so
they can be used as dictionary keys (syndrome and misalignment tables rely on
this).

Two serialisations are supported:

* text, descending powers: ``"x^15+x^12+x^7+x^6+x^2+x+1"`` (``"0"`` for zero)
* hex of the little-endian bit string: ``"90c7"`` (``"0"`` for zero)
"""

from __future__ import annotations

from typing import Iterable, Optional, Union

__all__ = [
    "Poly",
    "X",
    "ONE",
    "ZERO",
    "add",
    "mul",
    "divrem",
    "mod_pow_x",
    "order",
    "gcd",
    "x_n_minus_1",
    "parse",
    "from_hex",
]

PolyLike = Union["Poly", int]


class Poly:
    """Immutable polynomial over GF(2).

    ``degree`` is ``None`` for the zero polynomial; there is no ``-1``
    sentinel to leak into degree arithmetic.
    """

    __slots__ = ("_v",)

    def __init__(self, value: int = 0):
        if isinstance(value, Poly):
            value = value._v
        if value < 0:
            raise ValueError("bit-packed polynomial value must be nonnegative")
        object.__setattr__(self, "_v", int(value))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> "Poly":
        v = 0
        for e in exps:
            v ^= 1 << e
        return cls(v)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "Poly":
        v = 0
        for i, b in enumerate(bits):
            if b & 1:
                v |= 1 << i
        return cls(v)

    @classmethod
    def monomial(cls, e: int) -> "Poly":
        return cls(1 << e)

    # -- accessors ----------------------------------------------------------

    @property
    def value(self) -> int:
        return self._v

    @property
    def degree(self) -> Optional[int]:
        return self._v.bit_length() - 1 if self._v else None

    def is_zero(self) -> bool:
        return self._v == 0

    def weight(self) -> int:
        return self._v.bit_count()

    def exponents(self) -> list[int]:
        """Exponents with a nonzero coefficient, ascending."""
        v, out, i = self._v, [], 0
        while v:
            if v & 1:
                out.append(i)
            v >>= 1
            i += 1
        return out

    def coeff(self, i: int) -> int:
        return (self._v >> i) & 1

    def bits(self, n: int) -> list[int]:
        """Coefficient vector of length ``n`` (constant term first)."""
        if self._v >> n:
            raise ValueError(f"degree {self.degree} does not fit in {n} bits")
        return [(self._v >> i) & 1 for i in range(n)]

    def at_one(self) -> int:
        """Evaluate at x = 1."""
        return self._v.bit_count() & 1

    def reversed(self, width: Optional[int] = None) -> "Poly":
        """``x^width * a(1/x)``; ``width`` defaults to the degree."""
        if self._v == 0:
            return self
        if width is None:
            width = self.degree
        if width < self.degree:
            raise ValueError("reversal width smaller than degree")
        s = bin(self._v)[2:].zfill(width + 1)
        return Poly(int(s[::-1], 2))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: PolyLike) -> "Poly":
        return Poly(self._v ^ _val(other))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__
    __xor__ = __add__

    def __mul__(self, other: PolyLike) -> "Poly":
        return Poly(_clmul(self._v, _val(other)))

    __rmul__ = __mul__

    def __divmod__(self, other: PolyLike):
        q, r = _divmod(self._v, _val(other))
        return Poly(q), Poly(r)

    def __floordiv__(self, other: PolyLike) -> "Poly":
        return Poly(_divmod(self._v, _val(other))[0])

    def __mod__(self, other: PolyLike) -> "Poly":
        return Poly(_mod(self._v, _val(other)))

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        r, b = 1, self._v
        while e:
            if e & 1:
                r = _clmul(r, b)
            b = _clmul(b, b)
            e >>= 1
        return Poly(r)

    def __lshift__(self, k: int) -> "Poly":
        return Poly(self._v << k)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._v == other._v
        if isinstance(other, int):
            return self._v == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly", self._v))

    def __bool__(self) -> bool:
        return self._v != 0

    def __int__(self) -> int:
        return self._v

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # -- serialisation ------------------------------------------------------

    def to_text(self) -> str:
        if self._v == 0:
            return "0"
        terms = []
        for e in reversed(self.exponents()):
            if e == 0:
                terms.append("1")
            elif e == 1:
                terms.append("x")
            else:
                terms.append(f"x^{e}")
        return "+".join(terms)

    def to_hex(self) -> str:
        return format(self._v, "x")


def _val(a: PolyLike) -> int:
    if isinstance(a, Poly):
        return a._v
    if isinstance(a, int) and a >= 0:
        return a
    raise TypeError(f"expected Poly or nonnegative int, got {a!r}")


def _clmul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        s = a.bit_length() - db
        q |= 1 << s
        a ^= b << s
    return q, a


def _mod(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


ZERO = Poly(0)
ONE = Poly(1)
X = Poly(2)


def add(a: PolyLike, b: PolyLike) -> Poly:
    return Poly(_val(a) ^ _val(b))


def mul(a: PolyLike, b: PolyLike) -> Poly:
    return Poly(_clmul(_val(a), _val(b)))


def divrem(a: PolyLike, b: PolyLike) -> tuple[Poly, Poly]:
    """Euclidean division: ``a = q*b + r`` with ``deg r < deg b``.

    Raises ZeroDivisionError when ``b`` is zero.
    """
    q, r = _divmod(_val(a), _val(b))
    return Poly(q), Poly(r)


def mod_pow_x(a: int, f: PolyLike) -> Poly:
    """``x^a mod f`` by square-and-multiply."""
    fv = _val(f)
    if fv.bit_length() < 2:
        raise ValueError("modulus must have degree >= 1")
    if a < 0:
        raise ValueError("exponent must be nonnegative")
    r = 1
    base = _mod(2, fv)
    while a:
        if a & 1:
            r = _mod(_clmul(r, base), fv)
        base = _mod(_clmul(base, base), fv)
        a >>= 1
    return Poly(_mod(r, fv))


def x_n_minus_1(n: int) -> Poly:
    return Poly((1 << n) | 1)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def order(f: PolyLike, cap: int, n: Optional[int] = None) -> int:
    """Smallest ``a >= 1`` with ``x^a = 1 (mod f)``.

    When ``n`` is given and ``f`` divides ``x^n - 1`` the order is searched
    among the divisors of ``n`` only.  Otherwise powers of ``x`` are stepped
    one at a time up to ``cap``.
    """
    fv = _val(f)
    if fv.bit_length() < 2:
        raise ValueError("order needs deg(f) >= 1")
    if not fv & 1:
        raise ValueError("order undefined: f(0) = 0")
    if n is not None and n >= 1 and _mod((1 << n) | 1, fv) == 0:
        for d in _divisors(n):
            if d > cap:
                break
            if mod_pow_x(d, fv).value == 1:
                return d
        raise ValueError(f"order exceeds cap {cap}")
    deg = fv.bit_length() - 1
    top = 1 << deg
    r = 1
    for a in range(1, cap + 1):
        r <<= 1
        if r & top:
            r ^= fv
        if r == 1:
            return a
    raise ValueError(f"order exceeds cap {cap}")


def gcd(a: PolyLike, b: PolyLike) -> Poly:
    av, bv = _val(a), _val(b)
    if av == 0 and bv == 0:
        raise ValueError("gcd(0, 0) is undefined")
    while bv:
        av, bv = bv, _mod(av, bv)
    return Poly(av)


def parse(text: str) -> Poly:
    """Parse the descending-power text form, e.g. ``"x^5+x^2+1"``.

    Repeated terms cancel (coefficients are mod 2).  ``x**3`` is accepted
    as a synonym for ``x^3``.
    """
    s = text.replace(" ", "").replace("**", "^")
    if s in ("", "0"):
        if s == "":
            raise ValueError("empty polynomial text")
        return ZERO
    v = 0
    for term in s.split("+"):
        if term == "1":
            e = 0
        elif term == "x":
            e = 1
        elif term.startswith("x^") and term[2:].isdigit():
            e = int(term[2:])
        elif term == "0":
            continue
        else:
            raise ValueError(f"cannot parse polynomial term {term!r} in {text!r}")
        v ^= 1 << e
    return Poly(v)


def from_hex(text: str) -> Poly:
    s = text.strip().lower()
    if s.startswith("0x"):
        s = s[2:]
    if not s or any(c not in "0123456789abcdef" for c in s):
        raise ValueError(f"invalid hex polynomial {text!r}")
    return Poly(int(s, 16))

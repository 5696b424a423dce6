"""Binary cyclic codes as ideals <g(x)> in GF(2)[x]/(x^n - 1).

Codewords and messages are bit-packed integers or :class:`Poly` values with
bit ``i`` the coefficient of ``x^i``; converting between the two views is
the identity on the bit layout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence, Union

import numpy as np

from .poly2 import ONE, Poly, divrem, x_n_minus_1

BitsLike = Union[Poly, int, Sequence[int], np.ndarray]

DEFAULT_CAP_K = 24


def as_int(v: BitsLike, n: int) -> int:
    """Bit-pack ``v`` and check it fits in ``n`` positions."""
    if isinstance(v, Poly):
        x = v.value
    elif isinstance(v, (int, np.integer)):
        x = int(v)
    else:
        arr = np.asarray(v)
        if arr.ndim != 1 or arr.shape[0] != n:
            raise ValueError(f"bit vector must have length {n}, got shape {arr.shape}")
        x = 0
        for i in np.flatnonzero(arr & 1):
            x |= 1 << int(i)
        return x
    if x >> n:
        raise ValueError(f"vector does not fit in length {n}")
    return x


def to_bits(v: Union[Poly, int], n: int) -> np.ndarray:
    x = v.value if isinstance(v, Poly) else int(v)
    if x >> n:
        raise ValueError(f"vector does not fit in length {n}")
    return np.array([(x >> i) & 1 for i in range(n)], dtype=np.uint8)


def cyclic_shift(v: int, s: int, n: int) -> int:
    """x^s * v mod (x^n - 1) for bit-packed v; s may be negative."""
    s %= n
    mask = (1 << n) - 1
    return ((v << s) | (v >> (n - s))) & mask


def gf2_rank(rows: Sequence[int]) -> int:
    basis: dict[int, int] = {}  # leading bit -> row
    for r in rows:
        while r:
            lead = r.bit_length() - 1
            if lead not in basis:
                basis[lead] = r
                break
            r ^= basis[lead]
    return len(basis)


@dataclass(frozen=True)
class CyclicCode:
    """Cyclic code of length ``n`` generated by ``g``.

    Construct through :func:`new_cyclic`, which checks that ``g`` divides
    ``x^n - 1``.
    """

    n: int
    g: Poly
    h: Poly = field(compare=False, repr=False)

    @property
    def k(self) -> int:
        return self.n - self.g.degree

    def __repr__(self) -> str:
        return f"CyclicCode[{self.n},{self.k}](g={self.g.to_text()})"

    def generator_rows(self) -> list[int]:
        return [self.g.value << i for i in range(self.k)]

    def is_codeword(self, v: BitsLike) -> bool:
        x = as_int(v, self.n)
        return divrem(x, self.g)[1].is_zero()


def new_cyclic(n: int, g: Poly) -> CyclicCode:
    if n < 1:
        raise ValueError("length must be >= 1")
    if not isinstance(g, Poly):
        g = Poly(g)
    if g.is_zero():
        raise ValueError("generator must be nonzero")
    if g == x_n_minus_1(n):
        return CyclicCode(n, g, ONE)  # the zero code
    if g.degree >= n:
        raise ValueError(f"deg g = {g.degree} must be < n = {n}")
    h, r = divrem(x_n_minus_1(n), g)
    if r:
        raise ValueError(f"not a cyclic code generator: {g.to_text()} does not divide x^{n}-1")
    return CyclicCode(n, g, h)


def whole_space(n: int) -> CyclicCode:
    return new_cyclic(n, ONE)


def dual(c: CyclicCode) -> CyclicCode:
    """Dual code; generator x^deg(h) h(1/x)."""
    return new_cyclic(c.n, c.h.reversed())


def contains(c1: CyclicCode, c2: CyclicCode) -> bool:
    """True iff C2 is a subcode of C1, i.e. g1 divides g2."""
    if c1.n != c2.n:
        raise ValueError(f"length mismatch: {c1.n} vs {c2.n}")
    return divrem(c2.g, c1.g)[1].is_zero()


def is_dual_containing(c: CyclicCode) -> bool:
    return contains(c, dual(c))


def encode(c: CyclicCode, m: Union[Poly, int]) -> Poly:
    m = Poly(m)
    if m and m.degree >= c.k:
        raise ValueError(f"message degree {m.degree} must be < k = {c.k}")
    return m * c.g


@dataclass(frozen=True)
class ParityCheck:
    """Full-rank parity-check matrix with bit-packed rows."""

    n: int
    rows: tuple[int, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.n)

    def matrix(self) -> np.ndarray:
        return np.array([to_bits(r, self.n) for r in self.rows], dtype=np.uint8)

    def syndrome_int(self, v: int) -> int:
        s = 0
        for j, r in enumerate(self.rows):
            s |= ((r & v).bit_count() & 1) << j
        return s

    def column(self, i: int) -> int:
        return self.syndrome_int(1 << i)


def parity_check(c: CyclicCode) -> ParityCheck:
    """Rows are the shifts x^i g_perp(x), i < n - k, of the dual generator."""
    if c.k == c.n:
        raise ValueError("the whole space has no parity constraints")
    gd = dual(c)
    rows = gd.generator_rows()
    if gf2_rank(rows) != c.n - c.k:
        raise AssertionError("parity-check rows are not independent")
    return ParityCheck(c.n, tuple(rows))


def syndrome(hc: ParityCheck, v: BitsLike) -> np.ndarray:
    """v H^T as a length-(n-k) bit vector."""
    s = hc.syndrome_int(as_int(v, hc.n))
    return to_bits(s, len(hc.rows))


# -- minimum distance -------------------------------------------------------


def _pack_words(vals: Sequence[int], words: int) -> np.ndarray:
    out = np.zeros((len(vals), words), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, v in enumerate(vals):
        for w in range(words):
            out[i, w] = (v >> (64 * w)) & mask
    return out


def _span_weights(rows: Sequence[int], n: int) -> np.ndarray:
    """Weight of every vector in the span of ``rows`` (index = message bits).

    The low rows are expanded into a table once; the high rows are walked in
    Gray-code order, each step XORing one row into the whole table.
    """
    k = len(rows)
    words = max(1, (n + 63) // 64)
    lo = min(k, 16)
    hi = k - lo
    base = np.zeros((1 << lo, words), dtype=np.uint64)
    packed_lo = _pack_words(rows[:lo], words)
    for i in range(lo):
        size = 1 << i
        base[size : 2 * size] = base[:size] ^ packed_lo[i]
    packed_hi = _pack_words(rows[lo:], words)
    weights = np.empty(1 << k, dtype=np.int32)
    cur = np.zeros(words, dtype=np.uint64)
    for j in range(1 << hi):
        if j:
            flip = (j & -j).bit_length() - 1
            cur ^= packed_hi[flip]
        gray = j ^ (j >> 1)
        blk = base ^ cur
        w = np.bitwise_count(blk).sum(axis=1, dtype=np.int32)
        weights[gray << lo : (gray + 1) << lo] = w
    return weights


def weight_distribution_by_enumeration(rows: Sequence[int], n: int) -> list[int]:
    w = _span_weights(rows, n)
    return np.bincount(w, minlength=n + 1).tolist()


def _krawtchouk(j: int, i: int, n: int) -> int:
    return sum((-1) ** s * comb(i, s) * comb(n - i, j - s) for s in range(j + 1))


def macwilliams(dual_dist: Sequence[int], n: int) -> list[int]:
    """Weight distribution of C from that of its dual (exact integers)."""
    size = sum(dual_dist)
    out = []
    for j in range(n + 1):
        tot = sum(b * _krawtchouk(j, i, n) for i, b in enumerate(dual_dist) if b)
        q, r = divmod(tot, size)
        if r:
            raise AssertionError("MacWilliams transform produced a non-integer")
        out.append(q)
    return out


def min_distance(c: CyclicCode, cap_k: int = DEFAULT_CAP_K, method: str = "auto") -> int:
    """Exact minimum Hamming weight over nonzero codewords.

    ``method="enumerate"`` walks all 2^k codewords.  ``method="dual"`` walks
    the 2^(n-k) dual codewords and applies the MacWilliams identities.
    ``"auto"`` picks the smaller side.  Raises ValueError when the chosen
    enumeration exceeds 2^cap_k vectors.
    """
    if c.k == 0:
        raise ValueError("the zero code has no nonzero codewords")
    if method == "auto":
        if c.g == ONE:
            return 1
        method = "enumerate" if c.k <= c.n - c.k else "dual"
    if method == "enumerate":
        if c.k > cap_k:
            raise ValueError(f"dimension exceeds exhaustive cap: k={c.k} > {cap_k}")
        return int(_span_weights(c.generator_rows(), c.n)[1:].min())
    if method == "dual":
        r = c.n - c.k
        if r > cap_k:
            raise ValueError(f"dimension exceeds exhaustive cap: n-k={r} > {cap_k}")
        rows = dual(c).generator_rows() if r else []
        dist = macwilliams(weight_distribution_by_enumeration(rows, c.n), c.n)
        return next(j for j in range(1, c.n + 1) if dist[j])
    raise ValueError(f"unknown method {method!r}")

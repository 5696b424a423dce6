"""Supercode chains above a QR code and the synchronizable-code parameters.

Deleting minimal-polynomial factors from the QR generator g_R gives larger
cyclic codes that still contain g_R's code, hence are still dual-containing.
Any strictly nested pair C2 < C1 from such a chain yields a quantum
synchronizable code of length p + c_l + c_r and dimension 2 k2 - p, and
c_l + c_r may go up to ord(g2/g1) - 1 = p - 1.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Iterator, Optional

from .arith import cyclotomic_cosets, is_prime, mersenne_exponent
from .cyclic import (
    DEFAULT_CAP_K,
    CyclicCode,
    contains,
    dual,
    min_distance,
    new_cyclic,
)
from .errors import ConsistencyError
from .field import minimal_polynomial
from .poly2 import ONE, Poly, divrem, order, x_n_minus_1
from .qr import build_qr_family

log = logging.getLogger(__name__)


def _prod(polys) -> Poly:
    return reduce(lambda a, b: a * b, polys, ONE)


@dataclass(frozen=True)
class FactorChain:
    """g_R split into minimal polynomials, with the canonical nested codes.

    ``codes[z]`` is generated by g_R with ``z`` factors removed, taking the
    factor with the largest coset representative first.  Removing every
    factor gives the whole space, which is not listed in ``codes`` but is
    returned by :meth:`code_deleting`.
    """

    p: int
    reps: tuple[int, ...]
    factors: tuple[Poly, ...]
    codes: tuple[CyclicCode, ...]
    l: Optional[int] = None

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def g_r(self) -> Poly:
        return _prod(self.factors)

    def deletion_order(self) -> list[int]:
        return sorted(self.reps, reverse=True)

    def code_deleting(self, z: int) -> CyclicCode:
        if not 0 <= z <= len(self.factors):
            raise ValueError(f"can delete between 0 and {len(self.factors)} factors, not {z}")
        gone = set(self.deletion_order()[:z])
        return new_cyclic(self.p, _prod(f for s, f in zip(self.reps, self.factors) if s not in gone))

    def code_without(self, deleted) -> CyclicCode:
        """Code generated by the factors whose representatives are not in ``deleted``."""
        deleted = set(deleted)
        unknown = deleted - set(self.reps)
        if unknown:
            raise ValueError(f"no factors with representatives {sorted(unknown)}")
        return new_cyclic(self.p, _prod(f for s, f in zip(self.reps, self.factors) if s not in deleted))

    def subset_codes(self) -> Iterator[tuple[tuple[int, ...], CyclicCode]]:
        """Every (deleted reps, code) over all 2^F factor subsets."""
        for r in range(len(self.reps) + 1):
            for gone in itertools.combinations(self.reps, r):
                yield gone, self.code_without(gone)


@lru_cache(maxsize=None)
def qr_chain(p: int) -> FactorChain:
    """Factor chain above <g_R> for a prime p = -1 (mod 8)."""
    if p % 8 != 7:
        raise ValueError(f"dual-containing QR codes need p = -1 mod 8, got p={p}")
    fam = build_qr_family(p)
    part = cyclotomic_cosets(p)
    qr = set(fam.residues.qr)
    reps = tuple(s for s, c in zip(part.reps, part.cosets) if s and c[0] in qr)
    factors = tuple(minimal_polynomial(fam.field_ctx, fam.alpha, s) for s in reps)
    if _prod(factors) != fam.g_r:
        raise ConsistencyError("minimal polynomials over Q^R do not multiply to g_R")
    order_ = sorted(reps, reverse=True)
    codes = []
    for z in range(len(reps)):
        gone = set(order_[:z])
        codes.append(new_cyclic(p, _prod(f for s, f in zip(reps, factors) if s not in gone)))
    return FactorChain(p, reps, factors, tuple(codes), mersenne_exponent(p))


def mersenne_chain(l: int) -> FactorChain:
    p = (1 << l) - 1
    if l < 2 or not is_prime(p):
        raise ValueError(f"2^{l}-1 = {p} is not prime")
    ch = qr_chain(p)
    expected = ((1 << (l - 1)) - 1) // l
    if len(ch) != expected or any(f.degree != l for f in ch.factors):
        raise ConsistencyError(
            f"expected {expected} factors of degree {l}, got degrees {[f.degree for f in ch.factors]}"
        )
    return ch


def quotient_f(c1: CyclicCode, c2: CyclicCode) -> Poly:
    """f with g2 = f * g1 for C2 strictly inside C1."""
    if c1.n != c2.n:
        raise ValueError(f"length mismatch: {c1.n} vs {c2.n}")
    if not contains(c1, c2):
        raise ValueError("C2 is not a subcode of C1")
    if c1 == c2:
        raise ValueError("C1 = C2 gives f = 1")
    f, r = divrem(c2.g, c1.g)
    if r:
        raise ConsistencyError("containment held but g1 does not divide g2")
    return f


def verify_lemma3(f: Poly, p: int) -> int:
    """Check ord(f) = p for a nontrivial divisor f of x^p - 1, p prime.

    f = x + 1 has order 1, so factors divisible by x + 1 are rejected up
    front; every f arising from the QR chain avoids it.
    """
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if f == ONE or f.is_zero():
        raise ValueError("f must be a nontrivial polynomial")
    if divrem(x_n_minus_1(p), f)[1]:
        raise ValueError(f"{f.to_text()} does not divide x^{p}-1")
    if f.at_one() == 0:
        raise ValueError("f is divisible by x+1; its order need not be p")
    o = order(f, cap=p, n=p)
    if o != p:
        raise ConsistencyError(f"ord({f.to_text()}) = {o} != {p}")
    return p


@dataclass(frozen=True)
class QsyncParams:
    n: int
    c_l: int
    c_r: int
    k1: int
    k2: int
    dim_q: int
    f: Poly
    ord_f: int
    d1: Optional[int] = None
    d2: Optional[int] = None
    c1: CyclicCode = field(default=None, compare=False, repr=False)
    c2: CyclicCode = field(default=None, compare=False, repr=False)

    @property
    def length(self) -> int:
        return self.n + self.c_l + self.c_r

    @property
    def t_bit(self) -> Optional[int]:
        return None if self.d1 is None else (self.d1 - 1) // 2

    @property
    def t_phase(self) -> Optional[int]:
        return None if self.d2 is None else (self.d2 - 1) // 2

    @property
    def max_misalignment(self) -> int:
        return self.ord_f - 1

    def label(self) -> str:
        return f"({self.c_l},{self.c_r})-[[{self.length},{self.dim_q}]]"

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "c_l": self.c_l,
            "c_r": self.c_r,
            "length": self.length,
            "k1": self.k1,
            "k2": self.k2,
            "dim_q": self.dim_q,
            "g1": self.c1.g.to_text() if self.c1 is not None else None,
            "g2": self.c2.g.to_text() if self.c2 is not None else None,
            "f": self.f.to_text(),
            "ord_f": self.ord_f,
            "d1": self.d1,
            "d2": self.d2,
            "t_bit": self.t_bit,
            "t_phase": self.t_phase,
        }


def qsync_params(
    c1: CyclicCode,
    c2: CyclicCode,
    c_l: int,
    c_r: int,
    distances: bool = True,
    cap_k: int = DEFAULT_CAP_K,
) -> QsyncParams:
    """Validate the chain C2^perp <= C2 < C1 and derive the code parameters.

    Minimum distances (and with them ``t_bit``/``t_phase``) are filled only
    when ``distances`` is set and the exhaustive search fits under ``cap_k``.
    """
    if c1.n != c2.n:
        raise ValueError(f"length mismatch: {c1.n} vs {c2.n}")
    if c_l < 0 or c_r < 0:
        raise ValueError("c_l and c_r must be nonnegative")
    if not (contains(c2, dual(c2)) and contains(c1, c2) and c1 != c2):
        raise ValueError("C2⊥ ⊆ C2 ⊂ C1 fails")
    n = c1.n
    f = quotient_f(c1, c2)
    ord_f = order(f, cap=n, n=n)
    if c_l + c_r >= ord_f:
        raise ValueError(f"misalignment tolerance exceeded: c_l+c_r = {c_l + c_r} >= ord(f) = {ord_f}")
    dim_q = 2 * c2.k - n
    if dim_q < 1:
        raise ValueError(f"nonpositive dimension: 2k2 - n = {dim_q}")
    d1 = d2 = None
    if distances:
        d1 = _try_distance(c1, cap_k)
        d2 = _try_distance(c2, cap_k)
    return QsyncParams(n, c_l, c_r, c1.k, c2.k, dim_q, f, ord_f, d1, d2, c1, c2)


@lru_cache(maxsize=256)
def _try_distance(c: CyclicCode, cap_k: int) -> Optional[int]:
    try:
        return min_distance(c, cap_k)
    except ValueError:
        return None


def chain_pair(p: int, z: int, y: int) -> tuple[CyclicCode, CyclicCode]:
    """(C1, C2): C2 drops ``z`` factors of g_R, C1 drops ``z + y``."""
    if y < 1:
        raise ValueError("y must be >= 1 so that C2 is a proper subcode")
    ch = qr_chain(p)
    if z < 0 or z + y > len(ch):
        raise ValueError(f"need 0 <= z and z + y <= {len(ch)} (got z={z}, y={y})")
    return ch.code_deleting(z + y), ch.code_deleting(z)


@dataclass(frozen=True)
class Theorem2Row:
    z: int
    k1: int
    k2: int
    dim_q: int
    max_misalignment: int
    ord_f: int
    f: Poly

    def as_dict(self) -> dict:
        return {
            "z": self.z,
            "k1": self.k1,
            "k2": self.k2,
            "dim_q": self.dim_q,
            "max_misalignment": self.max_misalignment,
            "ord_f": self.ord_f,
            "f": self.f.to_text(),
        }


def theorem2_bound(l: int) -> int:
    return ((1 << (l - 1)) - l - 1) // l


def theorem2_table(l: int, z_max: Optional[int] = None) -> list[Theorem2Row]:
    """Rows z = 0..bound of [[p + c_l + c_r, 2zl + 1]] codes.

    Each row is realised by an actual pair (z deletions, z + 1 deletions)
    and checked with :func:`qsync_params` at c_l + c_r = p - 1 before it is
    emitted.
    """
    ch = mersenne_chain(l)
    p = ch.p
    bound = theorem2_bound(l)
    top = bound if z_max is None else z_max
    rows = []
    for z in range(top + 1):
        if z > bound:
            log.warning("z=%d omitted: above the bound z <= %d for l=%d", z, bound, l)
            continue
        c1, c2 = chain_pair(p, z, 1)
        par = qsync_params(c1, c2, (p - 1) // 2, p - 1 - (p - 1) // 2, distances=False)
        expected = 2 * z * l + 1
        if par.dim_q != expected or par.ord_f != p:
            raise ConsistencyError(
                f"row z={z}: dim_q={par.dim_q} (want {expected}), ord_f={par.ord_f} (want {p})"
            )
        verify_lemma3(par.f, p)
        rows.append(Theorem2Row(z, par.k1, par.k2, par.dim_q, par.ord_f - 1, par.ord_f, par.f))
    return rows

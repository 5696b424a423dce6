"""Classical-label simulation of framing, misalignment and recovery.

A block carries the label ``w = w2 + g1`` where ``w2`` ranges over C2 (the
CSS coset states c_perp + b_i together sweep out C2).  The frame is ``w``
with its last ``c_l`` bits prepended and its first ``c_r`` bits appended, so
any length-n window inside the frame is a cyclic shift of ``w``.

Index convention: frame and window bit ``j`` is the coefficient of ``x^j``.
A reader misaligned by ``theta`` to the right sees ``window_j =
w_{(j + theta) mod n}``, i.e. the polynomial ``x^(-theta) w mod (x^n - 1)``.
Recovery therefore looks up ``x^(-theta mod n) mod f``.
"""

from __future__ import annotations

import itertools
import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

import numpy as np

from .chain import QsyncParams, quotient_f
from .cyclic import (
    CyclicCode,
    ParityCheck,
    as_int,
    cyclic_shift,
    encode,
    min_distance,
    parity_check,
    to_bits,
)
from .errors import ConsistencyError
from .poly2 import Poly, _divmod, _mod, mod_pow_x, order

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Frame:
    bits: np.ndarray
    label: Poly
    n: int
    c_l: int
    c_r: int

    def window_at(self, offset: int) -> np.ndarray:
        return self.bits[offset : offset + self.n]


@dataclass(frozen=True, eq=False)
class Channel:
    theta: int
    e_b: np.ndarray
    rng_seed: Optional[int] = None

    @classmethod
    def clean(cls, frame: Frame, theta: int) -> "Channel":
        return cls(theta, np.zeros(len(frame.bits), dtype=np.uint8))

    @classmethod
    def with_errors(cls, frame: Frame, theta: int, positions) -> "Channel":
        e = np.zeros(len(frame.bits), dtype=np.uint8)
        for i in positions:
            e[i] ^= 1
        return cls(theta, e)


@dataclass(frozen=True, eq=False)
class RecoveryResult:
    theta_hat: Optional[int]
    corrected_window: Optional[np.ndarray]
    syndrome_weight_used: int
    success: bool
    reason: str = ""


def _check_extension(c1: CyclicCode, c2: CyclicCode, c_l: int, c_r: int) -> Poly:
    if c_l < 0 or c_r < 0:
        raise ValueError("c_l and c_r must be nonnegative")
    f = quotient_f(c1, c2)
    o = order(f, cap=c1.n, n=c1.n)
    if c_l + c_r >= o:
        raise ValueError(f"misalignment tolerance exceeded: c_l+c_r = {c_l + c_r} >= ord(f) = {o}")
    return f


def frame_from_label(w: int, n: int, c_l: int, c_r: int) -> Frame:
    lab = to_bits(w, n)
    bits = np.concatenate([lab[n - c_l :] if c_l else lab[:0], lab, lab[:c_r]])
    return Frame(bits, Poly(w), n, c_l, c_r)


def encode_frame(c1: CyclicCode, c2: CyclicCode, w2: Poly, c_l: int, c_r: int) -> Frame:
    """Frame carrying ``w2 + g1`` with cyclic extensions on both sides."""
    if not c2.is_codeword(w2):
        raise ValueError("w2 is not a codeword of C2")
    _check_extension(c1, c2, c_l, c_r)
    w = Poly(w2) + c1.g
    return frame_from_label(w.value, c1.n, c_l, c_r)


def transmit(frame: Frame, ch: Channel) -> np.ndarray:
    """The n bits a receiver misaligned by ``ch.theta`` reads, with bit flips."""
    if not -frame.c_l <= ch.theta <= frame.c_r:
        raise ValueError(f"theta={ch.theta} outside [-{frame.c_l}, {frame.c_r}]")
    if len(ch.e_b) != len(frame.bits):
        raise ValueError("error vector length does not match the frame")
    start = frame.c_l + ch.theta
    return (frame.bits[start : start + frame.n] ^ ch.e_b[start : start + frame.n]).astype(np.uint8)


def misalignment_table(f: Poly, n: int, c_l: int, c_r: int) -> dict[int, int]:
    """Map ``x^(-theta mod n) mod f`` (bit-packed) to theta in [-c_l, c_r].

    Raises ConsistencyError if two shifts collide, which cannot happen when
    c_l + c_r < ord(f).
    """
    table: dict[int, int] = {}
    for theta in range(-c_l, c_r + 1):
        key = mod_pow_x((-theta) % n, f).value if f.degree else 0
        if key in table:
            raise ConsistencyError(f"misalignments {table[key]} and {theta} share residue mod f")
        table[key] = theta
    return table


class SyncDecoder:
    """Tables for bit-error correction in C1 and misalignment lookup.

    ``t`` defaults to floor((d1 - 1) / 2) with d1 the exact minimum distance
    of C1.
    """

    def __init__(self, c1: CyclicCode, f: Poly, c_l: int, c_r: int, t: Optional[int] = None):
        n = c1.n
        self.c1, self.f, self.c_l, self.c_r, self.n = c1, f, c_l, c_r, n
        if c_l < 0 or c_r < 0:
            raise ValueError("c_l and c_r must be nonnegative")
        ord_f = order(f, cap=n, n=n) if f.degree else 1
        if c_l + c_r >= ord_f:
            raise ValueError(f"misalignment tolerance exceeded: c_l+c_r = {c_l + c_r} >= ord(f) = {ord_f}")
        if t is None:
            t = (min_distance(c1) - 1) // 2
        self.t = t
        self.hc: Optional[ParityCheck] = parity_check(c1) if c1.k < n else None
        self.syndrome_table: dict[int, int] = {}
        if self.hc is not None:
            cols = [self.hc.column(i) for i in range(n)]
            for wt in range(t + 1):
                for pos in itertools.combinations(range(n), wt):
                    s = 0
                    e = 0
                    for i in pos:
                        s ^= cols[i]
                        e |= 1 << i
                    if s in self.syndrome_table:
                        raise ConsistencyError(f"syndrome collision at weight {wt}; t={t} too large")
                    self.syndrome_table[s] = e
        self.shift_table = misalignment_table(f, n, c_l, c_r)

    def correct(self, v: int) -> tuple[Optional[int], int]:
        """(corrected word or None, weight of the applied correction)."""
        if self.hc is None:
            return v, 0
        e = self.syndrome_table.get(self.hc.syndrome_int(v))
        if e is None:
            return None, 0
        return v ^ e, e.bit_count()

    def recover_int(self, v: int) -> tuple[Optional[int], Optional[int], int, str]:
        fixed, used = self.correct(v)
        if fixed is None:
            return None, None, 0, "uncorrectable bit errors"
        q, r = _divmod(fixed, self.c1.g.value)
        if r:
            raise ConsistencyError("corrected window is not divisible by g1")
        key = _mod(q, self.f.value) if self.f.degree else 0
        theta = self.shift_table.get(key)
        if theta is None:
            return None, fixed, used, "misalignment out of design range"
        return theta, fixed, used, ""

    def recover(self, window) -> RecoveryResult:
        v = as_int(window, self.n)
        theta, fixed, used, reason = self.recover_int(v)
        return RecoveryResult(
            theta_hat=theta,
            corrected_window=None if fixed is None else to_bits(fixed, self.n),
            syndrome_weight_used=used,
            success=theta is not None,
            reason=reason,
        )


@lru_cache(maxsize=32)
def get_decoder(c1: CyclicCode, f: Poly, c_l: int, c_r: int, t: Optional[int] = None) -> SyncDecoder:
    return SyncDecoder(c1, f, c_l, c_r, t)


def recover(window, c1: CyclicCode, f: Poly, c_l: int, c_r: int) -> RecoveryResult:
    """Correct bit errors in the window, then read off the misalignment.

    Stage 1 decodes against C1 with a table of all patterns of weight up to
    t1; stage 2 divides the corrected word by g1; stage 3 reduces the
    quotient mod f and looks the residue up among the allowed shifts.
    """
    return get_decoder(c1, f, c_l, c_r).recover(window)


# -- Monte Carlo harness ----------------------------------------------------


@dataclass
class TrialSummary:
    params: dict
    trials: int
    successes: int
    failures: list = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return self.successes == self.trials

    def as_dict(self) -> dict:
        return {
            "params": self.params,
            "trials": self.trials,
            "successes": self.successes,
            "failures": self.failures,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)


@dataclass(frozen=True)
class TrialRecord:
    trial_index: int
    theta: int
    codeword: int
    error_positions: tuple[int, ...]
    theta_hat: Optional[int]
    success: bool
    reason: str


def trial_rng(seed: int, index: int) -> np.random.Generator:
    """Per-trial generator; depends only on (seed, index)."""
    return np.random.default_rng([seed & ((1 << 64) - 1), index])


def run_one_trial(
    params: QsyncParams,
    index: int,
    max_errors: int,
    seed: int,
    window_only: bool = True,
    decoder: Optional[SyncDecoder] = None,
) -> TrialRecord:
    c1, c2 = params.c1, params.c2
    n, c_l, c_r = params.n, params.c_l, params.c_r
    if decoder is None:
        decoder = get_decoder(c1, params.f, c_l, c_r, params.t_bit)
    rng = trial_rng(seed, index)
    msg = Poly.from_bits(rng.integers(0, 2, size=c2.k))
    w2 = encode(c2, msg)
    theta = int(rng.integers(-c_l, c_r + 1))
    wt = int(rng.integers(0, max_errors + 1))
    start = c_l + theta
    if window_only:
        pos = sorted(int(start + j) for j in rng.choice(n, size=min(wt, n), replace=False))
    else:
        total = n + c_l + c_r
        pos = sorted(int(j) for j in rng.choice(total, size=min(wt, total), replace=False))

    w = w2.value ^ c1.g.value
    frame = frame_from_label(w, n, c_l, c_r)
    window = transmit(frame, Channel.with_errors(frame, theta, pos))
    theta_hat, fixed, _, reason = decoder.recover_int(as_int(window, n))
    truth = cyclic_shift(w, -theta, n)
    ok = theta_hat == theta and fixed == truth
    if not ok and not reason:
        reason = "wrong misalignment" if theta_hat != theta else "miscorrected window"
    return TrialRecord(index, theta, w2.value, tuple(pos), theta_hat, ok, reason)


def run_trials(
    params: QsyncParams,
    n_trials: int,
    max_errors: int,
    seed: int,
    mode: str = "guaranteed",
    window_only: bool = True,
) -> TrialSummary:
    """Encode, misalign, corrupt and recover ``n_trials`` random blocks.

    In "guaranteed" mode ``max_errors`` may not exceed t1 and every trial
    is expected to succeed.  "stress" mode accepts any ``max_errors`` and
    records failures.  Trial i draws everything from ``trial_rng(seed, i)``,
    so any failure can be replayed with :func:`run_one_trial`.
    """
    if params.c1 is None or params.c2 is None:
        raise ValueError("params must carry the codes (build them with qsync_params)")
    if mode not in ("guaranteed", "stress"):
        raise ValueError(f"unknown mode {mode!r}")
    t1 = params.t_bit
    if t1 is None:
        t1 = (min_distance(params.c1) - 1) // 2
    if mode == "guaranteed" and max_errors > t1:
        raise ValueError(f"max_errors={max_errors} exceeds t1={t1} in guaranteed mode")
    if max_errors < 0 or n_trials < 0:
        raise ValueError("n_trials and max_errors must be nonnegative")
    decoder = get_decoder(params.c1, params.f, params.c_l, params.c_r, t1)
    successes = 0
    failures = []
    for i in range(n_trials):
        rec = run_one_trial(params, i, max_errors, seed, window_only, decoder)
        if rec.success:
            successes += 1
        else:
            failures.append(
                {
                    "trial_index": rec.trial_index,
                    "theta": rec.theta,
                    "error_positions": list(rec.error_positions),
                    "reason": rec.reason,
                }
            )
    summary_params = dict(params.as_dict())
    summary_params.update(
        {"t1": t1, "max_errors": max_errors, "seed": seed, "mode": mode, "window_only": window_only}
    )
    if mode == "guaranteed" and failures:
        log.error("%d guaranteed-mode failures", len(failures))
    return TrialSummary(summary_params, n_trials, successes, failures)

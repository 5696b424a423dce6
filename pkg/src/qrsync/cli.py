"""Command-line interface.

Exit codes: 0 success, 1 internal consistency failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from math import isqrt
from typing import Optional

from .chain import chain_pair, mersenne_chain, qsync_params, theorem2_bound, theorem2_table
from .cyclic import DEFAULT_CAP_K, CyclicCode, dual, is_dual_containing, min_distance, new_cyclic
from .errors import ConsistencyError
from .poly2 import Poly, from_hex, parse
from .qr import build_qr_family, verify_lemma2
from .syncsim import run_trials

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT = 0, 1, 2


@dataclass(frozen=True)
class CodeRecord:
    label: str
    n: int
    k: int
    generator: Poly
    dual_generator: Poly
    dual_containing: bool
    min_distance: Optional[int] = None
    min_distance_exact: bool = False

    @classmethod
    def from_code(cls, label: str, c: CyclicCode, distance: bool = False,
                  cap_k: int = DEFAULT_CAP_K, qr_length: Optional[int] = None) -> "CodeRecord":
        d, exact = None, False
        if distance:
            try:
                d, exact = min_distance(c, cap_k), True
            except ValueError:
                if qr_length is not None:
                    d = sqrt_bound(qr_length)
        return cls(label, c.n, c.k, c.g, dual(c).g, is_dual_containing(c), d, exact)

    def to_dict(self) -> dict:
        md = None
        if self.min_distance is not None:
            md = {"value": self.min_distance, "exact": self.min_distance_exact}
        return {
            "label": self.label,
            "n": self.n,
            "k": self.k,
            "generator": {"text": self.generator.to_text(), "hex": self.generator.to_hex()},
            "dual_generator": {
                "text": self.dual_generator.to_text(),
                "hex": self.dual_generator.to_hex(),
            },
            "dual_containing": self.dual_containing,
            "min_distance": md,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CodeRecord":
        g = parse(d["generator"]["text"])
        if from_hex(d["generator"]["hex"]) != g:
            raise ValueError("generator text and hex disagree")
        gd = parse(d["dual_generator"]["text"])
        if from_hex(d["dual_generator"]["hex"]) != gd:
            raise ValueError("dual generator text and hex disagree")
        md = d.get("min_distance")
        return cls(
            d["label"], d["n"], d["k"], g, gd, d["dual_containing"],
            None if md is None else md["value"],
            False if md is None else md["exact"],
        )

    def csv_row(self) -> list:
        return [
            self.label, self.n, self.k,
            self.generator.to_text(), self.generator.to_hex(),
            self.dual_generator.to_text(), self.dual_generator.to_hex(),
            str(self.dual_containing).lower(),
            "" if self.min_distance is None else self.min_distance,
            str(self.min_distance_exact).lower(),
        ]


CODE_CSV_HEADER = [
    "label", "n", "k", "generator", "generator_hex", "dual_generator",
    "dual_generator_hex", "dual_containing", "min_distance", "exact",
]


def sqrt_bound(p: int) -> int:
    """Smallest d allowed by d >= sqrt(p), and d^2 - d + 1 >= p when p = 3 mod 4."""
    d = isqrt(p)
    if d * d < p:
        d += 1
    if p % 4 == 3:
        while d * d - d + 1 < p:
            d += 1
    return d


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- commands ---------------------------------------------------------------


def cmd_qr(args) -> tuple[str, int]:
    fam = build_qr_family(args.p)
    records = [
        CodeRecord.from_code(label, c, args.min_distance, args.cap_k,
                             qr_length=args.p if label in ("R", "NR") else None)
        for label, c in fam.codes().items()
    ]
    lemma = verify_lemma2(fam) if args.verify_lemma2 else None
    if lemma is not None and not lemma.ok:
        raise ConsistencyError(f"Lemma 2 check failed: {lemma.as_dict()}")
    if args.format == "csv":
        return _csv(CODE_CSV_HEADER, [r.csv_row() for r in records]), EXIT_OK
    if args.format == "text":
        lines = [f"p = {fam.p}, GF(2^{fam.field_ctx.t}) mod {fam.field_ctx.modulus}, "
                 f"alpha = {Poly(fam.alpha.rep)}"]
        for r in records:
            d = "" if r.min_distance is None else (
                f", d = {r.min_distance}" + ("" if r.min_distance_exact else " (lower bound)"))
            lines.append(f"{r.label:7s}[{r.n},{r.k}{d}] g = {r.generator}  "
                         f"dual-containing: {r.dual_containing}")
        if lemma is not None:
            lines.append(f"lemma2: {'ok' if lemma.ok else 'FAILED'}")
        return "\n".join(lines) + "\n", EXIT_OK
    out = {
        "p": fam.p,
        "field": {"t": fam.field_ctx.t, "modulus": fam.field_ctx.modulus.to_text()},
        "alpha": Poly(fam.alpha.rep).to_text(),
        "codes": [r.to_dict() for r in records],
    }
    if lemma is not None:
        out["lemma2"] = lemma.as_dict()
    return _json(out), EXIT_OK


def cmd_chain(args) -> tuple[str, int]:
    ch = mersenne_chain(args.l)
    rows = theorem2_table(args.l)
    if args.format == "csv":
        return _csv(
            ["rep", "degree", "factor", "factor_hex"],
            [[s, f.degree, f.to_text(), f.to_hex()] for s, f in zip(ch.reps, ch.factors)],
        ), EXIT_OK
    if args.format == "text":
        lines = [f"p = {ch.p} = 2^{args.l}-1, {len(ch)} factors of g_R"]
        lines += [f"  M_{s}(x) = {f}" for s, f in zip(ch.reps, ch.factors)]
        lines.append("chain dims: " + ", ".join(str(c.k) for c in ch.codes))
        for r in rows:
            lines.append(f"  z={r.z}: [[{ch.p}+c_l+c_r, {r.dim_q}]], c_l+c_r <= {r.max_misalignment}")
        return "\n".join(lines) + "\n", EXIT_OK
    return _json({
        "l": args.l,
        "p": ch.p,
        "factors": [{"rep": s, "degree": f.degree, "text": f.to_text(), "hex": f.to_hex()}
                    for s, f in zip(ch.reps, ch.factors)],
        "dims": [c.k for c in ch.codes],
        "z_bound": theorem2_bound(args.l),
        "theorem2": [r.as_dict() for r in rows],
    }), EXIT_OK


def _pair_params(args, distances=True):
    c1, c2 = chain_pair(args.p, args.z, args.y)
    return qsync_params(c1, c2, args.cl, args.cr, distances=distances)


def cmd_params(args) -> tuple[str, int]:
    par = _pair_params(args, distances=not args.no_distance)
    d = par.as_dict()
    if args.format == "csv":
        return _csv(list(d), [["" if v is None else v for v in d.values()]]), EXIT_OK
    if args.format == "text":
        return f"{par.label()} ord(f) = {par.ord_f}, f = {par.f}\n", EXIT_OK
    return _json(d), EXIT_OK


def cmd_simulate(args) -> tuple[str, int]:
    par = _pair_params(args)
    mode = "stress" if args.stress else "guaranteed"
    summary = run_trials(par, args.trials, args.max_errors, args.seed, mode=mode,
                         window_only=not args.anywhere)
    code = EXIT_OK if (mode == "stress" or summary.all_ok) else EXIT_INTERNAL
    if args.format == "text":
        return f"{summary.successes}/{summary.trials} trials recovered\n", code
    if args.format == "csv":
        return _csv(["trial_index", "theta", "error_positions", "reason"],
                    [[f["trial_index"], f["theta"], " ".join(map(str, f["error_positions"])),
                      f["reason"].replace(" ", "_")] for f in summary.failures]), code
    return summary.to_json() + "\n", code


def cmd_mindist(args) -> tuple[str, int]:
    if args.g is not None:
        if args.n is None:
            raise ValueError("--g needs --n")
        g = from_hex(args.g) if args.g.lower().startswith("0x") else parse(args.g)
        label, code = "custom", new_cyclic(args.n, g)
    elif args.p is not None:
        label = args.code
        code = build_qr_family(args.p).codes()[label]
    else:
        raise ValueError("give either --p (with --code) or --n and --g")
    rec = CodeRecord.from_code(label, code, True, args.cap_k,
                               qr_length=args.p if label in ("R", "NR") else None)
    if args.format == "csv":
        return _csv(CODE_CSV_HEADER, [rec.csv_row()]), EXIT_OK
    if args.format == "text":
        return f"[{rec.n},{rec.k}] d = {rec.min_distance} exact={rec.min_distance_exact}\n", EXIT_OK
    return _json(rec.to_dict()), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--output", metavar="FILE")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="qrsync", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    q = sub.add_parser("qr", parents=[common], help="the four QR codes of length p")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--verify-lemma2", action="store_true")
    q.add_argument("--min-distance", action="store_true")
    q.add_argument("--cap-k", type=int, default=DEFAULT_CAP_K)
    q.set_defaults(func=cmd_qr)

    c = sub.add_parser("chain", parents=[common], help="supercode chain for p = 2^l - 1")
    c.add_argument("--l", type=int, required=True)
    c.set_defaults(func=cmd_chain)

    def pair_args(sp):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--z", type=int, default=0, help="factors deleted for C2")
        sp.add_argument("--y", type=int, default=1, help="further factors deleted for C1")
        sp.add_argument("--cl", type=int, default=0)
        sp.add_argument("--cr", type=int, default=0)

    pp = sub.add_parser("params", parents=[common], help="synchronizable-code parameters")
    pair_args(pp)
    pp.add_argument("--no-distance", action="store_true")
    pp.set_defaults(func=cmd_params)

    s = sub.add_parser("simulate", parents=[common], help="Monte Carlo sync recovery")
    pair_args(s)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--max-errors", type=int, default=0)
    s.add_argument("--stress", action="store_true", help="allow max-errors above t1")
    s.add_argument("--anywhere", action="store_true",
                   help="place errors anywhere in the frame, not only in the window")
    s.set_defaults(func=cmd_simulate)

    m = sub.add_parser("mindist", parents=[common], help="exact minimum distance")
    m.add_argument("--p", type=int)
    m.add_argument("--code", choices=("R", "NR", "R_bar", "NR_bar"), default="R")
    m.add_argument("--n", type=int)
    m.add_argument("--g", help="generator, text (x^3+x+1) or hex (0xb)")
    m.add_argument("--cap-k", type=int, default=DEFAULT_CAP_K)
    m.set_defaults(func=cmd_mindist)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        text, code = args.func(args)
    except (ValueError, ZeroDivisionError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""The four binary quadratic residue codes of prime length p."""

from __future__ import annotations

from dataclasses import dataclass

from .arith import ResidueClasses, quadratic_residues
from .cyclic import CyclicCode, contains, dual, is_dual_containing, new_cyclic
from .errors import ConsistencyError
from .field import FieldCtx, FieldElem, build_field, primitive_root_of_unity, root_product
from .poly2 import Poly, x_n_minus_1

X_PLUS_1 = Poly(0b11)


@dataclass(frozen=True)
class QrFamily:
    p: int
    residues: ResidueClasses
    c_r_code: CyclicCode
    c_nr_code: CyclicCode
    c_r_bar: CyclicCode
    c_nr_bar: CyclicCode
    field_ctx: FieldCtx
    alpha: FieldElem

    @property
    def g_r(self) -> Poly:
        return self.c_r_code.g

    @property
    def g_nr(self) -> Poly:
        return self.c_nr_code.g

    def codes(self) -> dict[str, CyclicCode]:
        return {
            "R": self.c_r_code,
            "NR": self.c_nr_code,
            "R_bar": self.c_r_bar,
            "NR_bar": self.c_nr_bar,
        }

    def paper_canonical(self, expected: Poly) -> str:
        """Which label ("R" or "NR") has ``expected`` as its generator.

        ``expected`` may be either a QR generator or its (x+1) multiple.
        The labelling depends on the choice of root of unity, so external
        reference polynomials are matched here rather than by label.
        """
        for label in ("R", "NR"):
            if expected in (self.codes()[label].g, self.codes()[label + "_bar"].g):
                return label
        raise KeyError(f"{expected.to_text()} is not a generator in the p={self.p} family")


def build_qr_family(p: int) -> QrFamily:
    res = quadratic_residues(p)
    ctx = build_field(p)
    alpha = primitive_root_of_unity(ctx)
    g_r = root_product(ctx, alpha, res.qr)
    g_nr = root_product(ctx, alpha, res.qnr)
    if X_PLUS_1 * g_r * g_nr != x_n_minus_1(p):
        raise ConsistencyError("(x+1) g_R g_NR != x^p - 1")
    return QrFamily(
        p=p,
        residues=res,
        c_r_code=new_cyclic(p, g_r),
        c_nr_code=new_cyclic(p, g_nr),
        c_r_bar=new_cyclic(p, X_PLUS_1 * g_r),
        c_nr_bar=new_cyclic(p, X_PLUS_1 * g_nr),
        field_ctx=ctx,
        alpha=alpha,
    )


@dataclass(frozen=True)
class Lemma2Report:
    p: int
    dual_r_is_r_bar: bool
    dual_nr_is_nr_bar: bool
    r_dual_containing: bool
    nr_dual_containing: bool

    @property
    def ok(self) -> bool:
        return (
            self.dual_r_is_r_bar
            and self.dual_nr_is_nr_bar
            and self.r_dual_containing
            and self.nr_dual_containing
        )

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "dual_r_is_r_bar": self.dual_r_is_r_bar,
            "dual_nr_is_nr_bar": self.dual_nr_is_nr_bar,
            "r_dual_containing": self.r_dual_containing,
            "nr_dual_containing": self.nr_dual_containing,
            "ok": self.ok,
        }


def verify_lemma2(fam: QrFamily) -> Lemma2Report:
    """Duals of the QR codes are the barred codes, and are contained in them.

    Only meaningful for p = -1 (mod 8); other lengths are refused.
    """
    if fam.p % 8 != 7:
        raise ValueError(f"Lemma 2 requires p = -1 mod 8 (got p={fam.p}, {fam.p % 8} mod 8)")
    d_r = dual(fam.c_r_code)
    d_nr = dual(fam.c_nr_code)
    return Lemma2Report(
        p=fam.p,
        dual_r_is_r_bar=d_r == fam.c_r_bar,
        dual_nr_is_nr_bar=d_nr == fam.c_nr_bar,
        r_dual_containing=is_dual_containing(fam.c_r_code) and contains(fam.c_r_code, fam.c_r_bar),
        nr_dual_containing=is_dual_containing(fam.c_nr_code)
        and contains(fam.c_nr_code, fam.c_nr_bar),
    )

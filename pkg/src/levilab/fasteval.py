"""Compile HermitianExpr objects to flat arrays for batch numeric evaluation."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import backend
from .algebra import HermitianExpr


class ExprProgram:
    """Array encoding of an expression, evaluable at many points at once.

    Radical factors are evaluated as |b|^(s2/2) * exp(i*theta*(d2/2)) with
    theta = arg(b) folded into [0, 2*pi); points exactly on the cut take the
    theta = 0 limit (the strict per-point evaluator in algebra raises there
    instead).
    """

    __slots__ = (
        "n", "coeffs", "expos", "rad_ptr", "rad_idx", "rad_s2", "rad_d2",
        "base_coeffs", "base_expos", "base_ptr",
    )

    def __init__(self, expr: HermitianExpr):
        n = expr.n
        base_ids = sorted(expr.bases)
        base_index = {bid: i for i, bid in enumerate(base_ids)}
        bc, be, bp = [], [], [0]
        for bid in base_ids:
            for expo, c in expr.bases[bid].poly:
                bc.append(c.to_complex())
                be.append(expo)
            bp.append(len(bc))
        T = len(expr.terms)
        coeffs = np.empty(T, dtype=np.complex128)
        expos = np.zeros((T, 2 * n), dtype=np.int64)
        rp, ri, rs, rd = [0], [], [], []
        for t, term in enumerate(expr.terms):
            coeffs[t] = term.coeff.to_complex()
            expos[t, :n] = term.alpha
            expos[t, n:] = term.beta
            for bid, p2, q2 in term.radicals:
                ri.append(base_index[bid])
                rs.append(p2 + q2)
                rd.append(p2 - q2)
            rp.append(len(ri))
        self.n = n
        self.coeffs = coeffs
        self.expos = expos
        self.rad_ptr = np.asarray(rp, dtype=np.int64)
        self.rad_idx = np.asarray(ri, dtype=np.int64)
        self.rad_s2 = np.asarray(rs, dtype=np.int64)
        self.rad_d2 = np.asarray(rd, dtype=np.int64)
        self.base_coeffs = np.asarray(bc, dtype=np.complex128)
        self.base_expos = (
            np.asarray(be, dtype=np.int64) if be else np.zeros((0, n), dtype=np.int64)
        )
        self.base_ptr = np.asarray(bp, dtype=np.int64)

    def __call__(self, Z: np.ndarray) -> np.ndarray:
        Z = np.ascontiguousarray(Z, dtype=np.complex128)
        if Z.ndim == 1:
            Z = Z[None, :]
        if Z.shape[1] != self.n:
            raise ValueError(f"points have {Z.shape[1]} coordinates, expected {self.n}")
        return backend.eval_program(
            self.coeffs, self.expos, self.rad_ptr, self.rad_idx,
            self.rad_s2, self.rad_d2,
            self.base_coeffs, self.base_expos, self.base_ptr, Z,
        )


@lru_cache(maxsize=256)
def compile_expr(expr: HermitianExpr) -> ExprProgram:
    return ExprProgram(expr)

"""Numba-jitted batch kernels. Same semantics as _kernels_numpy."""

from __future__ import annotations

import cmath
import math

import numpy as np
from numba import njit

TWO_PI = 2.0 * math.pi


@njit(cache=True, inline="always")
def _ipow(z, e):
    neg = e < 0
    if neg:
        e = -e
    out = 1.0 + 0.0j
    while e >= 4:
        z2 = z * z
        out *= z2 * z2
        e -= 4
    for _ in range(e):
        out *= z
    if neg:
        return 1.0 / out
    return out


@njit(cache=True, inline="always")
def _fipow(x, e):
    neg = e < 0
    if neg:
        e = -e
    out = 1.0
    for _ in range(e):
        out *= x
    if neg:
        return 1.0 / out
    return out


@njit(cache=True)
def eval_program(coeffs, expos, rad_ptr, rad_idx, rad_s2, rad_d2,
                 base_coeffs, base_expos, base_ptr, Z):
    npts = Z.shape[0]
    n = Z.shape[1]
    nb = base_ptr.size - 1
    nt = coeffs.size
    out = np.zeros(npts, dtype=np.complex128)

    # base values and moduli, one pass per base
    bval = np.empty((nb, npts), dtype=np.complex128)
    babs = np.empty((nb, npts), dtype=np.float64)
    for b in range(nb):
        for p in range(npts):
            acc = 0.0 + 0.0j
            for i in range(base_ptr[b], base_ptr[b + 1]):
                mono = base_coeffs[i]
                for j in range(n):
                    e = base_expos[i, j]
                    if e:
                        mono *= _ipow(Z[p, j], e)
                acc += mono
            bval[b, p] = acc
            babs[b, p] = abs(acc)

    for t in range(nt):
        c = coeffs[t]
        r0 = rad_ptr[t]
        r1 = rad_ptr[t + 1]
        for p in range(npts):
            v = c
            for j in range(n):
                e = expos[t, j]
                if e:
                    v *= _ipow(Z[p, j], e)
                e = expos[t, n + j]
                if e:
                    v *= _ipow(Z[p, j].conjugate(), e)
            if v == 0.0:
                continue  # vanished monomial silences any singular radical
            for r in range(r0, r1):
                b = rad_idx[r]
                d2 = rad_d2[r]
                if d2 % 2 == 0:
                    # |v|^(s2/2) u^(d2/2) = v^(d2/2) * |v|^q2 with the integer
                    # q2 = (s2-d2)/2 (s2 and d2 always share parity)
                    q2 = (rad_s2[r] - d2) // 2
                    w = _ipow(bval[b, p], d2 // 2)
                    a2 = babs[b, p] * babs[b, p]
                    if q2 % 2 == 0:
                        v *= w * _fipow(a2, q2 // 2)
                    else:
                        v *= w * _fipow(a2, q2 // 2) * babs[b, p]
                else:
                    theta = math.atan2(bval[b, p].imag, bval[b, p].real)
                    if theta < 0.0:
                        theta += TWO_PI
                    v *= babs[b, p] ** (rad_s2[r] / 2.0) * cmath.exp(
                        1j * theta * (d2 / 2.0)
                    )
            out[p] += v
    return out

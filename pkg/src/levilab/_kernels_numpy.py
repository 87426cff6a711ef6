"""Pure-numpy batch kernels. Reference semantics for the numba versions."""

from __future__ import annotations

import numpy as np

TWO_PI = 2.0 * np.pi


def eval_bases(base_coeffs, base_expos, base_ptr, Z):
    nb = base_ptr.size - 1
    vals = np.zeros((nb, Z.shape[0]), dtype=np.complex128)
    for b in range(nb):
        for i in range(base_ptr[b], base_ptr[b + 1]):
            mono = np.full(Z.shape[0], base_coeffs[i])
            for j in range(Z.shape[1]):
                e = base_expos[i, j]
                if e:
                    mono = mono * Z[:, j] ** e
            vals[b] += mono
    return vals


def eval_terms(coeffs, expos, rad_ptr, rad_idx, rad_s2, rad_d2, base_vals, Z):
    n = Z.shape[1]
    out = np.zeros(Z.shape[0], dtype=np.complex128)
    if base_vals.shape[0]:
        absv = np.abs(base_vals)
        ang = np.angle(base_vals)
        ang = np.where(ang < 0.0, ang + TWO_PI, ang)
    for t in range(coeffs.size):
        v = np.full(Z.shape[0], coeffs[t])
        for j in range(n):
            e = expos[t, j]
            if e:
                v = v * Z[:, j] ** e
            e = expos[t, n + j]
            if e:
                v = v * np.conj(Z[:, j]) ** e
        if rad_ptr[t] != rad_ptr[t + 1]:
            # vanished monomials silence any singular radical factor
            nz = v != 0
            f = np.ones(int(nz.sum()), dtype=np.complex128)
            for r in range(rad_ptr[t], rad_ptr[t + 1]):
                b = rad_idx[r]
                d2 = rad_d2[r]
                if d2 % 2 == 0:
                    # branch-free: v^(d2/2) * |v|^((s2-d2)/2), integer powers
                    q2 = (rad_s2[r] - d2) // 2
                    f = f * base_vals[b][nz] ** (d2 // 2) * absv[b][nz] ** q2
                else:
                    f = f * absv[b][nz] ** (rad_s2[r] / 2.0) * np.exp(
                        1j * ang[b][nz] * (d2 / 2.0)
                    )
            v[nz] *= f
        out += v
    return out


def eval_program(coeffs, expos, rad_ptr, rad_idx, rad_s2, rad_d2,
                 base_coeffs, base_expos, base_ptr, Z):
    base_vals = eval_bases(base_coeffs, base_expos, base_ptr, Z)
    return eval_terms(coeffs, expos, rad_ptr, rad_idx, rad_s2, rad_d2, base_vals, Z)

"""Numba-compiled hot kernels.

Every prange task owns its output slice and accumulates in a fixed
sequential order, so results are bit-identical across runs and thread
counts. No cross-thread reductions.
"""

import numpy as np
from numba import njit, prange


@njit(parallel=True, cache=True)
def conv2d_forward(x, w, b):
    n, c, h, ww = x.shape
    f = w.shape[0]
    kh, kw = w.shape[2], w.shape[3]
    ho, wo = h - kh + 1, ww - kw + 1
    out = np.empty((n, f, ho, wo), x.dtype)
    for nf in prange(n * f):
        ni = nf // f
        fi = nf % f
        acc = np.empty((ho, wo), x.dtype)
        acc[:, :] = b[fi]
        for ci in range(c):
            for ki in range(kh):
                for kj in range(kw):
                    wv = w[fi, ci, ki, kj]
                    for i in range(ho):
                        for j in range(wo):
                            acc[i, j] += wv * x[ni, ci, i + ki, j + kj]
        out[ni, fi] = acc
    return out


@njit(parallel=True, cache=True)
def _conv2d_dx(w, dout, h, ww):
    n, f = dout.shape[0], dout.shape[1]
    c = w.shape[1]
    kh, kw = w.shape[2], w.shape[3]
    ho, wo = dout.shape[2], dout.shape[3]
    dx = np.zeros((n, c, h, ww), dout.dtype)
    for nc in prange(n * c):
        ni = nc // c
        ci = nc % c
        for fi in range(f):
            for ki in range(kh):
                for kj in range(kw):
                    wv = w[fi, ci, ki, kj]
                    for i in range(ho):
                        for j in range(wo):
                            dx[ni, ci, i + ki, j + kj] += wv * dout[ni, fi, i, j]
    return dx


@njit(parallel=True, cache=True)
def _conv2d_dw(x, dout, kh, kw):
    n, c = x.shape[0], x.shape[1]
    f = dout.shape[1]
    ho, wo = dout.shape[2], dout.shape[3]
    dw = np.empty((f, c, kh, kw), x.dtype)
    zero = x[0, 0, 0, 0] * 0
    for fc in prange(f * c):
        fi = fc // c
        ci = fc % c
        for ki in range(kh):
            for kj in range(kw):
                acc = zero
                for ni in range(n):
                    for i in range(ho):
                        row = zero
                        for j in range(wo):
                            row += x[ni, ci, i + ki, j + kj] * dout[ni, fi, i, j]
                        acc += row
                dw[fi, ci, ki, kj] = acc
    return dw


@njit(parallel=True, cache=True)
def _conv2d_db(dout):
    n, f, ho, wo = dout.shape
    db = np.empty(f, dout.dtype)
    zero = dout[0, 0, 0, 0] * 0
    for fi in prange(f):
        acc = zero
        for ni in range(n):
            for i in range(ho):
                for j in range(wo):
                    acc += dout[ni, fi, i, j]
        db[fi] = acc
    return db


def conv2d_backward(x, w, dout):
    dx = _conv2d_dx(w, dout, x.shape[2], x.shape[3])
    dw = _conv2d_dw(x, dout, w.shape[2], w.shape[3])
    db = _conv2d_db(dout)
    return dx, dw, db


@njit(parallel=True, cache=True)
def maxpool2_forward(x):
    n, c, h, w = x.shape
    ho, wo = h // 2, w // 2
    out = np.empty((n, c, ho, wo), x.dtype)
    idx = np.empty((n, c, ho, wo), np.uint8)
    for nc in prange(n * c):
        ni = nc // c
        ci = nc % c
        for i in range(ho):
            for j in range(wo):
                best = x[ni, ci, 2 * i, 2 * j]
                code = 0
                for k in range(1, 4):
                    v = x[ni, ci, 2 * i + (k >> 1), 2 * j + (k & 1)]
                    if v > best:
                        best = v
                        code = k
                out[ni, ci, i, j] = best
                idx[ni, ci, i, j] = code
    return out, idx


@njit(parallel=True, cache=True)
def maxpool2_backward(idx, dout, h, w):
    n, c, ho, wo = dout.shape
    dx = np.zeros((n, c, h, w), dout.dtype)
    for nc in prange(n * c):
        ni = nc // c
        ci = nc % c
        for i in range(ho):
            for j in range(wo):
                code = idx[ni, ci, i, j]
                dx[ni, ci, 2 * i + (code >> 1), 2 * j + (code & 1)] = dout[ni, ci, i, j]
    return dx


@njit(parallel=True, cache=True)
def resample_core(xpad, step, table, n_out, pad):
    taps = table.shape[1]
    half = taps // 2 - 1
    phases = table.shape[0] - 1
    out = np.empty(n_out, xpad.dtype)
    for m in prange(n_out):
        pos = m * step
        base = int(np.floor(pos))
        frac = pos - base
        ph = frac * phases
        p0 = int(ph)
        a = ph - p0
        first = base - half + pad
        acc = 0.0
        for t in range(taps):
            coeff = table[p0, t] * (1.0 - a) + table[p0 + 1, t] * a
            acc += coeff * xpad[first + t]
        out[m] = acc
    return out

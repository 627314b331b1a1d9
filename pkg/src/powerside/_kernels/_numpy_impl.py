"""Pure-numpy reference implementations of the hot kernels.

Same contracts as `_numba_impl`; used when POWERSIDE_BACKEND=numpy or when
numba is unavailable. Convolutions go through im2col + BLAS.
"""

import numpy as np


def _im2col(x, kh, kw):
    # (N, C, H, W) -> (N, C*kh*kw, Ho*Wo), windows in (ki, kj) scan order
    n, c, h, w = x.shape
    ho, wo = h - kh + 1, w - kw + 1
    cols = np.empty((n, c, kh, kw, ho, wo), dtype=x.dtype)
    for ki in range(kh):
        for kj in range(kw):
            cols[:, :, ki, kj] = x[:, :, ki:ki + ho, kj:kj + wo]
    return cols.reshape(n, c * kh * kw, ho * wo)


def conv2d_forward(x, w, b):
    n, c, h, ww = x.shape
    f, _, kh, kw = w.shape
    ho, wo = h - kh + 1, ww - kw + 1
    cols = _im2col(x, kh, kw)
    out = w.reshape(f, -1) @ cols
    out += b.reshape(1, f, 1)
    return out.reshape(n, f, ho, wo)


def conv2d_backward(x, w, dout):
    n, c, h, ww = x.shape
    f, _, kh, kw = w.shape
    ho, wo = dout.shape[2], dout.shape[3]

    cols = _im2col(x, kh, kw)                        # (N, C*kh*kw, Ho*Wo)
    dflat = dout.reshape(n, f, ho * wo)
    dw = np.einsum("nfp,ncp->fc", dflat, cols, optimize=True)
    dw = dw.reshape(f, c, kh, kw).astype(x.dtype, copy=False)
    db = dout.sum(axis=(0, 2, 3))

    # dx: full-correlation of dout with w; pad dout and flip the kernel
    dpad = np.pad(dout, ((0, 0), (0, 0), (kh - 1, kh - 1), (kw - 1, kw - 1)))
    wflip = w[:, :, ::-1, ::-1]
    cols_d = _im2col(dpad, kh, kw)                   # (N, F*kh*kw, H*W)
    wmat = wflip.transpose(1, 0, 2, 3).reshape(c, -1)
    dx = (wmat @ cols_d).reshape(n, c, h, ww)
    return dx, dw, db


def maxpool2_forward(x):
    n, c, h, w = x.shape
    ho, wo = h // 2, w // 2
    v = x[:, :, :ho * 2, :wo * 2].reshape(n, c, ho, 2, wo, 2)
    v = v.transpose(0, 1, 2, 4, 3, 5).reshape(n, c, ho, wo, 4)
    idx = v.argmax(axis=-1).astype(np.uint8)
    out = np.take_along_axis(v, idx[..., None].astype(np.intp), axis=-1)[..., 0]
    return out, idx


def maxpool2_backward(idx, dout, h, w):
    n, c, ho, wo = dout.shape
    dx = np.zeros((n, c, h, w), dtype=dout.dtype)
    di = (idx >> 1).astype(np.intp)                  # row within the 2x2 cell
    dj = (idx & 1).astype(np.intp)
    rows = np.arange(ho)[:, None] * 2 + di
    cols = np.arange(wo)[None, :] * 2 + dj
    ni = np.arange(n)[:, None, None, None]
    ci = np.arange(c)[None, :, None, None]
    dx[ni, ci, rows, cols] = dout                    # cells disjoint: no collisions
    return dx


def resample_core(xpad, step, table, n_out, pad):
    """Windowed-sinc interpolation against a polyphase table.

    xpad: input padded with `pad` zeros on each side. table: (P+1, taps)
    filter rows for fractional phases 0..1. Output sample m is taken at
    input position m*step.
    """
    taps = table.shape[1]
    half = taps // 2 - 1
    phases = table.shape[0] - 1
    out = np.empty(n_out, dtype=xpad.dtype)
    chunk = 8192
    for start in range(0, n_out, chunk):
        m = np.arange(start, min(start + chunk, n_out))
        pos = m * step
        base = np.floor(pos).astype(np.intp)
        frac = pos - base
        ph = frac * phases
        p0 = ph.astype(np.intp)
        a = (ph - p0)[:, None]
        rows = table[p0] * (1.0 - a) + table[p0 + 1] * a
        first = base - half + pad
        gather = first[:, None] + np.arange(taps)[None, :]
        out[m[0]:m[-1] + 1] = np.sum(xpad[gather] * rows, axis=1)
    return out

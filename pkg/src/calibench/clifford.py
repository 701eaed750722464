"""Clifford representation on a 256-dimensional doubled pinor space.

One factor: P8 = O+ (+) O-, sixteen real dimensions, where a vector v acts by

    [[0, R_v], [-R_vbar, 0]]

and R_v is right multiplication by v on the octonions.  The volume element
of the eight generators acts as diag(id, -id).

Doubled: P16 = P8 (x) P8 with generator i (1..8) acting as e_i (x) volume and
generator 8+i as id (x) e_i.  Basis order of P16 is by blocks ++, +-, -+, --,
each block running over (a, b) row-major; index(s, t, a, b) = 128s + 64t +
8a + b with a, b in 0..7.

Blade actions are signed permutations of the 256 basis vectors; the table of
all 2^16 blade actions is built once by a doubling recurrence and backs the
exact trace projection ``endo_to_form``.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from calibench.forms import RealForm
from calibench.octonion import MULT_TABLE

__all__ = [
    "rep8_matrix",
    "rep16",
    "generator",
    "outer_product",
    "endo_to_form",
    "pinor_index",
    "S_PLUS",
    "S_PRIME",
    "POSITIVE_SPINOR_INDICES",
    "spinor_vector",
]

DIM = 256


def pinor_index(s, t, a, b):
    """Index of e_a^(s) (x) e_b^(t); s,t are 0 for +, 1 for -; a,b in 0..7."""
    return 128 * s + 64 * t + 8 * a + b


# the two unit spinors driving the calibration family: 1+ (x) 1+ and i+ (x) i+
S_PLUS = pinor_index(0, 0, 0, 0)
S_PRIME = pinor_index(0, 0, 1, 1)

# positive half-spinor space: blocks ++ and --
POSITIVE_SPINOR_INDICES = tuple(range(0, 64)) + tuple(range(192, 256))


def spinor_vector(index):
    v = np.zeros(DIM, dtype=np.int64)
    v[index] = 1
    return v


def _rep8_perm(i):
    """Signed permutation of the 16 P8 basis vectors under the action of e_i.

    On O+ the image of w is -(w conj(e_i)) in O-; on O- it is (w e_i) in O+.
    """
    perm = np.zeros(16, dtype=np.int64)
    sign = np.zeros(16, dtype=np.int64)
    conj_sign = 1 if i == 0 else -1
    for a in range(8):
        sg, c = MULT_TABLE[a][i]
        # from O+
        perm[a] = 8 + c
        sign[a] = -conj_sign * sg
        # from O-
        perm[8 + a] = c
        sign[8 + a] = sg
    return perm, sign


def rep8_matrix(v):
    """16x16 matrix of the action of v in R^8 (octonion coordinates) on P8.

    Exact for integer/Fraction coordinates (object dtype), float otherwise.
    """
    coords = list(v)
    exact = not any(isinstance(c, (float, np.floating)) for c in coords)
    M = np.zeros((16, 16), dtype=object if exact else float)
    for i, c in enumerate(coords):
        if not c:
            continue
        perm, sign = _rep8_perm(i)
        for b in range(16):
            M[perm[b], b] += c * int(sign[b])
    return M


def _gen16(i):
    """Signed permutation of P16 under generator i in 0..15 (0-based)."""
    perm = np.zeros(DIM, dtype=np.int64)
    sign = np.zeros(DIM, dtype=np.int64)
    if i < 8:
        p8, s8 = _rep8_perm(i)
        for s in range(2):
            for a in range(8):
                q = p8[8 * s + a]
                sg = s8[8 * s + a]
                s2, a2 = divmod(q, 8)
                for t in range(2):
                    nu = 1 if t == 0 else -1
                    for b in range(8):
                        src = pinor_index(s, t, a, b)
                        perm[src] = pinor_index(s2, t, a2, b)
                        sign[src] = sg * nu
    else:
        p8, s8 = _rep8_perm(i - 8)
        for t in range(2):
            for b in range(8):
                q = p8[8 * t + b]
                sg = s8[8 * t + b]
                t2, b2 = divmod(q, 8)
                for s in range(2):
                    for a in range(8):
                        src = pinor_index(s, t, a, b)
                        perm[src] = pinor_index(s, t2, a, b2)
                        sign[src] = sg
    return perm, sign


_GENS = [_gen16(i) for i in range(16)]


def generator(i):
    """Dense 256x256 integer matrix of generator i (1-based, 1..16)."""
    return rep16((i,))


def _compose(pa, sa, pb, sb):
    """Signed-permutation product A B: (AB)e_b = sb[b] sa[pb[b]] e_{pa[pb[b]]}."""
    return pa[pb], sa[pb] * sb


def _blade_perm(indices):
    """Signed permutation of an ordered generator product E_{i1}...E_{ik}."""
    perm = np.arange(DIM, dtype=np.int64)
    sign = np.ones(DIM, dtype=np.int64)
    for i in indices:
        if not 1 <= i <= 16:
            raise ValueError(f"generator index out of range: {i}")
        pb, sb = _GENS[i - 1]
        perm, sign = _compose(perm, sign, pb, sb)
    return perm, sign


def rep16(indices):
    """Dense integer matrix of the blade E_{i1}...E_{ik} (strictly increasing).

    The empty blade is the identity.
    """
    idx = tuple(indices)
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise ValueError(f"blade indices must be strictly increasing: {idx}")
    perm, sign = _blade_perm(idx)
    M = np.zeros((DIM, DIM), dtype=np.int64)
    M[perm, np.arange(DIM)] = sign
    return M


_TABLES = None


def _blade_tables():
    """(P, S) with P[m], S[m] the signed permutation of blade mask m.

    Doubling recurrence: masks with top generator h+1 are the products of all
    lower masks with generator h+1 appended on the right.
    """
    global _TABLES
    if _TABLES is None:
        P = np.empty((1 << 16, DIM), dtype=np.uint8)
        S = np.empty((1 << 16, DIM), dtype=np.int8)
        P[0] = np.arange(DIM, dtype=np.uint8)
        S[0] = 1
        for h in range(16):
            sz = 1 << h
            ph, sh = _GENS[h]
            P[sz:2 * sz] = P[:sz][:, ph]
            S[sz:2 * sz] = S[:sz][:, ph] * sh.astype(np.int8)[None, :]
        _TABLES = (P, S)
    return _TABLES


def outer_product(x, y):
    """Rank-one endomorphism z -> <y, z> x, as the matrix x y^T."""
    return np.outer(np.asarray(x), np.asarray(y))


def endo_to_form(A):
    """Project a 256x256 endomorphism onto blade coordinates.

    Returns sum_I tr(rep16(I)^T A) / 256 E_I as an exact form on R^16.  Exact
    for integer matrices (the pipeline only feeds integers); raises on
    anything inexact to keep the exact lane honest.
    """
    M = np.asarray(A)
    if M.shape != (DIM, DIM):
        raise ValueError(f"expected a {DIM}x{DIM} matrix, got {M.shape}")
    if M.dtype == object:
        M2 = M.astype(np.int64)
        if not (M2.astype(object) == M).all():
            raise TypeError("endo_to_form needs an integer-valued matrix")
        M = M2
    elif not np.issubdtype(M.dtype, np.integer):
        raise TypeError("endo_to_form needs an integer-valued matrix")
    M = M.astype(np.int64)
    P, S = _blade_tables()
    cols = np.arange(DIM)
    terms = {}
    chunk = 2048
    for start in range(0, 1 << 16, chunk):
        stop = start + chunk
        gathered = M[P[start:stop].astype(np.intp), cols[None, :]]
        sums = (S[start:stop].astype(np.int64) * gathered).sum(axis=1)
        for off in np.nonzero(sums)[0]:
            terms[int(start + off)] = Fraction(int(sums[off]), 256)
    f = RealForm(16)
    f._terms = terms
    return f


def blade_coefficient_on_spinor(mask, src_index, dst_index):
    """<e_dst, rep16(mask) e_src> via the blade tables, exact integer."""
    P, S = _blade_tables()
    if P[mask, src_index] != dst_index:
        return 0
    return int(S[mask, src_index])

"""Oriented 8-planes in R^16: normal forms, calibrated families, comass search.

A plane is an orthonormal 16x8 column frame.  The normal form is built from
an 8x8 unitary matrix [e_1..e_8] and four angles: plane columns are

    xi_{2m-1} = realify(e_{2m-1})
    xi_{2m}   = realify(i e_{2m-1} cos(theta_m) + e_{2m} sin(theta_m))

with realify interleaving real and imaginary parts (standard complex
structure).  theta_1 <= theta_2 <= theta_3 in [0, pi/2], theta_4 in
[theta_3, pi]; the phase is the argument of det of the unitary.

The module also carries the two exact Federer-style product routes for
middle-degree forms, the 4x4 minor identities of the split frame rows, and a
projected-gradient ascent over the Stiefel manifold used to certify comass
lower bounds.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np
import scipy.linalg

from calibench.catalog import (
    STANDARD16,
    RouteDisagreement,
    build_phi,
    build_standard,
    holomorphic_volume,
    kaehler_form,
)
from calibench.forms import RealForm, evaluate, wedge

__all__ = [
    "NormalFormSpec",
    "PlaneSample",
    "ComassReport",
    "FedererReport",
    "MinorCheckReport",
    "realify",
    "realize",
    "kaehler_angles",
    "sample_group",
    "split_cayley_frame",
    "gen_calibrated",
    "calibration_value_closed",
    "symplectic_row_value",
    "minor_identity_check",
    "federer_product",
    "federer_eval",
    "frame_value",
    "frame_gradient",
    "comass_search",
    "PLANE_TOL",
    "SEARCH_TOL",
]

PLANE_TOL = 1e-9
SEARCH_TOL = 1e-6

_UNITARY_RESIDUAL = 1e-10


@dataclass(frozen=True)
class NormalFormSpec:
    """Unitary 8x8 matrix plus the four angles of the normal form."""

    matrix: np.ndarray
    angles: tuple

    def __post_init__(self):
        U = np.asarray(self.matrix, dtype=complex)
        if U.shape != (8, 8):
            raise ValueError("matrix must be 8x8")
        if np.linalg.norm(U.conj().T @ U - np.eye(8)) > _UNITARY_RESIDUAL:
            raise ValueError("matrix is not unitary to 1e-10")
        th = tuple(float(t) for t in self.angles)
        if len(th) != 4:
            raise ValueError("need four angles")
        eps = 1e-12
        t1, t2, t3, t4 = th
        if not (-eps <= t1 <= t2 + eps and t2 <= t3 + eps and t3 <= math.pi / 2 + eps):
            raise ValueError("need 0 <= theta1 <= theta2 <= theta3 <= pi/2")
        if not (t3 - eps <= t4 <= math.pi + eps):
            raise ValueError("need theta3 <= theta4 <= pi")
        object.__setattr__(self, "matrix", U)
        object.__setattr__(self, "angles", th)

    @property
    def phase(self):
        """Argument of det(matrix)."""
        return float(np.angle(np.linalg.det(self.matrix)))

    def to_dict(self):
        return {
            "matrix_re": [[float(x) for x in row] for row in self.matrix.real],
            "matrix_im": [[float(x) for x in row] for row in self.matrix.imag],
            "angles": list(self.angles),
        }


def realify(z):
    """C^m vector -> R^{2m} with interleaved real/imaginary parts."""
    z = np.asarray(z, dtype=complex)
    out = np.empty(2 * z.shape[0])
    out[0::2] = z.real
    out[1::2] = z.imag
    return out


def realize(spec):
    """16x8 orthonormal frame of the normal-form plane."""
    U = spec.matrix
    th = spec.angles
    cols = []
    for m in range(4):
        e_odd = U[:, 2 * m]
        e_even = U[:, 2 * m + 1]
        cols.append(realify(e_odd))
        cols.append(realify(1j * e_odd * math.cos(th[m]) + e_even * math.sin(th[m])))
    return np.column_stack(cols)


_J16 = None


def _complex_structure_matrix():
    global _J16
    if _J16 is None:
        J = np.zeros((16, 16))
        for j in range(8):
            J[2 * j + 1, 2 * j] = 1.0
            J[2 * j, 2 * j + 1] = -1.0
        _J16 = J
    return _J16


_OMEGA4 = None


def _omega4_form():
    global _OMEGA4
    if _OMEGA4 is None:
        _OMEGA4 = build_standard("kaehler_power", STANDARD16, k=4).form
    return _OMEGA4


def kaehler_angles(frame):
    """Angles in [0, pi/2] (ascending) of an orthonormal 16x8 frame, plus an
    orientation sign from the top Kaehler power (+1 when that value is
    numerically zero)."""
    M = np.asarray(frame, dtype=float)
    if M.shape != (16, 8):
        raise ValueError("frame must be 16x8")
    if np.linalg.norm(M.T @ M - np.eye(8)) > 1e-8:
        raise ValueError("frame is not orthonormal")
    K = (_complex_structure_matrix() @ M).T @ M
    s = np.linalg.svd(K, compute_uv=False)
    if np.abs(s[0::2] - s[1::2]).max() > 1e-8:
        raise ValueError("singular values of the Kaehler pairing do not pair up")
    cosines = np.clip((s[0::2] + s[1::2]) / 2.0, 0.0, 1.0)
    angles = np.arccos(cosines)[::-1]
    pf = evaluate(_omega4_form(), M)
    sign = 1 if abs(pf) < 1e-12 else (1 if pf > 0 else -1)
    return np.sort(angles), sign


# group samplers --------------------------------------------------------------

_SP_J = np.kron(np.eye(4), np.array([[0.0, 1.0], [-1.0, 0.0]]))


def sample_group(kind, rng, n=8):
    """Draw a matrix from u(nitary), su (determinant one) or sp4 (compact
    symplectic, 8x8).  `rng` is an integer seed or a numpy Generator.
    Membership residuals are asserted below 1e-10."""
    rng = np.random.default_rng(rng)
    if kind in ("u", "su"):
        while True:
            Z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2)
            Q, R = np.linalg.qr(Z)
            d = np.diag(R)
            if np.abs(d).min() > 1e-12:
                break
        Q = Q * (d / np.abs(d))
        if kind == "su":
            det = np.linalg.det(Q)
            Q[:, 0] *= det.conjugate() / abs(det)
            if abs(np.linalg.det(Q) - 1) > _UNITARY_RESIDUAL:
                raise AssertionError("determinant correction failed")
        if np.linalg.norm(Q.conj().T @ Q - np.eye(n)) > _UNITARY_RESIDUAL:
            raise AssertionError("unitary residual too large")
        return Q
    if kind == "sp4":
        if n != 8:
            raise ValueError("sp4 lives in dimension 8")
        B = (rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))) / math.sqrt(2)
        A = (B - B.conj().T) / 2
        A = (A + _SP_J @ A.conj() @ np.linalg.inv(_SP_J)) / 2
        S = scipy.linalg.expm(A)
        if np.linalg.norm(S.T @ _SP_J @ S - _SP_J) > _UNITARY_RESIDUAL:
            raise AssertionError("symplectic residual too large")
        if np.linalg.norm(S.conj().T @ S - np.eye(8)) > _UNITARY_RESIDUAL:
            raise AssertionError("unitary residual too large")
        if abs(np.linalg.det(S) - 1) > _UNITARY_RESIDUAL:
            raise AssertionError("symplectic sample must have determinant one")
        return S
    raise ValueError(f"unknown group kind {kind!r}")


# calibrated plane families ----------------------------------------------------


@dataclass(frozen=True)
class PlaneSample:
    case: int
    frame: np.ndarray
    spec: NormalFormSpec | None
    meta: dict = field(default_factory=dict)

    def to_dict(self):
        d = {
            "case": self.case,
            "frame": [[float(x) for x in row] for row in self.frame],
        }
        if self.spec is not None:
            d["spec"] = self.spec.to_dict()
        if self.meta:
            d["meta"] = {
                k: (v if not isinstance(v, np.ndarray) else v.tolist())
                for k, v in self.meta.items()
            }
        return d


def _realify4_block(z, offset):
    """C^4 vector into R^16 rows [offset, offset+8)."""
    out = np.zeros(16)
    out[offset:offset + 8] = realify(z)
    return out


def split_cayley_frame(u_left, u_right, theta_left, theta_right):
    """Product of one calibrated 4-plane per C^4 factor.

    Each factor plane is spanned by realify(e1), realify(i e1 cos(t) +
    e2 sin(t)), realify(e3), realify(i e3 cos(t) + e4 sin(t)) for the factor's
    own determinant-one basis and angle."""
    cols = []
    for (U_f, th, off) in ((u_left, theta_left, 0), (u_right, theta_right, 8)):
        U_f = np.asarray(U_f, dtype=complex)
        if U_f.shape != (4, 4):
            raise ValueError("factor basis must be 4x4")
        for m in range(2):
            e_odd = U_f[:, 2 * m]
            e_even = U_f[:, 2 * m + 1]
            cols.append(_realify4_block(e_odd, off))
            cols.append(_realify4_block(1j * e_odd * math.cos(th) + e_even * math.sin(th), off))
    return np.column_stack(cols)


def gen_calibrated(case, count, seed):
    """Sample `count` calibrated planes of one of the four families.

    1: angles pi/2 with a determinant-one unitary basis.
    2: angles 0 (complex 4-planes), any unitary basis.
    3: products of one calibrated 4-plane per C^4 factor (independent
       determinant-one 4x4 bases and angles).
    4: common angle in (0, pi/2) on a block-diagonal determinant-one basis
       composed with a compact symplectic matrix.
    """
    rng = np.random.default_rng([seed, case])
    out = []
    for _ in range(count):
        if case == 1:
            U = sample_group("su", rng)
            spec = NormalFormSpec(U, (math.pi / 2,) * 4)
            out.append(PlaneSample(1, realize(spec), spec))
        elif case == 2:
            U = sample_group("u", rng)
            spec = NormalFormSpec(U, (0.0,) * 4)
            out.append(PlaneSample(2, realize(spec), spec))
        elif case == 3:
            U1 = sample_group("su", rng, n=4)
            U2 = sample_group("su", rng, n=4)
            th1 = float(rng.uniform(0, math.pi / 2))
            th2 = float(rng.uniform(0, math.pi / 2))
            frame = split_cayley_frame(U1, U2, th1, th2)
            meta = {
                "angles": [th1, th2],
                "basis_left_re": U1.real.tolist(),
                "basis_left_im": U1.imag.tolist(),
                "basis_right_re": U2.real.tolist(),
                "basis_right_im": U2.imag.tolist(),
            }
            out.append(PlaneSample(3, frame, None, meta))
        elif case == 4:
            U1 = sample_group("su", rng, n=4)
            U2 = sample_group("su", rng, n=4)
            S = sample_group("sp4", rng)
            U = np.block([[U1, np.zeros((4, 4))], [np.zeros((4, 4)), U2]]) @ S
            th = float(rng.uniform(0.05, math.pi / 2 - 0.05))
            spec = NormalFormSpec(U, (th,) * 4)
            out.append(PlaneSample(4, realize(spec), spec, {"theta": th}))
        else:
            raise ValueError("case must be 1, 2, 3 or 4")
    return out


# closed-form evaluation of the main calibration on normal forms ---------------

_ANGLE_PAIRS = ((0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2))


def _minor_cols(i, j):
    return [2 * i, 2 * i + 1, 2 * j, 2 * j + 1]


def calibration_value_closed(spec):
    """Trigonometric closed form of the grade-8 calibration on a normal-form
    plane: product of sines times the real part of the basis determinant,
    product of cosines, plus the mixed minor sum with signed cosines."""
    U = spec.matrix
    th = np.asarray(spec.angles)
    s = np.sin(th)
    c = np.cos(th)
    det_u = np.linalg.det(U)
    F = U[:4, :]
    G = U[4:, :]
    total = float(s.prod() * det_u.real + c.prod())
    for (i, j) in _ANGLE_PAIRS:
        comp = [m for m in range(4) if m not in (i, j)]
        cols = _minor_cols(i, j)
        df = np.linalg.det(F[:, cols])
        dg = np.linalg.det(G[:, cols])
        total += float(s[i] * s[j] * c[comp[0]] * c[comp[1]] * (df + dg).real)
    return total


def symplectic_row_value(U):
    """Real part of half the squared symplectic form on the first four rows."""
    U = np.asarray(U, dtype=complex)
    R = U[:4, :]
    total = 0.0 + 0.0j
    for (i, j) in _ANGLE_PAIRS:
        total += np.linalg.det(R[:, _minor_cols(i, j)])
    return float(total.real)


# minor identities --------------------------------------------------------------


@dataclass(frozen=True)
class MinorCheckReport:
    """Split-row minor data for the angle pairs (1,2), (1,3), (1,4)."""

    pair_labels: tuple
    det_f: tuple
    det_g: tuple
    det_residuals: tuple
    max_residual: float
    beta_value: float
    m_theta: float
    mixed_residual: float
    tol: float = PLANE_TOL


_MIXED_FORM = None


def _mixed_form():
    """(O1 + O2) ^ omega^2/2 as a (re, im) pair of real 8-forms."""
    global _MIXED_FORM
    if _MIXED_FORM is None:
        o1 = holomorphic_volume(STANDARD16.subset(0, 4))
        o2 = holomorphic_volume(STANDARD16.subset(4, 8))
        om = kaehler_form(STANDARD16)
        om2_half = wedge(om, om) * Fraction(1, 2)
        tot = o1 + o2
        _MIXED_FORM = (wedge(tot.re, om2_half), wedge(tot.im, om2_half))
    return _MIXED_FORM


_PRIMARY_PAIRS = ((0, 1), (0, 2), (0, 3))


def minor_identity_check(spec):
    """Verify the split-row minor identities of one normal-form basis.

    * det(G_p) = phase * conj(det(F_{p^c})) for every angle pair p, where F
      and G are the top and bottom 4 rows and p^c is the complementary pair
      (minors of the three primary pairs are reported, the residual maximum
      covers all six),
    * the triple-sum bound value |det F_p + phase conj(det F_{p^c})| summed
      over the primary pairs (at most 1 for unitary input),
    * the largest mixed trigonometric weight among the primary pairs, with
      absolute cosines,
    * the mixed 8-form evaluated on the realized plane against the closed
      minor sum with signed cosines (residual reported).
    """
    U = spec.matrix
    phase = np.linalg.det(U)
    F = U[:4, :]
    G = U[4:, :]

    def df(i, j):
        return np.linalg.det(F[:, _minor_cols(i, j)])

    def dg(i, j):
        return np.linalg.det(G[:, _minor_cols(i, j)])

    def comp(i, j):
        return tuple(m for m in range(4) if m not in (i, j))

    max_residual = max(
        float(abs(dg(i, j) - phase * df(*comp(i, j)).conjugate()))
        for (i, j) in _ANGLE_PAIRS
    )
    det_f, det_g, residuals = [], [], []
    beta = 0.0
    for (i, j) in _PRIMARY_PAIRS:
        det_f.append(complex(df(i, j)))
        det_g.append(complex(dg(i, j)))
        residuals.append(float(abs(det_g[-1] - phase * df(*comp(i, j)).conjugate())))
        beta += float(abs(det_f[-1] + phase * df(*comp(i, j)).conjugate()))

    th = np.asarray(spec.angles)
    s = np.sin(th)
    c = np.cos(th)
    cabs = np.abs(c)
    m_theta = max(
        float(s[i] * s[j] * cabs[c0] * cabs[c1] + cabs[i] * cabs[j] * s[c0] * s[c1])
        for (i, j) in _PRIMARY_PAIRS
        for (c0, c1) in [comp(i, j)]
    )

    frame = realize(spec)
    re_f, im_f = _mixed_form()
    measured = complex(evaluate(re_f, frame), evaluate(im_f, frame))
    closed = 0.0 + 0.0j
    for (i, j) in _ANGLE_PAIRS:
        c0, c1 = comp(i, j)
        closed += s[i] * s[j] * c[c0] * c[c1] * (df(i, j) + dg(i, j))
    return MinorCheckReport(
        pair_labels=((1, 2), (1, 3), (1, 4)),
        det_f=tuple(det_f),
        det_g=tuple(det_g),
        det_residuals=tuple(residuals),
        max_residual=max_residual,
        beta_value=beta,
        m_theta=m_theta,
        mixed_residual=float(abs(measured - closed)),
    )


# Federer-style exact product ----------------------------------------------------


def _shuffle_sign(indices):
    """Sign of the shuffle permutation (I, I^c), I increasing 1-based."""
    inv = sum(idx - 1 - t for t, idx in enumerate(indices))
    return -1 if inv & 1 else 1


def federer_product(form):
    """Exact shuffle-sum value of (form x form) on the diagonal tuple.

    For a grade-k form on R^{2k}: the two-copy wedge evaluated on the 2k
    vectors (f_i + g_i)/sqrt(2) splits into sum over increasing I of
    sign(I, I^c) c_I c_{I^c}, with the 2^{-k} scaling factored out so the
    result stays rational.
    """
    n = form.n
    k = form.grade()
    if k is None or n != 2 * k:
        raise ValueError("need a middle-degree form (grade n/2)")
    coeffs = {tuple(idx): c for idx, c in form.terms().items()}
    total = Fraction(0)
    for I in combinations(range(1, n + 1), k):
        c1 = coeffs.get(I)
        if not c1:
            continue
        Ic = tuple(sorted(set(range(1, n + 1)) - set(I)))
        c2 = coeffs.get(Ic)
        if not c2:
            continue
        total += _shuffle_sign(I) * c1 * c2
    return total / Fraction(2) ** k


@dataclass(frozen=True)
class FedererReport:
    route_wedge: Fraction
    route_shuffle: Fraction
    float_residual: float
    sanity_value: Fraction


def federer_eval():
    """Both exact routes of the diagonal product for the grade-8 calibration.

    Route one: the wedge square's volume coefficient over 2^8.  Route two:
    the shuffle sum.  Disagreement raises.  A float cross-check re-evaluates
    the shuffle sum with LU determinants on scaled selection frames, and the
    same machinery on the Kaehler 2-form of R^4 must give 1/2.
    """
    phi = build_phi().form
    n = phi.n
    vol_idx = tuple(range(1, n + 1))
    route_a = wedge(phi, phi).coefficient(vol_idx) / Fraction(2) ** 8
    route_b = federer_product(phi)
    if route_a != route_b:
        raise RouteDisagreement(
            f"wedge route {route_a} != shuffle route {route_b}"
        )

    scale = 1.0 / math.sqrt(2.0)
    total = 0.0
    eye = np.eye(16)
    for I in combinations(range(1, 17), 8):
        Ic = tuple(sorted(set(range(1, 17)) - set(I)))
        v1 = evaluate(phi, scale * eye[:, [i - 1 for i in I]])
        if v1 == 0.0:
            continue
        v2 = evaluate(phi, scale * eye[:, [i - 1 for i in Ic]])
        total += _shuffle_sign(I) * v1 * v2
    float_residual = abs(total - float(route_b))

    omega_r4 = RealForm(4, {(1, 2): 1, (3, 4): 1})
    sanity = federer_product(omega_r4)
    return FedererReport(route_a, route_b, float_residual, sanity)


# comass search -------------------------------------------------------------------


def _term_arrays(form):
    idx = list(form.terms().items())
    rows = np.array([[i - 1 for i in ind] for ind, _ in idx], dtype=np.intp)
    coeffs = np.array([float(c) for _, c in idx])
    return rows, coeffs


def frame_value(form, M):
    """Value of the form on the columns of M (same as evaluate)."""
    return evaluate(form, M)


def _cofactor_batch(slabs):
    """d det(A)/dA for a [T,k,k] batch: det(A) A^{-T}, SVD fallback near
    singularity (adjugate via products of singular values, no division)."""
    T, k, _ = slabs.shape
    if k == 1:
        return np.ones_like(slabs)
    dets = np.linalg.det(slabs)
    scale = np.abs(slabs).max(axis=(1, 2)) + 1e-300
    good = np.abs(dets) > 1e-8 * scale**k
    out = np.empty_like(slabs)
    if good.any():
        inv_t = np.swapaxes(np.linalg.inv(slabs[good]), 1, 2)
        out[good] = dets[good][:, None, None] * inv_t
    bad = ~good
    if bad.any():
        U, s, Vt = np.linalg.svd(slabs[bad])
        pref = np.cumprod(
            np.concatenate([np.ones((s.shape[0], 1)), s[:, :-1]], axis=1), axis=1
        )
        suf = np.cumprod(
            np.concatenate([np.ones((s.shape[0], 1)), s[:, :0:-1]], axis=1), axis=1
        )[:, ::-1]
        orient = np.linalg.det(U @ Vt)
        out[bad] = orient[:, None, None] * (U * (pref * suf)[:, None, :]) @ Vt
    return out


def _gradient(rows, coeffs, M):
    slabs = M[rows, :]
    cof = _cofactor_batch(slabs)
    G = np.zeros_like(M)
    np.add.at(G, rows, coeffs[:, None, None] * cof)
    return G


def frame_gradient(form, M):
    """Euclidean gradient of M -> form(columns of M): per-entry cofactor sums."""
    rows, coeffs = _term_arrays(form)
    return _gradient(rows, coeffs, M)


def _value(rows, coeffs, M):
    return float((coeffs * np.linalg.det(M[rows, :])).sum())


def _retract(X):
    Q, R = np.linalg.qr(X)
    d = np.sign(np.diag(R))
    d[d == 0] = 1.0
    return Q * d


def _blade_start(form, n, k):
    best = max(form.terms().items(), key=lambda kv: (abs(kv[1]), tuple(-i for i in kv[0])))
    indices, coeff = best
    M = np.zeros((n, k))
    for col, i in enumerate(indices):
        M[i - 1, col] = 1.0
    if coeff < 0:
        if k >= 2:
            M[:, [0, 1]] = M[:, [1, 0]]
        else:
            M[:, 0] *= -1.0
    return M


def _ascend(rows, coeffs, M, iters, tol):
    f = _value(rows, coeffs, M)
    best_f, best_M = f, M
    step = 1.0
    for _ in range(iters):
        G = _gradient(rows, coeffs, M)
        A = M.T @ G
        Gt = G - M @ ((A + A.T) / 2)
        gn2 = float((Gt * Gt).sum())
        if math.sqrt(gn2) < tol:
            break
        accepted = False
        while step > 1e-14:
            M2 = _retract(M + step * Gt)
            f2 = _value(rows, coeffs, M2)
            if f2 >= f + 1e-4 * step * gn2:
                accepted = True
                break
            step *= 0.5
        if not accepted:
            break
        M, f = M2, f2
        if f > best_f:
            best_f, best_M = f, M
        step = min(step * 2.0, 4.0)
    return best_f, best_M


@dataclass(frozen=True)
class ComassReport:
    form_name: str | None
    best_value: float
    best_restart: int
    best_frame: np.ndarray
    restarts: int
    iters: int
    tol: float
    seed: int
    plane_tol: float
    max_abs_coeff: float
    wirt_ratio: float | None

    def to_dict(self):
        d = {
            "form_name": self.form_name,
            "best_value": self.best_value,
            "best_restart": self.best_restart,
            "best_frame": [[float(x) for x in row] for row in self.best_frame],
            "restarts": self.restarts,
            "iters": self.iters,
            "tol": self.tol,
            "seed": self.seed,
            "plane_tol": self.plane_tol,
            "max_abs_coeff": self.max_abs_coeff,
        }
        if self.wirt_ratio is not None:
            d["wirt_ratio"] = self.wirt_ratio
        return d


def comass_search(form, restarts=200, iters=500, tol=SEARCH_TOL, seed=0, name=None, workers=None):
    """Projected-gradient ascent over orthonormal k-frames, multi-restart.

    Restart 0 starts at the largest-coefficient blade frame, so the best
    value is structurally >= the largest absolute coefficient; restart r > 0
    draws a Gaussian frame from a generator seeded with (seed, r).  Restarts
    share no state and run on a thread pool; the merge keeps the lowest
    restart index among ties, so the result does not depend on scheduling.
    For middle-degree forms the report carries the ratio of the wedge-square
    volume coefficient to the squared best value.
    """
    k = form.grade()
    if k is None:
        raise ValueError("comass search needs a homogeneous nonzero form")
    if k == 0:
        raise ValueError("comass search needs grade >= 1")
    n = form.n
    rows, coeffs = _term_arrays(form)

    def run(r):
        if r == 0:
            M0 = _blade_start(form, n, k)
        else:
            rng = np.random.default_rng([seed, r])
            M0 = _retract(rng.standard_normal((n, k)))
        return _ascend(rows, coeffs, M0, iters, tol)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(run, range(restarts)))
    best_f, best_M, best_r = -math.inf, None, -1
    for r, (f, M) in enumerate(results):
        if f > best_f:
            best_f, best_M, best_r = f, M, r
    max_coeff = max(abs(float(c)) for c in form.terms().values())
    wirt = None
    if n == 2 * k:
        sq = wedge(form, form).coefficient(tuple(range(1, n + 1)))
        wirt = abs(float(sq)) / best_f**2 if best_f else None
    return ComassReport(
        form_name=name,
        best_value=float(best_f),
        best_restart=best_r,
        best_frame=best_M,
        restarts=restarts,
        iters=iters,
        tol=tol,
        seed=seed,
        plane_tol=PLANE_TOL,
        max_abs_coeff=max_coeff,
        wirt_ratio=wirt,
    )

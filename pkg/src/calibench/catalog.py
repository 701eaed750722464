"""Named calibration forms and the constructors behind them.

Complex structures are described by pairings: each complex coordinate is
Z_j = s_j (E_{a_j} + i c_j E_{b_j}) with conjugation flag c_j and overall
sign s_j in {+1, -1}.  The Kaehler 2-form of a pairing is sum_j c_j E_{a_j b_j}
(the overall signs drop out), the holomorphic volume is the wedge of the Z_j.

Main constructions:

* ``build_cayley``: the 4-form on R^8 calibrating Cayley planes, via three
  independent routes that must agree exactly (a frozen 14-term list, the
  alternation of the octonion chain, and the complex-structure identity).
* ``build_phi``: the grade-8 form on R^16, via two expressions that must
  agree exactly; its four building blocks have disjoint supports of sizes
  128 + 70 + 48 + 48 = 294 and all coefficients are +-1.
* ``build_spinor_family``: the forms obtained by projecting rank-one spinor
  endomorphisms; cross-checked exactly against closed-form expressions and
  carried onto ``build_phi()`` by an explicit sign-flip pullback.

All disagreement paths raise ``RouteDisagreement``; nothing is patched over.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from calibench import clifford
from calibench.forms import (
    ComplexForm,
    RealForm,
    alternation,
    cwedge,
    hodge_star,
    inner_product,
    pullback,
    wedge,
    wedge_power,
)
from calibench.octonion import Octonion, chain_product, conjugation_chain

__all__ = [
    "ComplexPairing",
    "CatalogEntry",
    "RouteDisagreement",
    "STANDARD8",
    "STANDARD16",
    "J8",
    "J16",
    "W16",
    "kaehler_form",
    "holomorphic_volume",
    "build_standard",
    "build_cayley",
    "build_phi",
    "phi_components",
    "build_spinor_family",
    "spinor_pullback_matrix",
    "norm_table",
    "NORM_TABLE_EXPECTED",
    "catalog",
    "CAYLEY_TERMS",
]


class RouteDisagreement(AssertionError):
    """Two supposedly identical construction routes produced different forms."""


@dataclass(frozen=True)
class ComplexPairing:
    """Ambient dimension plus (a, b, conj_flag, overall_sign) per complex coordinate."""

    n: int
    pairs: tuple

    def __post_init__(self):
        seen = set()
        for (a, b, c, s) in self.pairs:
            if not (1 <= a <= self.n and 1 <= b <= self.n) or a == b:
                raise ValueError(f"bad index pair ({a}, {b}) for n={self.n}")
            if c not in (1, -1) or s not in (1, -1):
                raise ValueError("flags must be +1 or -1")
            if a in seen or b in seen:
                raise ValueError("indices reused across pairs")
            seen.update((a, b))

    def z(self, j):
        """The j-th complex coordinate 1-form (0-based j)."""
        a, b, c, s = self.pairs[j]
        return ComplexForm(RealForm.one_form(self.n, a, s), RealForm.one_form(self.n, b, s * c))

    def subset(self, lo, hi):
        return ComplexPairing(self.n, self.pairs[lo:hi])


def _std_pairs(n_complex, offset=0):
    return tuple((offset + 2 * j + 1, offset + 2 * j + 2, 1, 1) for j in range(n_complex))


STANDARD8 = ComplexPairing(8, _std_pairs(4))
STANDARD16 = ComplexPairing(16, _std_pairs(8))

_J_FLAGS = (1, -1, -1, 1)
J8 = ComplexPairing(8, tuple((2 * j + 1, 2 * j + 2, _J_FLAGS[j], 1) for j in range(4)))
J16 = ComplexPairing(
    16,
    tuple((2 * j + 1, 2 * j + 2, _J_FLAGS[j % 4], 1) for j in range(8)),
)

# reversed second structure with the first coordinate of each factor negated
_W_CONJ = (1, -1, -1, 1, -1, 1, 1, -1)
_W_SIGN = (-1, 1, 1, 1, -1, 1, 1, 1)
W16 = ComplexPairing(16, tuple((2 * j + 1, 2 * j + 2, _W_CONJ[j], _W_SIGN[j]) for j in range(8)))


def kaehler_form(pairing):
    f = RealForm.zero(pairing.n)
    for (a, b, c, _s) in pairing.pairs:
        f = f + RealForm(pairing.n, {(a, b): c})
    return f


def holomorphic_volume(pairing):
    out = ComplexForm(RealForm(pairing.n, {0: 1}))
    for j in range(len(pairing.pairs)):
        out = cwedge(out, pairing.z(j))
    return out


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    form: RealForm
    claim: str
    comass_expected: Fraction | None = None

    @property
    def n(self):
        return self.form.n

    @property
    def grade(self):
        return self.form.grade()


def build_standard(kind, pairing, k=None):
    """Standard forms of a complex pairing: kaehler_power k, re_omega, im_omega,
    or sigma_half_sq (the real part of half the square of the complex
    symplectic form pairing consecutive complex coordinates)."""
    if kind == "kaehler_power":
        if not k or k < 1:
            raise ValueError("kaehler_power needs k >= 1")
        f = wedge_power(kaehler_form(pairing), k) * Fraction(1, math.factorial(k))
        return CatalogEntry(
            f"omega{k}",
            f,
            f"kaehler power omega^{k}/{k}!, squared norm C({len(pairing.pairs)},{k})",
            Fraction(1),
        )
    if kind == "re_omega":
        return CatalogEntry(
            f"re_omega_{pairing.n}",
            holomorphic_volume(pairing).re,
            f"real part of the holomorphic volume, squared norm 2^{len(pairing.pairs) - 1}",
            Fraction(1),
        )
    if kind == "im_omega":
        return CatalogEntry(
            f"im_omega_{pairing.n}",
            holomorphic_volume(pairing).im,
            "imaginary part of the holomorphic volume",
            Fraction(1),
        )
    if kind == "sigma_half_sq":
        m = len(pairing.pairs)
        if m % 2:
            raise ValueError("sigma_half_sq needs an even number of complex coordinates")
        sigma = ComplexForm(RealForm.zero(pairing.n))
        for j in range(0, m, 2):
            sigma = sigma + cwedge(pairing.z(j), pairing.z(j + 1))
        half_sq = cwedge(sigma, sigma) * Fraction(1, 2)
        return CatalogEntry(
            "sigma2",
            half_sq.re,
            "real part of half the squared complex symplectic form",
            Fraction(1),
        )
    raise ValueError(f"unknown standard kind {kind!r}")


# Cayley 4-form ---------------------------------------------------------------

# frozen expansion: the 14 blades with unit coefficients
CAYLEY_TERMS = {
    (1, 2, 3, 4): 1,
    (1, 2, 5, 6): 1,
    (1, 2, 7, 8): -1,
    (1, 3, 5, 7): 1,
    (1, 3, 6, 8): 1,
    (1, 4, 5, 8): 1,
    (1, 4, 6, 7): -1,
    (5, 6, 7, 8): 1,
    (3, 4, 7, 8): 1,
    (3, 4, 5, 6): -1,
    (2, 4, 6, 8): 1,
    (2, 4, 5, 7): 1,
    (2, 3, 6, 7): 1,
    (2, 3, 5, 8): -1,
}


def _oct_from_coords(v):
    return Octonion([Fraction(c) for c in v])


def build_cayley(route="all"):
    """The Cayley 4-form on R^8.

    Routes: 'basis_list' (frozen expansion), 'chain_alt' (alternation of the
    real part of the conjugation chain), 'complex_identity'
    (Re(volume) - half the squared Kaehler form of the i-multiplication
    structure).  With route='all' the three are compared exactly and any
    mismatch raises RouteDisagreement.
    """

    def from_list():
        return RealForm(8, CAYLEY_TERMS)

    def from_chain():
        def T(x1, x2, x3, x4):
            return conjugation_chain(
                [_oct_from_coords(x1), _oct_from_coords(x2), _oct_from_coords(x3), _oct_from_coords(x4)]
            ).real()

        return alternation(T, 4, 8)

    def from_complex():
        om = kaehler_form(J8)
        return holomorphic_volume(J8).re - wedge(om, om) * Fraction(1, 2)

    routes = {"basis_list": from_list, "chain_alt": from_chain, "complex_identity": from_complex}
    if route != "all":
        return CatalogEntry("cayley", routes[route](), "Cayley 4-form on R^8", Fraction(1))
    built = {name: fn() for name, fn in routes.items()}
    ref = built["basis_list"]
    for name, f in built.items():
        if f != ref:
            raise RouteDisagreement(f"cayley route {name} disagrees with the frozen expansion")
    return CatalogEntry("cayley", ref, "Cayley 4-form on R^8, squared norm 14", Fraction(1))


# the grade-8 calibration on R^16 --------------------------------------------


def _phase_scale(omega_c, phase):
    """Multiply a complex form by the exact unit complex number (c, s)."""
    if phase is None:
        return omega_c
    c, s = Fraction(phase[0]), Fraction(phase[1])
    if c * c + s * s != 1:
        raise ValueError("phase must be an exact point on the unit circle")
    return ComplexForm(omega_c.re * c - omega_c.im * s, omega_c.re * s + omega_c.im * c)


def phi_components(pairing=STANDARD16, phase=None):
    """The four building blocks: Re(O1^O2), omega^4/4!, ReO1 ^ om2^2/2, om1^2/2 ^ ReO2."""
    if len(pairing.pairs) != 8:
        raise ValueError("need eight complex coordinates")
    o1 = _phase_scale(holomorphic_volume(pairing.subset(0, 4)), phase)
    o2 = holomorphic_volume(pairing.subset(4, 8))
    om1 = kaehler_form(pairing.subset(0, 4))
    om2 = kaehler_form(pairing.subset(4, 8))
    om = om1 + om2
    half = Fraction(1, 2)
    return (
        cwedge(o1, o2).re,
        wedge_power(om, 4) * Fraction(1, 24),
        wedge(o1.re, wedge_power(om2, 2) * half),
        wedge(wedge_power(om1, 2) * half, o2.re),
    ), (o1, o2, om1, om2)


def build_phi(pairing=STANDARD16, phase=None):
    """The grade-8 calibration, built two ways and compared exactly.

    Expression one: Re(O) + omega^4/4! + Re(O1 + O2) ^ omega^2/2.
    Expression two: the four disjoint-support components.  Their equality
    uses om_i ^ O_i = 0, which is asserted too.
    """
    comps, (o1, o2, om1, om2) = phi_components(pairing, phase)
    om = om1 + om2
    half = Fraction(1, 2)
    expr1 = comps[0] + comps[1] + wedge(o1.re + o2.re, wedge_power(om, 2) * half)
    expr2 = comps[0] + comps[1] + comps[2] + comps[3]
    if not cwedge(om1, o1).re.is_zero() or not cwedge(om1, o1).im.is_zero():
        raise RouteDisagreement("om1 ^ O1 is not zero")
    if not cwedge(om2, o2).re.is_zero() or not cwedge(om2, o2).im.is_zero():
        raise RouteDisagreement("om2 ^ O2 is not zero")
    if expr1 != expr2:
        raise RouteDisagreement("the two expressions for the grade-8 form disagree")
    return CatalogEntry(
        "phi",
        expr1,
        "grade-8 calibration on R^16, phi^phi = 294 vol, squared norm 294",
        Fraction(1),
    )


# spinor family ---------------------------------------------------------------


def spinor_pullback_matrix():
    """Diagonal sign matrix carrying the spinor grade-8 form onto build_phi().

    Derived by matching the reversed-structure coordinates against the
    standard ones; flips axes 1, 2, 4, 6, 9, 16.
    """
    d = np.ones(16, dtype=np.int64)
    for pos in (1, 2, 4, 6, 9, 16):
        d[pos - 1] = -1
    return np.diag(d)


@functools.lru_cache(maxsize=None)
def build_spinor_family():
    """Project the three rank-one spinor endomorphisms and verify the family.

    Returns a dict with keys 'psi', 'psi_prime', 'phi' (full mixed-grade
    forms) and 'phi4_closed', 'phi8_closed' (the verified closed forms).
    Raises RouteDisagreement if any of the exact cross-checks fails:

    * grade-4: psi_4 = cayley + shifted cayley, psi'_4 = omJ ^ omJ'
    * grade-8 closed forms for psi, psi', phi
    * the grade-4 and grade-8 closed forms of phi
    * pullback of the grade-8 part onto build_phi()
    """
    s = clifford.spinor_vector(clifford.S_PLUS)
    sp = clifford.spinor_vector(clifford.S_PRIME)
    psi = clifford.endo_to_form(256 * clifford.outer_product(s, s))
    psip = clifford.endo_to_form(256 * clifford.outer_product(sp, s))
    phi = psi + psip

    omJ = kaehler_form(J16.subset(0, 4))
    omJp = kaehler_form(J16.subset(4, 8))
    OmJ = holomorphic_volume(J16.subset(0, 4))
    OmJp = holomorphic_volume(J16.subset(4, 8))
    half = Fraction(1, 2)
    f24 = Fraction(1, 24)
    sixth = Fraction(1, 6)

    cay = RealForm(16, CAYLEY_TERMS)
    cayp = RealForm(16, {tuple(i + 8 for i in t): c for t, c in CAYLEY_TERMS.items()})

    checks = {
        "psi_4": (psi.grade_part(4), cay + cayp),
        "psi_prime_4": (psip.grade_part(4), wedge(omJ, omJp)),
        "psi_prime_2": (psip.grade_part(2), RealForm.zero(16)),
        "psi_8": (
            psi.grade_part(8),
            f24 * wedge_power(omJ, 4) + f24 * wedge_power(omJp, 4) + wedge(cay, cayp),
        ),
        "psi_prime_8": (
            psip.grade_part(8),
            wedge(OmJ.im, OmJp.im)
            - wedge(omJ, sixth * wedge_power(omJp, 3))
            - wedge(sixth * wedge_power(omJ, 3), omJp),
        ),
    }
    phi4_closed = OmJ.re + OmJp.re - half * wedge_power(omJ - omJp, 2)
    phi8_closed = (
        f24 * wedge_power(omJ - omJp, 4)
        + wedge(OmJ.im, OmJp.im)
        + wedge(OmJ.re, OmJp.re)
        - wedge(OmJ.re, half * wedge_power(omJp, 2))
        - wedge(half * wedge_power(omJ, 2), OmJp.re)
    )
    checks["phi_4"] = (phi.grade_part(4), phi4_closed)
    checks["phi_8"] = (phi.grade_part(8), phi8_closed)

    for name, (got, expect) in checks.items():
        if got != expect:
            raise RouteDisagreement(f"spinor family check {name} failed")

    phiW = build_phi(W16).form
    if phi.grade_part(8) != phiW:
        raise RouteDisagreement("spinor grade-8 form does not match the reversed-structure recipe")
    if pullback(phi.grade_part(8), spinor_pullback_matrix()) != build_phi().form:
        raise RouteDisagreement("sign-flip pullback does not carry the spinor form onto phi")

    return {
        "psi": psi,
        "psi_prime": psip,
        "phi": phi,
        "phi4_closed": phi4_closed,
        "phi8_closed": phi8_closed,
    }


NORM_TABLE_EXPECTED = {
    "psi": (1, 0, 28, 0, 198, 0, 28, 0, 1),
    "psi_prime": (0, 0, 16, 64, 96, 64, 16, 0, 0),
    "phi": (1, 0, 44, 64, 294, 64, 44, 0, 1),
}


def norm_table(f):
    """Squared norms of the even-grade parts (grades 0, 2, ..., 16)."""
    return tuple(int(inner_product(f.grade_part(k), f.grade_part(k))) for k in range(0, 17, 2))


@functools.lru_cache(maxsize=None)
def catalog():
    """Name -> CatalogEntry for every form the CLI can address."""
    entries = {}

    def add(entry):
        entries[entry.name] = entry

    add(build_phi())
    add(build_cayley())
    add(build_standard("re_omega", STANDARD8))
    add(build_standard("im_omega", STANDARD8))
    add(build_standard("re_omega", STANDARD16))
    add(build_standard("sigma_half_sq", STANDARD16))
    for k in range(1, 5):
        add(build_standard("kaehler_power", STANDARD16, k=k))

    fam = build_spinor_family()
    for key, label in (("psi", "psi"), ("psi_prime", "psi_prime"), ("phi", "phi_spinor")):
        f = fam[key]
        for g in f.grades():
            if g in (0,):
                continue
            add(
                CatalogEntry(
                    f"{label}{g}" if label != "phi_spinor" else f"phi{g}_spinor",
                    f.grade_part(g),
                    f"grade-{g} part of the {label.replace('_', ' ')} spinor projection",
                    Fraction(1),
                )
            )
    return entries

"""Exact exterior algebra on R^n with rational coefficients.

A form is a finite sum of coordinate blades ``E_I = E_{i1} ^ ... ^ E_{ik}``
with strictly increasing indices ``1 <= i1 < ... < ik <= n`` and nonzero
``fractions.Fraction`` coefficients.  Blades are stored as integer bitmasks
(bit ``i-1`` set means index ``i`` is present), the usual trick in geometric
algebra codes.  Every coordinate plane is oriented by increasing index order;
``vol = E_{1..n}``.

Exact operations (wedge, Hodge star, inner product, alternation, linear
pullback) never touch floats.  ``evaluate`` is the one float entry point,
used by the numeric search code.
"""

from __future__ import annotations

import itertools
import json
import math
from fractions import Fraction

import numpy as np

__all__ = [
    "RealForm",
    "ComplexForm",
    "blade_mask",
    "mask_indices",
    "reorder_sign",
    "perm_sign",
    "wedge",
    "hodge_star",
    "inner_product",
    "evaluate",
    "alternation",
    "pullback",
    "form_to_dict",
    "form_from_dict",
    "dump_form",
    "load_form",
    "SchemaError",
]


class SchemaError(ValueError):
    """Malformed serialized form (bad indices, duplicate blades, zero terms)."""


def blade_mask(indices):
    """Bitmask of a strictly increasing index tuple (1-based indices)."""
    mask = 0
    prev = 0
    for i in indices:
        if i <= prev:
            raise ValueError(f"blade indices must be strictly increasing, got {tuple(indices)}")
        mask |= 1 << (i - 1)
        prev = i
    return mask


def mask_indices(mask):
    """Increasing 1-based index tuple of a bitmask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def reorder_sign(mask_a, mask_b):
    """Sign of sorting the concatenation (A..., B...) into increasing order.

    Counts transpositions: pairs (i in A, j in B) with i > j.  The masks must
    be disjoint for a wedge, but the count itself never needs that.
    """
    count = 0
    a = mask_a >> 1
    while a:
        count += (a & mask_b).bit_count()
        a >>= 1
    return -1 if count & 1 else 1


def perm_sign(perm):
    """Sign of a permutation given as a sequence, by inversion count."""
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv & 1 else 1


def _exact(x):
    """Coerce an exact scalar.  Floats are refused: exactness is the contract."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact coefficient required (int/Fraction/str), got {type(x).__name__}")


class RealForm:
    """Exterior form on R^n with exact rational coefficients.

    Terms map bitmask -> nonzero Fraction.  Mixed grades are allowed; the
    grade-sensitive operations check homogeneity themselves.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n, terms=None):
        if not isinstance(n, int) or n < 1:
            raise ValueError("dimension n must be a positive integer")
        self.n = n
        clean = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for key, coeff in items:
                mask = key if isinstance(key, int) else blade_mask(key)
                if mask < 0 or mask >= (1 << n):
                    raise ValueError(f"blade {mask_indices(mask) if mask >= 0 else mask} out of range for n={n}")
                c = _exact(coeff)
                if c:
                    c = clean.get(mask, Fraction(0)) + c
                    if c:
                        clean[mask] = c
                    else:
                        clean.pop(mask, None)
        self._terms = clean

    # construction helpers -------------------------------------------------

    @staticmethod
    def zero(n):
        return RealForm(n)

    @staticmethod
    def blade(n, indices, coeff=1):
        return RealForm(n, {blade_mask(indices): coeff})

    @staticmethod
    def one_form(n, i, coeff=1):
        return RealForm(n, {1 << (i - 1): coeff})

    @staticmethod
    def volume(n):
        return RealForm(n, {(1 << n) - 1: 1})

    # inspection -----------------------------------------------------------

    def terms(self):
        """Dict blade-index-tuple -> Fraction, in serialization order."""
        return {mask_indices(m): c for m, c in sorted(self._terms.items(), key=lambda kv: mask_indices(kv[0]))}

    def coefficient(self, indices):
        return self._terms.get(blade_mask(indices) if not isinstance(indices, int) else indices, Fraction(0))

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def grades(self):
        return sorted({m.bit_count() for m in self._terms})

    def grade(self):
        """The single grade of a homogeneous form.  Zero form has grade None."""
        gs = self.grades()
        if not gs:
            return None
        if len(gs) > 1:
            raise ValueError(f"form is not homogeneous, grades {gs}")
        return gs[0]

    def grade_part(self, k):
        return RealForm(self.n, {m: c for m, c in self._terms.items() if m.bit_count() == k})

    # algebra --------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, RealForm) and self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __add__(self, other):
        if not isinstance(other, RealForm) or other.n != self.n:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        f = RealForm(self.n)
        f._terms = out
        return f

    def __neg__(self):
        f = RealForm(self.n)
        f._terms = {m: -c for m, c in self._terms.items()}
        return f

    def __sub__(self, other):
        if not isinstance(other, RealForm) or other.n != self.n:
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        c = _exact(scalar)
        if not c:
            return RealForm(self.n)
        f = RealForm(self.n)
        f._terms = {m: coeff * c for m, coeff in self._terms.items()}
        return f

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (Fraction(1) / _exact(scalar))

    def __xor__(self, other):
        return wedge(self, other)

    def __repr__(self):
        if not self._terms:
            return f"RealForm(n={self.n}, 0)"
        bits = []
        for m, c in sorted(self._terms.items(), key=lambda kv: mask_indices(kv[0]))[:6]:
            bits.append(f"{c}*E{''.join(map(str, mask_indices(m)))}" if self.n < 10 else f"{c}*E{mask_indices(m)}")
        more = "" if len(self._terms) <= 6 else f" ... ({len(self._terms)} terms)"
        return f"RealForm(n={self.n}, {' + '.join(bits)}{more})"


def wedge(a, b):
    """Exterior product.  Exact; distributes over mixed grades."""
    if a.n != b.n:
        raise ValueError(f"dimension mismatch {a.n} != {b.n}")
    out = {}
    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            if ma & mb:
                continue
            c = ca * cb
            if reorder_sign(ma, mb) < 0:
                c = -c
            m = ma | mb
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    f = RealForm(a.n)
    f._terms = out
    return f


def wedge_power(a, k):
    """k-fold wedge a ^ a ^ ... ^ a (k >= 0)."""
    out = RealForm(a.n, {0: 1})
    for _ in range(k):
        out = wedge(out, a)
    return out


def hodge_star(a):
    """Hodge star for the standard metric and increasing-index orientation.

    E_I maps to sign(I, I^c) E_{I^c}.  Input may be any (mixed grade) form.
    """
    full = (1 << a.n) - 1
    out = {}
    for m, c in a._terms.items():
        comp = full ^ m
        if reorder_sign(m, comp) < 0:
            c = -c
        out[comp] = c
    f = RealForm(a.n)
    f._terms = out
    return f


def inner_product(a, b):
    """Standard inner product; coordinate blades are orthonormal.

    Mixed grades pair gradewise (cross-grade terms vanish automatically since
    distinct masks never match).
    """
    if a.n != b.n:
        raise ValueError(f"dimension mismatch {a.n} != {b.n}")
    small, big = (a._terms, b._terms) if len(a._terms) <= len(b._terms) else (b._terms, a._terms)
    total = Fraction(0)
    for m, c in small.items():
        d = big.get(m)
        if d is not None:
            total += c * d
    return total


# float evaluation ----------------------------------------------------------


def _dets_small(slabs, k):
    """Closed-form cofactor determinants for k <= 4 on a [T,k,k] array."""
    if k == 1:
        return slabs[:, 0, 0]
    if k == 2:
        return slabs[:, 0, 0] * slabs[:, 1, 1] - slabs[:, 0, 1] * slabs[:, 1, 0]
    if k == 3:
        a, b, c = slabs[:, 0, 0], slabs[:, 0, 1], slabs[:, 0, 2]
        d, e, f = slabs[:, 1, 0], slabs[:, 1, 1], slabs[:, 1, 2]
        g, h, i = slabs[:, 2, 0], slabs[:, 2, 1], slabs[:, 2, 2]
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    # k == 4: expand along the first row against 3x3 minors
    minors = []
    cols = [0, 1, 2, 3]
    for j in cols:
        keep = [c for c in cols if c != j]
        sub = slabs[:, 1:, :][:, :, keep]
        minors.append(_dets_small(sub, 3))
    return (
        slabs[:, 0, 0] * minors[0]
        - slabs[:, 0, 1] * minors[1]
        + slabs[:, 0, 2] * minors[2]
        - slabs[:, 0, 3] * minors[3]
    )


def evaluate(a, vectors):
    """Evaluate a homogeneous k-form on k column vectors (float).

    ``vectors`` is an (n, k) array; columns are the arguments.  The value is
    sum_I c_I det(rows I of vectors).  Cofactor expansion for k <= 4, batched
    LU (numpy det) above.  Raises on grade/shape mismatch and non-finite
    input.
    """
    M = np.asarray(vectors, dtype=float)
    if M.ndim != 2:
        raise ValueError("vectors must be a 2-d array with one column per argument")
    n, k = M.shape
    if n != a.n:
        raise ValueError(f"vectors live in R^{n}, form lives in R^{a.n}")
    if k > n:
        raise ValueError(f"more arguments ({k}) than dimensions ({n})")
    if not np.isfinite(M).all():
        raise ValueError("non-finite entries in vectors")
    g = a.grade()
    if g is None:
        return 0.0
    if g != k:
        raise ValueError(f"form has grade {g}, got {k} vectors")
    if k == 0:
        return float(a.coefficient(()))
    rows = np.array([[i - 1 for i in mask_indices(m)] for m in a._terms], dtype=np.intp)
    coeffs = np.array([float(c) for c in a._terms.values()])
    slabs = M[rows, :]
    dets = _dets_small(slabs, k) if k <= 4 else np.linalg.det(slabs)
    return float(coeffs @ dets)


def alternation(T, k, n):
    """Full alternation of a k-argument callback into an exact k-form.

    ``T`` takes k basis-vector arguments (each a length-n tuple with a single
    1 entry) and returns an exact scalar.  The result has coefficients
    (1/k!) sum_sigma sign(sigma) T(e_{I sigma}) on each increasing I, which
    is the classical alternation operator restricted to basis tuples.
    """
    basis = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    perms = [(perm_sign(p), p) for p in itertools.permutations(range(k))]
    fact = math.factorial(k)
    terms = {}
    for combo in itertools.combinations(range(n), k):
        total = Fraction(0)
        vecs = [basis[i] for i in combo]
        for sgn, p in perms:
            val = _exact(T(*[vecs[j] for j in p]))
            total += val if sgn > 0 else -val
        if total:
            terms[blade_mask(tuple(i + 1 for i in combo))] = total / fact
    f = RealForm(n)
    f._terms = terms
    return f


def pullback(a, L):
    """Pullback along the linear map with matrix L: (L*a)(v...) = a(Lv...).

    Exact: entries of L are converted to Fractions (floats convert exactly,
    being binary rationals).  Each coordinate 1-form E_i pulls back to row i
    of L; blades expand incrementally with like-term collection.
    """
    Lm = np.asarray(L, dtype=object)
    if Lm.shape != (a.n, a.n):
        raise ValueError(f"matrix must be {a.n}x{a.n}, got {Lm.shape}")
    rows = []
    for i in range(a.n):
        row = []
        for j in range(a.n):
            x = Lm[i, j]
            c = Fraction(x) if isinstance(x, (float, np.floating)) else _exact(x)
            if c:
                row.append((1 << j, c))
        rows.append(row)
    out = {}
    for m, coeff in a._terms.items():
        acc = {0: coeff}
        for i in mask_indices(m):
            nxt = {}
            for pm, pc in acc.items():
                for jm, lc in rows[i - 1]:
                    if pm & jm:
                        continue
                    c = pc * lc
                    if reorder_sign(pm, jm) < 0:
                        c = -c
                    s = nxt.get(pm | jm, Fraction(0)) + c
                    if s:
                        nxt[pm | jm] = s
                    else:
                        nxt.pop(pm | jm, None)
            acc = nxt
            if not acc:
                break
        for mm, cc in acc.items():
            s = out.get(mm, Fraction(0)) + cc
            if s:
                out[mm] = s
            else:
                out.pop(mm, None)
    f = RealForm(a.n)
    f._terms = out
    return f


# complex-valued forms --------------------------------------------------------


class ComplexForm:
    """Complex-valued form: a pair of real forms (re + i im)."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        if im is None:
            im = RealForm.zero(re.n)
        if re.n != im.n:
            raise ValueError("real and imaginary parts must share a dimension")
        self.re = re
        self.im = im

    @property
    def n(self):
        return self.re.n

    def conj(self):
        return ComplexForm(self.re, -self.im)

    def times_i(self):
        return ComplexForm(-self.im, self.re)

    def __add__(self, other):
        return ComplexForm(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return ComplexForm(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return ComplexForm(-self.re, -self.im)

    def __mul__(self, scalar):
        return ComplexForm(self.re * scalar, self.im * scalar)

    __rmul__ = __mul__

    def __xor__(self, other):
        return cwedge(self, other)

    def __eq__(self, other):
        return isinstance(other, ComplexForm) and self.re == other.re and self.im == other.im

    def __repr__(self):
        return f"ComplexForm(re={self.re!r}, im={self.im!r})"


def cwedge(a, b):
    """Wedge of complex forms, complex-bilinear."""
    if isinstance(a, RealForm):
        a = ComplexForm(a)
    if isinstance(b, RealForm):
        b = ComplexForm(b)
    return ComplexForm(
        wedge(a.re, b.re) - wedge(a.im, b.im),
        wedge(a.re, b.im) + wedge(a.im, b.re),
    )


def cwedge_power(a, k):
    out = ComplexForm(RealForm(a.n, {0: 1}))
    for _ in range(k):
        out = cwedge(out, a)
    return out


# serialization ---------------------------------------------------------------


def form_to_dict(a):
    """JSON-ready dict, terms sorted lexicographically by index tuple."""
    terms = []
    for m, c in sorted(a._terms.items(), key=lambda kv: mask_indices(kv[0])):
        terms.append({"blade": list(mask_indices(m)), "num": str(c.numerator), "den": str(c.denominator)})
    return {"n": a.n, "terms": terms}


def form_from_dict(d):
    """Inverse of form_to_dict with full schema validation."""
    if not isinstance(d, dict) or set(d) != {"n", "terms"}:
        raise SchemaError("top level must be an object with exactly the keys 'n' and 'terms'")
    n = d["n"]
    if not isinstance(n, int) or n < 1:
        raise SchemaError("'n' must be a positive integer")
    if not isinstance(d["terms"], list):
        raise SchemaError("'terms' must be a list")
    seen = set()
    terms = {}
    for t in d["terms"]:
        if not isinstance(t, dict) or set(t) != {"blade", "num", "den"}:
            raise SchemaError("each term needs exactly the keys 'blade', 'num', 'den'")
        blade = t["blade"]
        if not isinstance(blade, list) or not all(isinstance(i, int) for i in blade):
            raise SchemaError("'blade' must be a list of integers")
        if any(i < 1 or i > n for i in blade):
            raise SchemaError(f"blade index out of range 1..{n}: {blade}")
        if any(b <= a for a, b in zip(blade, blade[1:])):
            raise SchemaError(f"blade indices must be strictly increasing: {blade}")
        key = tuple(blade)
        if key in seen:
            raise SchemaError(f"duplicate blade {blade}")
        seen.add(key)
        try:
            num = int(t["num"])
            den = int(t["den"])
        except (TypeError, ValueError):
            raise SchemaError("'num' and 'den' must be decimal integer strings") from None
        if den == 0:
            raise SchemaError("zero denominator")
        c = Fraction(num, den)
        if c == 0:
            raise SchemaError(f"zero coefficient stored for blade {blade}")
        terms[blade_mask(key)] = c
    f = RealForm(n)
    f._terms = terms
    return f


def dump_form(a):
    """Byte-stable JSON text for a form."""
    return json.dumps(form_to_dict(a), indent=2, sort_keys=True) + "\n"


def load_form(text):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON: {e}") from None
    return form_from_dict(d)

"""Exact rational arithmetic backing the float geometry.

Every float is a dyadic rational, so geometry constructed from floats can be
shadowed exactly with ``Fraction`` coordinates.  This module keeps that shadow:
complex numbers as (re, im) Fraction pairs, unnormalized 2x2 matrices, and
circle coefficient triples.  Exact matrices are deliberately *not* scaled to
determinant 1 (that would need square roots); every consumer is
scale-invariant.
"""

from __future__ import annotations

from fractions import Fraction

# A complex rational: (re, im).
EC = tuple[Fraction, Fraction]
# An unnormalized matrix (a, b, c, d), entries EC.
EMat = tuple[EC, EC, EC, EC]
# Circle coefficients (A, B, D): A, D rational, B complex rational.
ECircle = tuple[Fraction, EC, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def ec(re=0, im=0) -> EC:
    return (Fraction(re), Fraction(im))


def ec_from_complex(z: complex) -> EC:
    return (Fraction(z.real), Fraction(z.imag))


def ec_to_complex(u: EC) -> complex:
    return complex(float(u[0]), float(u[1]))


def ec_add(u: EC, v: EC) -> EC:
    return (u[0] + v[0], u[1] + v[1])


def ec_sub(u: EC, v: EC) -> EC:
    return (u[0] - v[0], u[1] - v[1])


def ec_neg(u: EC) -> EC:
    return (-u[0], -u[1])


def ec_mul(u: EC, v: EC) -> EC:
    return (u[0] * v[0] - u[1] * v[1], u[0] * v[1] + u[1] * v[0])


def ec_conj(u: EC) -> EC:
    return (u[0], -u[1])


def ec_abs2(u: EC) -> Fraction:
    return u[0] * u[0] + u[1] * u[1]


def ec_is_zero(u: EC) -> bool:
    return u[0] == 0 and u[1] == 0


def ec_div(u: EC, v: EC) -> EC:
    m = ec_abs2(v)
    if m == 0:
        raise ZeroDivisionError("exact complex division by zero")
    return ((u[0] * v[0] + u[1] * v[1]) / m, (u[1] * v[0] - u[0] * v[1]) / m)


def ec_scale(u: EC, s: Fraction) -> EC:
    return (u[0] * s, u[1] * s)


def emat(a, b, c, d) -> EMat:
    return (a, b, c, d)


def emat_mul(m: EMat, n: EMat) -> EMat:
    a1, b1, c1, d1 = m
    a2, b2, c2, d2 = n
    return (
        ec_add(ec_mul(a1, a2), ec_mul(b1, c2)),
        ec_add(ec_mul(a1, b2), ec_mul(b1, d2)),
        ec_add(ec_mul(c1, a2), ec_mul(d1, c2)),
        ec_add(ec_mul(c1, b2), ec_mul(d1, d2)),
    )


def emat_conj(m: EMat) -> EMat:
    return tuple(ec_conj(e) for e in m)  # type: ignore[return-value]


def emat_det(m: EMat) -> EC:
    a, b, c, d = m
    return ec_sub(ec_mul(a, d), ec_mul(b, c))


def emat_adjugate(m: EMat) -> EMat:
    """Unscaled inverse: adj(m) * m = det(m) * I."""
    a, b, c, d = m
    return (d, ec_neg(b), ec_neg(c), a)


# Points: an EC, or None for the point at infinity.
EPoint = EC | None


def eapply(m: EMat, p: EPoint) -> EPoint:
    """Apply z -> (az+b)/(cz+d); poles and infinity are exact."""
    a, b, c, d = m
    if p is None:
        if ec_is_zero(c):
            return None
        return ec_div(a, c)
    den = ec_add(ec_mul(c, p), d)
    if ec_is_zero(den):
        return None
    return ec_div(ec_add(ec_mul(a, p), b), den)


def ecircle_value(circ: ECircle, p: EPoint) -> Fraction:
    """The Hermitian form A|z|^2 + Bz + conj(B)conj(z) + D; at infinity, A."""
    A, B, D = circ
    if p is None:
        return A
    # B z + conj(B z) = 2 Re(B z)
    bz = ec_mul(B, p)
    return A * ec_abs2(p) + 2 * bz[0] + D


def _hermitian(circ: ECircle) -> EMat:
    A, B, D = circ
    return ((A, _ZERO), ec_conj(B), B, (D, _ZERO))


def ecircle_transport(m: EMat, circ: ECircle, anti: bool) -> ECircle:
    """Image coefficients of a circle under the (anti-)Moebius map of m.

    Uses the congruence H' = N* H N with N the adjugate of m; result is scaled
    by |det m|^2, which is irrelevant for a coefficient triple.  For an
    anti-map z -> mob(m)(conj z), the source form is conjugated first.
    """
    H = _hermitian(circ)
    if anti:
        h11, h12, h21, h22 = H
        H = (h11, ec_conj(h12), ec_conj(h21), h22)
    n11, n12, n21, n22 = emat_adjugate(m)
    h11, h12, h21, h22 = H
    # T = H N
    t11 = ec_add(ec_mul(h11, n11), ec_mul(h12, n21))
    t12 = ec_add(ec_mul(h11, n12), ec_mul(h12, n22))
    t21 = ec_add(ec_mul(h21, n11), ec_mul(h22, n21))
    t22 = ec_add(ec_mul(h21, n12), ec_mul(h22, n22))
    # H' = conj(N)^T T
    p11 = ec_add(ec_mul(ec_conj(n11), t11), ec_mul(ec_conj(n21), t21))
    p21 = ec_add(ec_mul(ec_conj(n12), t11), ec_mul(ec_conj(n22), t21))
    p22 = ec_add(ec_mul(ec_conj(n12), t12), ec_mul(ec_conj(n22), t22))
    # p11, p22 are real by construction.
    return (p11[0], p21, p22[0])


def ecircle_flip(circ: ECircle) -> ECircle:
    A, B, D = circ
    return (-A, ec_neg(B), -D)


def ecircle_center_radius2(circ: ECircle) -> tuple[EC, Fraction]:
    """Euclidean center and squared radius; requires A != 0."""
    A, B, D = circ
    if A == 0:
        raise ZeroDivisionError("line has no finite center")
    center = ec_scale(ec_conj(ec_neg(B)), _ONE / A)
    r2 = (ec_abs2(B) - A * D) / (A * A)
    return center, r2


def disks_disjoint(c1: EC, q1: Fraction, c2: EC, q2: Fraction) -> bool:
    """Whether closed Euclidean disks (center, radius^2) are disjoint; exact."""
    d2 = ec_abs2(ec_sub(c1, c2))
    lhs = d2 - q1 - q2
    # d > r1 + r2  <=>  d^2 - q1 - q2 > 2 r1 r2  (both sides then nonnegative)
    return lhs > 0 and lhs * lhs > 4 * q1 * q2


def disk_strictly_inside(cc: EC, qc: Fraction, cp: EC, qp: Fraction) -> bool:
    """Whether disk (cc, qc) lies strictly inside disk (cp, qp); exact."""
    if qc >= qp:
        return False
    d2 = ec_abs2(ec_sub(cc, cp))
    gap = qp + qc - d2
    # d + rc < rp  <=>  d^2 < (rp - rc)^2  <=>  qp + qc - d2 > 2 rp rc
    return gap > 0 and gap * gap > 4 * qp * qc

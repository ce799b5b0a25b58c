"""Sylvester resultants over exact coefficient domains.

Layout convention (normative for the whole package): for f of declared degree
d and g of declared degree e, the Sylvester matrix is (d+e) x (d+e) with the
coefficients in *ascending* order; row r < e carries f[x^0..x^d] in columns
r..r+d and row e+s carries g[x^0..x^e] in columns s..s+e.  This differs from
the descending-order classical layout by the sign (-1)^(d*e); all downstream
consumers either compare projectively or are validated against independent
oracles, so the sign is absorbed here once.

Determinants are evaluated by fraction-free Bareiss elimination.  Rows are
scaled to integer (or integer-polynomial) entries first and the known scale
factor is divided back out at the end, so the elimination itself runs on
plain Python integers; all divisions performed by the recurrence are exact in
the underlying integral domain.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .forms import BinaryForm, CovariantForm

# Sparse polynomial with integer coefficients: exponent tuple -> coefficient.
# The zero polynomial is the empty dict.  Within one matrix every key has the
# same length; () is the scalar case.
IntPoly = dict[tuple[int, ...], int]


def _p_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    out: IntPoly = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            key = tuple(x + y for x, y in zip(ka, kb))
            v = out.get(key, 0) + va * vb
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def _p_sub(a: IntPoly, b: IntPoly) -> IntPoly:
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, 0) - v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def _p_exact_div(num: IntPoly, den: IntPoly) -> IntPoly:
    """Exact division in Z[x1..xn]; valid only when den divides num."""
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    den_lt = max(den)
    den_lc = den[den_lt]
    q: IntPoly = {}
    r = dict(num)
    while r:
        r_lt = max(r)
        mono = tuple(a - b for a, b in zip(r_lt, den_lt))
        if any(x < 0 for x in mono) or r[r_lt] % den_lc != 0:
            raise ArithmeticError("inexact polynomial division inside Bareiss elimination")
        c = r[r_lt] // den_lc
        q[mono] = q.get(mono, 0) + c
        for dk, dv in den.items():
            key = tuple(a + b for a, b in zip(mono, dk))
            nv = r.get(key, 0) - c * dv
            if nv:
                r[key] = nv
            else:
                r.pop(key, None)
    return q


def bareiss_det_poly(rows: list[list[IntPoly]]) -> IntPoly:
    """Determinant of a square matrix of integer polynomials, Bareiss style."""
    n = len(rows)
    if n == 0:
        return {(): 1}
    a = [row[:] for row in rows]
    sign = 1
    prev: IntPoly | None = None
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return {}
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                t = _p_sub(_p_mul(a[k][k], a[i][j]), _p_mul(a[i][k], a[k][j]))
                if prev is not None and t:
                    t = _p_exact_div(t, prev)
                a[i][j] = t
            a[i][k] = {}
        prev = a[k][k]
    det = a[n - 1][n - 1]
    if sign < 0:
        det = {k: -v for k, v in det.items()}
    return det


def bareiss_det_int(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix, Bareiss style."""
    n = len(rows)
    if n == 0:
        return 1
    a = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def sylvester_rows(f: Sequence, g: Sequence, zero):
    """The (d+e) x (d+e) Sylvester matrix for coefficient vectors f, g (ascending)."""
    d, e = len(f) - 1, len(g) - 1
    n = d + e
    rows = []
    for r in range(e):
        row = [zero] * n
        row[r : r + d + 1] = list(f)
        rows.append(row)
    for s in range(d):
        row = [zero] * n
        row[s : s + e + 1] = list(g)
        rows.append(row)
    return rows


def _int_scale(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return [int(c * den) for c in coeffs], den


def resultant_univariate(f: Sequence, g: Sequence, d: int, e: int) -> Fraction:
    """Resultant of two univariate polynomials with declared degrees (d, e).

    The inputs are ascending coefficient vectors of lengths d+1 and e+1;
    declared degrees are honored even when leading coefficients vanish.
    """
    fc = [Fraction(c) for c in f]
    gc = [Fraction(c) for c in g]
    if len(fc) != d + 1 or len(gc) != e + 1:
        raise ValueError("coefficient vector length must match the declared degree")
    if d < 0 or e < 0:
        raise ValueError("degrees must be nonnegative")
    fi, df = _int_scale(fc)
    gi, dg = _int_scale(gc)
    det = bareiss_det_int(sylvester_rows(fi, gi, 0))
    return Fraction(det, df**e * dg**d)


def homogeneous_resultant(f: BinaryForm, g: BinaryForm) -> Fraction:
    """Resultant of two binary forms at their declared degrees.

    Equals the univariate resultant of the dehomogenizations; the ascending
    coefficient storage of BinaryForm is already the dehomogenized vector.
    """
    return resultant_univariate(f.coeffs, g.coeffs, f.degree, g.degree)


def covariant_resultant(f: BinaryForm, p: BinaryForm, q: BinaryForm) -> CovariantForm:
    """Resultant of f against the pencil p*dx + q*dy, as a form in (dx, dy).

    All three inputs share one declared degree n >= 1; the Sylvester matrix
    has n scalar rows from f and n rows of linear forms in (dx, dy), so the
    determinant is homogeneous of degree n.  The result is the zero form
    exactly when f shares a projective root with both p and q.
    """
    n = f.degree
    if p.degree != n or q.degree != n:
        raise ValueError("pencil forms must match the declared degree of f")
    if n < 1:
        raise ValueError("declared degree must be at least 1")
    fi, df = _int_scale(f.coeffs)
    den = math.lcm(*(c.denominator for c in p.coeffs + q.coeffs))
    pi = [int(c * den) for c in p.coeffs]
    qi = [int(c * den) for c in q.coeffs]
    frow = [{(0, 0): c} if c else {} for c in fi]
    grow = []
    for pk, qk in zip(pi, qi):
        entry: IntPoly = {}
        if pk:
            entry[(1, 0)] = pk
        if qk:
            entry[(0, 1)] = qk
        grow.append(entry)
    det = bareiss_det_poly(sylvester_rows(frow, grow, {}))
    scale = Fraction(1, df**n * den**n)
    coeffs = [det.get((k, n - k), 0) * scale for k in range(n + 1)]
    return CovariantForm(n, coeffs)


def resultant_shift_invariance(f: Sequence, g: Sequence, d: int, e: int, a) -> tuple[Fraction, Fraction]:
    """The pair (res(f, g), res(f, g + a*f)); the two are equal by row reduction.

    Requires e >= d so that g + a*f keeps its declared degree.
    """
    if e < d:
        raise ValueError("shift needs declared degree of g at least that of f")
    a = Fraction(a)
    fc = [Fraction(c) for c in f]
    gc = [Fraction(c) for c in g]
    if len(fc) != d + 1 or len(gc) != e + 1:
        raise ValueError("coefficient vector length must match the declared degree")
    shifted = list(gc)
    for k, c in enumerate(fc):
        shifted[k] += a * c
    return (
        resultant_univariate(fc, gc, d, e),
        resultant_univariate(fc, shifted, d, e),
    )

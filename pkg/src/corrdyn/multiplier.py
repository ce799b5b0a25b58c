"""Fixed-point multiplier forms, spectra, and the index identities.

The fixed points of a correspondence f are the diagonal roots of
F(z) = f(z, z).  At a smooth fixed point p the curve has a slope dy/dx, the
multiplier, and it equals -diag_x(p)/diag_y(p) for the degree d+e polynomial
representatives

    diag_x[k] = sum_{i+j=k} (d - 2i) a_ij      diag_y[k] = sum_{i+j=k} (e - 2j) a_ij.

Sign convention (validated by the differentiation oracle in the test suite):
these arrays equal MINUS the diagonal restrictions of x1*d_{x1}f - x0*d_{x0}f
and y1*d_{y1}f - y0*d_{y0}f; both carry the same global flip, so the ratio,
the multiplier and everything downstream are unaffected.

The multiplier form is res_z(F, diag_x*dx + diag_y*dy), a form of degree d+e
in the covariables; it factors through the fixed points as a product of
(diag_x(p)*dx + diag_y(p)*dy), so its coefficients encode the elementary
symmetric functions of the multipliers.  The same covector rewrites exactly
as w0*dz0 + w1*dz1 in the basis

    dz0 = (d*dx + e*dy)/(d+e)      dz1 = (2*dx - 2*dy)/(d+e)

with w0[k] = (d+e-2k)*F[k] and w1 = z0*z1 * (first Cayley power of f); the
dz coordinates are where the image hyperplane [coefficient of
dz0^(d+e-1)*dz1] = 0 lives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .clebsch import cayley_omega, rho_embed
from .correspondence import Correspondence, iterate
from .forms import (
    BinaryForm,
    CovariantForm,
    _frac,
    binary_gcd,
    projectively_equal,
    rational_roots,
)
from .resultant import IntPoly, bareiss_det_poly, covariant_resultant, sylvester_rows


class BadPosition(ValueError):
    """A fixed point sits at 0 or infinity (a00 * a_de = 0); conjugate first."""


class IndeterminateMultiplier(ValueError):
    """The multiplier map is undefined for this correspondence."""


@dataclass(frozen=True)
class DiagonalDerivatives:
    """Degree d+e polynomial representatives of the diagonal derivative data.

    diag satisfies diag[k] = sum_{i+j=k} a_ij (the fixed point form); the two
    exact linear relations dz0_part == diag_x + diag_y and
    dz1_part == (e/2)*diag_x - (d/2)*diag_y hold coefficient-wise, and
    diag_x*dx + diag_y*dy == dz0_part*dz0 + dz1_part*dz1 as covectors.
    """

    diag: BinaryForm
    diag_x: BinaryForm
    diag_y: BinaryForm
    dz0_part: BinaryForm
    dz1_part: BinaryForm


@dataclass(frozen=True)
class MultiplierSpectrum:
    """sigma[i] is the i-th elementary symmetric function of the multipliers."""

    n: int
    sigma: tuple[Fraction, ...]
    defined_at: str = field(default="resultant/dy-leading", compare=False)

    def __post_init__(self):
        if len(self.sigma) != self.n + 1 or self.sigma[0] != 1:
            raise ValueError("spectrum needs n+1 entries starting with 1")


def diagonal_derivative_forms(f: Correspondence) -> DiagonalDerivatives:
    """All five diagonal derivative forms of a correspondence."""
    d, e = f.deg_x, f.deg_y
    n = d + e
    fk = [Fraction(0)] * (n + 1)
    xk = [Fraction(0)] * (n + 1)
    yk = [Fraction(0)] * (n + 1)
    for i, row in enumerate(f.form.coeffs):
        for j, c in enumerate(row):
            if c == 0:
                continue
            k = i + j
            fk[k] += c
            xk[k] += (d - 2 * i) * c
            yk[k] += (e - 2 * j) * c
    w0 = [(n - 2 * k) * fk[k] for k in range(n + 1)]
    w1 = [Fraction(e, 2) * xk[k] - Fraction(d, 2) * yk[k] for k in range(n + 1)]
    return DiagonalDerivatives(
        BinaryForm(n, fk), BinaryForm(n, xk), BinaryForm(n, yk), BinaryForm(n, w0), BinaryForm(n, w1)
    )


def multiplier_form(f: Correspondence) -> CovariantForm:
    """The fixed point multiplier form res_z(F, diag_x*dx + diag_y*dy).

    Requires good position (a00 != 0 and a_de != 0) and a constant GCD of
    (F, diag_x, diag_y); conjugating by a generic Moebius map restores both,
    since multipliers are conjugation invariants.  The result is nonzero and
    well-defined up to scalars; its coefficients divided by a00*a_de are
    conjugation-invariant functions of the coefficient matrix.
    """
    d, e = f.deg_x, f.deg_y
    a00 = f.form.coeffs[0][0]
    ade = f.form.coeffs[d][e]
    if a00 == 0 or ade == 0:
        raise BadPosition(
            "fixed point at 0 or infinity (a00 or a_de vanishes); conjugate by a generic "
            "Moebius map first"
        )
    dd = diagonal_derivative_forms(f)
    shared = binary_gcd([dd.diag, dd.diag_x, dd.diag_y])
    if shared.is_zero() or shared.degree >= 1:
        raise IndeterminateMultiplier(
            "a fixed point is critical in both directions; the multiplier map is undefined"
        )
    return covariant_resultant(dd.diag, dd.diag_x, dd.diag_y)


def nth_multiplier_form(f: Correspondence, n: int) -> CovariantForm:
    """Multiplier form of the n-th iterate; degree d^n + e^n in the covariables."""
    return multiplier_form(iterate(f, n))


def sigma_spectrum(r: CovariantForm) -> MultiplierSpectrum:
    """Normalized spectrum sigma[i] = (-1)^i * r[dx^i dy^(n-i)] / r[dy^n]."""
    lead = r.coeffs[0]
    if lead == 0:
        raise IndeterminateMultiplier(
            "dy^n coefficient vanishes: a multiplier is infinite, the spectrum is indeterminate"
        )
    sigma = tuple((-1) ** i * c / lead for i, c in enumerate(r.coeffs))
    return MultiplierSpectrum(r.degree, sigma)


def rational_fixed_point_oracle(f: Correspondence) -> MultiplierSpectrum:
    """Brute-force spectrum from the rational fixed points themselves.

    Requires the fixed point form to split into distinct rational roots, none
    at 0 or infinity, with diag_y nonzero at each; the multiplier at p is
    then -diag_x(p)/diag_y(p) and sigma collects its elementary symmetric
    functions.  This is the independent check of the resultant route.
    """
    dd = diagonal_derivative_forms(f)
    n = dd.diag.degree
    if dd.diag.coeffs[0] == 0 or dd.diag.coeffs[n] == 0:
        raise ValueError("fixed point at 0 or infinity")
    roots = rational_roots(dd.diag)
    if sum(mult for _, mult in roots) != n:
        raise ValueError("fixed point form does not split over the rationals")
    if any(mult > 1 for _, mult in roots):
        raise ValueError("fixed points are not distinct")
    multipliers = []
    for (p0, p1), _ in roots:
        dy = dd.diag_y.evaluate(p0, p1)
        if dy == 0:
            raise ValueError(f"y-critical fixed point at [{p0}:{p1}]")
        multipliers.append(-dd.diag_x.evaluate(p0, p1) / dy)
    sigma = [Fraction(1)]
    for m in multipliers:
        sigma = [Fraction(1)] + [sigma[k] + m * sigma[k - 1] for k in range(1, len(sigma))] + [
            m * sigma[-1]
        ]
        sigma[0] = Fraction(1)
    return MultiplierSpectrum(n, tuple(sigma), defined_at="rational-fixed-points")


def dz_coordinates(r: CovariantForm, deg_x: int, deg_y: int) -> tuple[Fraction, ...]:
    """Coefficients of r in the (dz0, dz1) basis attached to (deg_x, deg_y).

    Entry k multiplies dz0^(n-k) * dz1^k; the rewrite uses the exact inverse
    substitution dx = dz0 + (e'/2)*dz1, dy = dz0 - (d'/2)*dz1 and requires
    d' + e' to equal the degree of r.
    """
    n = r.degree
    if deg_x + deg_y != n or n < 1:
        raise ValueError("basis bidegree must sum to the form degree")
    # View r as a binary form in (z0, z1) = (dy, dx); the index conventions agree.
    as_binary = BinaryForm(n, r.coeffs)
    m = ((Fraction(1), Fraction(-deg_x, 2)), (Fraction(1), Fraction(deg_y, 2)))
    return as_binary.substitute_linear(m).coeffs


def dz_to_covariant(coords: Sequence, deg_x: int, deg_y: int) -> CovariantForm:
    """Inverse of dz_coordinates: rebuild the (dx, dy) form from dz coefficients."""
    n = deg_x + deg_y
    cs = [_frac(c) for c in coords]
    if len(cs) != n + 1:
        raise ValueError("coordinate vector length must be d' + e' + 1")
    s = Fraction(1, n)
    as_binary = BinaryForm(n, cs)
    m = ((deg_y * s, deg_x * s), (-2 * s, 2 * s))
    return CovariantForm(n, as_binary.substitute_linear(m).coeffs)


def hyperplane_residual(f: Correspondence) -> Fraction:
    """Coefficient of dz0^(d+e-1) * dz1 of the multiplier form; always zero."""
    return dz_coordinates(multiplier_form(f), f.deg_x, f.deg_y)[1]


def index_residual(spectrum: MultiplierSpectrum) -> Fraction:
    """sum (-1)^i (d - i) sigma_i over i = 0..d+1, for the map degree d = n - 1.

    Vanishes exactly on spectra of genuine degree-d self-maps; a nonzero
    value certifies a non-realizable spectrum.
    """
    d = spectrum.n - 1
    return sum(
        ((-1) ** i * (d - i) * s for i, s in enumerate(spectrum.sigma)), Fraction(0)
    )


def woods_hole_resultant(f: Sequence, g: Sequence) -> tuple[Fraction, ...]:
    """res_x(f, f' + t*g) as an ascending polynomial in t.

    f and g are ascending univariate coefficient vectors; requires the actual
    degree of f to be its declared degree, deg f >= 3 and deg f >= deg g + 2.
    The second argument carries declared degree deg f - 1.
    """
    fc = [Fraction(c) for c in f]
    gc = [Fraction(c) for c in g]
    df = len(fc) - 1
    if df < 3 or fc[-1] == 0:
        raise ValueError("f must have actual degree >= 3")
    if len(gc) - 1 > df - 2:
        raise ValueError("g must have degree at most deg f - 2")
    deriv = [(k + 1) * fc[k + 1] for k in range(df)]
    gc += [Fraction(0)] * (df - len(gc))
    den_f = math.lcm(*(c.denominator for c in fc))
    fi = [int(c * den_f) for c in fc]
    den_g = math.lcm(*(c.denominator for c in deriv + gc))
    rows_f: list[IntPoly] = [{(0,): c} if c else {} for c in fi]
    rows_g: list[IntPoly] = []
    for dk, gk in zip(deriv, gc):
        entry: IntPoly = {}
        di, gi = int(dk * den_g), int(gk * den_g)
        if di:
            entry[(0,)] = di
        if gi:
            entry[(1,)] = gi
        rows_g.append(entry)
    det = bareiss_det_poly(sylvester_rows(rows_f, rows_g, {}))
    scale = Fraction(1, den_f ** (df - 1) * den_g**df)
    return tuple(det.get((k,), 0) * scale for k in range(df + 1))


def woods_hole_residual(f: Sequence, g: Sequence) -> Fraction:
    """The t-linear coefficient of res_x(f, f' + t*g); always zero."""
    return woods_hole_resultant(f, g)[1]


def rho_compatibility_check(f: Correspondence, scale=(1, 1)) -> bool:
    """Whether reducing to bidegree (1, d+e-1) commutes with the multiplier map.

    The image correspondence keeps f's first two Cayley powers up to the
    scale pair (c0, c1); its multiplier form, read in the (1, d+e-1) basis,
    must agree projectively with f's multiplier form read in the (d, e)
    basis after rescaling coordinate k by c0^(n-k) * c1^k.
    """
    d, e = f.deg_x, f.deg_y
    n = d + e
    c0, c1 = (_frac(c) for c in scale)
    w0 = cayley_omega(f.form, 0)
    w1 = cayley_omega(f.form, 1)
    image = Correspondence(rho_embed(w0, w1, 1, n - 1, (c0, c1)))
    r_image = dz_coordinates(multiplier_form(image), 1, n - 1)
    r_base = dz_coordinates(multiplier_form(f), d, e)
    rescaled = tuple(c0 ** (n - k) * c1**k * r_base[k] for k in range(n + 1))
    return projectively_equal(r_image, rescaled)

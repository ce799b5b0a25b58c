"""Composition, iteration, graphs and conjugation of correspondences.

A correspondence is a nonzero bihomogeneous form considered up to a nonzero
scalar; its curve in P^1 x P^1 generalizes the graph of a self-map.
Composition eliminates the middle point through a resultant in the shared
variable pair and multiplies bidegrees; conjugation substitutes a Moebius
change of coordinate simultaneously into both variable pairs.

Moebius letter convention: the map (a, b, c, d) sends the affine coordinate
z = v1/v0 to (a*z + b)/(c*z + d) and acts on homogeneous coordinates as
[v0 : v1] -> [d*v0 + c*v1 : b*v0 + a*v1].  Conjugation composes as a right
action in matrix terms: conjugate(f, g * h) == conjugate(conjugate(f, g), h)
where (g * h) is the matrix product; this order is pinned by the action-law
test in the suite.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .forms import BiForm, BinaryForm, _frac, binary_gcd, rational_roots
from .resultant import IntPoly, bareiss_det_poly, sylvester_rows


class DegenerateComposition(ValueError):
    """Raised when the composite eliminant vanishes identically.

    This happens exactly when the left factor carries a linear factor in its
    y-pair matching a linear factor of the right factor's x-pair; when that
    factor is visible over the rationals it is reported in the message and in
    the `shared_factor` attribute.  `step` is set by `iterate`.
    """

    def __init__(self, message: str, shared_factor: BinaryForm | None = None):
        super().__init__(message)
        self.shared_factor = shared_factor
        self.step: int | None = None


class MoebiusMap:
    """Invertible fractional-linear self-map of the projective line."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = (_frac(v) for v in (a, b, c, d))
        if self.determinant() == 0:
            raise ValueError("Moebius map needs nonzero determinant a*d - b*c")

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(1, 0, 0, 1)

    def determinant(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def entries(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def inverse(self) -> "MoebiusMap":
        # Adjugate; projectively the inverse map.
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def __mul__(self, other: "MoebiusMap") -> "MoebiusMap":
        """Matrix product; (g * h) acts as z -> g(h(z))."""
        return MoebiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def coordinate_matrix(self):
        """The 2x2 matrix acting on homogeneous coordinate columns (v0, v1)."""
        return ((self.d, self.c), (self.b, self.a))

    def apply(self, p0, p1) -> tuple[Fraction, Fraction]:
        """Image of the projective point [p0 : p1]."""
        p0, p1 = _frac(p0), _frac(p1)
        return (self.d * p0 + self.c * p1, self.b * p0 + self.a * p1)

    def __eq__(self, other) -> bool:
        return isinstance(other, MoebiusMap) and self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def __repr__(self):
        return f"MoebiusMap({self.a}, {self.b}, {self.c}, {self.d})"


class Correspondence:
    """A nonzero bihomogeneous form up to scalars; the dynamical object."""

    __slots__ = ("form",)

    def __init__(self, form: BiForm):
        if form.is_zero():
            raise ValueError("a correspondence needs a nonzero defining form")
        self.form = form

    @classmethod
    def from_matrix(cls, deg_x: int, deg_y: int, rows) -> "Correspondence":
        return cls(BiForm(deg_x, deg_y, rows))

    @property
    def deg_x(self) -> int:
        return self.form.deg_x

    @property
    def deg_y(self) -> int:
        return self.form.deg_y

    @property
    def bidegree(self) -> tuple[int, int]:
        return (self.form.deg_x, self.form.deg_y)

    def projectively_equal(self, other: "Correspondence") -> bool:
        return self.form.projectively_equal(other.form)

    def __repr__(self):
        return f"Correspondence({self.form!r})"


def moebius_graph(g: MoebiusMap) -> Correspondence:
    """The bidegree (1, 1) graph form (b*x0 + a*x1)*y0 - (d*x0 + c*x1)*y1."""
    return Correspondence.from_matrix(1, 1, [[g.b, -g.d], [g.a, -g.c]])


def _shared_linear_obstruction(f: BiForm, g: BiForm) -> BinaryForm | None:
    """Common factor certificate for a vanishing composite, when rational.

    The composite vanishes exactly when f has a linear factor in its y-pair
    whose coefficient vector also cuts a linear factor of g in its x-pair, so
    the gcd of f's coefficient rows (as y-forms) against g's coefficient
    columns (as x-forms) is nonconstant; that gcd is returned.
    """
    y_content = binary_gcd([BinaryForm(f.deg_y, row) for row in f.coeffs])
    cols = [[g.coeffs[i][j] for i in range(g.deg_x + 1)] for j in range(g.deg_y + 1)]
    x_content = binary_gcd([BinaryForm(g.deg_x, col) for col in cols])
    shared = binary_gcd([y_content, x_content])
    if shared.is_zero() or shared.degree >= 1:
        return shared
    return None


def compose(f: Correspondence, g: Correspondence) -> Correspondence:
    """Composite correspondence of bidegree (d*d', e*e').

    The defining form is the resultant, in the shared middle pair (z0, z1),
    of f's form read in (x, z) against g's form read in (z, y); f contributes
    z-degree e and g contributes z-degree d'.
    """
    d, e = f.deg_x, f.deg_y
    dp, ep = g.deg_x, g.deg_y
    df = math.lcm(*(c.denominator for row in f.form.coeffs for c in row))
    dg = math.lcm(*(c.denominator for row in g.form.coeffs for c in row))
    fz: list[IntPoly] = []
    for j in range(e + 1):
        entry: IntPoly = {}
        for i in range(d + 1):
            v = int(f.form.coeffs[i][j] * df)
            if v:
                entry[(d - i, i, 0, 0)] = v
        fz.append(entry)
    gz: list[IntPoly] = []
    for k in range(dp + 1):
        entry = {}
        for l in range(ep + 1):
            v = int(g.form.coeffs[k][l] * dg)
            if v:
                entry[(0, 0, ep - l, l)] = v
        gz.append(entry)
    det = bareiss_det_poly(sylvester_rows(fz, gz, {}))
    if not det:
        shared = _shared_linear_obstruction(f.form, g.form)
        detail = ""
        if shared is not None and not shared.is_zero():
            pts = [pt for pt, _ in rational_roots(shared)]
            if pts:
                p0, p1 = pts[0]
                detail = (
                    f": f carries the factor {p1}*y0 - {p0}*y1"
                    f" and g the factor {p1}*x0 - {p0}*x1"
                )
            else:
                detail = f": shared irrational linear factor, gcd certificate {shared!r}"
        raise DegenerateComposition("composition degenerates to the zero form" + detail, shared)
    scale = Fraction(1, df**dp * dg**e)
    nd, ne = d * dp, e * ep
    rows = [[Fraction(0)] * (ne + 1) for _ in range(nd + 1)]
    for key, val in det.items():
        xd, i, yd, j = key
        assert xd == nd - i and yd == ne - j, "composite must be bihomogeneous"
        rows[i][j] = val * scale
    return Correspondence.from_matrix(nd, ne, rows)


def iterate(f: Correspondence, n: int) -> Correspondence:
    """Left fold of composition; fold order is projectively irrelevant."""
    if n < 1:
        raise ValueError("iteration count must be positive")
    acc = f
    for step in range(1, n):
        try:
            acc = compose(acc, f)
        except DegenerateComposition as exc:
            exc.step = step
            raise
    return acc


def conjugate(f: Correspondence, g: MoebiusMap) -> Correspondence:
    """Coordinate change of the correspondence by the Moebius map g.

    Substitutes v0 -> d*v0 + c*v1, v1 -> b*v0 + a*v1 into both variable
    pairs; the bidegree is preserved and fixed points move by g^{-1}.
    """
    n = g.coordinate_matrix()
    return Correspondence(f.form.substitute_pair(n, n))

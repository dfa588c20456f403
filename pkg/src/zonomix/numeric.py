"""Exact rational scalars, 3-vectors, and small fixed-size determinants.

Every scalar in this package is a ``fractions.Fraction`` (aliased ``Rat``),
which keeps canonical form (positive denominator, gcd 1) after every
operation, so equality tests are exact and unambiguous.  A floating-point
lane exists only for throughput experiments; nothing that verifies an
inequality ever touches it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import lcm
from typing import Iterable, NamedTuple, Sequence

Rat = Fraction

_RATIONAL_RE = re.compile(r"[+-]?[0-9]+(?:/[0-9]+)?")


def parse_rational(text: str) -> Fraction:
    """Parse a rational literal: optional sign, integer, optional '/' integer."""
    s = text.strip()
    if not _RATIONAL_RE.fullmatch(s):
        raise ValueError(f"invalid rational literal: {text!r}")
    if "/" in s:
        num, _, den = s.partition("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in rational literal: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def render_rational(q: Fraction) -> str:
    """Canonical form: "p/q" with q > 0 and gcd(p, q) = 1, integers without "/"."""
    return str(q)


def approx_str(q: Fraction, digits: int = 12) -> str:
    """Decimal annotation for human-readable output; never parsed back."""
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(q.numerator) / Decimal(q.denominator)
    return str(d)


class Vec3(NamedTuple):
    x: Fraction
    y: Fraction
    z: Fraction


def vec3(x, y, z) -> Vec3:
    """Build a Vec3, coercing ints and strings to exact rationals."""
    return Vec3(Fraction(x), Fraction(y), Fraction(z))


ZERO3 = vec3(0, 0, 0)
E1 = vec3(1, 0, 0)
E2 = vec3(0, 1, 0)
E3 = vec3(0, 0, 1)


def vadd(a: Vec3, b: Vec3) -> Vec3:
    return Vec3(a.x + b.x, a.y + b.y, a.z + b.z)


def vsub(a: Vec3, b: Vec3) -> Vec3:
    return Vec3(a.x - b.x, a.y - b.y, a.z - b.z)


def vneg(a: Vec3) -> Vec3:
    return Vec3(-a.x, -a.y, -a.z)


def vscale(q: Fraction, a: Vec3) -> Vec3:
    return Vec3(q * a.x, q * a.y, q * a.z)


def cross(a: Vec3, b: Vec3) -> Vec3:
    return Vec3(a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x)


def dot(a: Vec3, b: Vec3) -> Fraction:
    return a.x * b.x + a.y * b.y + a.z * b.z


def det2(a, b, c, d):
    """Determinant of the 2x2 matrix (a b; c d)."""
    return a * d - b * c


def det3t(a, b, c):
    """Determinant of the 3x3 matrix with columns a, b, c (any numeric 3-tuples).

    Direct cofactor expansion along the first column; no pivoting is ever
    needed at this size.
    """
    return (a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def det3(a: Vec3, b: Vec3, c: Vec3) -> Fraction:
    """Exact determinant of the 3x3 matrix with columns a, b, c."""
    return det3t(a, b, c)


@dataclass(frozen=True)
class Mat3xM:
    """A 3 x m collection of column vectors; column order is significant."""

    columns: tuple[Vec3, ...]

    @classmethod
    def from_columns(cls, cols: Iterable) -> "Mat3xM":
        return cls(tuple(c if isinstance(c, Vec3) else vec3(*c) for c in cols))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Mat3xM":
        if len(rows) != 3:
            raise ValueError(f"expected 3 rows, got {len(rows)}")
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError("rows have inconsistent lengths")
        m = widths.pop() if widths else 0
        return cls(tuple(vec3(rows[0][j], rows[1][j], rows[2][j]) for j in range(m)))

    @property
    def m(self) -> int:
        return len(self.columns)

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return (tuple(c.x for c in self.columns),
                tuple(c.y for c in self.columns),
                tuple(c.z for c in self.columns))


def minor3(mat: Mat3xM, indices: Sequence[int]) -> Fraction:
    """3x3 minor of the columns selected by three distinct 1-based indices.

    The determinant is taken over the columns in increasing index order.
    """
    if len(indices) != 3 or len(set(indices)) != 3:
        raise ValueError(f"need 3 distinct column indices, got {tuple(indices)}")
    i, j, k = sorted(indices)
    if i < 1 or k > mat.m:
        raise ValueError(f"column index out of range 1..{mat.m}: {tuple(indices)}")
    cols = mat.columns
    return det3(cols[i - 1], cols[j - 1], cols[k - 1])


def mat_vec(mat: Mat3xM, v: Vec3) -> Vec3:
    """Apply the 3x3 matrix (columns c1, c2, c3) to v."""
    if mat.m != 3:
        raise ValueError(f"need a square 3x3 matrix, got 3x{mat.m}")
    c1, c2, c3 = mat.columns
    return vadd(vadd(vscale(v.x, c1), vscale(v.y, c2)), vscale(v.z, c3))


def mat_det(mat: Mat3xM) -> Fraction:
    if mat.m != 3:
        raise ValueError(f"need a square 3x3 matrix, got 3x{mat.m}")
    return det3(*mat.columns)


# ---------------------------------------------------------------------------
# Integer scaling and absolute-determinant summation kernels.
#
# Clearing denominators once and summing plain-int determinants is much
# faster than Fraction arithmetic in the inner loops, and stays exact: all
# results are divided back by the scale factors as a single Fraction.

def int_scaled(vectors: Sequence[Vec3]) -> tuple[list[tuple[int, int, int]], int]:
    """Scale vectors by the lcm of all coordinate denominators.

    Returns integer coordinate triples and the scale factor L, so that the
    returned tuples are exactly L times the inputs.
    """
    scale = 1
    for v in vectors:
        scale = lcm(scale, v.x.denominator, v.y.denominator, v.z.denominator)
    out = [(int(v.x * scale), int(v.y * scale), int(v.z * scale)) for v in vectors]
    return out, scale


def sum_abs_det3_triples(ga, gb, gc):
    """Sum of |det(a, b, c)| over all (a, b, c) in ga x gb x gc."""
    total = 0
    for bx, by, bz in gb:
        for cx, cy, cz in gc:
            px = by * cz - bz * cy
            py = bz * cx - bx * cz
            pz = bx * cy - by * cx
            for ax, ay, az in ga:
                d = ax * px + ay * py + az * pz
                total += d if d >= 0 else -d
    return total


def sum_abs_det3_pairs(ga, gb):
    """Sum of |det(a_i, a_j, b)| over pairs i < j from ga and all b in gb."""
    total = 0
    n = len(ga)
    for i in range(n):
        ax, ay, az = ga[i]
        for j in range(i + 1, n):
            bx, by, bz = ga[j]
            px = ay * bz - az * by
            py = az * bx - ax * bz
            pz = ax * by - ay * bx
            for cx, cy, cz in gb:
                d = cx * px + cy * py + cz * pz
                total += d if d >= 0 else -d
    return total


def sum_abs_det3_combos(g):
    """Sum of |det(a_i, a_j, a_k)| over index triples i < j < k."""
    total = 0
    n = len(g)
    for i in range(n):
        ax, ay, az = g[i]
        for j in range(i + 1, n):
            bx, by, bz = g[j]
            px = ay * bz - az * by
            py = az * bx - ax * bz
            pz = ax * by - ay * bx
            for k in range(j + 1, n):
                cx, cy, cz = g[k]
                d = cx * px + cy * py + cz * pz
                total += d if d >= 0 else -d
    return total


def sum_abs_det2_pairs(us, vs):
    """Sum of |u_i v_j - u_j v_i| over index pairs i < j."""
    total = 0
    n = len(us)
    for i in range(n):
        ui, vi = us[i], vs[i]
        for j in range(i + 1, n):
            d = ui * vs[j] - us[j] * vi
            total += d if d >= 0 else -d
    return total


# ---------------------------------------------------------------------------
# Matrix text format: first line "matrix 3 n", then 3 rows of n rational
# literals.  "#" starts a comment line; blank lines are ignored.

def _data_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append(line)
    return out


def parse_matrix(text: str) -> Mat3xM:
    lines = _data_lines(text)
    if not lines:
        raise ValueError("empty matrix file")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "matrix" or header[1] != "3":
        raise ValueError(f"expected header 'matrix 3 n', got {lines[0]!r}")
    try:
        n = int(header[2])
    except ValueError:
        raise ValueError(f"invalid column count in header: {lines[0]!r}") from None
    if n < 0:
        raise ValueError(f"negative column count in header: {lines[0]!r}")
    body = lines[1:]
    if n == 0:
        if body:
            raise ValueError("matrix with 0 columns must have no rows")
        return Mat3xM(())
    if len(body) != 3:
        raise ValueError(f"expected 3 matrix rows, got {len(body)}")
    rows = []
    for line in body:
        entries = line.split()
        if len(entries) != n:
            raise ValueError(f"expected {n} entries per row, got {len(entries)}: {line!r}")
        rows.append([parse_rational(e) for e in entries])
    return Mat3xM.from_rows(rows)


def render_matrix(mat: Mat3xM) -> str:
    lines = [f"matrix 3 {mat.m}"]
    if mat.m > 0:
        for row in mat.rows():
            lines.append(" ".join(render_rational(q) for q in row))
    return "\n".join(lines) + "\n"

"""Zonotopes in R^3 and their exact mixed volumes.

A zonotope is a Minkowski sum of segments.  We store only the generator
vectors a_i, each encoding the segment [0, a_i]: mixed volumes are invariant
under translation, so a base point would carry no information.  All mixed
volumes reduce, by multilinearity, to sums of |det| over generator triples,
with V([0,a],[0,b],[0,c]) = |det(a,b,c)| / 6 as the atomic case.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .numeric import (
    Mat3xM,
    Vec3,
    ZERO3,
    cross,
    int_scaled,
    mat_vec,
    parse_rational,
    render_rational,
    sum_abs_det3_combos,
    sum_abs_det3_pairs,
    sum_abs_det3_triples,
    vec3,
    vneg,
    vscale,
)


@dataclass(frozen=True)
class Zonotope3:
    """Sum of the segments [0, a_i] over the generator list, up to translation.

    Zero generators are permitted (they are points and contribute nothing);
    `canonicalize` removes them.  Generator order never affects any volume.
    """

    generators: tuple[Vec3, ...]

    @classmethod
    def from_generators(cls, gens: Iterable) -> "Zonotope3":
        return cls(tuple(g if isinstance(g, Vec3) else vec3(*g) for g in gens))


def minkowski_sum(a: Zonotope3, b: Zonotope3) -> Zonotope3:
    """Minkowski sum of two zonotopes: concatenation of generator lists."""
    return Zonotope3(a.generators + b.generators)


def scale_zonotope(q, zono: Zonotope3) -> Zonotope3:
    """Scale all generators by q.  Mixed volumes scale by |q| per slot."""
    q = Fraction(q)
    return Zonotope3(tuple(vscale(q, g) for g in zono.generators))


def canonicalize(zono: Zonotope3) -> Zonotope3:
    """Drop zero generators and merge parallel ones.

    Parallel segments sum to a translate of a single longer segment, so each
    parallel class collapses to one generator carrying the total length.  The
    class direction is the sign-normalised representative (lexicographically
    larger of +/-a), kept rational: no norms appear, the merged generator is
    (sum of |c_i|) * d where a_i = c_i * d.  Mixed volumes against any other
    bodies are unchanged.
    """
    merged: list[tuple[Vec3, Fraction]] = []
    for g in zono.generators:
        if g == ZERO3:
            continue
        for idx, (rep, total) in enumerate(merged):
            if cross(rep, g) == ZERO3:
                coeff = next(gc / rc for gc, rc in zip(g, rep) if rc != 0)
                merged[idx] = (rep, total + abs(coeff))
                break
        else:
            rep = g if g >= vneg(g) else vneg(g)
            merged.append((rep, abs(next(gc / rc for gc, rc in zip(g, rep) if rc != 0))))
    return Zonotope3(tuple(vscale(total, rep) for rep, total in merged))


def mixed_volume(a: Zonotope3, b: Zonotope3, c: Zonotope3) -> Fraction:
    """V(A, B, C) = (1/6) sum of |det(a_i, b_j, c_k)| over all generator triples.

    Symmetric in its arguments, Minkowski-linear in each, and nonnegative.
    """
    ga, la = int_scaled(a.generators)
    gb, lb = int_scaled(b.generators)
    gc, lc = int_scaled(c.generators)
    return Fraction(sum_abs_det3_triples(ga, gb, gc), 6 * la * lb * lc)


def mixed_volume_repeated(a: Zonotope3, b: Zonotope3) -> Fraction:
    """V(A, A, B), evaluated over generator pairs of A rather than all triples."""
    ga, la = int_scaled(a.generators)
    gb, lb = int_scaled(b.generators)
    return Fraction(sum_abs_det3_pairs(ga, gb), 3 * la * la * lb)


def volume(a: Zonotope3) -> Fraction:
    """Volume: sum of |det(a_i, a_j, a_k)| over generator triples i < j < k.

    Equals mixed_volume(A, A, A); zero whenever fewer than three
    independent generators exist.
    """
    ga, la = int_scaled(a.generators)
    return Fraction(sum_abs_det3_combos(ga), la ** 3)


def mv_zz_segment(a: Zonotope3, u: Vec3) -> Fraction:
    """V(A, A, [0,u]) = (1/3) sum over pairs i < j of |det(a_i, a_j, u)|."""
    ga, la = int_scaled(a.generators)
    gu, lu = int_scaled([u])
    return Fraction(sum_abs_det3_pairs(ga, gu), 3 * la * la * lu)


def apply_linear(zono: Zonotope3, mat: Mat3xM) -> Zonotope3:
    """Image of the zonotope under a linear map given by its 3 columns."""
    return Zonotope3(tuple(mat_vec(mat, g) for g in zono.generators))


# ---------------------------------------------------------------------------
# Floating-point lane: throughput experiments only.  Verification never uses
# these (rounding would silently weaken exact inequalities).

def _float_gens(gens: tuple[Vec3, ...]) -> list[tuple[float, float, float]]:
    return [(float(g.x), float(g.y), float(g.z)) for g in gens]


def mixed_volume_float(a: Zonotope3, b: Zonotope3, c: Zonotope3) -> float:
    return sum_abs_det3_triples(_float_gens(a.generators), _float_gens(b.generators),
                                _float_gens(c.generators)) / 6.0


def volume_float(a: Zonotope3) -> float:
    return float(sum_abs_det3_combos(_float_gens(a.generators)))


# ---------------------------------------------------------------------------
# Zonotope text format: first non-comment line "zonotope3", then one
# generator per line as three whitespace-separated rational literals.
# "#" starts a comment line; blank lines are ignored.

def parse_zonotope(text: str) -> Zonotope3:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    if not lines:
        raise ValueError("empty zonotope file")
    if lines[0] != "zonotope3":
        raise ValueError(f"expected header 'zonotope3', got {lines[0]!r}")
    gens = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"expected 3 coordinates per generator, got {line!r}")
        gens.append(Vec3(*(parse_rational(p) for p in parts)))
    return Zonotope3(tuple(gens))


def render_zonotope(zono: Zonotope3) -> str:
    lines = ["zonotope3"]
    for g in zono.generators:
        lines.append(" ".join(render_rational(q) for q in g))
    return "\n".join(lines) + "\n"

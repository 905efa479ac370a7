"""Classification of grade-n multivector fields as n-ary Poisson structures.

A grade-n field induces an n-ary bracket on functions; the bracket
satisfies the generalized Jacobi identity iff

* n is even and the differential defect vanishes identically (equivalent
  to the vanishing of the field's self-bracket), or
* n is odd and, in addition to the differential defect vanishing, the
  algebraic condition ``(i(alpha) P) ^ (i(beta) P) = 0`` holds for all
  covectors.

Both conditions are decided exactly: the algebraic one reduces to basis
covector pairs by bilinearity, the differential one is a polynomial
identity.  The module also decides the algebraic Nambu condition (three
independent routes that must agree: the component-form quadratic
identities, their basis-pair polarization, and pointwise decomposability),
builds the semi-decomposable structures of constant rank 2n, and samples
involutivity of the image distribution.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exterior import iter_blades, shuffle_sign
from .fields import (
    MultivectorField,
    coordinate_vector_field,
    differential_defect,
    lie_bracket,
)
from .grassmann import sharp_profile
from .linalg import Subspace
from .polynomial import Polynomial

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class AlgebraicConditionReport:
    holds: bool
    witness: tuple[int, int] | None = None


@dataclass(frozen=True)
class PoissonVerdict:
    """Full classification of one multivector field."""

    parity: str
    algebraic_holds: bool
    algebraic_witness: tuple[int, int] | None
    differential_holds: bool
    is_poisson: bool
    rank_at_samples: tuple[tuple[Point, int], ...]
    pointwise_decomposable: bool
    nambu_algebraic: bool


def algebraic_condition(field: MultivectorField) -> AlgebraicConditionReport:
    """Decide ``(i(alpha) P) ^ (i(beta) P) = 0`` for all covectors.

    Bilinearity reduces the quantifier to basis pairs ``a <= b`` (the
    expression is symmetric in the pair for odd grade and antisymmetric
    for even grade, so ordered pairs cover everything).  On failure the
    lexicographically first failing pair is reported.  For even grade the
    classifier ignores this condition; it is still evaluated and reported.
    """
    m, n = field.dim, field.grade
    if n < 3:
        raise ValueError("needs grade at least 3")
    contractions = {a: field.contract_basis(a) for a in range(1, m + 1)}
    for a in range(1, m + 1):
        fa = contractions[a]
        if fa.is_zero():
            continue
        for b in range(a, m + 1):
            if not fa.wedge(contractions[b]).is_zero():
                return AlgebraicConditionReport(False, (a, b))
    return AlgebraicConditionReport(True, None)


def differential_condition(field: MultivectorField) -> bool:
    """Whether the differential defect vanishes identically."""
    return differential_defect(field).is_zero()


def pointwise_decomposable(field: MultivectorField) -> bool:
    """Whether the field value is decomposable at every point.

    All contraction-wedge defects over basis (n-1)-forms are required to
    vanish as polynomial identities in the coordinates.
    """
    m, n = field.dim, field.grade
    for blade in iter_blades(m, n - 1):
        contracted = field.contract_blade(blade)
        if contracted.is_zero():
            continue
        if not contracted.wedge(field).is_zero():
            return False
    return True


def _nambu_component_route(field: MultivectorField) -> bool:
    # quadratic component identities; antisymmetry in the two index blocks
    # restricts the scan to increasing tuples, symmetry to ordered (u, v)
    m, n = field.dim, field.grade
    comp = field.component
    b_tuples = list(combinations(range(1, m + 1), n))
    firsts: dict[tuple[int, tuple[int, ...]], list[tuple[int, Polynomial]]] = {}
    for u in range(1, m + 1):
        for b in b_tuples:
            entries = []
            for k in range(n):
                c = comp(b[:k] + (u,) + b[k + 1:])
                if c:
                    entries.append((k, c))
            if entries:
                firsts[(u, b)] = entries
    a_tuples = list(combinations(range(1, m + 1), n - 2))
    zero = Polynomial.zero(m)
    for u in range(1, m + 1):
        for v in range(u, m + 1):
            for b in b_tuples:
                fu = firsts.get((u, b))
                fv = firsts.get((v, b))
                if not fu and not fv:
                    continue
                for a in a_tuples:
                    total = zero
                    if fu:
                        for k, c in fu:
                            other = comp((v,) + a + (b[k],))
                            if other:
                                total = total + c * other
                    if fv:
                        for k, c in fv:
                            other = comp((u,) + a + (b[k],))
                            if other:
                                total = total + c * other
                    if total:
                        return False
    return True


def _nambu_polarized_route(field: MultivectorField) -> bool:
    # polarized wedge identities over basis covector pairs and basis
    # (n-2)-forms; polarization is lossless in characteristic zero
    m, n = field.dim, field.grade
    contractions = {a: field.contract_basis(a) for a in range(1, m + 1)}
    phis = list(iter_blades(m, n - 2))
    deep: dict[int, list[MultivectorField]] = {
        a: [contractions[a].contract_blade(phi) for phi in phis] for a in range(1, m + 1)
    }
    for a in range(1, m + 1):
        fa = contractions[a]
        for b in range(a, m + 1):
            fb = contractions[b]
            for i in range(len(phis)):
                term = fa.wedge(deep[b][i]) + fb.wedge(deep[a][i])
                if not term.is_zero():
                    return False
    return True


def is_nambu_algebraic(field: MultivectorField) -> bool:
    """Decide the algebraic Nambu condition, three independent ways.

    The component-form quadratic identities, their basis-pair polarization,
    and pointwise decomposability are equivalent; all three are computed
    and must agree.  True exactly when the field value is decomposable at
    every point.
    """
    if field.grade < 3:
        raise ValueError("needs grade at least 3")
    routes = (
        pointwise_decomposable(field),
        _nambu_polarized_route(field),
        _nambu_component_route(field),
    )
    if len(set(routes)) != 1:
        raise AssertionError(f"independent routes disagree: {routes}")
    return routes[0]


def default_sample_points(dim: int, seed: int = 0, extra: int = 8) -> list[Point]:
    """Origin, the coordinate unit points, and seeded random rational points."""
    points: list[Point] = [tuple(Fraction(0) for _ in range(dim))]
    for u in range(dim):
        points.append(tuple(Fraction(1 if i == u else 0) for i in range(dim)))
    rng = random.Random(seed)
    for _ in range(extra):
        points.append(tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(dim)))
    return points


def classify(
    field: MultivectorField,
    sample_points: Sequence[Point] | None = None,
    seed: int = 0,
) -> PoissonVerdict:
    """Classify a grade-n field (n >= 3) against the Poisson conditions.

    The verdict applies the parity rule exactly: even grade needs only the
    differential condition, odd grade needs both.  Ranks are reported at
    the supplied or default sample points; decomposability and the Nambu
    condition are polynomial identities, independent of the samples.
    """
    if field.grade < 3:
        raise ValueError("classification needs grade at least 3")
    even = field.grade % 2 == 0
    algebraic = algebraic_condition(field)
    differential = differential_condition(field)
    points = list(sample_points) if sample_points is not None else default_sample_points(field.dim, seed)
    ranks = tuple(
        (tuple(Fraction(c) for c in pt), sharp_profile(field.evaluate(pt)).rank)
        for pt in points
    )
    return PoissonVerdict(
        parity="even" if even else "odd",
        algebraic_holds=algebraic.holds,
        algebraic_witness=algebraic.witness,
        differential_holds=differential,
        is_poisson=differential if even else (algebraic.holds and differential),
        rank_at_samples=ranks,
        pointwise_decomposable=pointwise_decomposable(field),
        nambu_algebraic=is_nambu_algebraic(field),
    )


# ---------------------------------------------------------------------------
# constructors

def build_semidecomposable(
    v_fields: Sequence[MultivectorField],
    w_fields: Sequence[MultivectorField],
    h: int,
) -> MultivectorField:
    """Alternated mixed product of two frames of n vector fields each.

    Sums, over all h-subsets A of the frame indices, the shuffle-signed
    wedge of the V-fields indexed by A with the W-fields indexed by the
    complement; the usual 1/(h!(n-h)!) normalization is absorbed exactly
    because each subset class collapses to a single term.  Requires
    ``0 <= 2h <= n-3``; the n V-fields are only consulted when h > 0, and
    the result has constant rank 2n for h > 0 (n for h = 0) wherever the
    2n frame fields are independent.
    """
    n = len(w_fields)
    if h < 0 or 2 * h > n - 3:
        raise ValueError(f"h={h} out of range: need 0 <= 2h <= n-3 with n={n}")
    if h > 0 and len(v_fields) != n:
        raise ValueError(f"need {n} V fields when h > 0, got {len(v_fields)}")
    frames = list(v_fields) + list(w_fields)
    for f in frames:
        if f.grade != 1:
            raise ValueError("frame entries must be grade-1 fields")
        if f.dim != w_fields[0].dim:
            raise ValueError("incompatible spaces")
    m = w_fields[0].dim
    total = MultivectorField.zero(m, n)
    for subset in combinations(range(n), h):
        rest = tuple(i for i in range(n) if i not in subset)
        sign = shuffle_sign(subset, rest) if subset else 1
        factors = [v_fields[i] for i in subset] + [w_fields[j] for j in rest]
        term = factors[0]
        for f in factors[1:]:
            term = term.wedge(f)
        total = total + term if sign > 0 else total - term
    return total


def coordinate_semidecomposable(m: int, h: int, n: int) -> MultivectorField:
    """The semi-decomposable structure on coordinate frames.

    For h > 0 the two frames are the first n and the next n coordinate
    directions (so 2n <= m); for h = 0 the result is the wedge of the
    first n coordinate directions.
    """
    if h == 0:
        if m < n:
            raise ValueError(f"need m >= n, got m={m}, n={n}")
        w = [coordinate_vector_field(m, j) for j in range(1, n + 1)]
        return build_semidecomposable([], w, 0)
    if m < 2 * n:
        raise ValueError(f"need m >= 2n for h > 0, got m={m}, n={n}")
    v = [coordinate_vector_field(m, i) for i in range(1, n + 1)]
    w = [coordinate_vector_field(m, n + j) for j in range(1, n + 1)]
    return build_semidecomposable(v, w, h)


def block_sum(u: int, s: int, m: int) -> MultivectorField:
    """Sum of s disjoint coordinate blocks of grade 2u on consecutive axes.

    Generalizes the constant symplectic bivector (u = 1); for u >= 2 the
    result is an even-grade Poisson field of rank 2us that is reducible
    and fails the algebraic condition when s >= 2.
    """
    if u < 1 or s < 1:
        raise ValueError("u and s must be positive")
    n = 2 * u
    if m < 2 * u * s:
        raise ValueError(f"need m >= 2us = {2 * u * s}, got m={m}")
    comps = {}
    for i in range(s):
        start = 2 * i * u + 1
        comps[tuple(range(start, start + n))] = 1
    return MultivectorField(m, n, comps)


# ---------------------------------------------------------------------------
# involutivity sampling

def involutivity_sample(
    field: MultivectorField,
    points: Sequence[Point] | None = None,
    seed: int = 0,
) -> bool:
    """Sampled involutivity of the image distribution of the field.

    Spanning vector fields are the contractions with all basis (n-1)-forms
    (they span the image wherever the field is nonzero).  Their pairwise
    Lie brackets are computed symbolically and tested for membership in
    the pointwise span at each sample point; points where the field
    vanishes are skipped with a notice.  A sampled check only: it can
    refute involutivity, never certify it globally.
    """
    m, n = field.dim, field.grade
    pts = list(points) if points is not None else default_sample_points(m, seed)
    generators = [field.contract_blade(blade) for blade in iter_blades(m, n - 1)]
    generators = [g for g in generators if not g.is_zero()]
    brackets = [
        lie_bracket(generators[i], generators[j])
        for i in range(len(generators))
        for j in range(i + 1, len(generators))
    ]
    brackets = [b for b in brackets if not b.is_zero()]
    ok = True
    for pt in pts:
        if field.evaluate(pt).is_zero():
            warnings.warn(f"sample point {pt} skipped: the field vanishes there", stacklevel=2)
            continue
        span = Subspace.from_vectors(
            [g.evaluate(pt).vector_components() for g in generators], m
        )
        for bracket in brackets:
            value = bracket.evaluate(pt)
            if value.is_zero():
                continue
            if not span.contains(value.vector_components()):
                ok = False
    return ok

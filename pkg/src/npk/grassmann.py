"""Structure theory of a single grade-n multivector at a point.

The sharp map sends (n-1)-forms to vectors by contraction; its image
dimension is the rank of the multivector, its kernel on covectors is the
annihilator, and the two dimensions always sum to the ambient dimension.
Rank n characterises decomposable multivectors, equivalently the vanishing
of every contraction-wedge defect ``(i(lam) P) ^ P`` over basis (n-1)-forms
(the classical quadratic decomposability relations).  Rank also bounds
reducibility: a multivector that splits into two independent grade-n
summands needs rank at least 2n.

Universally quantified conditions ("for all covectors ...") are decided
exactly by treating covector components as polynomial indeterminates and
testing identical vanishing; sampling basis covectors alone is unsound
(there are non-decomposable multivectors all of whose basis contractions
are decomposable).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exterior import (
    Covector,
    Multivector,
    contract_basis_terms,
    contract_blade_terms,
    contract_terms,
    iter_blades,
    wedge_terms,
)
from .linalg import Subspace, intersect, rank_kernel_image
from .polynomial import Polynomial


class NotDecomposableError(ValueError):
    """Raised when a factorization is requested for a non-decomposable input."""


@dataclass(frozen=True)
class SharpProfile:
    """Rank, image and annihilator of the sharp map of a multivector."""

    rank: int
    image: Subspace
    annihilator: Subspace


@dataclass(frozen=True)
class Factorization:
    """Grade-1 factors whose wedge reproduces the input exactly."""

    factors: tuple[Multivector, ...]

    def wedge(self) -> Multivector:
        acc = self.factors[0]
        for f in self.factors[1:]:
            acc = acc.wedge(f)
        return acc


def sharp_profile(p: Multivector) -> SharpProfile:
    """Image, annihilator and rank of the contraction map of ``p``.

    The image is spanned by the contractions of ``p`` with all basis
    (n-1)-forms; the annihilator collects the covectors contracting to
    zero.  Their dimensions sum to the ambient dimension, and ``p`` lies
    in the top exterior power of its own image.
    """
    if p.grade < 1:
        raise ValueError("sharp profile needs grade at least 1")
    m, n = p.dim, p.grade
    if p.is_zero():
        return SharpProfile(0, Subspace.zero(m), Subspace.full(m))
    vectors = []
    for blade in iter_blades(m, n - 1):
        terms = contract_blade_terms(p.terms, blade)
        if terms:
            vectors.append([terms.get((u,), Fraction(0)) for u in range(1, m + 1)])
    image = Subspace.from_vectors(vectors, m)
    # annihilator: kernel of alpha -> i(alpha) p, rows indexed by (n-1)-blades
    positions = {blade: i for i, blade in enumerate(iter_blades(m, n - 1))}
    rows = [[Fraction(0)] * m for _ in positions]
    for u in range(1, m + 1):
        for blade, coef in contract_basis_terms(p.terms, u).items():
            rows[positions[blade]][u - 1] = coef
    _, annihilator, _ = rank_kernel_image(rows, m)
    profile = SharpProfile(image.dim, image, annihilator)
    if profile.rank + annihilator.dim != m:
        raise AssertionError("rank and annihilator dimensions are inconsistent")
    return profile


def is_decomposable(p: Multivector) -> bool:
    """Whether ``p`` is a wedge of grade-1 vectors.

    Decided by the contraction-wedge defects ``(i(lam) p) ^ p`` over all
    basis (n-1)-forms, which suffice by linearity; zero counts as
    decomposable by convention.  Equivalent to rank n for nonzero input.
    """
    if p.is_zero() or p.grade <= 1:
        return True
    m, n = p.dim, p.grade
    for blade in iter_blades(m, n - 1):
        contracted = contract_blade_terms(p.terms, blade)
        if not contracted:
            continue
        if wedge_terms(contracted, p.terms):
            return False
    return True


def factorize(p: Multivector) -> Factorization:
    """Factor a decomposable multivector into grade-1 vectors, exactly.

    Takes the canonical basis of the image of the sharp map (dimension n),
    wedges it, and rescales the first factor by the unique rational ratio
    between the two proportional decomposables.  Only the round-trip is
    contractual; the gauge is the canonical reduced-echelon one.
    """
    if p.is_zero():
        raise ValueError("zero tensor")
    if not is_decomposable(p):
        raise NotDecomposableError("not decomposable")
    profile = sharp_profile(p)
    factors = [Multivector.from_vector(row) for row in profile.image.basis]
    acc = factors[0]
    for f in factors[1:]:
        acc = acc.wedge(f)
    blade, coef = next(iter(p.terms.items()))
    ratio = coef / acc.terms[blade]
    factors[0] = factors[0] * ratio
    check = factors[0]
    for f in factors[1:]:
        check = check.wedge(f)
    if check != p:
        raise AssertionError("factorization round-trip failed")
    return Factorization(tuple(factors))


def contractions_decomposable(p: Multivector, k: int) -> bool:
    """Whether every k-fold covector contraction of ``p`` is decomposable.

    The covector tuple is universally quantified, so the k*m tuple
    components become polynomial indeterminates and every contraction-wedge
    defect of the symbolic contraction must vanish identically.  Requires
    ``1 <= k <= n-2``; outside that range the equivalence with
    decomposability breaks down.
    """
    m, n = p.dim, p.grade
    if n < 3:
        raise ValueError("needs grade at least 3")
    if not 1 <= k <= n - 2:
        raise ValueError(f"k must satisfy 1 <= k <= n-2, got k={k} for grade {n}")
    if p.is_zero():
        return True
    nvars = k * m
    terms: dict = {blade: Polynomial.constant(c, nvars) for blade, c in p.terms.items()}
    for i in range(k):
        alpha = {u: Polynomial.variable(i * m + u, nvars) for u in range(1, m + 1)}
        terms = contract_terms(alpha, terms)
    # Plücker defects of the symbolic (n-k)-vector
    for blade in iter_blades(m, n - k - 1):
        contracted = contract_blade_terms(terms, blade)
        if not contracted:
            continue
        if wedge_terms(contracted, terms):
            return False
    return True


@dataclass(frozen=True)
class ContractionSubspaceReport:
    """How the image of a contracted multivector sits inside the expected bound."""

    inclusion_holds: bool
    equality_holds: bool
    rank_drop: int


def contraction_subspace_report(p: Multivector, alpha: Covector) -> ContractionSubspaceReport:
    """Compare the image of ``i(alpha) p`` with ``ker(alpha) ∩ im(sharp_p)``.

    The inclusion holds universally; equality must hold whenever the rank
    drops by exactly one (always the case for nonzero contractions of a
    decomposable multivector).
    """
    if p.grade < 1:
        raise ValueError("needs grade at least 1")
    m = p.dim
    profile = sharp_profile(p)
    contracted = p.contract(alpha)
    if contracted.grade == 0 or contracted.is_zero():
        small = Subspace.zero(m)
        rank_c = 0
    else:
        cp = sharp_profile(contracted)
        small, rank_c = cp.image, cp.rank
    _, ker_alpha, _ = rank_kernel_image([list(alpha.components)], m)
    bound = intersect(ker_alpha, profile.image)
    inclusion = all(bound.contains(row) for row in small.basis)
    return ContractionSubspaceReport(
        inclusion_holds=inclusion,
        equality_holds=small == bound,
        rank_drop=profile.rank - rank_c,
    )


class IrreducibilityKind(Enum):
    CERTIFIED_IRREDUCIBLE = "certified_irreducible"
    CERTIFIED_BY_RANK = "certified_by_rank"
    NO_WITNESS_FOUND = "no_witness_found"
    REDUCIBILITY_WITNESS = "reducibility_witness"


@dataclass(frozen=True)
class IrreducibilityVerdict:
    kind: IrreducibilityKind
    witness: Covector | None = None


def irreducibility_check(p: Multivector, samples: int = 20, seed: int = 0) -> IrreducibilityVerdict:
    """Search for a split of ``p`` into independent grade-n summands.

    Rank below 2n certifies irreducibility outright (each summand of a
    split carries rank at least n).  Otherwise basis covectors and seeded
    random covectors are sampled; a contraction that stays nonzero while
    dropping the rank by at least n witnesses reducibility.  Sampling can
    never certify irreducibility, so the remaining outcome is an honest
    "no witness found"; the CERTIFIED_IRREDUCIBLE verdict is reserved for
    callers with a constructive proof.
    """
    if p.is_zero():
        raise ValueError("zero tensor")
    m, n = p.dim, p.grade
    rank = sharp_profile(p).rank
    if rank < 2 * n:
        return IrreducibilityVerdict(IrreducibilityKind.CERTIFIED_BY_RANK)
    rng = random.Random(seed)
    candidates = [Covector.basis(m, u) for u in range(1, m + 1)]
    for _ in range(samples):
        comps = [Fraction(rng.randint(-9, 9)) for _ in range(m)]
        if any(comps):
            candidates.append(Covector(m, tuple(comps)))
    for alpha in candidates:
        contracted = p.contract(alpha)
        if contracted.is_zero():
            continue
        if sharp_profile(contracted).rank <= rank - n:
            return IrreducibilityVerdict(IrreducibilityKind.REDUCIBILITY_WITNESS, alpha)
    return IrreducibilityVerdict(IrreducibilityKind.NO_WITNESS_FOUND)

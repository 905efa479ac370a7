import random
from fractions import Fraction

import pytest

from npk.exterior import Covector, Multivector
from npk.fields import MultivectorField
from npk.grassmann import (
    IrreducibilityKind,
    NotDecomposableError,
    contraction_subspace_report,
    contractions_decomposable,
    factorize,
    irreducibility_check,
    is_decomposable,
    sharp_profile,
)
from npk.linalg import Subspace
from npk.poisson import algebraic_condition
from npk.suites import (
    random_constant_multivector,
    random_decomposable_multivector,
)


def blade(dim, *indices, c=1):
    return Multivector.blade(dim, indices, c)


E123 = blade(5, 1, 2, 3)
MIXED = blade(5, 1, 2, 3) + blade(5, 1, 4, 5)       # rank 5, shares a direction
TWO_BLOCK = Multivector(6, 3, {(1, 2, 3): 1, (4, 5, 6): 1})  # rank 6, disjoint blocks


# ---------------------------------------------------------------------------
# sharp profile

def test_sharp_profile_of_a_blade():
    profile = sharp_profile(E123)
    assert profile.rank == 3
    assert profile.image == Subspace.from_vectors([[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0]], 5)
    assert profile.annihilator == Subspace.from_vectors([[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]], 5)


def test_sharp_profile_mixed_rank_five():
    # enumerating i(lam)P over the ten basis 2-forms row-reduces to the full space
    profile = sharp_profile(MIXED)
    assert profile.rank == 5
    assert profile.annihilator.dim == 0


def test_sharp_profile_zero():
    profile = sharp_profile(Multivector.zero(5, 3))
    assert profile.rank == 0
    assert profile.image == Subspace.zero(5)
    assert profile.annihilator == Subspace.full(5)


def test_rank_dimension_identity_random():
    rng = random.Random("sharp-identity")
    for _ in range(60):
        m = rng.randint(3, 6)
        n = rng.randint(1, min(4, m))
        p = random_constant_multivector(rng, m, n, max_terms=4)
        profile = sharp_profile(p)
        assert profile.rank == profile.image.dim == m - profile.annihilator.dim
        assert profile.rank >= n  # nonzero input


# ---------------------------------------------------------------------------
# decomposability and factorization

def test_decomposable_examples():
    assert is_decomposable(E123)
    assert not is_decomposable(MIXED)          # rank 5 != 3
    assert not is_decomposable(TWO_BLOCK)      # rank 6
    assert is_decomposable(Multivector.zero(5, 3))


def test_decomposable_iff_rank_equals_grade():
    rng = random.Random("rank-route")
    for _ in range(60):
        m = rng.randint(3, 6)
        n = rng.randint(2, min(4, m))
        p = (
            random_decomposable_multivector(rng, m, n)
            if rng.random() < 0.5
            else random_constant_multivector(rng, m, n, max_terms=4)
        )
        assert is_decomposable(p) == (sharp_profile(p).rank == n)


def test_factorize_round_trip_scaled_blade():
    p = blade(5, 1, 2, 3, c=2)
    factors = factorize(p)
    assert factors.wedge() == p


def test_factorize_expanded_product():
    v = Multivector(5, 1, {(1,): 1, (2,): 1})
    p = v.wedge(blade(5, 2)).wedge(blade(5, 3))
    assert p == E123  # (e1+e2)^e2^e3 expands to e123
    assert factorize(p).wedge() == p


def test_factorize_rejects_non_decomposable():
    with pytest.raises(NotDecomposableError, match="not decomposable"):
        factorize(MIXED)


def test_factorize_rejects_zero():
    with pytest.raises(ValueError, match="zero tensor"):
        factorize(Multivector.zero(5, 3))


def test_factorize_round_trip_random():
    rng = random.Random("factor-round-trip")
    for _ in range(50):
        m = rng.randint(3, 6)
        n = rng.randint(2, min(5, m))
        p = random_decomposable_multivector(rng, m, n)
        assert factorize(p).wedge() == p


# ---------------------------------------------------------------------------
# contractions of all covector tuples

def test_profile_of_a_blade_all_k():
    p = blade(6, 1, 2, 3, 4)
    assert contractions_decomposable(p, 1)
    assert contractions_decomposable(p, 2)


def test_profile_counterexample_needs_symbolic_route():
    # every single basis contraction is decomposable, yet the profile fails:
    # alpha = eps1 + eps4 contracts to e23 + e56 whose square is 2*e2356
    for a in range(1, 7):
        assert is_decomposable(TWO_BLOCK.contract(Covector.basis(6, a)))
    assert not contractions_decomposable(TWO_BLOCK, 1)
    alpha = Covector(6, (1, 0, 0, 1, 0, 0))
    contracted = TWO_BLOCK.contract(alpha)
    assert contracted == Multivector(6, 2, {(2, 3): 1, (5, 6): 1})
    assert contracted.wedge(contracted) == Multivector(6, 4, {(2, 3, 5, 6): 2})


def test_profile_k_range_enforced():
    with pytest.raises(ValueError, match="k must satisfy"):
        contractions_decomposable(E123, 2)
    with pytest.raises(ValueError, match="k must satisfy"):
        contractions_decomposable(E123, 0)


def test_profile_true_implies_decomposable_random():
    rng = random.Random("profile-forward")
    for _ in range(40):
        m = rng.randint(4, 6)
        n = rng.choice((3, 4))
        if n > m - 1:
            continue
        p = (
            random_decomposable_multivector(rng, m, n)
            if rng.random() < 0.5
            else random_constant_multivector(rng, m, n, max_terms=3)
        )
        for k in range(1, n - 1):
            if contractions_decomposable(p, k):
                assert is_decomposable(p)


# ---------------------------------------------------------------------------
# contraction subspace reports

def test_report_decomposable_drop_one():
    report = contraction_subspace_report(E123, Covector.basis(5, 1))
    assert report.inclusion_holds
    assert report.equality_holds
    assert report.rank_drop == 1


def test_report_annihilating_covector():
    report = contraction_subspace_report(E123, Covector.basis(5, 4))
    assert report.inclusion_holds
    assert report.rank_drop == 3


def test_report_two_block_strict_inclusion():
    report = contraction_subspace_report(TWO_BLOCK, Covector.basis(6, 1))
    assert report.inclusion_holds
    assert not report.equality_holds
    assert report.rank_drop == 4  # 6 - 2, at least the grade


def test_report_random_pairs():
    rng = random.Random("subspace-reports")
    for _ in range(60):
        m = rng.randint(3, 6)
        n = rng.randint(2, min(4, m))
        p = (
            random_decomposable_multivector(rng, m, n)
            if rng.random() < 0.4
            else random_constant_multivector(rng, m, n, max_terms=4)
        )
        alpha = Covector(m, tuple(Fraction(rng.randint(-4, 4)) for _ in range(m)))
        report = contraction_subspace_report(p, alpha)
        assert report.inclusion_holds
        if report.rank_drop == 1:
            assert report.equality_holds


# ---------------------------------------------------------------------------
# irreducibility

def test_blade_certified_by_rank():
    assert irreducibility_check(E123).kind is IrreducibilityKind.CERTIFIED_BY_RANK


def test_mixed_certified_by_rank():
    # rank 5 < 2*3, so no two independent grade-3 summands can exist
    assert irreducibility_check(MIXED).kind is IrreducibilityKind.CERTIFIED_BY_RANK


def test_two_block_witness():
    verdict = irreducibility_check(TWO_BLOCK)
    assert verdict.kind is IrreducibilityKind.REDUCIBILITY_WITNESS
    contracted = TWO_BLOCK.contract(verdict.witness)
    assert not contracted.is_zero()
    assert sharp_profile(contracted).rank <= sharp_profile(TWO_BLOCK).rank - 3


def test_zero_rejected():
    with pytest.raises(ValueError, match="zero tensor"):
        irreducibility_check(Multivector.zero(5, 3))


def test_pairwise_condition_never_flags_a_witness():
    # multivectors whose basis-pair contraction wedges all vanish are
    # never reported reducible
    rng = random.Random("no-false-witness")
    checked = 0
    for _ in range(60):
        m = rng.randint(4, 6)
        p = (
            random_decomposable_multivector(rng, m, 3)
            if rng.random() < 0.7
            else random_constant_multivector(rng, m, 3, max_terms=3)
        )
        if not algebraic_condition(MultivectorField.from_multivector(p)).holds:
            continue
        checked += 1
        verdict = irreducibility_check(p)
        assert verdict.kind is not IrreducibilityKind.REDUCIBILITY_WITNESS
    assert checked >= 20

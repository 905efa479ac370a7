import random
import warnings
from fractions import Fraction

import pytest

from npk.fields import MultivectorField, coordinate_vector_field, jacobi_identity_holds
from npk.grassmann import sharp_profile
from npk.poisson import (
    algebraic_condition,
    block_sum,
    build_semidecomposable,
    classify,
    coordinate_semidecomposable,
    default_sample_points,
    involutivity_sample,
    is_nambu_algebraic,
    pointwise_decomposable,
)
from npk.polynomial import Polynomial
from npk.suites import (
    random_constant_field,
    random_decomposable_field,
    random_linear_field,
)

M = 5
X = [Polynomial.variable(u, M) for u in range(1, M + 1)]

BLADE = MultivectorField(M, 3, {(1, 2, 3): 1})
MIXED = MultivectorField(M, 3, {(1, 2, 3): 1, (1, 4, 5): 1})


# ---------------------------------------------------------------------------
# the algebraic condition

def test_algebraic_condition_blade_holds():
    assert algebraic_condition(BLADE).holds


def test_algebraic_condition_mixed_fails_on_the_diagonal():
    # i(dx1)P wedged with itself is 2*e2345
    report = algebraic_condition(MIXED)
    assert not report.holds
    assert report.witness == (1, 1)
    contracted = MIXED.contract_basis(1)
    assert contracted.wedge(contracted) == MultivectorField(M, 4, {(2, 3, 4, 5): 2})


def test_algebraic_condition_block_sum_fails():
    report = algebraic_condition(block_sum(2, 2, 8))
    assert not report.holds
    assert report.witness == (1, 5)


def test_algebraic_condition_needs_grade_three():
    with pytest.raises(ValueError):
        algebraic_condition(MultivectorField(4, 2, {(1, 2): 1}))


def test_even_grade_symmetrization_is_trivial():
    # for even grade the pair expression is antisymmetric, so the
    # symmetrized combination vanishes identically on any field
    rng = random.Random("even-symmetrization")
    for _ in range(10):
        f = random_constant_field(rng, 6, 4, max_terms=3)
        for a in range(1, 7):
            fa = f.contract_basis(a)
            for b in range(a, 7):
                fb = f.contract_basis(b)
                assert (fa.wedge(fb) + fb.wedge(fa)).is_zero()


# ---------------------------------------------------------------------------
# classification

def test_classify_mixed_not_poisson():
    verdict = classify(MIXED)
    assert verdict.parity == "odd"
    assert not verdict.algebraic_holds
    assert not verdict.is_poisson


def test_classify_blade_poisson_and_nambu():
    verdict = classify(BLADE)
    assert verdict.is_poisson
    assert verdict.differential_holds
    assert verdict.pointwise_decomposable
    assert verdict.nambu_algebraic
    assert all(rank == 3 for _, rank in verdict.rank_at_samples)


def test_classify_block_sum():
    verdict = classify(block_sum(2, 2, 8))
    assert verdict.parity == "even"
    assert verdict.is_poisson
    assert not verdict.algebraic_holds
    assert all(rank == 8 for _, rank in verdict.rank_at_samples)
    assert not verdict.nambu_algebraic


def test_classify_semidecomposable():
    verdict = classify(coordinate_semidecomposable(10, 1, 5))
    assert verdict.is_poisson
    assert all(rank == 10 for _, rank in verdict.rank_at_samples)
    assert not verdict.nambu_algebraic


def test_classify_rejects_low_grade():
    with pytest.raises(ValueError):
        classify(block_sum(1, 1, 2))


def test_verdict_implications_on_random_fields():
    rng = random.Random("verdict-implications")
    fields = [random_linear_field(rng, M, 3, max_terms=5) for _ in range(10)]
    fields += [random_decomposable_field(rng, M, 3) for _ in range(5)]
    fields += [random_constant_field(rng, 6, 4, max_terms=3) for _ in range(5)]
    for f in fields:
        verdict = classify(f)
        if verdict.nambu_algebraic:
            assert verdict.pointwise_decomposable
        if verdict.pointwise_decomposable:
            assert verdict.algebraic_holds
        expected = (
            verdict.differential_holds
            if verdict.parity == "even"
            else verdict.algebraic_holds and verdict.differential_holds
        )
        assert verdict.is_poisson == expected


# ---------------------------------------------------------------------------
# the Nambu condition

def test_nambu_blade_true():
    assert is_nambu_algebraic(BLADE)


def test_nambu_semidecomposable_false():
    assert not is_nambu_algebraic(coordinate_semidecomposable(10, 1, 5))


def test_nambu_two_block_false():
    assert not is_nambu_algebraic(MultivectorField(6, 3, {(1, 2, 3): 1, (4, 5, 6): 1}))


def test_nambu_equals_pointwise_decomposability():
    rng = random.Random("nambu-pointwise")
    for _ in range(15):
        f = random_linear_field(rng, M, 3, max_terms=4)
        assert is_nambu_algebraic(f) == pointwise_decomposable(f)
    for _ in range(5):
        f = random_decomposable_field(rng, M, 3)
        assert is_nambu_algebraic(f)


# ---------------------------------------------------------------------------
# constructors

def test_builder_h0_is_the_plain_wedge():
    frames = [coordinate_vector_field(M, u) for u in (1, 2, 3)]
    built = build_semidecomposable([], frames, 0)
    assert built == BLADE
    assert sharp_profile(built.evaluate([0] * M)).rank == 3


def test_builder_h1_n5_full_rank():
    built = coordinate_semidecomposable(10, 1, 5)
    verdict = classify(built)
    assert verdict.is_poisson
    assert not verdict.nambu_algebraic
    assert all(rank == 10 for _, rank in verdict.rank_at_samples)


def test_builder_rejects_out_of_range_h():
    frames = [coordinate_vector_field(8, u) for u in range(1, 5)]
    cofr = [coordinate_vector_field(8, u) for u in range(5, 9)]
    with pytest.raises(ValueError, match="out of range"):
        build_semidecomposable(frames, cofr, 1)  # 2h = 2 > n-3 = 1


def test_builder_matches_coordinate_wrapper():
    v = [coordinate_vector_field(10, u) for u in range(1, 6)]
    w = [coordinate_vector_field(10, u) for u in range(6, 11)]
    assert build_semidecomposable(v, w, 1) == coordinate_semidecomposable(10, 1, 5)


def test_block_sum_degenerate_bivector():
    assert block_sum(1, 1, 2) == MultivectorField(2, 2, {(1, 2): 1})


def test_block_sum_layout():
    assert block_sum(2, 2, 8) == MultivectorField(
        8, 4, {(1, 2, 3, 4): 1, (5, 6, 7, 8): 1}
    )
    with pytest.raises(ValueError):
        block_sum(2, 2, 7)


# ---------------------------------------------------------------------------
# involutivity sampling

def test_involutivity_coordinate_distribution():
    assert involutivity_sample(BLADE)


def test_involutivity_twisted_distribution_fails():
    # generators span e1, e2, e3 + x1*e4; [d1, d3 + x1 d4] = d4 leaves the span
    field = MultivectorField(M, 3, {(1, 2, 3): 1, (1, 2, 4): X[0]})
    assert pointwise_decomposable(field)
    assert not involutivity_sample(field)


def test_involutivity_scaled_frame_holds():
    field = MultivectorField(M, 3, {(1, 2, 3): Polynomial.constant(1, M) + X[0]})
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # the zero locus of 1+x1 may be sampled
        assert involutivity_sample(field)


def test_involutivity_skips_zero_points_with_notice():
    field = MultivectorField(M, 3, {(1, 2, 3): X[0]})
    origin_only = [tuple(Fraction(0) for _ in range(M))]
    with pytest.warns(UserWarning, match="skipped"):
        assert involutivity_sample(field, points=origin_only)


# ---------------------------------------------------------------------------
# sampling utilities and rank semicontinuity

def test_default_sample_points_layout():
    points = default_sample_points(3, seed=1)
    assert len(points) == 1 + 3 + 8
    assert points[0] == (0, 0, 0)
    assert points[2] == (0, 1, 0)
    assert default_sample_points(3, seed=1) == points  # deterministic


def test_rank_is_generically_maximal_along_lines():
    # the executable shadow of lower semicontinuity: the rank at sampled
    # generic parameters dominates the rank at the special point
    rng = random.Random("semicontinuity")
    for _ in range(10):
        f = random_linear_field(rng, M, 3, max_terms=5)
        base = [Fraction(rng.randint(-3, 3)) for _ in range(M)]
        direction = [Fraction(rng.randint(-3, 3)) for _ in range(M)]
        special = sharp_profile(f.evaluate(base)).rank
        generic = max(
            sharp_profile(
                f.evaluate([b + t * d for b, d in zip(base, direction)])
            ).rank
            for t in (Fraction(1, 3), Fraction(1, 2), 1, 2, 5)
        )
        assert generic >= special


def test_jacobi_oracle_agrees_with_classifier_spot_checks():
    rng = random.Random("oracle-vs-classifier")
    for _ in range(6):
        f = random_linear_field(rng, M, 3, max_terms=5)
        assert jacobi_identity_holds(f) == classify(f).is_poisson
    g = random_decomposable_field(rng, M, 3)
    assert jacobi_identity_holds(g) and classify(g).is_poisson

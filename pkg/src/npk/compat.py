"""Compatible multivector fields and the induced first-order operator.

A grade-q field U is compatible with the structure field P when
``(i(alpha) P) ^ (i(alpha) U) = 0`` for every covector alpha.  The
quantifier is quadratic in alpha, so over the rationals it is equivalent
to its polarization on basis covector pairs, which is what gets checked.
On compatible fields a first-order operator of degree n-1 is defined; it
annihilates P itself and acts on functions as ``f -> i(df) P``.  The
operator does not square to zero in general, so no such identity is
asserted anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import MultivectorField
from .polynomial import Polynomial


class IncompatibleFieldError(ValueError):
    """Raised when the operator is applied outside its compatible domain."""


@dataclass(frozen=True)
class Compatibility:
    holds: bool
    witness: tuple[int, int] | None = None


def is_compatible(structure: MultivectorField, candidate: MultivectorField) -> Compatibility:
    """Polarized compatibility check over basis covector pairs.

    Grade-0 candidates are compatible vacuously (their contraction is
    zero).  On failure the lexicographically first failing basis pair is
    reported.
    """
    if structure.dim != candidate.dim:
        raise ValueError("incompatible spaces")
    if candidate.grade == 0:
        return Compatibility(True, None)
    m = structure.dim
    sc = {a: structure.contract_basis(a) for a in range(1, m + 1)}
    cc = {a: candidate.contract_basis(a) for a in range(1, m + 1)}
    for a in range(1, m + 1):
        for b in range(a, m + 1):
            term = sc[a].wedge(cc[b]) + sc[b].wedge(cc[a])
            if not term.is_zero():
                return Compatibility(False, (a, b))
    return Compatibility(True, None)


def delta(structure: MultivectorField, candidate: MultivectorField) -> MultivectorField:
    """First-order operator on compatible fields, of degree n-1.

    For a grade-q candidate U returns
    ``sum_u (i(dx^u) P) ^ (d_u U) + (i(dx^u) U) ^ (d_u P)``;
    the second term drops for q = 0, where the result is exactly
    ``i(df) P``.  Raises when the candidate is not compatible.
    """
    membership = is_compatible(structure, candidate)
    if not membership.holds:
        raise IncompatibleFieldError(
            f"candidate field is not compatible with the structure (witness pair {membership.witness})"
        )
    m, n, q = structure.dim, structure.grade, candidate.grade
    target = q + n - 1
    total = MultivectorField.zero(m, target)
    if target > m:
        return total
    for u in range(1, m + 1):
        s_contracted = structure.contract_basis(u)
        c_partial = candidate.partial(u)
        if not (s_contracted.is_zero() or c_partial.is_zero()):
            total = total + s_contracted.wedge(c_partial)
        if q == 0:
            continue
        c_contracted = candidate.contract_basis(u)
        s_partial = structure.partial(u)
        if not (c_contracted.is_zero() or s_partial.is_zero()):
            total = total + c_contracted.wedge(s_partial)
    return total


def gradient_contraction(structure: MultivectorField, function: Polynomial) -> MultivectorField:
    """``i(df) P`` computed directly from the gradient covector field.

    Independent of :func:`delta`; used to cross-check its grade-0 action.
    """
    if function.num_vars != structure.dim:
        raise ValueError("function must be a polynomial in the coordinates")
    comps = [function.derivative(u) for u in range(1, structure.dim + 1)]
    return structure.contract_covector(comps)

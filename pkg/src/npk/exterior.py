"""Exact sparse exterior algebra over an m-dimensional rational space.

Basis blades are strictly increasing tuples of 1-based indices.  A
homogeneous multivector of grade k stores a sparse map from k-blades to
nonzero coefficients.  Point values (:class:`Multivector`,
:class:`Covector`) carry ``fractions.Fraction`` coefficients; the low-level
term kernels (:func:`wedge_terms`, :func:`contract_terms`, ...) only need
coefficients supporting ``+``, unary ``-``, ``*`` and truthiness, so
multivector fields with polynomial components reuse them unchanged.

Sign conventions, fixed once for the whole package:

* ``wedge`` concatenates blades and sorts, picking up the usual
  permutation sign (one factor of -1 per transposition).
* interior products contract the first slot:
  ``(i(a)P)^{b2..bn} = sum_u a_u * P^{u b2..bn}``, which on a blade
  ``e_{b1} ^ ... ^ e_{bn}`` deletes factor j with sign ``(-1)^(j-1)``.
* a decomposable form contracts innermost-first:
  ``i(a1 ^ ... ^ ak) = i(ak) o ... o i(a1)``, i.e. ``a1`` acts first.

Any consistent choice preserves the vanishing statements the rest of the
package relies on; the tests pin the resulting signs exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Mapping

Blade = tuple[int, ...]

_SCALARS = (int, Fraction)


def iter_blades(dim: int, grade: int) -> Iterator[Blade]:
    """All strictly increasing ``grade``-tuples drawn from ``1..dim``."""
    return combinations(range(1, dim + 1), grade)


def merge_blades(left: Blade, right: Blade):
    """Sign and merged blade for the concatenation of two blades.

    Returns ``None`` when an index repeats (the wedge vanishes).
    """
    if not left:
        return 1, tuple(right)
    if not right:
        return 1, tuple(left)
    out: list[int] = []
    inv = 0
    i = j = 0
    nl, nr = len(left), len(right)
    while i < nl and j < nr:
        a, b = left[i], right[j]
        if a == b:
            return None
        if a < b:
            out.append(a)
            i += 1
        else:
            out.append(b)
            j += 1
            inv += nl - i
    out.extend(left[i:])
    out.extend(right[j:])
    return (1 if inv % 2 == 0 else -1), tuple(out)


def sort_to_blade(indices: Iterable[int]):
    """Sort an index tuple into a blade, tracking the permutation sign.

    Returns ``(sign, blade)`` or ``None`` when an index repeats.
    """
    lst = list(indices)
    inv = 0
    for i in range(len(lst)):
        a = lst[i]
        for j in range(i + 1, len(lst)):
            b = lst[j]
            if a == b:
                return None
            if a > b:
                inv += 1
    return (1 if inv % 2 == 0 else -1), tuple(sorted(lst))


def shuffle_sign(left: Iterable[int], right: Iterable[int]) -> int:
    """Sign of interleaving two disjoint increasing sequences into one."""
    merged = merge_blades(tuple(left), tuple(right))
    if merged is None:
        raise ValueError("sequences are not disjoint")
    return merged[0]


# ---------------------------------------------------------------------------
# term-map kernels (coefficient-generic)

def _add_term(dst: dict, key: Blade, value) -> None:
    cur = dst.get(key)
    if cur is None:
        if value:
            dst[key] = value
    else:
        s = cur + value
        if s:
            dst[key] = s
        else:
            del dst[key]


def wedge_terms(a_terms: Mapping[Blade, object], b_terms: Mapping[Blade, object]) -> dict:
    out: dict = {}
    for ka, ca in a_terms.items():
        for kb, cb in b_terms.items():
            merged = merge_blades(ka, kb)
            if merged is None:
                continue
            sign, key = merged
            piece = ca * cb
            if sign < 0:
                piece = -piece
            _add_term(out, key, piece)
    return out


def contract_terms(alpha: Mapping[int, object], terms: Mapping[Blade, object]) -> dict:
    """First-slot interior product of a sparse covector with a term map."""
    out: dict = {}
    for blade, coef in terms.items():
        for j, idx in enumerate(blade):
            a = alpha.get(idx)
            if a is None or not a:
                continue
            piece = a * coef
            if j % 2:
                piece = -piece
            _add_term(out, blade[:j] + blade[j + 1:], piece)
    return out


def contract_basis_terms(terms: Mapping[Blade, object], u: int) -> dict:
    """Interior product with the basis covector dual to index ``u``."""
    out: dict = {}
    for blade, coef in terms.items():
        try:
            j = blade.index(u)
        except ValueError:
            continue
        _add_term(out, blade[:j] + blade[j + 1:], coef if j % 2 == 0 else -coef)
    return out


def contract_blade_terms(terms: Mapping[Blade, object], blade: Blade) -> dict:
    """Iterated basis contraction; the first index of ``blade`` acts first."""
    cur = dict(terms)
    for idx in blade:
        if not cur:
            break
        cur = contract_basis_terms(cur, idx)
    return cur


def scale_terms(terms: Mapping[Blade, object], factor) -> dict:
    if not factor:
        return {}
    return {k: factor * v for k, v in terms.items()}


# ---------------------------------------------------------------------------
# point-level containers

def _check_blade(blade: Blade, dim: int, grade: int) -> None:
    if len(blade) != grade:
        raise ValueError(f"blade {blade!r} does not have grade {grade}")
    prev = 0
    for idx in blade:
        if not isinstance(idx, int) or idx <= prev:
            raise ValueError(f"blade {blade!r} must be strictly increasing")
        prev = idx
    if prev > dim:
        raise ValueError(f"blade {blade!r} exceeds dimension {dim}")


class Multivector:
    """Sparse homogeneous grade-k element with exact rational coefficients.

    The same container represents elements of the exterior powers of the
    base space and of its dual (the caller tracks variance); see the
    :data:`MultiCovector` alias.  The canonical zero above the top grade is
    stored with grade ``dim + 1`` so that out-of-range wedges compare equal.
    """

    __slots__ = ("dim", "grade", "terms")
    __hash__ = None

    def __init__(self, dim: int, grade: int, terms: Mapping[Blade, Fraction] | None = None):
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        if grade < 0:
            raise ValueError("grade must be nonnegative")
        if grade > dim:
            if terms:
                for blade, coef in terms.items():
                    if coef:
                        raise ValueError("no blades exist above the top grade")
            self.dim = dim
            self.grade = dim + 1
            self.terms = {}
            return
        clean: dict[Blade, Fraction] = {}
        if terms:
            for blade, coef in terms.items():
                blade = tuple(blade)
                _check_blade(blade, dim, grade)
                coef = coef if isinstance(coef, Fraction) else Fraction(coef)
                if not coef:
                    continue
                cur = clean.get(blade)
                if cur is None:
                    clean[blade] = coef
                else:
                    s = cur + coef
                    if s:
                        clean[blade] = s
                    else:
                        del clean[blade]
        self.dim = dim
        self.grade = grade
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, dim: int, grade: int) -> "Multivector":
        return cls(dim, grade)

    @classmethod
    def blade(cls, dim: int, indices: Iterable[int], coeff=1) -> "Multivector":
        indices = tuple(indices)
        return cls(dim, len(indices), {indices: coeff})

    @classmethod
    def from_vector(cls, coords: Iterable) -> "Multivector":
        coords = list(coords)
        return cls(len(coords), 1, {(u + 1,): c for u, c in enumerate(coords)})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def vector_components(self) -> tuple[Fraction, ...]:
        if self.grade != 1:
            raise ValueError("vector_components needs a grade-1 multivector")
        return tuple(self.terms.get((u,), Fraction(0)) for u in range(1, self.dim + 1))

    def component(self, indices: Iterable[int]) -> Fraction:
        """Fully antisymmetric component for an arbitrary index tuple."""
        sorted_ = sort_to_blade(indices)
        if sorted_ is None:
            return Fraction(0)
        sign, blade = sorted_
        coef = self.terms.get(blade)
        if coef is None:
            return Fraction(0)
        return coef if sign > 0 else -coef

    # -- algebra -----------------------------------------------------------

    def wedge(self, other: "Multivector") -> "Multivector":
        if self.dim != other.dim:
            raise ValueError("incompatible spaces")
        grade = self.grade + other.grade
        if grade > self.dim:
            return Multivector(self.dim, grade)
        return Multivector(self.dim, grade, wedge_terms(self.terms, other.terms))

    def contract(self, alpha: "Covector") -> "Multivector":
        if self.grade == 0:
            raise ValueError("cannot contract a scalar")
        if self.dim != alpha.dim:
            raise ValueError("incompatible spaces")
        return Multivector(self.dim, self.grade - 1, contract_terms(alpha.sparse(), self.terms))

    def __add__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError("incompatible spaces")
        if self.grade != other.grade:
            raise ValueError("cannot add multivectors of different grades")
        out = dict(self.terms)
        for k, v in other.terms.items():
            _add_term(out, k, v)
        return Multivector(self.dim, self.grade, out)

    def __neg__(self):
        return Multivector(self.dim, self.grade, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            c = Fraction(other)
            return Multivector(self.dim, self.grade, scale_terms(self.terms, c))
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.dim == other.dim and self.grade == other.grade and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return f"0[grade {self.grade}, dim {self.dim}]"
        parts = []
        for blade, coef in sorted(self.terms.items()):
            name = "e(" + ",".join(map(str, blade)) + ")" if blade else "1"
            if coef == 1 and blade:
                parts.append(name)
            elif coef == -1 and blade:
                parts.append("-" + name)
            else:
                parts.append(f"{coef}*{name}" if blade else str(coef))
        return " + ".join(parts).replace("+ -", "- ")


#: multi-covectors live in the exterior powers of the dual space and use
#: the same sparse container; contraction operations take them on the left.
MultiCovector = Multivector


@dataclass(frozen=True)
class Covector:
    """Element of the dual space, stored densely in the dual basis."""

    dim: int
    components: tuple[Fraction, ...]

    def __post_init__(self):
        comps = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in self.components)
        if len(comps) != self.dim:
            raise ValueError("component vector length must equal the dimension")
        object.__setattr__(self, "components", comps)

    @classmethod
    def basis(cls, dim: int, u: int) -> "Covector":
        if not 1 <= u <= dim:
            raise ValueError(f"index {u} out of range 1..{dim}")
        return cls(dim, tuple(Fraction(1 if i == u - 1 else 0) for i in range(dim)))

    def sparse(self) -> dict[int, Fraction]:
        return {u + 1: c for u, c in enumerate(self.components) if c}

    def is_zero(self) -> bool:
        return not any(self.components)

    def pair(self, vector: Multivector) -> Fraction:
        """Evaluate on a grade-1 multivector."""
        comps = vector.vector_components()
        return sum((a * v for a, v in zip(self.components, comps)), Fraction(0))


# ---------------------------------------------------------------------------
# documented operation entry points

def wedge(a: Multivector, b: Multivector) -> Multivector:
    """Exterior product; the zero of grade ``min(p+q, dim+1)`` above top grade."""
    return a.wedge(b)


def contract_covector(alpha: Covector, p: Multivector) -> Multivector:
    """First-slot interior product ``i(alpha) p``."""
    return p.contract(alpha)


def contract_form(lam: Multivector, p: Multivector) -> Multivector:
    """Interior product by a grade-k form, innermost-first on each blade.

    For a decomposable ``lam = a1 ^ ... ^ ak`` this equals
    ``i(ak)(...(i(a1) p))`` and is extended linearly in ``lam``.
    """
    if lam.dim != p.dim:
        raise ValueError("incompatible spaces")
    k, n = lam.grade, p.grade
    if k == 0:
        raise ValueError("cannot contract with a grade-0 form")
    if k > n:
        raise ValueError("contraction exceeds grade")
    out: dict[Blade, Fraction] = {}
    for cblade, c in lam.terms.items():
        cur = contract_blade_terms(p.terms, cblade)
        for key, val in cur.items():
            _add_term(out, key, c * val)
    return Multivector(p.dim, n - k, out)

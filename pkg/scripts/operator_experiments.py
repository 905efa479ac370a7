#!/usr/bin/env python3
"""Record the behaviour of the compatibility operator on sample inputs.

The operator annihilates the structure field and lifts functions to their
gradient contraction; its square, and wedge closure of the compatible
family, carry no contract, so this script only records what happens.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from npk import (  # noqa: E402
    MultivectorField,
    Polynomial,
    coordinate_semidecomposable,
    delta,
    gradient_contraction,
    is_compatible,
)


def grade0(f: Polynomial) -> MultivectorField:
    return MultivectorField(f.num_vars, 0, {(): f})


def main() -> int:
    blade = MultivectorField(5, 3, {(1, 2, 3): 1})
    semi = coordinate_semidecomposable(10, 1, 5)
    x = [Polynomial.variable(u, 5) for u in range(1, 6)]

    print("structure annihilation")
    for name, p in (("coordinate 3-blade", blade), ("mixed frames h=1 n=5", semi)):
        print(f"  delta(P, P) == 0 for {name}: {delta(p, p).is_zero()}")

    print("\ngradient action (two routes)")
    for f in (x[0], x[0] * x[3], x[1] * x[1] - 2 * x[4]):
        lifted = delta(blade, grade0(f))
        print(f"  f = {f!r:24s} delta f = {lifted!r:18s} matches i(df)P: {lifted == gradient_contraction(blade, f)}")

    print("\noperator squares (recorded, no contract)")
    for f in (x[0] * x[3], x[1] * x[1]):
        first = delta(blade, grade0(f))
        print(f"  delta^2 on {f!r}: {delta(blade, first)!r}")

    print("\nwedge closure samples (recorded, no contract)")
    first = delta(blade, grade0(x[0]))
    second = delta(blade, grade0(x[1]))
    sample = first.wedge(second)
    print(f"  delta(x1) ^ delta(x2) = {sample!r}")
    print(f"  compatible with P: {is_compatible(blade, sample).holds}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Walk through a tangent-cone computation, step by step.

The input is a one-parameter family of non-homogeneous ideals in three
variables.  For each parameter value the script homogenizes, eliminates,
takes lowest-degree forms, and prints the reduced basis of the resulting
cone ideal, together with the Hilbert function of the associated graded
quotient.

Run:  python3 demos/tangent_cone_walkthrough.py [r]
"""

import sys

from formring import (
    GradedQuotientRing,
    Ideal,
    PolyRing,
    initial_forms_ideal,
)


def main(r: int = 3) -> None:
    ring = PolyRing(("x", "y", "z"), 32003)
    x, y, z = ring.gens()
    generators = [x**2, x * y, x * z - y**r, y ** (r + 1), x * z**2]
    ideal = Ideal(ring, generators)

    print(f"parameter r = {r}")
    print("input ideal generators:")
    for g in generators:
        print(f"  {g}")

    print()
    print("lowest-degree forms of a generating set are NOT enough;")
    print("the cone ideal needs forms of every element.  The library")
    print("computes them through a homogenization/elimination pass:")
    cone = initial_forms_ideal(ideal)
    basis = sorted(str(g) for g in cone.groebner_basis().elements)
    print("reduced basis of the cone ideal:")
    for g in basis:
        print(f"  {g}")
    print()
    print(f"note the element y^{r}*z: no input generator has it as its")
    print("lowest-degree part.  It appears because the combination")
    print(f"  z * (x*z - y^{r}) - (x*z^2)  =  -y^{r}*z")
    print("cancels the lowest forms of the two generators involved.")

    G = GradedQuotientRing(cone)
    print()
    print("Hilbert function of the graded quotient:")
    for n in range(0, r + 3):
        print(f"  degree {n}: {G.dim(n)}")
    print()
    print(f"Krull dimension: {G.krull_dimension()}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 3)

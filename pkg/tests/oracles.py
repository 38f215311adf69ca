"""Independent oracles the frozen expectations are checked against.

Each oracle reaches the same quantity as some production code path by a
deliberately different route, so agreement is evidence rather than
tautology:

* ``cone_dims_oracle`` measures the graded layers of the degree
  filtration directly (standard-monomial counts of ``I + m^k``), never
  touching the homogenize/eliminate/dehomogenize pipeline.
* ``socle_dims_oracle`` computes degreewise kernels of the stacked
  multiplication-by-variable maps, never touching colon ideals.
* ``quotient_h0_dims`` computes ``(I : M)/I`` dimensions from ideal
  arithmetic, never touching Koszul complexes.
"""

from __future__ import annotations

import numpy as np

from formring import GradedQuotientRing, Ideal, ideal_quotient, standard_monomials
from formring import linalg


def _degree_ideal(ideal: Ideal, k: int) -> Ideal:
    """The ideal plus all monomials of total degree ``k``."""

    ring = ideal.ring
    from formring.groebner import monomials_of_degree

    extra = [ring.monomial(m) for m in monomials_of_degree(ring, k)]
    return Ideal(ring, list(ideal.generators) + extra)


def _codim(ideal: Ideal, k: int) -> int:
    """Total dimension of ring/(ideal + all degree-k monomials)."""

    j = _degree_ideal(ideal, k)
    return sum(len(standard_monomials(j, d)) for d in range(k))


def cone_dims_oracle(ideal: Ideal, n_max: int) -> list[int]:
    """Graded dimensions of the degree filtration's layers, degrees 0..n_max.

    Layer n is (m^n + I)/(m^{n+1} + I); its dimension is the difference of
    the two finite quotient dimensions.  This is the defining filtration,
    computed without any initial-forms machinery.
    """

    codims = [_codim(ideal, k) for k in range(n_max + 2)]
    return [codims[n + 1] - codims[n] for n in range(n_max + 1)]


def socle_dims_oracle(G: GradedQuotientRing, degrees) -> dict[int, int]:
    """Degreewise dimension of the kernel of all variable multiplications."""

    out = {}
    for n in degrees:
        dim = G.dim(n)
        if dim == 0:
            out[n] = 0
            continue
        blocks = [G.mult_matrix(v, n).matrix for v in G.variable_classes()]
        stacked = np.vstack(blocks) if blocks else linalg.zeros(0, dim)
        out[n] = dim - linalg.rank(stacked, G.p)
    return out


def quotient_h0_dims(G: GradedQuotientRing, degrees) -> dict[int, int]:
    """Degreewise dimension of (I : M)/I via pure ideal arithmetic."""

    I = G.ideal
    M = Ideal(I.ring, [I.ring.variable(v) for v in I.ring.variables])
    colon = ideal_quotient(I, M)
    return {
        n: len(standard_monomials(I, n)) - len(standard_monomials(colon, n))
        for n in degrees
    }


def saturation_h0_dims(G: GradedQuotientRing, degrees,
                       cap: int = 50) -> dict[int, int]:
    """Degreewise dimension of (I : M^inf)/I by iterating ideal quotients.

    Deliberately re-iterates ``ideal_quotient`` here instead of calling the
    library's saturation helper, so the chain logic is independent too.
    """

    I = G.ideal
    M = Ideal(I.ring, [I.ring.variable(v) for v in I.ring.variables])
    current = I
    for _ in range(cap):
        nxt = ideal_quotient(current, M)
        if [str(g) for g in nxt.groebner_basis().elements] == \
                [str(g) for g in current.groebner_basis().elements]:
            break
        current = nxt
    else:
        raise RuntimeError("saturation oracle did not stabilize")
    return {
        n: len(standard_monomials(I, n)) - len(standard_monomials(current, n))
        for n in degrees
    }

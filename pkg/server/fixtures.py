#!/usr/bin/env python3
"""
Pinned data the reproduction suite relies on.

PSL(2,7) acts on the projective line over F7; points 0..6 are the field
elements and point 7 is ∞. X is z -> -1/z (order 2), Y is z -> 1 - 1/z
(order 3) and XY, acting on the right, is z -> z + 1 (order 7). The pair
was found by search over order-(2,3) pairs on 8 points with product of
order 7 and group order 168.
"""
from dataclasses import dataclass, replace

from fpgroup import FiniteQuotient, Permutation
from obstruct import (
    H2Certificate, IndecomposabilityCertificate, TRIANGLE_237_H2, TRIANGLE_237_INDECOMPOSABLE,
)

PSL27_X: Permutation = (7, 6, 3, 2, 5, 4, 1, 0)
PSL27_Y: Permutation = (7, 0, 4, 3, 6, 5, 2, 1)
# z = (xy)^-1 so that xyz = 1
PSL27_Z: Permutation = (6, 0, 1, 2, 3, 4, 5, 7)

PSL27_ORDER = 168
KLEIN_QUARTIC_GENUS = 3


def psl27_two_generator() -> FiniteQuotient:
    """Images of x, y for <x, y | x^2, y^3, (x*y)^7, ...>."""
    return FiniteQuotient((PSL27_X, PSL27_Y))


def psl27_three_generator() -> FiniteQuotient:
    """Images of x, y, z for <x, y, z | x^2, y^3, z^7, x*y*z>."""
    return FiniteQuotient((PSL27_X, PSL27_Y, PSL27_Z))


@dataclass(frozen=True)
class PaperFixtures:
    """Everything the reproduction suite takes on trust; swapped out in harness tests."""
    x: Permutation = PSL27_X
    y: Permutation = PSL27_Y
    z: Permutation = PSL27_Z
    expected_order: int = PSL27_ORDER
    h2_certificate: H2Certificate = TRIANGLE_237_H2
    indecomposable: IndecomposabilityCertificate = TRIANGLE_237_INDECOMPOSABLE

    def two_generator(self) -> FiniteQuotient:
        return FiniteQuotient((self.x, self.y))

    def three_generator(self) -> FiniteQuotient:
        return FiniteQuotient((self.x, self.y, self.z))

    def corrupted(self) -> "PaperFixtures":
        """A fixture whose y image has the wrong order, for harness checks."""
        return replace(self, y=(1, 0, 2, 3, 4, 5, 6, 7))


DEFAULT_FIXTURES = PaperFixtures()

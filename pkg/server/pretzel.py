#!/usr/bin/env python3
"""
Pretzel knots P(e1, ..., en): Goeritz forms, determinants and, for three
strands, the Seifert invariants of the double branched cover.
"""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Tuple

from exactlinalg import SymmetricForm, determinant as matrix_determinant
from seifert import SeifertInvariants

logger = logging.getLogger(__name__)


class PretzelSyntaxError(ValueError):
    """Text that is not of the form P(e1,...,en)."""


class DeterminantMismatchError(RuntimeError):
    """Goeritz determinant and product formula disagree."""


@dataclass(frozen=True)
class PretzelKnot:
    twists: Tuple[int, ...]

    def __post_init__(self):
        twists = tuple(int(e) for e in self.twists)
        if len(twists) < 3:
            raise ValueError(f"A pretzel needs at least 3 strands, got {len(twists)}")
        if any(e == 0 for e in twists):
            raise ValueError(f"Twists must be nonzero: {twists}")
        object.__setattr__(self, "twists", twists)

    @property
    def strands(self) -> int:
        return len(self.twists)

    @property
    def is_knot(self) -> bool:
        """One component iff exactly one twist is even, or none is and the strand count is odd."""
        evens = sum(1 for e in self.twists if e % 2 == 0)
        return evens == 1 or (evens == 0 and self.strands % 2 == 1)

    def __str__(self) -> str:
        return "P(" + ",".join(str(e) for e in self.twists) + ")"


def goeritz_matrix(knot: PretzelKnot) -> SymmetricForm:
    e = knot.twists
    n = len(e) - 1
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = e[i] + e[i + 1]
        if i + 1 < n:
            rows[i][i + 1] = rows[i + 1][i] = -e[i + 1]
    return SymmetricForm.from_rows(rows)


def product_formula(knot: PretzelKnot) -> int:
    """|Σi Πj≠i ej|."""
    e = knot.twists
    return abs(sum(prod(e[:i] + e[i + 1:]) for i in range(len(e))))


def determinant(knot: PretzelKnot) -> int:
    value = abs(matrix_determinant(goeritz_matrix(knot).entries))
    expected = product_formula(knot)
    if value != expected:
        raise DeterminantMismatchError(f"{knot}: Goeritz gives {value}, product formula gives {expected}")
    return value


def double_branched_cover(knot: PretzelKnot) -> SeifertInvariants:
    """S2(0; -1/e1, -1/e2, -1/e3) with ±1 twists folded into b."""
    if knot.strands != 3:
        raise ValueError(f"Double branched cover is only modeled for 3 strands, {knot} has {knot.strands}")
    return SeifertInvariants.normalized(0, [Fraction(-1, e) for e in knot.twists])


def band_sum(knot: PretzelKnot, n: int) -> PretzelKnot:
    """Attach one more twisted band: P(e1..em) -> P(e1..em, n)."""
    return PretzelKnot(knot.twists + (n,))


_PRETZEL_RE = re.compile(r"\s*P\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)\s*")


def parse_pretzel(text: str) -> PretzelKnot:
    m = _PRETZEL_RE.fullmatch(text)
    if not m:
        raise PretzelSyntaxError(f"Expected P(e1,...,en), got {text!r}")
    twists = tuple(int(v) for v in m.group(1).split(","))
    try:
        return PretzelKnot(twists)
    except ValueError as e:
        raise PretzelSyntaxError(str(e)) from e

#!/usr/bin/env python3
"""
Seifert fibered spaces over the two-sphere.

S2(b; β1/α1, ..., βn/αn) with every αi >= 2. Convention:
e = -(b + Σ βi/αi), and the fundamental group is
<x1..xn, h | [xi, h], xi^αi h^βi, x1...xn h^-b>.
"""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, List, Optional, Tuple

from fpgroup import (
    Presentation, Word, abelianization, commutator, eliminate_generator, quotient_by,
)

logger = logging.getLogger(__name__)


class SeifertSyntaxError(ValueError):
    """Text that is not of the form S2(b; p/q, ...)."""


class HomologyMismatchError(RuntimeError):
    """The SNF order of H1 disagrees with |α1...αn · e|."""


@dataclass(frozen=True)
class SeifertInvariants:
    """Unnormalized Seifert invariants over S²; fibers keep their input order."""
    b: int
    fibers: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        fibers = tuple(Fraction(f) for f in self.fibers)
        for f in fibers:
            if f.denominator < 2:
                raise ValueError(f"Exceptional fiber {f} needs multiplicity >= 2; fold it into b instead")
        object.__setattr__(self, "fibers", fibers)

    @classmethod
    def normalized(cls, b: int, fibers: Iterable[Fraction]) -> "SeifertInvariants":
        """Fold integer-valued fibers into b, keep the rest in order."""
        kept: List[Fraction] = []
        for f in fibers:
            f = Fraction(f)
            if f.denominator == 1:
                b += f.numerator
            else:
                kept.append(f)
        return cls(b, tuple(kept))

    @property
    def multiplicities(self) -> Tuple[int, ...]:
        return tuple(f.denominator for f in self.fibers)

    def __str__(self) -> str:
        if not self.fibers:
            return f"S2({self.b};)"
        return f"S2({self.b}; " + ", ".join(f"{f.numerator}/{f.denominator}" for f in self.fibers) + ")"


def euler_number(s: SeifertInvariants) -> Fraction:
    return -(s.b + sum(s.fibers, Fraction(0)))


def pi1_presentation(s: SeifertInvariants) -> Presentation:
    n = len(s.fibers)
    names = tuple(f"x{i + 1}" for i in range(n)) + ("h",)
    h = Word.generator(n)
    xs = [Word.generator(i) for i in range(n)]
    relators = [commutator(x, h) for x in xs]
    relators += [x ** f.denominator * h ** f.numerator for x, f in zip(xs, s.fibers)]
    product = reduce(lambda u, v: u * v, xs, Word.identity())
    relators.append(product * h ** (-s.b))
    return Presentation(names, tuple(relators))


def h1_order(s: SeifertInvariants) -> Optional[int]:
    """|H1| through the Smith normal form, None when H1 is infinite."""
    order = abelianization(pi1_presentation(s)).order
    e = euler_number(s)
    if e != 0:
        expected = abs(reduce(lambda u, v: u * v, s.multiplicities, 1) * e)
        if order is None or expected.denominator != 1 or order != expected.numerator:
            raise HomologyMismatchError(f"{s}: SNF gives |H1| = {order}, formula gives {expected}")
    elif order is not None:
        raise HomologyMismatchError(f"{s}: e = 0 but SNF gives finite |H1| = {order}")
    return order


def kill_regular_fiber(s: SeifertInvariants) -> Presentation:
    """The base orbifold group <x1..xn | xi^αi, x1...xn>."""
    n = len(s.fibers)
    killed = quotient_by(pi1_presentation(s), [Word.generator(n)])
    result = eliminate_generator(killed, n)
    logger.debug(f"🧵 Killed the regular fiber of {s}: {result}")
    return result


def normalization_move(s: SeifertInvariants, index: int) -> SeifertInvariants:
    """(b, β/α) -> (b + 1, (β - α)/α) on fiber `index`; the Euler number is unchanged."""
    if not 0 <= index < len(s.fibers):
        raise IndexError(f"{s} has no fiber {index}")
    f = s.fibers[index]
    fibers = list(s.fibers)
    fibers[index] = f - 1
    return SeifertInvariants(s.b + 1, tuple(fibers))


def _power_of(word: Word) -> Optional[Tuple[int, int]]:
    gens = {abs(x) for x in word}
    if len(gens) != 1:
        return None
    return abs(word.letters[0]) - 1, len(word)


def matches_triangle(presentation: Presentation, p: int, q: int, r: int) -> bool:
    """
    Syntactic check: three generators, one pure power relator per generator
    and one product relator using each generator exactly once with a common
    sign. The product order names the generators x, y, z; the power
    exponents must then form the multiset {p, q, r}.
    """
    if presentation.generator_count != 3 or presentation.relator_count != 4:
        return False
    powers = {}
    products = []
    for relator in presentation.relators:
        power = _power_of(relator)
        if power is not None and power[0] not in powers and len(relator) > 1:
            powers[power[0]] = power[1]
        else:
            products.append(relator)
    if len(powers) != 3 or len(products) != 1:
        return False
    product = products[0].letters
    if product[0] < 0:
        product = Word(product).inverse().letters
    if sorted(product) != [1, 2, 3]:
        return False
    exponents = [powers[x - 1] for x in product]
    return sorted(exponents) == sorted((p, q, r))


_SEIFERT_RE = re.compile(r"\s*S2\(\s*(-?\d+)\s*;(.*)\)\s*")
_FRACTION_RE = re.compile(r"\s*(-?\d+)\s*/\s*(\d+)\s*")


def parse_seifert(text: str) -> SeifertInvariants:
    """Parse `S2(0; 1/2, -1/3, -1/7)`; integer-valued fibers fold into b."""
    m = _SEIFERT_RE.fullmatch(text)
    if not m:
        raise SeifertSyntaxError(f"Expected S2(b; p/q, ...), got {text!r}")
    b = int(m.group(1))
    body = m.group(2)
    fibers: List[Fraction] = []
    if body.strip():
        for item in body.split(","):
            f = _FRACTION_RE.fullmatch(item)
            if not f:
                raise SeifertSyntaxError(f"Fiber {item.strip()!r} is not a fraction p/q")
            if int(f.group(2)) == 0:
                raise SeifertSyntaxError(f"Fiber {item.strip()!r} has zero denominator")
            fibers.append(Fraction(int(f.group(1)), int(f.group(2))))
    return SeifertInvariants.normalized(b, fibers)

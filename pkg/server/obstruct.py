#!/usr/bin/env python3
"""
Knotted-surface calculus and the stable-irreducibility decision procedures.

Surfaces are described symbolically (double of a ribbon surface, 2-knot,
unknotted surface, connected sum). Their branched double covers are modeled
by intersection-form data plus a fundamental-group presentation and an H2
certificate. The three checks return a Verdict with a replayable ProofTrace;
a failed hypothesis yields an Inconclusive verdict, never an exception.
"""
import logging
import operator
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from exactlinalg import (
    Parity, SymmetricForm, direct_sum_all, parity, signature_of,
)
from fpgroup import Presentation, b2_upper_bound, free_product_all, triangle_presentation
from pretzel import PretzelKnot, band_sum, double_branched_cover
from seifert import kill_regular_fiber, matches_triangle

logger = logging.getLogger(__name__)

DEFAULT_SWEEP_BOUND = 10
COVER_CACHE_SIZE = 256


class SurfaceSpecError(ValueError):
    """A surface description violates its own invariants."""


class CertificateError(ValueError):
    """An H2 certificate is missing or exceeds the presentation bound."""


class HopfSequenceError(ValueError):
    """Certified rank of H2(π1) exceeds b2 of the cover."""


# --- Surface types -----------------------------------------------------------

@dataclass(frozen=True)
class SurfaceType:
    orientable: bool
    genus: int = 0
    crosscaps: int = 0

    def __post_init__(self):
        if self.orientable:
            if self.genus < 0 or self.crosscaps != 0:
                raise SurfaceSpecError(f"Orientable surface needs genus >= 0 and no crosscaps: {self}")
        elif self.crosscaps < 1 or self.genus != 0:
            raise SurfaceSpecError(f"Non-orientable surface needs at least one crosscap: {self}")

    @classmethod
    def sphere(cls) -> "SurfaceType":
        return cls(True, 0)

    @classmethod
    def torus(cls) -> "SurfaceType":
        return cls(True, 1)

    @classmethod
    def projective_plane(cls) -> "SurfaceType":
        return cls(False, crosscaps=1)

    @classmethod
    def klein_bottle(cls) -> "SurfaceType":
        return cls(False, crosscaps=2)

    @property
    def euler(self) -> int:
        return 2 - 2 * self.genus if self.orientable else 2 - self.crosscaps

    @property
    def is_klein(self) -> bool:
        return not self.orientable and self.crosscaps == 2

    def connected_sum(self, other: "SurfaceType") -> "SurfaceType":
        chi = self.euler + other.euler - 2
        if self.orientable and other.orientable:
            return SurfaceType(True, (2 - chi) // 2)
        return SurfaceType(False, crosscaps=2 - chi)

    def __str__(self) -> str:
        if self.orientable:
            return {0: "sphere", 1: "torus"}.get(self.genus, f"orientable g={self.genus}")
        return {1: "projective plane", 2: "klein"}.get(self.crosscaps, f"nonorientable c={self.crosscaps}")


# --- Certificates ------------------------------------------------------------

class H2Provenance(Enum):
    LITERATURE = "literature"
    FREE_PRODUCT = "free-product additivity"
    ASSUMED = "assumed"


@dataclass(frozen=True)
class H2Certificate:
    """Rank of H2(π1(Σ2(S))) over Q, with where the number comes from."""
    rank: int
    provenance: H2Provenance
    citation: str
    parts: Tuple["H2Certificate", ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise CertificateError(f"Certificate rank must be >= 0, got {self.rank}")
        if self.provenance is H2Provenance.FREE_PRODUCT and self.rank != sum(p.rank for p in self.parts):
            raise CertificateError("Free-product certificate rank must be the sum of its parts")

    @classmethod
    def literature(cls, rank: int, citation: str) -> "H2Certificate":
        return cls(rank, H2Provenance.LITERATURE, citation)

    @classmethod
    def assumed(cls, rank: int, note: str = "what-if") -> "H2Certificate":
        return cls(rank, H2Provenance.ASSUMED, note)

    @classmethod
    def free_product(cls, parts: Sequence["H2Certificate"]) -> "H2Certificate":
        parts = tuple(parts)
        if len(parts) == 1:
            return parts[0]
        citation = f"sum over {len(parts)} free factors: " + "; ".join(sorted({p.citation for p in parts}))
        return cls(sum(p.rank for p in parts), H2Provenance.FREE_PRODUCT, citation, parts)

    def describe(self) -> str:
        return f"rank {self.rank} ({self.provenance.value}: {self.citation})"


@dataclass(frozen=True)
class IndecomposabilityCertificate:
    """Asserts that a group is not a nontrivial free product."""
    group: str
    citation: str


TRIANGLE_237_H2 = H2Certificate.literature(
    1, "H2(T(2,3,7)) = Z: the kernel of T(2,3,7) -> PSL(2,7) is a genus-3 surface group"
)
TRIANGLE_237_INDECOMPOSABLE = IndecomposabilityCertificate(
    "T(2,3,7)", "T(2,3,7) is freely indecomposable (Cayley graph argument)"
)


# --- Surface specs -----------------------------------------------------------

@dataclass(frozen=True)
class DoubleOfRibbon:
    """The double of a ribbon surface; b2 of its cover is 2k and the signature is 0."""
    surface_type: SurfaceType
    k: int
    cover_pi1: Presentation
    h2_cert: Optional[H2Certificate] = None
    name: str = "S"
    notes: Tuple[str, ...] = ()
    normal_euler: int = 0

    def __post_init__(self):
        if self.k < 0:
            raise SurfaceSpecError(f"{self.name}: k must be >= 0")
        if self.surface_type.euler != 2 - 2 * self.k:
            raise SurfaceSpecError(
                f"{self.name}: χ({self.surface_type}) = {self.surface_type.euler} but 2 - 2k = {2 - 2 * self.k}"
            )
        if self.normal_euler != 0:
            raise SurfaceSpecError(f"{self.name}: a double has normal Euler number 0")
        if self.h2_cert is not None:
            bound = b2_upper_bound(self.cover_pi1)
            if self.h2_cert.rank > bound:
                raise CertificateError(
                    f"{self.name}: certificate rank {self.h2_cert.rank} exceeds b2 bound {bound} of {self.cover_pi1}"
                )

    def intersection_form(self) -> SymmetricForm:
        """k hyperbolic blocks for an orientable double, k copies of (+1) ⊕ (-1) otherwise."""
        if self.surface_type.orientable:
            return direct_sum_all([SymmetricForm.hyperbolic()] * self.k)
        return direct_sum_all([SymmetricForm.diagonal(1, -1)] * self.k)


@dataclass(frozen=True)
class TwoKnot:
    name: str = "K"

    @property
    def surface_type(self) -> SurfaceType:
        return SurfaceType.sphere()


@dataclass(frozen=True)
class Unknotted:
    """Standard unknotted surface with the given normal Euler number."""
    surface_type: SurfaceType
    normal_euler: int = 0

    def __post_init__(self):
        t, e = self.surface_type, self.normal_euler
        if t.orientable:
            if e != 0:
                raise SurfaceSpecError(f"Unknotted orientable surface has normal Euler number 0, got {e}")
        elif abs(e) > 2 * t.crosscaps or (e - 2 * t.crosscaps) % 4 != 0:
            raise SurfaceSpecError(
                f"Unknotted surface with {t.crosscaps} crosscaps cannot have normal Euler number {e}"
            )

    @classmethod
    def rp2(cls, normal_euler: int) -> "Unknotted":
        return cls(SurfaceType.projective_plane(), normal_euler)

    @property
    def name(self) -> str:
        return f"U({self.surface_type}, e={self.normal_euler})"


@dataclass(frozen=True)
class ConnectedSum:
    parts: Tuple["SurfaceSpec", ...]

    def __post_init__(self):
        flat: List[SurfaceSpec] = []
        for part in self.parts:
            flat.extend(part.parts if isinstance(part, ConnectedSum) else (part,))
        if not flat:
            raise SurfaceSpecError("A connected sum needs at least one summand")
        object.__setattr__(self, "parts", tuple(flat))

    @classmethod
    def of(cls, *parts: "SurfaceSpec") -> "ConnectedSum":
        return cls(tuple(parts))

    @property
    def surface_type(self) -> SurfaceType:
        result = self.parts[0].surface_type
        for part in self.parts[1:]:
            result = result.connected_sum(part.surface_type)
        return result

    @property
    def name(self) -> str:
        return " # ".join(p.name for p in self.parts)


SurfaceSpec = Union[DoubleOfRibbon, TwoKnot, Unknotted, ConnectedSum]


def euler_characteristic(spec: SurfaceSpec) -> int:
    if isinstance(spec, ConnectedSum):
        return sum(euler_characteristic(p) for p in spec.parts) - 2 * (len(spec.parts) - 1)
    return spec.surface_type.euler


# --- Branched double covers --------------------------------------------------

@dataclass(frozen=True)
class CoverInvariants:
    """Second-homology data of Σ2(S); pi1 is None when unknown."""
    b2: int
    b_plus: int
    b_minus: int
    pi1: Optional[Presentation]
    pi1_h2_rank: int
    spin_parity: Optional[Parity]

    def __post_init__(self):
        if self.b_plus + self.b_minus != self.b2:
            raise ValueError(f"b+ + b- = {self.b_plus + self.b_minus} but b2 = {self.b2}")

    @property
    def signature(self) -> int:
        return self.b_plus - self.b_minus

    @property
    def parity_label(self) -> str:
        return self.spin_parity.value if self.spin_parity else "unknown"


def _from_form(form: SymmetricForm, pi1: Optional[Presentation], h2_rank: int) -> CoverInvariants:
    sig = signature_of(form)
    if sig.b_zero:
        raise SurfaceSpecError(f"Cover form is degenerate: {sig}")
    return CoverInvariants(form.dimension, sig.b_plus, sig.b_minus, pi1, h2_rank, parity(form))


@lru_cache(maxsize=COVER_CACHE_SIZE)
def _unknotted_cover(spec: Unknotted) -> CoverInvariants:
    t, e = spec.surface_type, spec.normal_euler
    trivial = Presentation(())
    if t.orientable:
        return _from_form(direct_sum_all([SymmetricForm.hyperbolic()] * t.genus), trivial, 0)
    # pinned: RP²(e = -2) has cover CP² (+1), RP²(e = +2) its reverse (-1)
    plus = (t.crosscaps - e // 2) // 2
    minus = t.crosscaps - plus
    return _from_form(SymmetricForm.diagonal(*([1] * plus + [-1] * minus)), trivial, 0)


def connected_sum_cover(covers: Sequence[CoverInvariants]) -> CoverInvariants:
    """Σ2 of a connected sum is the connected sum of the covers; π1 is the free product."""
    pi1 = None
    if all(c.pi1 is not None for c in covers):
        pi1 = free_product_all([c.pi1 for c in covers])
    parities = {c.spin_parity for c in covers}
    if Parity.ODD in parities:
        spin = Parity.ODD
    elif None in parities:
        spin = None
    else:
        spin = Parity.EVEN
    return CoverInvariants(
        sum(c.b2 for c in covers), sum(c.b_plus for c in covers), sum(c.b_minus for c in covers),
        pi1, sum(c.pi1_h2_rank for c in covers), spin,
    )


@lru_cache(maxsize=COVER_CACHE_SIZE)
def cover_invariants(spec: SurfaceSpec) -> CoverInvariants:
    if isinstance(spec, DoubleOfRibbon):
        if spec.h2_cert is None:
            raise CertificateError(f"{spec.name}: no H2 certificate for the cover group")
        return _from_form(spec.intersection_form(), spec.cover_pi1, spec.h2_cert.rank)
    if isinstance(spec, TwoKnot):
        # rational homology 4-sphere; π1 left symbolic
        return CoverInvariants(0, 0, 0, None, 0, Parity.EVEN)
    if isinstance(spec, Unknotted):
        return _unknotted_cover(spec)
    if isinstance(spec, ConnectedSum):
        return connected_sum_cover([cover_invariants(p) for p in spec.parts])
    raise SurfaceSpecError(f"Unknown surface spec {spec!r}")


def pi2_image_rank(cover: CoverInvariants) -> int:
    """Rank of im(π2 -> H2) = b2 - rk H2(π1), from the Hopf exact sequence."""
    if cover.pi1_h2_rank > cover.b2:
        raise HopfSequenceError(f"rk H2(π1) = {cover.pi1_h2_rank} exceeds b2 = {cover.b2}")
    return cover.b2 - cover.pi1_h2_rank


# --- Restricted intersection form --------------------------------------------

@dataclass(frozen=True)
class StabilizedSurface:
    """A core summed with unknotted stabilizers; core None stands for an unknown S′."""
    core: Optional[SurfaceSpec]
    stabilizers: Tuple[Unknotted, ...] = ()

    @classmethod
    def with_rp2s(cls, core: Optional[SurfaceSpec], minus_two: int, plus_two: int) -> "StabilizedSurface":
        return cls(core, (Unknotted.rp2(-2),) * minus_two + (Unknotted.rp2(2),) * plus_two)


@dataclass(frozen=True)
class RestrictedFormSummary:
    """The intersection form restricted to im(π2 -> H2)."""
    total_rank: int
    zero_summand_rank: int
    pos: int
    neg: int
    lower_bound: bool = False

    def __post_init__(self):
        if self.total_rank != self.zero_summand_rank + self.pos + self.neg:
            raise ValueError("Restricted form ranks do not add up")

    @property
    def nondegenerate_rank(self) -> int:
        return self.pos + self.neg


def restricted_form(side: StabilizedSurface) -> RestrictedFormSummary:
    pos = neg = 0
    for stabilizer in side.stabilizers:
        cover = _unknotted_cover(stabilizer)
        pos += cover.b_plus
        neg += cover.b_minus
    if side.core is None:
        # only the stabilizer classes are known to be spherical
        return RestrictedFormSummary(pos + neg, 0, pos, neg, lower_bound=True)
    if not isinstance(side.core, DoubleOfRibbon):
        raise SurfaceSpecError(f"No spherical-class rule for a {type(side.core).__name__} core")
    k = side.core.k
    return RestrictedFormSummary(k + pos + neg, k, pos, neg)


# --- Proof traces ------------------------------------------------------------

_RELATIONS: Dict[str, Callable[[int, int], bool]] = {
    "=": operator.eq, "!=": operator.ne, "<": operator.lt,
    "<=": operator.le, ">": operator.gt, ">=": operator.ge,
}


@dataclass(frozen=True)
class Claim:
    lhs: int
    relation: str
    rhs: int

    def __post_init__(self):
        if self.relation not in _RELATIONS:
            raise ValueError(f"Unknown relation {self.relation!r}")

    def holds(self) -> bool:
        return _RELATIONS[self.relation](self.lhs, self.rhs)

    def __str__(self) -> str:
        return f"{self.lhs} {self.relation} {self.rhs}"


@dataclass(frozen=True)
class TraceLine:
    statement: str
    justification: str
    claim: Optional[Claim] = None


@dataclass(frozen=True)
class ProofTrace:
    lines: Tuple[TraceLine, ...] = ()

    def __len__(self) -> int:
        return len(self.lines)

    def replay(self) -> bool:
        """Re-evaluate every arithmetic claim."""
        return all(line.claim is None or line.claim.holds() for line in self.lines)

    def failed_lines(self) -> List[int]:
        return [i + 1 for i, line in enumerate(self.lines) if line.claim is not None and not line.claim.holds()]

    def render(self) -> List[str]:
        out = []
        for i, line in enumerate(self.lines, 1):
            check = f" ⟨{line.claim}⟩" if line.claim else ""
            out.append(f"{i:3d}. {line.statement}{check}  [{line.justification}]")
        return out


class Conclusion(Enum):
    STABLY_IRREDUCIBLE = "StablyIrreducible"
    NOT_SPHERE_SUM_UNKNOTTED = "NotSphereSumUnknotted"
    NO_RP2_SPLITTING = "NoRp2Splitting"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Verdict:
    conclusion: Conclusion
    trace: ProofTrace
    reason: Optional[str] = None
    notes: Tuple[str, ...] = ()

    @property
    def conclusive(self) -> bool:
        return self.conclusion is not Conclusion.INCONCLUSIVE

    def __str__(self) -> str:
        if self.reason:
            return f"{self.conclusion.value}({self.reason})"
        return self.conclusion.value


class _TraceBuilder:
    def __init__(self):
        self.lines: List[TraceLine] = []

    def add(self, statement: str, justification: str, claim: Optional[Claim] = None) -> bool:
        self.lines.append(TraceLine(statement, justification, claim))
        return claim is None or claim.holds()

    def verdict(self, conclusion: Conclusion, reason: Optional[str] = None,
                notes: Tuple[str, ...] = ()) -> Verdict:
        return Verdict(conclusion, ProofTrace(tuple(self.lines)), reason, notes)


def _inconclusive(trace: _TraceBuilder, name: str, reason: str) -> Verdict:
    logger.warning(f"⚠️ {name}: inconclusive ({reason})")
    return trace.verdict(Conclusion.INCONCLUSIVE, reason)


# --- Decision procedures -----------------------------------------------------

def check_theorem(spec: DoubleOfRibbon, sweep_bound: int = DEFAULT_SWEEP_BOUND) -> Verdict:
    """
    Stable irreducibility of a double of a ribbon surface.

    Eight hypothesis lines, then for each 1 <= ℓ < ℓ′ <= sweep_bound two
    lines comparing the nondegenerate rank of the restricted form on S # U
    (exactly ℓ, every sign split of the ℓ stabilizing RP²s) with the rank on
    S′ # U′ (at least ℓ′), then one symbolic line and the conclusion.
    """
    if sweep_bound < 1:
        raise ValueError(f"Sweep bound must be >= 1, got {sweep_bound}")
    trace = _TraceBuilder()
    k, chi = spec.k, euler_characteristic(spec)

    trace.add(f"χ({spec.name}) = 2 - 2k with k = {k}", f"{spec.surface_type} double of a ribbon surface",
              Claim(chi, "=", 2 - 2 * k))
    if not trace.add(f"χ({spec.name}) = {chi} < 2", "hypothesis χ(S) < 2", Claim(chi, "<", 2)):
        return _inconclusive(trace, spec.name, "χ not < 2")
    if spec.h2_cert is None:
        trace.add("rk H2(π1(Σ2(S))) is not certified", "no H2 certificate")
        return _inconclusive(trace, spec.name, "no H2 certificate")
    rank = spec.h2_cert.rank
    if not trace.add(f"rk H2(π1(Σ2({spec.name}))) = {rank} = k", f"certificate {spec.h2_cert.describe()}",
                     Claim(rank, "=", k)):
        return _inconclusive(trace, spec.name, "rank ≠ k")
    # always holds: DoubleOfRibbon rejects larger certificates
    bound = b2_upper_bound(spec.cover_pi1)
    trace.add(f"certificate rank {rank} <= b2 of the presentation complex ({bound})",
              "b2(G) is bounded by the presentation 2-complex", Claim(rank, "<=", bound))

    cover = cover_invariants(spec)
    trace.add(f"b2(Σ2({spec.name})) = 2k = {cover.b2}", "double of a ribbon surface", Claim(cover.b2, "=", 2 * k))
    trace.add(f"σ(Σ2({spec.name})) = {cover.signature}", "double of a ribbon surface", Claim(cover.signature, "=", 0))
    hopf = pi2_image_rank(cover)
    trace.add(f"rank im(π2 -> H2) = b2 - rk H2(π1) = {hopf}", "Hopf exact sequence", Claim(hopf, "=", k))
    core = restricted_form(StabilizedSurface(spec))
    if not trace.add(f"restricted form on {spec.name} has a rank-{core.zero_summand_rank} zero summand",
                     "k disjoint square-zero embedded spheres from the ribbon double",
                     Claim(core.zero_summand_rank, "=", k)):
        return _inconclusive(trace, spec.name, "no rank-k zero summand")
    if not ProofTrace(tuple(trace.lines)).replay():
        return _inconclusive(trace, spec.name, "cover data inconsistent with a ribbon double")

    pairs = 0
    for ell_prime in range(2, sweep_bound + 1):
        for ell in range(1, ell_prime):
            exact = _nondegenerate_ranks(spec, cover, ell)
            rank = exact[0] if len(set(exact)) == 1 else -1
            bound_prime = min(restricted_form(StabilizedSurface.with_rp2s(None, m, ell_prime - m)).nondegenerate_rank
                              for m in range(ell_prime + 1))
            trace.add(
                f"{spec.name} # U, U = {ell} unknotted RP²s: nondegenerate rank = {rank} "
                f"(all {ell + 1} sign splits)",
                "stabilizers contribute ℓ+[+1] ⊕ ℓ-[-1]; zero summand has rank k",
                Claim(rank, "=", ell),
            )
            trace.add(
                f"S′ # U′ with χ(S′) = χ({spec.name}) + {ell_prime - ell}, U′ = {ell_prime} RP²s: "
                f"nondegenerate rank >= {bound_prime} > {ell}, contradiction",
                "U′ classes are spherical; equivalence preserves the restricted form",
                Claim(bound_prime, ">", ell),
            )
            pairs += 1
    trace.add("for every ℓ′ > ℓ: a rank-ℓ nondegenerate part cannot contain one of rank >= ℓ′",
              "general inequality, not replayed")
    trace.add(f"{spec.name} is stably irreducible ({pairs} stabilization pairs checked)",
              f"sweep 1 <= ℓ < ℓ′ <= {sweep_bound}", Claim(pairs, "=", sweep_bound * (sweep_bound - 1) // 2))

    result = trace.verdict(Conclusion.STABLY_IRREDUCIBLE, notes=spec.notes + ("stably irreducible ⟹ irreducible",))
    if not result.trace.replay():
        return _inconclusive(trace, spec.name, f"trace lines {result.trace.failed_lines()} do not replay")
    logger.info(f"✅ {spec.name}: stably irreducible ({len(result.trace)} trace lines)")
    return result


def _nondegenerate_ranks(spec: DoubleOfRibbon, cover: CoverInvariants, ell: int) -> List[int]:
    """Nondegenerate rank on S # U for every sign split, checked against the Hopf rank of the sum."""
    ranks = []
    for minus_two in range(ell + 1):
        side = StabilizedSurface.with_rp2s(spec, minus_two, ell - minus_two)
        summary = restricted_form(side)
        summed = connected_sum_cover([cover] + [_unknotted_cover(s) for s in side.stabilizers])
        if summary.total_rank != pi2_image_rank(summed) or summary.zero_summand_rank != spec.k:
            raise HopfSequenceError(f"{spec.name} # {ell} RP²s: restricted form does not fill im(π2)")
        ranks.append(summary.nondegenerate_rank)
    return ranks


def check_proposition(spec: SurfaceSpec) -> Verdict:
    """S is not a 2-knot summed with unknotted surfaces when its cover group has H2."""
    chi = euler_characteristic(spec)
    name = getattr(spec, "name", "S")
    if chi >= 2:
        raise SurfaceSpecError(f"{name} is a sphere; the proposition needs χ < 2")
    trace = _TraceBuilder()
    trace.add(f"χ({name}) = {chi} < 2, so {name} is not a sphere", "surface type", Claim(chi, "<", 2))
    try:
        cover = cover_invariants(spec)
    except CertificateError:
        trace.add("rk H2(π1(Σ2(S))) is not certified", "no H2 certificate")
        return _inconclusive(trace, name, "no H2 certificate")
    rank = cover.pi1_h2_rank
    knot_b2 = cover_invariants(TwoKnot()).b2
    trace.add(f"if {name} = N # U with N a 2-knot: b2(Σ2(N)) = {knot_b2}",
              "Σ2 of a 2-knot is a rational homology 4-sphere", Claim(knot_b2, "=", 0))
    trace.add(f"b2(π1(Σ2(N))) = b2(π1(Σ2({name}))) = {rank}",
              "Σ2(U) is simply connected, so π1 is unchanged", Claim(rank, ">=", 0))
    if not trace.add(f"0 = b2(Σ2(N)) >= b2(π1(Σ2(N))) = b2(π1(Σ2({name}))) = {rank} > 0",
                     "Hopf exact sequence", Claim(rank, ">", 0)):
        return _inconclusive(trace, name, "b₂(π₁) = 0")
    trace.add(f"{name} is not a 2-knot summed with unknotted surfaces", "contradiction")
    logger.info(f"✅ {name}: not a 2-knot plus unknotted surfaces")
    return trace.verdict(Conclusion.NOT_SPHERE_SUM_UNKNOTTED)


def check_remark_rp2_split(spec: DoubleOfRibbon,
                           certificate: Optional[IndecomposabilityCertificate]) -> Verdict:
    """A Klein-bottle double with freely indecomposable cover group is not P1 # P2 for projective planes Pi."""
    if not isinstance(spec, DoubleOfRibbon) or not spec.surface_type.is_klein:
        raise SurfaceSpecError(f"{getattr(spec, 'name', spec)} is not a Klein bottle double")
    trace = _TraceBuilder()
    if certificate is None:
        trace.add("free indecomposability of π1(Σ2(S)) is not certified", "no certificate")
        return _inconclusive(trace, spec.name, "no indecomposability certificate")
    cover = cover_invariants(spec)
    if cover.b2 != 2 or cover.signature != 0:
        trace.add(f"b2 = {cover.b2}, σ = {cover.signature}", "remark needs b2 = 2 and σ = 0",
                  Claim(cover.b2, "=", 2))
        return _inconclusive(trace, spec.name, "cover is not b2 = 2 with σ = 0")
    hopf = pi2_image_rank(cover)
    trace.add(f"σ(Σ2({spec.name})) = 0 with b2 = 2, so Q = Q_P1 ⊕ Q_P2 = (+1) ⊕ (-1)",
              "Σ2(P1 # P2) = Σ2(P1) # Σ2(P2), each with b2 = 1", Claim(cover.signature, "=", 0))
    trace.add(f"π1 = π1(Σ2(P1)) * π1(Σ2(P2)) and {certificate.group} is freely indecomposable, "
              "so one factor is trivial", f"certificate: {certificate.citation}")
    trace.add("the simply connected summand puts a class of square ±1 in im(π2 -> H2)",
              "Hurewicz", Claim(1, "<=", hopf))
    trace.add("an orientation-reversing homeomorphism of the double gives a class of the opposite square",
              "doubles admit orientation reversal", Claim(cover.b_plus, "=", cover.b_minus))
    trace.add(f"then im(π2) = H2 has rank {cover.b2}, but rank im(π2) = b2 - rk H2(π1) = {hopf}",
              "contradicts the Hopf exact sequence", Claim(hopf, "<", cover.b2))
    logger.info(f"✅ {spec.name}: no RP² # RP² splitting")
    return trace.verdict(Conclusion.NO_RP2_SPLITTING)


# --- Constructions -----------------------------------------------------------

def corollary_surface(ell: int, orientable: bool,
                      certificate: H2Certificate = TRIANGLE_237_H2) -> DoubleOfRibbon:
    """#ℓ of the ribbon double whose cover group is T(2,3,7): a genus-ℓ surface or ℓ Klein bottles."""
    if ell < 1:
        raise ValueError(f"ℓ must be >= 1, got {ell}")
    pi1 = free_product_all([triangle_presentation(2, 3, 7)] * ell)
    cert = H2Certificate.free_product([certificate] * ell)
    if orientable:
        surface, label = SurfaceType(True, ell), "T"
    else:
        surface, label = SurfaceType(False, crosscaps=2 * ell), "Kb"
    name = label if ell == 1 else f"#{ell} {label}"
    return DoubleOfRibbon(surface, ell, pi1, cert, name=name,
                          notes=("cover X is a double; S is a torus if X is spin, a Klein bottle otherwise",))


Y_KNOT = PretzelKnot((-2, 3, 7))


def pretzel_band_surface(n: int) -> DoubleOfRibbon:
    """
    Double of the ribbon disk for P(-2,3,7) # -P(-2,3,7) with one band to
    P(-2,3,7,n): a torus when the band gives a two-component link (n even),
    a Klein bottle otherwise.
    """
    boundary = band_sum(Y_KNOT, n)
    y = double_branched_cover(Y_KNOT)
    cover = kill_regular_fiber(y)
    if not matches_triangle(cover, 2, 3, 7):
        raise RuntimeError(f"Killing a fiber of {y} did not give T(2,3,7): {cover}")
    surface = SurfaceType.klein_bottle() if boundary.is_knot else SurfaceType.torus()
    return DoubleOfRibbon(
        surface, 1, cover, TRIANGLE_237_H2, name=f"band{n}",
        notes=(f"Σ2(D) = (Y - B³) × I with Y = {y}",
               "the lift C of the band arc is a regular fiber of Y",
               f"band surgery gives {boundary}"),
    )

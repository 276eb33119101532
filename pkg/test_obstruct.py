import random

import pytest

from exactlinalg import Parity, signature_of
from fpgroup import Presentation, b2_upper_bound, triangle_presentation
from obstruct import (
    COVER_CACHE_SIZE, CertificateError, Conclusion, ConnectedSum, CoverInvariants, DoubleOfRibbon, H2Certificate,
    H2Provenance, HopfSequenceError, StabilizedSurface, SurfaceSpecError, SurfaceType, TRIANGLE_237_H2,
    TRIANGLE_237_INDECOMPOSABLE, TwoKnot, Unknotted, check_proposition, check_remark_rp2_split, check_theorem,
    corollary_surface, cover_invariants, euler_characteristic, pi2_image_rank, pretzel_band_surface,
    restricted_form,
)
from seifert import matches_triangle


@pytest.fixture
def torus():
    return corollary_surface(1, orientable=True)


@pytest.fixture
def klein():
    return corollary_surface(1, orientable=False)


def test_surface_types():
    assert str(SurfaceType.torus()) == "torus"
    assert str(SurfaceType.klein_bottle()) == "klein"
    assert SurfaceType.klein_bottle().is_klein
    assert SurfaceType.torus().connected_sum(SurfaceType.projective_plane()) == SurfaceType(False, crosscaps=3)
    assert str(SurfaceType(True, 3)) == "orientable g=3"
    with pytest.raises(SurfaceSpecError):
        SurfaceType(False, crosscaps=0)


def test_euler_characteristic(torus):
    assert euler_characteristic(torus) == 0
    assert euler_characteristic(TwoKnot()) == 2
    assert euler_characteristic(ConnectedSum.of(Unknotted(SurfaceType.torus()), Unknotted.rp2(2))) == -1
    assert euler_characteristic(ConnectedSum.of(torus, Unknotted.rp2(-2), Unknotted.rp2(2))) == -2


def test_unknotted_normal_euler_constraints():
    with pytest.raises(SurfaceSpecError):
        Unknotted.rp2(0)
    with pytest.raises(SurfaceSpecError):
        Unknotted.rp2(4)
    with pytest.raises(SurfaceSpecError):
        Unknotted(SurfaceType.klein_bottle(), 2)
    with pytest.raises(SurfaceSpecError):
        Unknotted(SurfaceType.torus(), 2)
    for e in (-4, 0, 4):
        assert Unknotted(SurfaceType.klein_bottle(), e).normal_euler == e


def test_double_of_ribbon_validation():
    with pytest.raises(SurfaceSpecError):
        DoubleOfRibbon(SurfaceType.torus(), 2, triangle_presentation(2, 3, 7))
    with pytest.raises(SurfaceSpecError):
        DoubleOfRibbon(SurfaceType.torus(), 1, triangle_presentation(2, 3, 7), normal_euler=2)


def test_certificate_gate():
    assert b2_upper_bound(triangle_presentation(2, 3, 7)) == 1
    with pytest.raises(CertificateError):
        DoubleOfRibbon(SurfaceType.torus(), 1, triangle_presentation(2, 3, 7), H2Certificate.assumed(2))
    with pytest.raises(CertificateError):
        H2Certificate.assumed(-1)
    bound_line = check_theorem(corollary_surface(2, True), 2).trace.lines[3]
    assert bound_line.statement == "certificate rank 2 <= b2 of the presentation complex (2)"
    assert bound_line.claim.holds()


def test_free_product_certificates():
    assert H2Certificate.free_product([TRIANGLE_237_H2]) is TRIANGLE_237_H2
    three = H2Certificate.free_product([TRIANGLE_237_H2] * 3)
    assert three.rank == 3
    assert three.provenance is H2Provenance.FREE_PRODUCT
    assert "rank 3" in three.describe()


def test_cover_invariants_examples(torus, klein):
    cover = cover_invariants(torus)
    assert (cover.b2, cover.b_plus, cover.b_minus, cover.pi1_h2_rank) == (2, 1, 1, 1)
    assert cover.spin_parity is Parity.EVEN
    assert cover_invariants(klein).spin_parity is Parity.ODD
    assert cover_invariants(Unknotted.rp2(-2)).b_plus == 1
    assert cover_invariants(Unknotted.rp2(2)).b_minus == 1
    three = cover_invariants(Unknotted(SurfaceType(False, crosscaps=3), -2))
    assert (three.b_plus, three.b_minus) == (2, 1)
    assert cover_invariants(TwoKnot()).b2 == 0
    assert cover_invariants(Unknotted(SurfaceType(True, 2))).signature == 0


def test_connected_sum_cover_adds(torus):
    summed = cover_invariants(ConnectedSum.of(torus, Unknotted.rp2(-2), Unknotted.rp2(2)))
    assert (summed.b2, summed.b_plus, summed.b_minus) == (4, 2, 2)
    assert summed.pi1_h2_rank == 1
    assert summed.spin_parity is Parity.ODD
    assert summed.pi1.generator_count == 3
    assert ConnectedSum.of(ConnectedSum.of(torus, TwoKnot()), TwoKnot()).parts == (torus, TwoKnot(), TwoKnot())
    assert cover_invariants(ConnectedSum.of(torus, TwoKnot())).pi1 is None


def test_cover_cache_is_bounded():
    for i in range(COVER_CACHE_SIZE + 20):
        assert cover_invariants(TwoKnot(f"K{i}")).b2 == 0
    info = cover_invariants.cache_info()
    assert info.maxsize == COVER_CACHE_SIZE
    assert info.currsize <= COVER_CACHE_SIZE


def test_missing_certificate():
    bare = DoubleOfRibbon(SurfaceType.torus(), 1, triangle_presentation(2, 3, 7))
    with pytest.raises(CertificateError):
        cover_invariants(bare)


def test_pi2_image_rank(torus):
    assert pi2_image_rank(cover_invariants(torus)) == 1
    with pytest.raises(HopfSequenceError):
        pi2_image_rank(CoverInvariants(2, 1, 1, None, 3, None))


def test_restricted_form():
    summary = restricted_form(StabilizedSurface.with_rp2s(corollary_surface(2, True), 1, 2))
    assert (summary.total_rank, summary.zero_summand_rank, summary.pos, summary.neg) == (5, 2, 1, 2)
    assert summary.nondegenerate_rank == 3
    unknown = restricted_form(StabilizedSurface.with_rp2s(None, 3, 0))
    assert unknown.lower_bound and unknown.nondegenerate_rank == 3
    with pytest.raises(SurfaceSpecError):
        restricted_form(StabilizedSurface(TwoKnot()))


def test_stabilization_covariance():
    for ell in range(1, 11):
        for orientable in (True, False):
            spec = corollary_surface(ell, orientable)
            for minus_two in range(4):
                for plus_two in range(4):
                    side = StabilizedSurface.with_rp2s(spec, minus_two, plus_two)
                    summary = restricted_form(side)
                    summed = cover_invariants(ConnectedSum.of(spec, *side.stabilizers))
                    assert summary.total_rank == pi2_image_rank(summed)
                    assert summary.nondegenerate_rank == minus_two + plus_two


def test_intersection_forms():
    orientable = corollary_surface(2, True).intersection_form()
    assert orientable.dimension == 4
    assert signature_of(orientable).signature == 0
    assert corollary_surface(2, False).intersection_form().dimension == 4


def test_theorem_trace_for_the_torus(torus):
    verdict = check_theorem(torus, sweep_bound=10)
    assert verdict.conclusion is Conclusion.STABLY_IRREDUCIBLE
    assert len(verdict.trace) == 100
    assert verdict.trace.replay()
    assert verdict.trace.failed_lines() == []
    assert "stably irreducible ⟹ irreducible" in verdict.notes
    rendered = verdict.trace.render()
    assert rendered[0].startswith("  1. χ(T) = 2 - 2k")
    assert len(rendered) == 100


def test_theorem_trace_length_formula(klein):
    for n in (1, 2, 5):
        assert len(check_theorem(klein, sweep_bound=n).trace) == 8 + n * (n - 1) + 2


def test_theorem_traces_are_monotone(torus):
    short = check_theorem(torus, sweep_bound=4).trace.lines
    long = check_theorem(torus, sweep_bound=10).trace.lines
    assert long[:len(short) - 2] == short[:-2]


def test_theorem_for_corollary_family():
    for ell in range(1, 6):
        for orientable in (True, False):
            verdict = check_theorem(corollary_surface(ell, orientable), sweep_bound=3)
            assert verdict.conclusive, str(verdict)
            assert verdict.trace.replay()


def test_theorem_inconclusive_gates():
    sphere = DoubleOfRibbon(SurfaceType.sphere(), 0, Presentation(()), H2Certificate.assumed(0), name="Sph")
    assert str(check_theorem(sphere)) == "Inconclusive(χ not < 2)"
    bare = DoubleOfRibbon(SurfaceType.torus(), 1, triangle_presentation(2, 3, 7))
    assert check_theorem(bare).reason == "no H2 certificate"
    genus2 = DoubleOfRibbon(SurfaceType(True, 2), 2, triangle_presentation(2, 3, 7), TRIANGLE_237_H2)
    assert check_theorem(genus2).reason == "rank ≠ k"
    for verdict in (check_theorem(sphere), check_theorem(bare), check_theorem(genus2)):
        assert not verdict.conclusive


def test_proposition(torus, klein):
    for spec in (torus, klein, corollary_surface(3, True),
                 ConnectedSum.of(torus, Unknotted.rp2(-2), Unknotted.rp2(2))):
        verdict = check_proposition(spec)
        assert verdict.conclusion is Conclusion.NOT_SPHERE_SUM_UNKNOTTED
        assert verdict.trace.replay()
    with pytest.raises(SurfaceSpecError):
        check_proposition(TwoKnot())


def test_proposition_depends_only_on_the_certified_rank():
    rng = random.Random(8)
    for _ in range(20):
        orientable = rng.random() < 0.5
        ell = rng.randint(1, 3)
        surface = SurfaceType(True, ell) if orientable else SurfaceType(False, crosscaps=2 * ell)
        rank = rng.randint(0, 1)
        pi1 = triangle_presentation(2, 3, 7) if rank else Presentation(())
        spec = DoubleOfRibbon(surface, ell, pi1, H2Certificate.assumed(rank), name=f"S{rng.randint(0, 99)}")
        verdict = check_proposition(spec)
        assert verdict.conclusive == (rank > 0)
        if not rank:
            assert verdict.reason == "b₂(π₁) = 0"


def test_remark(klein, torus):
    verdict = check_remark_rp2_split(klein, TRIANGLE_237_INDECOMPOSABLE)
    assert verdict.conclusion is Conclusion.NO_RP2_SPLITTING
    assert len(verdict.trace) == 5
    assert verdict.trace.replay()
    assert check_remark_rp2_split(klein, None).reason == "no indecomposability certificate"
    with pytest.raises(SurfaceSpecError):
        check_remark_rp2_split(torus, TRIANGLE_237_INDECOMPOSABLE)


def test_corollary_surfaces():
    spec = corollary_surface(3, True)
    assert spec.name == "#3 T"
    assert (spec.cover_pi1.generator_count, spec.cover_pi1.relator_count) == (9, 12)
    assert b2_upper_bound(spec.cover_pi1) == spec.h2_cert.rank == 3
    assert corollary_surface(2, False).surface_type == SurfaceType(False, crosscaps=4)
    assert corollary_surface(1, False).name == "Kb"
    with pytest.raises(ValueError):
        corollary_surface(0, True)


def test_band_surfaces():
    assert pretzel_band_surface(2).surface_type == SurfaceType.torus()
    assert pretzel_band_surface(1).surface_type == SurfaceType.klein_bottle()
    band = pretzel_band_surface(1)
    assert matches_triangle(band.cover_pi1, 2, 3, 7)
    assert check_theorem(band, sweep_bound=3).conclusion is Conclusion.STABLY_IRREDUCIBLE
    assert check_remark_rp2_split(band, TRIANGLE_237_INDECOMPOSABLE).conclusive

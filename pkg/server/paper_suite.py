#!/usr/bin/env python3
"""
End-to-end reproduction suite: every anchored quantity of the obstruction
argument, recomputed in a fixed order. Each section records its numbers as
facts and fails on the first mismatch; overflows make a section
inconclusive instead.
"""
import logging
import time
from itertools import product
from typing import Callable, List

from fixtures import DEFAULT_FIXTURES, KLEIN_QUARTIC_GENUS, PaperFixtures
from fpgroup import (
    CosetOverflowError, QuotientOverflowError, Word, abelianization, b2_upper_bound,
    check_homomorphism, commutator, coset_table_from_quotient, deficiency, quotient_by,
    quotient_group_order, reidemeister_schreier, todd_coxeter, triangle_presentation,
    von_dyck_presentation,
)
from obstruct import (
    Conclusion, check_proposition, check_remark_rp2_split, check_theorem, corollary_surface,
    cover_invariants, pi2_image_rank, pretzel_band_surface,
)
from pretzel import PretzelKnot, determinant, double_branched_cover, goeritz_matrix, product_formula
from report import Report, ReportSection, Status
from seifert import euler_number, h1_order, kill_regular_fiber, matches_triangle, parse_seifert
from exactlinalg import determinant as matrix_determinant

logger = logging.getLogger(__name__)

Y_TEXT = "S2(0; 1/2, -1/3, -1/7)"


def hurwitz_presentation():
    """<x, y | x^2, y^3, (x*y)^7, [x, y]^4>."""
    base = von_dyck_presentation(2, 3, 7)
    x, y = Word.generator(0), Word.generator(1)
    return quotient_by(base, [commutator(x, y) ** 4])


def _triangle_arithmetic(section: ReportSection, fixtures: PaperFixtures, sweep: int, max_cosets: int) -> None:
    t = triangle_presentation(2, 3, 7)
    ab = abelianization(t)
    section.fact("presentation", str(t))
    section.expect("betti", ab.betti, 0)
    section.expect("torsion", list(ab.torsion), [])
    section.expect("deficiency", deficiency(t), -1)
    section.expect("b2_upper_bound", b2_upper_bound(t), fixtures.h2_certificate.rank)


def _hurwitz_quotient(section: ReportSection, fixtures: PaperFixtures, sweep: int, max_cosets: int) -> None:
    hurwitz = hurwitz_presentation()
    section.fact("presentation", str(hurwitz))
    check = check_homomorphism(hurwitz, fixtures.two_generator())
    if not section.expect("fixture_is_homomorphism", check.accepted, True):
        section.fact("witness", check.witness.format(hurwitz.generator_names))
        return
    order = quotient_group_order(fixtures.two_generator())
    section.expect("permutation_closure_order", order, fixtures.expected_order)
    table = todd_coxeter(hurwitz, [], max_cosets)
    section.expect("todd_coxeter_index", table.index, order)


def _klein_quartic_kernel(section: ReportSection, fixtures: PaperFixtures, sweep: int, max_cosets: int) -> None:
    triangle = triangle_presentation(2, 3, 7)
    three = check_homomorphism(triangle, fixtures.three_generator())
    if not section.expect("three_generator_fixture_is_homomorphism", three.accepted, True):
        return
    t = von_dyck_presentation(2, 3, 7)
    table = coset_table_from_quotient(t, fixtures.two_generator())
    section.expect("kernel_index", table.index, fixtures.expected_order)
    kernel = reidemeister_schreier(t, table)
    section.fact("schreier_generators", kernel.generator_count)
    section.fact("schreier_relators", kernel.relator_count)
    ab = abelianization(kernel)
    section.expect("kernel_betti", ab.betti, 2 * KLEIN_QUARTIC_GENUS)
    section.expect("kernel_torsion", list(ab.torsion), [])


def _seifert_pipeline(section: ReportSection, fixtures: PaperFixtures, sweep: int, max_cosets: int) -> None:
    y = parse_seifert(Y_TEXT)
    section.fact("space", str(y))
    killed = kill_regular_fiber(y)
    section.fact("orbifold_group", str(killed))
    section.expect("matches_triangle_2_3_7", matches_triangle(killed, 2, 3, 7), True)
    section.expect("h1_order", h1_order(y), 1)
    section.expect("euler_number", str(euler_number(y)), "-1/42")


def _pretzel_cross_check(section: ReportSection, fixtures: PaperFixtures, sweep: int, max_cosets: int) -> None:
    knot = PretzelKnot((-2, 3, 7))
    section.expect("goeritz_determinant", abs(matrix_determinant(goeritz_matrix(knot).entries)), 1)
    section.expect("product_formula", product_formula(knot), 1)
    section.expect("double_branched_cover", str(double_branched_cover(knot)), Y_TEXT)
    checked = exceptions = 0
    values = [e for e in range(-7, 8) if e != 0]
    for twists in product(values, repeat=3):
        k = PretzelKnot(twists)
        det = determinant(k)
        if det == 0:
            continue
        checked += 1
        if h1_order(double_branched_cover(k)) != det:
            exceptions += 1
    section.fact("sweep_pretzels_checked", checked)
    section.expect("sweep_exceptions", exceptions, 0)


def _theorem_reproduction(section: ReportSection, fixtures: PaperFixtures, sweep: int, max_cosets: int) -> None:
    for ell in range(1, 6):
        for orientable in (True, False):
            spec = corollary_surface(ell, orientable, fixtures.h2_certificate)
            verdict = check_theorem(spec, sweep)
            cover = cover_invariants(spec)
            hopf_ok = pi2_image_rank(cover) + cover.pi1_h2_rank == cover.b2
            section.fact(f"{spec.name}", f"{verdict} ({len(verdict.trace)} lines)")
            if verdict.conclusion is not Conclusion.STABLY_IRREDUCIBLE:
                section.fail(f"{spec.name}: {verdict}")
            if not verdict.trace.replay():
                section.fail(f"{spec.name}: trace lines {verdict.trace.failed_lines()} do not replay")
            if not hopf_ok:
                section.fail(f"{spec.name}: Hopf rank identity broken")
            if ell == 1 and orientable:
                section.trace.extend(verdict.trace.render())


def _proposition_and_remark(section: ReportSection, fixtures: PaperFixtures, sweep: int, max_cosets: int) -> None:
    for ell in range(1, 4):
        for orientable in (True, False):
            spec = corollary_surface(ell, orientable, fixtures.h2_certificate)
            verdict = check_proposition(spec)
            section.fact(f"proposition {spec.name}", str(verdict))
            if verdict.conclusion is not Conclusion.NOT_SPHERE_SUM_UNKNOTTED:
                section.fail(f"{spec.name}: {verdict}")
            if ell == 1 and orientable:
                section.trace.extend(verdict.trace.render())
    klein = corollary_surface(1, False, fixtures.h2_certificate)
    remark = check_remark_rp2_split(klein, fixtures.indecomposable)
    section.expect("remark_with_certificate", remark.conclusion.value, Conclusion.NO_RP2_SPLITTING.value)
    section.expect("remark_trace_lines", len(remark.trace), 5)
    section.expect("remark_replays", remark.trace.replay(), True)
    bare = check_remark_rp2_split(klein, None)
    section.expect("remark_without_certificate", str(bare), "Inconclusive(no indecomposability certificate)")
    section.trace.extend(remark.trace.render())


def _band_construction(section: ReportSection, fixtures: PaperFixtures, sweep: int, max_cosets: int) -> None:
    for n in (1, 2):
        spec = pretzel_band_surface(n)
        expected_type = "torus" if n % 2 == 0 else "klein"
        section.expect(f"band {n} surface", str(spec.surface_type), expected_type)
        verdict = check_theorem(spec, sweep)
        section.expect(f"band {n} theorem", verdict.conclusion.value, Conclusion.STABLY_IRREDUCIBLE.value)
        if spec.surface_type.is_klein:
            remark = check_remark_rp2_split(spec, fixtures.indecomposable)
            section.expect(f"band {n} remark", remark.conclusion.value, Conclusion.NO_RP2_SPLITTING.value)
    section.trace.extend(pretzel_band_surface(1).notes)


SECTIONS: List[tuple] = [
    ("Triangle-group arithmetic", "T(2,3,7) has a deficiency -1 presentation and H2 = Z", _triangle_arithmetic),
    ("Hurwitz quotient", "T(2,3,7) -> PSL(2,7) of order 168", _hurwitz_quotient),
    ("Klein-quartic kernel", "the kernel is a genus-3 surface group", _klein_quartic_kernel),
    ("Seifert pipeline", "killing a regular fiber of S2(0;1/2,-1/3,-1/7) gives T(2,3,7)", _seifert_pipeline),
    ("Pretzel cross-check", "surgery picture of P(-2,3,7) yields S2(0;1/2,-1/3,-1/7)", _pretzel_cross_check),
    ("Theorem reproduction", "doubles of ribbon surfaces with rk H2(π1) = k are stably irreducible",
     _theorem_reproduction),
    ("Proposition and Remark", "0 = b2(Σ2(N)) >= b2(π1) > 0; the Klein bottle is not RP² # RP²",
     _proposition_and_remark),
    ("Band construction", "band to P(-2,3,7,n) gives a torus or Klein bottle with π1(Σ2) = T(2,3,7)",
     _band_construction),
]


def run_section(title: str, anchor: str, body: Callable, fixtures: PaperFixtures,
                sweep: int, max_cosets: int) -> ReportSection:
    section = ReportSection(title, Status.PASS, anchor)
    started = time.perf_counter()
    try:
        body(section, fixtures, sweep, max_cosets)
    except (CosetOverflowError, QuotientOverflowError) as e:
        logger.warning(f"⚠️ {title}: {e}")
        section.inconclusive(str(e))
    except Exception as e:
        logger.error(f"❌ {title} raised: {e}", exc_info=True)
        section.fail(f"{type(e).__name__}: {e}")
    elapsed = time.perf_counter() - started
    badge = "✅" if section.status is Status.PASS else "❌"
    logger.info(f"{badge} {title}: {section.status.value} in {elapsed:.2f}s")
    return section


def run_suite(sweep: int = 10, max_cosets: int = 100_000,
              fixtures: PaperFixtures = DEFAULT_FIXTURES) -> Report:
    report = Report()
    for title, anchor, body in SECTIONS:
        report.add(run_section(title, anchor, body, fixtures, sweep, max_cosets))
    return report

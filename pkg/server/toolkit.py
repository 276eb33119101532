#!/usr/bin/env python3
"""
Command layer shared by the CLI and the MCP server.

Every command returns a Report. Engine exceptions are mapped here: parse
errors become a usage-error report (exit code 2), enumeration overflows an
inconclusive section, anything else a failed section.
"""
import asyncio
import logging
from pathlib import Path
from typing import Any, Awaitable, Callable, Dict, List, Optional

from config import DEFAULTS
from fixtures import DEFAULT_FIXTURES, PaperFixtures
from fpgroup import (
    CosetOverflowError, FiniteQuotient, Permutation, PresentationSyntaxError, QuotientArityError,
    QuotientOverflowError, UnknownGeneratorError, abelianization, b2_upper_bound, check_homomorphism,
    coset_table_from_quotient, deficiency, parse_presentation, parse_words, quotient_group_order,
    reidemeister_schreier, todd_coxeter,
)
from obstruct import (
    DoubleOfRibbon, SurfaceSpecError, Verdict, check_proposition, check_remark_rp2_split,
    check_theorem, cover_invariants, euler_characteristic, pi2_image_rank,
)
from paper_suite import run_suite
from pretzel import (
    PretzelSyntaxError, determinant, double_branched_cover, goeritz_matrix, parse_pretzel, product_formula,
)
from report import Report, ReportSection
from seifert import (
    SeifertSyntaxError, euler_number, h1_order, kill_regular_fiber, matches_triangle, parse_seifert,
    pi1_presentation,
)
from surface_file import SurfaceFileError, load_surface_file, parse_surface_file

logger = logging.getLogger(__name__)

GROUP_SUBCOMMANDS = ("abelianize", "deficiency", "b2bound", "todd-coxeter", "schreier", "quotient-order")
SEIFERT_SUBCOMMANDS = ("pi1", "h1", "euler", "kill-fiber")
PRETZEL_SUBCOMMANDS = ("det", "goeritz", "dbc")

# presentations with more generators are summarized, not printed
MAX_PRINTED_GENERATORS = 24


class UsageError(ValueError):
    """Unknown subcommand or missing argument."""


PARSE_ERRORS = (
    UsageError, PresentationSyntaxError, UnknownGeneratorError, QuotientArityError,
    SeifertSyntaxError, PretzelSyntaxError, SurfaceFileError,
)


def parse_images(text: str) -> FiniteQuotient:
    """`1,0,2; 0,2,1` -> one 0-based permutation per generator."""
    images: List[Permutation] = []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        try:
            images.append(tuple(int(v) for v in chunk.split(",")))
        except ValueError:
            raise QuotientArityError(f"Permutation {chunk.strip()!r} is not a list of integers") from None
    if not images:
        raise QuotientArityError("No permutation images given")
    return FiniteQuotient(tuple(images))


class SurfaceToolkit:
    """Runs the group, Seifert, pretzel and surface commands"""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = dict(DEFAULTS)
        if config:
            self.config.update(config)
        self.commands: Dict[str, Callable[..., Awaitable[Report]]] = {
            "group": self.cmd_group,
            "seifert": self.cmd_seifert,
            "pretzel": self.cmd_pretzel,
            "surface_check": self.cmd_surface_check,
            "paper_verify": self.cmd_paper_verify,
        }
        logger.debug(f"🔧 Toolkit ready with {len(self.commands)} commands")

    async def execute_tool(self, name: str, arguments: Dict[str, Any]) -> Report:
        """Dispatch a command by name; the MCP server calls this."""
        logger.info(f"🔧 Executing tool: {name} with args: {sorted(arguments)}")
        command = self.commands.get(name)
        if command is None:
            return Report.from_usage_error(name, f"Unknown tool: {name}")
        try:
            return await command(**arguments)
        except TypeError as e:
            return Report.from_usage_error(name, f"Bad arguments for {name}: {e}")

    async def _run(self, title: str, body: Callable[[ReportSection], None]) -> Report:
        section = ReportSection(title)
        try:
            await asyncio.to_thread(body, section)
        except PARSE_ERRORS as e:
            logger.warning(f"⚠️ {title}: {e}")
            return Report.from_usage_error(title, str(e))
        except (CosetOverflowError, QuotientOverflowError) as e:
            logger.warning(f"⚠️ {title}: {e}")
            section.inconclusive(str(e))
        except Exception as e:
            logger.error(f"❌ {title} failed: {e}", exc_info=True)
            section.fail(f"{type(e).__name__}: {e}")
        return Report([section])

    # --- group -----------------------------------------------------------

    async def cmd_group(self, subcommand: str, presentation: str, subgroup: Optional[str] = None,
                        max_cosets: Optional[int] = None, images: Optional[str] = None) -> Report:
        bound = max_cosets or self.config['max_cosets']
        max_order = self.config['max_quotient_order']

        def body(section: ReportSection) -> None:
            if subcommand not in GROUP_SUBCOMMANDS:
                raise UsageError(f"group subcommand must be one of {', '.join(GROUP_SUBCOMMANDS)}")
            p = parse_presentation(presentation)
            section.fact("presentation", str(p))
            if subcommand == "abelianize":
                ab = abelianization(p)
                section.fact("betti", ab.betti).fact("torsion", list(ab.torsion)).fact("group", str(ab))
            elif subcommand == "deficiency":
                section.fact("generators", p.generator_count).fact("relators", p.relator_count)
                section.fact("deficiency", deficiency(p))
            elif subcommand == "b2bound":
                section.fact("betti", abelianization(p).betti).fact("b2_upper_bound", b2_upper_bound(p))
            elif subcommand == "todd-coxeter":
                words = parse_words(subgroup or "", p.generator_names)
                table = todd_coxeter(p, words, bound)
                section.fact("subgroup", [w.format(p.generator_names) for w in words])
                section.fact("max_cosets", bound).fact("index", table.index)
            elif subcommand == "schreier":
                if images:
                    table = coset_table_from_quotient(p, parse_images(images), max_order)
                else:
                    table = todd_coxeter(p, parse_words(subgroup or "", p.generator_names), bound)
                kernel = reidemeister_schreier(p, table)
                ab = abelianization(kernel)
                section.fact("index", table.index)
                section.fact("schreier_generators", kernel.generator_count)
                section.fact("schreier_relators", kernel.relator_count)
                if kernel.generator_count <= MAX_PRINTED_GENERATORS:
                    section.fact("subgroup_presentation", str(kernel))
                section.fact("betti", ab.betti).fact("torsion", list(ab.torsion))
            else:
                if not images:
                    raise UsageError("quotient-order needs --images")
                q = parse_images(images)
                check = check_homomorphism(p, q)
                section.fact("homomorphism", check.accepted)
                if not check.accepted:
                    section.fact("witness", check.witness.format(p.generator_names))
                    section.fail("relator not sent to the identity")
                    return
                section.fact("order", quotient_group_order(q, max_order))

        return await self._run(f"group {subcommand}", body)

    # --- seifert ---------------------------------------------------------

    async def cmd_seifert(self, subcommand: str, space: str) -> Report:
        def body(section: ReportSection) -> None:
            if subcommand not in SEIFERT_SUBCOMMANDS:
                raise UsageError(f"seifert subcommand must be one of {', '.join(SEIFERT_SUBCOMMANDS)}")
            s = parse_seifert(space)
            section.fact("space", str(s))
            if subcommand == "pi1":
                p = pi1_presentation(s)
                section.fact("presentation", str(p))
                section.fact("generators", p.generator_count).fact("relators", p.relator_count)
            elif subcommand == "h1":
                order = h1_order(s)
                section.fact("h1_order", "infinite" if order is None else order)
            elif subcommand == "euler":
                section.fact("euler_number", str(euler_number(s)))
            else:
                killed = kill_regular_fiber(s)
                section.fact("orbifold_group", str(killed))
                if len(s.fibers) == 3:
                    p, q, r = sorted(s.multiplicities)
                    section.fact(f"triangle_{p}_{q}_{r}_match", matches_triangle(killed, p, q, r))

        return await self._run(f"seifert {subcommand}", body)

    # --- pretzel ---------------------------------------------------------

    async def cmd_pretzel(self, subcommand: str, knot: str) -> Report:
        def body(section: ReportSection) -> None:
            if subcommand not in PRETZEL_SUBCOMMANDS:
                raise UsageError(f"pretzel subcommand must be one of {', '.join(PRETZEL_SUBCOMMANDS)}")
            k = parse_pretzel(knot)
            section.fact("knot", str(k)).fact("is_knot", k.is_knot)
            if subcommand == "det":
                section.fact("determinant", determinant(k)).fact("product_formula", product_formula(k))
            elif subcommand == "goeritz":
                g = goeritz_matrix(k)
                section.fact("goeritz", g.entries.to_rows()).fact("determinant", determinant(k))
            else:
                if k.strands != 3:
                    raise UsageError(f"dbc needs a 3-strand pretzel, {k} has {k.strands}")
                s = double_branched_cover(k)
                det = determinant(k)
                order = h1_order(s)
                section.fact("double_branched_cover", str(s)).fact("determinant", det)
                section.fact("h1_order", "infinite" if order is None else order)
                agrees = order == det or (order is None and det == 0)
                section.fact("cross_check", agrees)
                if not agrees:
                    section.fail(f"|H1| = {order} but det = {det}")

        return await self._run(f"pretzel {subcommand}", body)

    # --- surfaces --------------------------------------------------------

    async def cmd_surface_check(self, spec_text: Optional[str] = None, path: Optional[str] = None,
                                sweep: Optional[int] = None) -> Report:
        """Run the decision procedures on every surface of a spec file."""
        bound = sweep or self.config['sweep_bound']
        try:
            if path is not None:
                surfaces = await asyncio.to_thread(load_surface_file, Path(path))
            elif spec_text is not None:
                surfaces = await asyncio.to_thread(parse_surface_file, spec_text)
            else:
                raise UsageError("surface check needs a spec file")
        except PARSE_ERRORS as e:
            logger.warning(f"⚠️ surface spec rejected: {e}")
            return Report.from_usage_error("surface check", str(e))

        report = Report()
        for entry in surfaces.entries:
            spec = entry.spec
            if isinstance(spec, DoubleOfRibbon):
                report.add(await self._verdict_section(
                    f"{entry.name}: theorem", lambda s=spec: check_theorem(s, bound), spec))
            report.add(await self._verdict_section(
                f"{entry.name}: proposition", lambda s=spec: check_proposition(s), spec))
            if isinstance(spec, DoubleOfRibbon) and spec.surface_type.is_klein:
                report.add(await self._verdict_section(
                    f"{entry.name}: remark", lambda s=spec, c=entry.indecomposable: check_remark_rp2_split(s, c), spec))
        return report

    async def _verdict_section(self, title: str, check: Callable[[], Verdict], spec) -> ReportSection:
        section = ReportSection(title)
        try:
            verdict = await asyncio.to_thread(check)
        except SurfaceSpecError as e:
            section.inconclusive(str(e))
            return section
        except Exception as e:
            logger.error(f"❌ {title} failed: {e}", exc_info=True)
            section.fail(f"{type(e).__name__}: {e}")
            return section
        section.fact("conclusion", verdict.conclusion.value)
        if verdict.reason:
            section.inconclusive(verdict.reason)
        section.fact("euler_characteristic", euler_characteristic(spec))
        try:
            cover = cover_invariants(spec)
            section.fact("b2", cover.b2).fact("b_plus", cover.b_plus).fact("b_minus", cover.b_minus)
            section.fact("pi1_h2_rank", cover.pi1_h2_rank).fact("pi2_image_rank", pi2_image_rank(cover))
            section.fact("spin_parity", cover.parity_label)
        except ValueError as e:
            logger.warning(f"⚠️ {title}: no cover invariants ({e})")
            section.fact("cover", str(e))
        section.fact("trace_lines", len(verdict.trace)).fact("trace_replays", verdict.trace.replay())
        for index, note in enumerate(verdict.notes, 1):
            section.fact(f"note_{index}", note)
        section.trace = verdict.trace.render()
        return section

    async def cmd_paper_verify(self, sweep: Optional[int] = None,
                               fixtures: PaperFixtures = DEFAULT_FIXTURES) -> Report:
        bound = sweep or self.config['sweep_bound']
        logger.info(f"📚 Running reproduction suite (sweep {bound})")
        report = await asyncio.to_thread(run_suite, bound, self.config['max_cosets'], fixtures)
        failed = len(report.failed)
        if failed:
            logger.warning(f"⚠️ {failed} section(s) failed")
        return report

import asyncio

import pytest

from fpgroup import parse_presentation
from pretzel import parse_pretzel
from report import (
    MACHINE_FORMAT_VERSION, Report, ReportSection, Status, format_value, parse_machine, render_human, render_machine,
)
from seifert import parse_seifert
from toolkit import parse_images


def run(coro):
    return asyncio.run(coro)


def only(report: Report) -> ReportSection:
    assert len(report.sections) == 1
    return report.sections[0]


def test_group_abelianize(toolkit):
    report = run(toolkit.cmd_group("abelianize", "<x,y,z | x^2, y^3, z^7, x*y*z>"))
    section = only(report)
    assert report.exit_code == 0
    assert section.facts["betti"] == 0
    assert section.facts["torsion"] == []
    assert section.facts["group"] == "0"
    assert only(run(toolkit.cmd_group("abelianize", "<a | >"))).facts["betti"] == 1


def test_group_deficiency_and_bound(toolkit):
    facts = only(run(toolkit.cmd_group("deficiency", "<x,y,z | x^2, y^3, z^7, x*y*z>"))).facts
    assert facts["deficiency"] == -1
    facts = only(run(toolkit.cmd_group("b2bound", "<x,y,z | x^2, y^3, z^7, x*y*z>"))).facts
    assert facts["b2_upper_bound"] == 1


def test_group_todd_coxeter(toolkit):
    facts = only(run(toolkit.cmd_group("todd-coxeter", "<x,y | x^2, y^3, (x*y)^7, (x^-1*y^-1*x*y)^4>"))).facts
    assert facts["index"] == 168
    facts = only(run(toolkit.cmd_group("todd-coxeter", "<x, y | x^2, y^2, (x*y)^3>", subgroup="x"))).facts
    assert facts["index"] == 3
    assert facts["subgroup"] == ["x"]


def test_group_overflow_is_inconclusive(toolkit):
    report = run(toolkit.cmd_group("todd-coxeter", "<x, y | >", max_cosets=50))
    assert only(report).status is Status.INCONCLUSIVE
    assert report.exit_code == 0


def test_group_schreier(toolkit):
    facts = only(run(toolkit.cmd_group("schreier", "<x, y | >", images="1,0,2; 0,2,1"))).facts
    assert (facts["index"], facts["schreier_generators"], facts["betti"]) == (6, 7, 7)
    assert "subgroup_presentation" in facts


def test_group_quotient_order(toolkit):
    von_dyck = "<x, y | x^2, y^3, (x*y)^7>"
    images = "7,6,3,2,5,4,1,0; 7,0,4,3,6,5,2,1"
    report = run(toolkit.cmd_group("quotient-order", von_dyck, images=images))
    assert only(report).facts["order"] == 168
    assert report.exit_code == 0
    rejected = run(toolkit.cmd_group("quotient-order", "<x | x^2>", images="1,2,0"))
    assert only(rejected).facts["witness"] == "x^2"
    assert rejected.exit_code == 1
    assert run(toolkit.cmd_group("quotient-order", von_dyck)).exit_code == 2


def test_group_usage_errors(toolkit):
    assert run(toolkit.cmd_group("frobnicate", "<x | >")).exit_code == 2
    report = run(toolkit.cmd_group("abelianize", "<x | x^>"))
    assert report.exit_code == 2
    assert report.usage_error.endswith("at position 7")
    assert run(toolkit.cmd_group("quotient-order", "<x | >", images="1,0; 0,1")).exit_code == 2


def test_parse_images():
    assert parse_images("1,0,2; 0,2,1").images == ((1, 0, 2), (0, 2, 1))
    assert parse_images("1,0;").images == ((1, 0),)


def test_seifert_commands(toolkit):
    y = "S2(0; 1/2, -1/3, -1/7)"
    facts = only(run(toolkit.cmd_seifert("kill-fiber", y))).facts
    assert facts["orbifold_group"] == "<x1, x2, x3 | x1^2, x2^3, x3^7, x1*x2*x3>"
    assert facts["triangle_2_3_7_match"] is True
    assert only(run(toolkit.cmd_seifert("h1", y))).facts["h1_order"] == 1
    assert only(run(toolkit.cmd_seifert("h1", "S2(0; 1/2, -1/2)"))).facts["h1_order"] == "infinite"
    assert only(run(toolkit.cmd_seifert("euler", y))).facts["euler_number"] == "-1/42"
    assert only(run(toolkit.cmd_seifert("pi1", y))).facts["relators"] == 7
    assert run(toolkit.cmd_seifert("h1", "S2(0, 1/2)")).exit_code == 2


def test_pretzel_commands(toolkit):
    assert only(run(toolkit.cmd_pretzel("det", "P(-2,3,7)"))).facts["determinant"] == 1
    assert only(run(toolkit.cmd_pretzel("det", "P(3,3,3)"))).facts["determinant"] == 27
    assert only(run(toolkit.cmd_pretzel("goeritz", "P(-2,3,7)"))).facts["goeritz"] == [[1, -3], [-3, 10]]
    facts = only(run(toolkit.cmd_pretzel("dbc", "P(-2,3,7)"))).facts
    assert facts["double_branched_cover"] == "S2(0; 1/2, -1/3, -1/7)"
    assert facts["cross_check"] is True
    assert run(toolkit.cmd_pretzel("dbc", "P(1,2,3,4)")).exit_code == 2
    assert run(toolkit.cmd_pretzel("det", "P(1,2)")).exit_code == 2


def test_surface_check_torus(toolkit, surfaces_dir):
    report = run(toolkit.cmd_surface_check(path=str(surfaces_dir / "corollary_torus.surf")))
    assert report.exit_code == 0
    titles = [s.title for s in report.sections]
    assert titles == ["T: theorem", "T: proposition", "TU: proposition"]
    theorem = report.sections[0]
    assert theorem.facts["conclusion"] == "StablyIrreducible"
    assert theorem.facts["trace_lines"] == 100
    assert theorem.facts["trace_replays"] is True
    assert len(theorem.trace) == 100
    assert report.sections[2].facts["b2"] == 4


def test_surface_check_klein(toolkit, surfaces_dir):
    report = run(toolkit.cmd_surface_check(path=str(surfaces_dir / "corollary_klein.surf"), sweep=3))
    conclusions = {s.title: s.facts["conclusion"] for s in report.sections}
    assert conclusions == {
        "Kb: theorem": "StablyIrreducible",
        "Kb: proposition": "NotSphereSumUnknotted",
        "Kb: remark": "NoRp2Splitting",
    }
    assert report.sections[0].facts["trace_lines"] == 8 + 3 * 2 + 2


def test_surface_check_sphere_gate(toolkit, surfaces_dir):
    report = run(toolkit.cmd_surface_check(path=str(surfaces_dir / "sphere_gate.surf")))
    assert all(s.status is Status.INCONCLUSIVE for s in report.sections)
    assert report.sections[0].message == "χ not < 2"
    assert report.exit_code == 0


def test_surface_check_keeps_every_note(toolkit):
    report = run(toolkit.cmd_surface_check(spec_text="surface B2\nconstruction pretzel_band n=2\n", sweep=2))
    theorem = next(s for s in report.sections if s.title == "B2: theorem")
    notes = [theorem.facts[f"note_{i}"] for i in range(1, 5)]
    assert notes[0].startswith("Σ2(D) = (Y - B³) × I")
    assert notes[2] == "band surgery gives P(-2,3,7,2)"
    assert notes[3] == "stably irreducible ⟹ irreducible"
    assert "note_5" not in theorem.facts
    assert "note_4=" in render_machine(report)


def test_surface_check_reports_missing_cover(toolkit):
    report = run(toolkit.cmd_surface_check(
        spec_text="surface T\ntype torus\nconstruction double_of_ribbon k=1\ncover_pi1 triangle(2,3,7)\n"))
    for section in report.sections:
        assert section.status is Status.INCONCLUSIVE
        assert "no H2 certificate" in section.facts["cover"]
        assert "b2" not in section.facts
    assert report.exit_code == 0


def test_surface_check_bad_spec(toolkit):
    report = run(toolkit.cmd_surface_check(spec_text="surface T\ncolour red\n"))
    assert report.exit_code == 2
    assert "line 2" in report.usage_error
    assert run(toolkit.cmd_surface_check()).exit_code == 2


def test_execute_tool_dispatch(toolkit):
    report = run(toolkit.execute_tool("pretzel", {"subcommand": "det", "knot": "P(-2,3,7)"}))
    assert only(report).facts["determinant"] == 1
    assert run(toolkit.execute_tool("frobnicate", {})).exit_code == 2
    assert run(toolkit.execute_tool("pretzel", {"knot": "P(-2,3,7)"})).exit_code == 2


def test_machine_block_agrees_with_facts(toolkit, surfaces_dir):
    report = run(toolkit.cmd_surface_check(path=str(surfaces_dir / "corollary_torus.surf"), sweep=3))
    block = render_machine(report)
    assert block.splitlines()[0] == f"# {MACHINE_FORMAT_VERSION}"
    parsed = parse_machine(block)
    assert len(parsed) == len(report.sections)
    for section, values in zip(report.sections, parsed):
        assert values["status"] == section.status.value
        for key, value in section.facts.items():
            assert values[key] == format_value(value)
    human = render_human(report)
    for section in report.sections:
        for key, value in section.facts.items():
            assert f"    {key}: {format_value(value)}" in human
    assert human.endswith(f"exit code {report.exit_code}")


def test_machine_trace_lines(toolkit):
    report = run(toolkit.cmd_surface_check(spec_text=(
        "surface T\ntype torus\nconstruction double_of_ribbon k=1\ncover_pi1 triangle(2,3,7)\n"
        "h2_cert rank=1 source=literature\n"), sweep=2))
    block = render_machine(report, show_trace=True)
    assert "trace.12=" in block
    assert "trace.13=" not in block.split("[section.2]")[0]


def test_parse_machine_rejects_foreign_text():
    with pytest.raises(ValueError):
        parse_machine("exit_code=0")


def test_printed_objects_reparse(toolkit):
    printed = only(run(toolkit.cmd_seifert("pi1", "S2(0; 1/2, -1/3, -1/7)"))).facts["presentation"]
    assert str(parse_presentation(printed)) == printed
    space = only(run(toolkit.cmd_pretzel("dbc", "P(-2,3,7)"))).facts["double_branched_cover"]
    assert str(parse_seifert(space)) == space
    knot = only(run(toolkit.cmd_pretzel("det", "P( -2, 3, 7 )"))).facts["knot"]
    assert str(parse_pretzel(knot)) == knot == "P(-2,3,7)"

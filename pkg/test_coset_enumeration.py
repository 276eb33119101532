import pytest

from fpgroup import (
    CosetOverflowError, CosetTable, CosetTableError, FiniteQuotient, UnknownGeneratorError, Word, abelianization,
    coset_table_from_quotient, parse_presentation, parse_words, quotient_group_order, reidemeister_schreier,
    schreier_transversal, todd_coxeter,
)

S3 = "<x, y | x^2, y^2, (x*y)^3>"
S3_IMAGES = ((1, 0, 2), (0, 2, 1))


def test_symmetric_group_order():
    table = todd_coxeter(parse_presentation(S3))
    assert table.index == 6
    assert table.index == quotient_group_order(FiniteQuotient(S3_IMAGES))


def test_subgroup_index():
    p = parse_presentation(S3)
    assert todd_coxeter(p, parse_words("x", p.generator_names)).index == 3
    assert todd_coxeter(p, parse_words("x, y", p.generator_names)).index == 1
    cyclic = parse_presentation("<x | x^5>")
    assert todd_coxeter(cyclic, [cyclic.generator("x")]).index == 1
    assert todd_coxeter(cyclic).index == 5


def test_hurwitz_group_has_order_168(hurwitz):
    table = todd_coxeter(hurwitz)
    assert table.index == 168
    table.validate()


def test_enumeration_overflow():
    with pytest.raises(CosetOverflowError):
        todd_coxeter(parse_presentation("<x, y | >"), max_cosets=200)
    with pytest.raises(CosetOverflowError):
        todd_coxeter(parse_presentation("<x | x^50>"), max_cosets=20)


def test_subgroup_word_must_use_known_generators():
    with pytest.raises(UnknownGeneratorError):
        todd_coxeter(parse_presentation("<x | x^2>"), [Word((2,))])


def test_regular_table_from_quotient():
    free = parse_presentation("<x | >")
    table = coset_table_from_quotient(free, FiniteQuotient(((1, 0),)))
    assert table.index == 2
    assert table.table == ((1,), (0,))
    assert coset_table_from_quotient(free, FiniteQuotient(((0, 1),))).index == 1
    with pytest.raises(ValueError):
        coset_table_from_quotient(parse_presentation("<x | x^2>"), FiniteQuotient(((1, 2, 0),)))


def test_enumeration_agrees_with_regular_table():
    p = parse_presentation(S3)
    assert todd_coxeter(p).index == coset_table_from_quotient(p, FiniteQuotient(S3_IMAGES)).index


def test_validate_rejects_broken_tables():
    p = parse_presentation("<x | x^2>")
    with pytest.raises(CosetTableError):
        CosetTable(p, (), ((0,), (0,))).validate()
    with pytest.raises(CosetTableError):
        CosetTable(parse_presentation("<x | x^3>"), (), ((1,), (0,))).validate()
    with pytest.raises(CosetTableError):
        CosetTable(parse_presentation("<x | >"), (Word((1,)),), ((1,), (0,))).validate()


def test_schreier_transversal_is_a_spanning_tree():
    table = todd_coxeter(parse_presentation(S3))
    transversal = schreier_transversal(table)
    assert len(transversal.tree_edges) == table.index - 1
    assert len(transversal.generator_of_edge) == table.index * 2 - (table.index - 1)


def test_reidemeister_schreier_on_free_groups():
    free2 = parse_presentation("<x, y | >")
    kernel = reidemeister_schreier(free2, coset_table_from_quotient(free2, FiniteQuotient(((1, 0), (0, 1)))))
    assert (kernel.generator_count, kernel.relator_count) == (3, 0)
    assert abelianization(kernel).betti == 3

    # index n subgroup of a free group of rank k is free of rank n(k - 1) + 1
    kernel = reidemeister_schreier(free2, coset_table_from_quotient(free2, FiniteQuotient(S3_IMAGES)))
    assert abelianization(kernel).betti == 7
    free3 = parse_presentation("<a, b, c | >")
    table = coset_table_from_quotient(free3, FiniteQuotient(((1, 0), (1, 0), (0, 1))))
    assert abelianization(reidemeister_schreier(free3, table)).betti == 5


def test_reidemeister_schreier_from_enumerated_table():
    free2 = parse_presentation("<x, y | >")
    table = todd_coxeter(free2, parse_words("x^2, y, x*y*x^-1", free2.generator_names))
    assert table.index == 2
    assert abelianization(reidemeister_schreier(free2, table)).betti == 3


def test_index_one_keeps_the_group():
    p = parse_presentation(S3)
    table = todd_coxeter(p, parse_words("x, y", p.generator_names))
    same = reidemeister_schreier(p, table)
    assert same.generator_names == ("x_0", "y_0")
    assert abelianization(same) == abelianization(p)


def test_klein_quartic_kernel_is_a_genus_three_surface_group(t237_two_generator, psl27_pair):
    table = coset_table_from_quotient(t237_two_generator, psl27_pair)
    assert table.index == 168
    kernel = reidemeister_schreier(t237_two_generator, table)
    ab = abelianization(kernel)
    assert (ab.betti, ab.torsion) == (6, ())

import pytest
from hypothesis import given, settings, strategies as st

from shared.algebra.combinatorics import (
    ColoredPermutation,
    ColorSeq,
    Composition,
    MultiComposition,
    Permutation,
    all_permutations,
    colored_perm_compose,
    coset_reps,
    dominant_monomials,
    intersect_parabolic,
    multicompositions,
    orbit,
)
from shared.algebra.errors import BadParameter, BlockMismatch, ExpressionSyntaxError, NotMinimalRep, NotSubgroup


def test_permutation_parse_and_format():
    w = Permutation.parse("[2,3,1]")
    assert w.images == (1, 2, 0)
    assert w.format() == "[2,3,1]"
    with pytest.raises(ExpressionSyntaxError):
        Permutation.parse("2,3,1")
    with pytest.raises(BadParameter):
        Permutation((0, 0))


def test_longest_and_block_swap():
    assert Permutation.longest(3).length() == 3
    assert Permutation.block_swap(1, 2).images == (2, 0, 1)
    assert Permutation.block_swap(2, 2).length() == 4


def test_reduced_word_is_reduced():
    for w in all_permutations(4):
        word = w.reduced_word()
        assert len(word) == w.length()
        assert Permutation.from_word(4, word) == w


def test_all_permutations_sorted_by_length():
    lengths = [w.length() for w in all_permutations(3)]
    assert lengths == sorted(lengths)
    assert len(lengths) == 6


def test_composition_parabolic():
    lam = Composition((2, 1))
    assert lam.simple_reflections() == [1]
    assert len(lam.parabolic()) == 2
    assert lam.longest() == Permutation((1, 0, 2))
    assert Composition.parse("(1,2)").blocks() == [(0,), (1, 2)]


def test_coset_representatives():
    assert len(coset_reps(Composition((2,)))) == 1
    assert len(coset_reps(Composition((1, 1)))) == 2
    assert len(coset_reps(Composition((2, 1)), Composition((1, 2)))) == 2
    with pytest.raises(NotSubgroup):
        coset_reps(Composition((2, 1)), Composition((1, 1, 1)), ambient=Composition((1, 2)))


def test_intersect_parabolic():
    lam = Composition((2,))
    assert intersect_parabolic(lam, lam, Permutation.identity(2)) == lam
    with pytest.raises(NotMinimalRep):
        intersect_parabolic(lam, Composition((1, 1)), Permutation((1, 0)))


def test_multicompositions_count():
    assert len(multicompositions(1, 1)) == 2
    assert len(multicompositions(2, 0)) == 2
    m = MultiComposition.parse("((1)|(1,1))")
    assert m.level == 1
    assert m.total == 3
    assert m.bar() == Composition((1, 1, 1))


def test_color_sequences():
    seqs = ColorSeq.all(1, 2)
    assert seqs[0] == ColorSeq.omega(1, 2)
    assert [c.format() for c in seqs] == ["rbb", "brb", "bbr"]
    c = ColorSeq.parse("brb")
    assert c.is_red(1)
    assert c.black_index(2) == 1
    assert c.black_index(1) is None
    assert c.swap(0).format() == "rbb"


def test_colored_permutation():
    rbb, brb = ColorSeq.parse("rbb"), ColorSeq.parse("brb")
    g = ColoredPermutation(brb, rbb, Permutation.identity(2))
    assert g.full_permutation() == Permutation((1, 0, 2))
    h = ColoredPermutation(rbb, rbb, Permutation((1, 0)))
    assert colored_perm_compose(g, h).black == Permutation((1, 0))
    with pytest.raises(BlockMismatch):
        colored_perm_compose(h, g)


def test_dominant_monomials_and_orbits():
    monomials = dominant_monomials(Composition((2,)), 1)
    assert len(monomials) == 6
    exps, refined = monomials[0]
    assert exps == (-1, -1)
    assert refined == Composition((2,))
    assert orbit((0, 1), Composition((2,))) == [(0, 1), (1, 0)]


@settings(derandomize=True, max_examples=30)
@given(st.permutations(list(range(4))), st.permutations(list(range(4))))
def test_group_laws(a, b):
    w, v = Permutation(tuple(a)), Permutation(tuple(b))
    assert (w * v).inverse() == v.inverse() * w.inverse()
    assert (w * w.inverse()).is_identity()
    assert (w * v).length() <= w.length() + v.length()

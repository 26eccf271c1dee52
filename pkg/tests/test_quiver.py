"""Marked quivers: structure, holes, components, words, DOT output.

Positions are 0-based throughout; a quiver's order has early positions
high, so ideals collect suffixes of the building word.
"""

import pytest

from torusq import quiver as qv
from torusq.criteria import minuscule_minimal_v_node, minuscule_model
from torusq.rootdata import root_system


def test_gr24_full_quiver():
    q = qv.quiver_from_word((2, 1, 3, 2), root_system("A", 3))
    assert q.n_vertices == 4
    assert sorted(q.arrows) == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert q.next_same(0) == 3 and q.prev_same(3) == 0
    assert q.next_same(1) is None
    assert len(list(q.ideals())) == 6  # one per Schubert variety of Gr(2,4)


def test_order_direction():
    q = qv.quiver_from_word((2, 1, 3, 2), root_system("A", 3))
    # arrows point toward later positions, which sit lower
    assert q.leq(3, 0)
    assert not q.leq(0, 3)
    assert q.above(3) == {0, 1, 2, 3}


def test_ideal_checks():
    q = qv.quiver_from_word((2, 1, 3, 2), root_system("A", 3))
    assert q.is_ideal({3})
    assert q.is_ideal({1, 3})
    assert not q.is_ideal({0})
    with pytest.raises(ValueError):
        q.marked({0, 3})


def test_divisor_hole_in_gr24():
    model = minuscule_model("A", 3, 2)
    node = model.poset.node_of_indexset((2, 4))
    report = model.holes(node)
    assert report.real == (3,)
    assert report.essential == (3,)
    assert report.virtual == ()
    assert not model.is_smooth(node)
    comps = model.singular_components(node)
    assert [model.poset.indexset(c) for c in comps] == [(1, 2)]


def test_full_grassmannian_is_smooth():
    model = minuscule_model("A", 3, 2)
    assert model.is_smooth(model.poset.bottom)
    assert model.holes(model.poset.bottom).real == ()


def test_virtual_holes_show_up():
    # the point Schubert variety of Gr(2,4): nothing marked, letters
    # without repetition above are virtual
    model = minuscule_model("A", 3, 2)
    node = model.poset.node_of_indexset((1, 2))
    report = model.holes(node)
    assert report.real == ()
    assert 3 in report.virtual


def test_d4_natural_weight_minimal_v():
    model = minuscule_model("D", 4, 1)
    v = minuscule_minimal_v_node(model)
    assert model.poset.depth(v) == 4
    report = model.holes(v)
    assert len(report.real) == 1
    hole = report.real[0]
    assert model.quiver_of(v).label(hole) == 2  # the fork joint n-2
    comps = model.singular_components(v)
    assert [model.poset.canonical_word(c) for c in comps] == [(1,)]


def test_d4_spin_minimal_v():
    model = minuscule_model("D", 4, 3)
    word = qv.minimal_v_word("D", 4, 3)
    assert word == (4, 1, 2, 3)
    v = model.poset.node_from_word(word)
    report = model.holes(v)
    assert len(report.real) == 1
    assert model.quiver_of(v).label(report.real[0]) == 2


def test_d_spin_words_descend_both_weights():
    for n in (4, 5, 6, 7):
        for weight in (n - 1, n):
            model = minuscule_model("D", n, weight)
            word = qv.minimal_v_word("D", n, weight)
            assert model.poset.word_descends(word)
            # first reflection from the top must be the weight itself
            assert word[-1] == weight


def test_e6_full_quiver_smooth():
    model = minuscule_model("E6", 6, 1)
    bottom = model.poset.bottom
    assert model.poset.depth(bottom) == 16
    assert model.is_smooth(bottom)


def test_e6_minimal_v():
    model = minuscule_model("E6", 6, 1)
    v = minuscule_minimal_v_node(model)
    assert model.poset.depth(v) == 10
    assert len(model.holes(v).real) == 1


def test_e7_minimal_v():
    word = qv.minimal_v_word("E7", 7, 7)
    assert len(word) == 15
    model = minuscule_model("E7", 7, 7)
    assert model.poset.word_descends(word)
    v = model.poset.node_from_word(word)
    assert model.holes(v).real != ()


def test_minimal_v_word_exclusions():
    with pytest.raises(ValueError):
        qv.minimal_v_word("A", 4, 1)
    with pytest.raises(ValueError):
        qv.minimal_v_word("A", 4, 4)
    with pytest.raises(ValueError):
        qv.minimal_v_word("D", 5, 2)  # not minuscule
    assert qv.minimal_v_word("A", 4, 2) == (2, 1, 4, 3, 2)
    assert qv.minimal_v_word("D", 5, 1) == (5, 4, 3, 2, 1)


def test_e6_weight_six_mirror():
    a = qv.minimal_v_word("E6", 6, 1)
    b = qv.minimal_v_word("E6", 6, 6)
    mirror = {1: 6, 6: 1, 3: 5, 5: 3, 2: 2, 4: 4}
    assert b == tuple(mirror[x] for x in a)
    assert minuscule_model("E6", 6, 6).poset.word_descends(b)


def test_commutation_moves():
    system = root_system("A", 3)
    moves = qv.commutation_moves((2, 1, 3, 2), system)
    assert (1, (2, 3, 1, 2)) in moves
    # adjacent letters that braid (pairing != 0) are not offered
    assert all(other[p] != 2 or other[p + 1] != 1 for p, other in moves)


def test_commutation_isomorphism():
    system = root_system("D", 4)
    word = (3, 4, 2, 1)
    qa = qv.quiver_from_word(word, system)
    for p, other in qv.commutation_moves(word, system):
        qb = qv.quiver_from_word(other, system)
        assert qv.quivers_isomorphic_under_swap(qa, qb, p)


def test_dot_output_is_stable_and_annotated():
    model = minuscule_model("E6", 6, 1)
    v = minuscule_minimal_v_node(model)
    q = model.quiver_of(v)
    dot = qv.quiver_to_dot(q)
    assert dot == qv.quiver_to_dot(q)
    assert dot.startswith("digraph quiver {")
    assert dot.rstrip().endswith("}")
    assert dot.count("peripheries=2") == 1  # exactly one circled hole
    assert "style=dotted" in dot  # unmarked rest of the full quiver
    marked_lines = [
        line for line in dot.splitlines()
        if "label=" in line and "dotted" not in line
    ]
    assert len(marked_lines) == 10  # one solid vertex per letter of v


def test_dot_smooth_case_has_no_double_circle():
    model = minuscule_model("A", 3, 2)
    dot = qv.quiver_to_dot(model.quiver_of(model.poset.bottom))
    assert "peripheries" not in dot
    assert "style=dotted" not in dot

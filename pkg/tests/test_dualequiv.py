from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from conftest import P, T
from crystaldeg.dualequiv import build_deg, conjugate_graph, d_op, ede, negate_signatures, signature_of
from crystaldeg.errors import TableauError
from crystaldeg.graphs import SignedColoredGraph, parse_signature, signature_string
from crystaldeg.zeroweight import iso
from crystaldeg.tableaux import enumerate_syt, partitions_of, reading_word
from oracles import descent_signature, ede_brute

# Standard dual equivalence graphs as drawn, rows bottom first; edges by vertex name.
DRAWN = {
    (4, 1): ({"h": ([1, 3, 4, 5], [2], "-+++"), "i": ([1, 2, 4, 5], [3], "+-++"),
              "j": ([1, 2, 3, 5], [4], "++-+"), "k": ([1, 2, 3, 4], [5], "+++-")},
             [("h", "i", 2), ("i", "j", 3), ("j", "k", 4)]),
    (3, 2): ({"a": ([1, 2, 5], [3, 4], "+-++"), "b": ([1, 3, 5], [2, 4], "-+-+"),
              "c": ([1, 3, 4], [2, 5], "-++-"), "d": ([1, 2, 4], [3, 5], "+-+-"),
              "e": ([1, 2, 3], [4, 5], "++-+")},
             [("a", "b", 2), ("a", "b", 3), ("b", "c", 4), ("c", "d", 2), ("d", "e", 3), ("d", "e", 4)]),
    (3, 1, 1): ({"u": ([1, 4, 5], [2], [3], "--++"), "v": ([1, 3, 5], [2], [4], "-+-+"),
                 "w": ([1, 2, 5], [3], [4], "+--+"), "x": ([1, 3, 4], [2], [5], "-++-"),
                 "y": ([1, 2, 4], [3], [5], "+-+-"), "z": ([1, 2, 3], [4], [5], "++--")},
                [("u", "v", 3), ("v", "w", 2), ("v", "x", 4), ("w", "y", 4), ("x", "y", 2), ("y", "z", 3)]),
}


def drawn_graph(parts):
    verts, edges = DRAWN[parts]
    tabs = {name: T(*spec[:-1]) for name, spec in verts.items()}
    sigs = {tabs[name]: parse_signature(spec[-1]) for name, spec in verts.items()}
    return sigs, {frozenset((tabs[a], tabs[b])) | {c} for a, b, c in edges}


def labeled(g):
    sigs = {g.labels[v]: g.signatures[v] for v in range(g.size)}
    return sigs, {frozenset((g.labels[u], g.labels[v])) | {c} for u, v, c in g.edges()}


@pytest.mark.parametrize("parts", sorted(DRAWN))
def test_build_deg_matches_drawing(parts):
    assert labeled(build_deg(P(*parts))) == drawn_graph(parts)


def test_signature_examples():
    assert signature_of(T([1, 3, 4, 5], [2])) == parse_signature("-+++")
    assert signature_of(T([1, 2, 5], [3, 4])) == parse_signature("+-++")
    assert signature_of(T([1, 2, 3, 4])) == (1, 1, 1)
    with pytest.raises(TableauError):
        signature_of(T([1, 1]))


@pytest.mark.parametrize("m", range(2, 7))
def test_signature_matches_descent_oracle(m):
    for lam in partitions_of(m):
        for t in enumerate_syt(lam):
            assert signature_of(t) == descent_signature(reading_word(t))


def test_ede_examples():
    assert ede((3, 1, 2, 4, 5), 3) == (4, 1, 2, 3, 5)
    assert ede((1, 2, 3), 2) == (1, 2, 3)
    assert ede((3, 4, 1, 2), 2) == (2, 4, 1, 3)
    with pytest.raises(ValueError):
        ede((1, 2), 2)


@given(st.integers(min_value=3, max_value=7).flatmap(
    lambda m: st.tuples(st.permutations(range(1, m + 1)), st.integers(min_value=2, max_value=m - 1))))
def test_ede_matches_oracle_and_is_involution(args):
    w, i = tuple(args[0]), args[1]
    moved = ede(w, i)
    assert moved == ede_brute(w, i)
    assert ede(moved, i) == w


def test_ede_exhaustive_small():
    for m in range(3, 6):
        for w in permutations(range(1, m + 1)):
            for i in range(2, m):
                assert ede(w, i) == ede_brute(w, i)


def test_d_op_examples():
    assert d_op(T([1, 2, 5], [3, 4]), 2) == T([1, 3, 5], [2, 4])
    assert d_op(T([1, 2], [3, 4]), 3) == T([1, 3], [2, 4])
    assert all(d_op(T([1, 2, 3, 4, 5]), i) is None for i in (2, 3, 4))
    with pytest.raises(ValueError):
        d_op(T([1, 2, 3]), 3)


def test_build_deg_small():
    g = build_deg(P(4))
    assert g.size == 1 and g.edges() == []
    g = build_deg(P(2, 2))
    assert g.labels == (T([1, 2], [3, 4]), T([1, 3], [2, 4]))
    assert g.edge_colors() == {(0, 1): (2, 3)}


def test_negate_and_conjugate():
    g = build_deg(P(2, 2))
    assert iso(negate_signatures(g), g).found
    single = build_deg(P(3))
    assert signature_string(negate_signatures(single).signatures[0]) == "--"
    for lam in partitions_of(5):
        h = build_deg(lam)
        assert negate_signatures(negate_signatures(h)) == h
        c = conjugate_graph(h)
        assert labeled(c) == labeled(build_deg(lam.conjugate()))


def test_conjugate_needs_labels():
    with pytest.raises(ValueError):
        conjugate_graph(SignedColoredGraph(3, [(1, 1)], []))


def test_signed_graph_validation():
    with pytest.raises(ValueError):
        SignedColoredGraph(3, [(1,)], [])
    with pytest.raises(ValueError):
        SignedColoredGraph(3, [(1, 0)], [])
    with pytest.raises(ValueError):
        SignedColoredGraph(3, [(1, 1), (1, -1)], [(0, 1, 1)])

"""
Coxeter matrix validation and node sets
"""
import math

import pytest

from app.exceptions import InputError, UnknownNode
from app.models.coxeter_matrix import INFINITY, CoxeterMatrix, format_label, is_even_label, is_odd_edge
from tests import corpus


def test_from_edges_defaults_to_two():
    matrix = corpus.g5()
    assert matrix.label("b", "c") == 2
    assert matrix.label("a", "b") == 4
    assert math.isinf(matrix.label("c", "d"))
    assert matrix.m(0, 0) == 1


def test_edges_skip_commuting_pairs():
    matrix = corpus.a1_x_i2_3()
    assert list(matrix.edges()) == [(1, 2, 3)]


def test_unknown_node_in_edge():
    with pytest.raises(UnknownNode) as info:
        CoxeterMatrix.from_edges(["a", "b"], [("a", "z", 3)])
    assert info.value.node == "z"


@pytest.mark.parametrize(
    "nodes, labels, pair",
    [
        (("a", "b"), ((1, 3), (4, 1)), ("a", "b")),
        (("a", "b"), ((1, 1), (1, 1)), ("a", "b")),
        (("a", "b"), ((2, 3), (3, 1)), ("a", "a")),
        (("a", "b"), ((1, 2.5), (2.5, 1)), ("a", "b")),
    ],
)
def test_validate_names_offending_pair(nodes, labels, pair):
    with pytest.raises(InputError) as info:
        CoxeterMatrix(nodes, labels).validate()
    assert info.value.pair == pair


def test_duplicate_nodes_rejected():
    with pytest.raises(InputError):
        CoxeterMatrix(("a", "a"), ((1, 2), (2, 1))).validate()


def test_label_predicates():
    assert is_odd_edge(3) and is_odd_edge(5)
    assert not is_odd_edge(INFINITY) and not is_odd_edge(4) and not is_odd_edge(2)
    assert is_even_label(2) and is_even_label(6)
    assert not is_even_label(INFINITY)
    assert format_label(INFINITY) == "inf"


def test_node_set_operations():
    matrix = corpus.g6()
    M = matrix.node_set(["a", "c"])
    assert M.names() == ["a", "c"]
    assert "a" in M and 2 in M and "b" not in M
    assert M.union(matrix.node_set(["d"])).names() == ["a", "c", "d"]
    assert M.difference([0]).names() == ["c"]
    assert M.issubset(matrix.full_set())
    with pytest.raises(UnknownNode):
        matrix.node_set(["x"])


def test_permuted_keeps_labels():
    matrix = corpus.g7()
    shuffled = matrix.permuted(["b", "c", "a", "a2"])
    shuffled.validate()
    for u in matrix.nodes:
        for v in matrix.nodes:
            assert shuffled.label(u, v) == matrix.label(u, v)
    with pytest.raises(InputError):
        matrix.permuted(["b", "c", "a"])


def test_validate_rejects_non_numeric_label_before_symmetry():
    with pytest.raises(InputError) as info:
        CoxeterMatrix(("a", "b"), ((1, 3), ("x", 1))).validate()
    assert "not an integer or inf" in str(info.value)
    assert info.value.pair == ("b", "a")

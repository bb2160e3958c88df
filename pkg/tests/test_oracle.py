"""
Brute-force oracle against the classifier
"""
import random

import pytest

from app.exceptions import BadArguments, BudgetExceeded
from app.services.oracle_service import CompareStatus, OracleResult, OracleService
from tests import corpus


def test_finite_group_oracle_is_whole_group(i2_6):
    oracle = OracleService(i2_6, max_length=8)
    comparison = oracle.compare_with_classifier("a")
    assert comparison.status == CompareStatus.MATCH
    assert len(comparison.oracle.elements) == 12
    assert comparison.oracle.saturated
    assert comparison.oracle.conjugates == 1


def test_affine_oracle_is_trivial(affine_a2):
    oracle = OracleService(affine_a2, max_length=8)
    result = oracle.oracle_fc("a")
    assert result.elements == frozenset({oracle.engine.identity(), oracle.engine.simple_reflection("a")})
    assert not result.saturated
    assert oracle.element_words(result) == ["1", "r_a"]
    assert oracle.compare_with_classifier("a", 8).status == CompareStatus.MATCH


def test_oracle_for_general_element_agrees_on_reflections(affine_a2):
    oracle = OracleService(affine_a2, max_length=4)
    r_b = oracle.engine.simple_reflection("b")
    assert oracle.oracle_fc_element(r_b).elements == oracle.oracle_fc("b").elements


def test_infinite_order_element_has_no_finite_continuation(affine_a2):
    oracle = OracleService(affine_a2, max_length=4)
    with pytest.raises(BadArguments):
        oracle.oracle_fc_element(oracle.engine.from_names(["a", "b", "c"]))


def test_element_cap_returns_partial_intersection(affine_a2):
    oracle = OracleService(affine_a2, max_length=10, element_cap=30)
    with pytest.raises(BudgetExceeded) as info:
        oracle.oracle_fc("a")
    partial = info.value.partial
    assert isinstance(partial, OracleResult)
    assert partial.partial
    assert oracle.engine.simple_reflection("a") in partial.elements


def test_element_words_of_dihedral_group(i2_6):
    oracle = OracleService(i2_6, max_length=8)
    words = oracle.element_words(oracle.oracle_fc("b"))
    assert len(words) == 12
    assert words[0] == "1"
    assert words[1:3] == ["r_a", "r_b"]
    assert max(len(w.split()) for w in words) == 6


@pytest.mark.slow
def test_oracle_is_monotone_in_depth(affine_a2, g7):
    for matrix, node in ((affine_a2, "b"), (g7, "a")):
        oracle = OracleService(matrix)
        prediction = oracle.engine.group_elements(oracle.classifier.finite_continuation(node).J)
        previous = None
        for limit in (2, 4, 6):
            elements = oracle.oracle_fc(node, limit).elements
            assert prediction <= elements
            if previous is not None:
                assert elements <= previous
            previous = elements


@pytest.mark.slow
@pytest.mark.parametrize(
    "name, node, size",
    [
        ("g5", "a", 8),
        ("g7", "a", 4),
        ("g7", "a2", 4),
        ("g6", "a", 4),
    ],
)
def test_oracle_size_on_visible_nodes(name, node, size):
    matrix = corpus.CORPUS[name]()
    comparison = OracleService(matrix).compare_with_classifier(node, 12 if name == "g5" else 10)
    assert comparison.status == CompareStatus.MATCH
    assert len(comparison.oracle.elements) == size


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(corpus.CORPUS))
def test_classifier_agrees_with_oracle(name):
    matrix = corpus.CORPUS[name]()
    oracle = OracleService(matrix)
    limit = 12 if name == "g5" else 10
    for node in matrix.nodes:
        comparison = oracle.compare_with_classifier(node, limit)
        assert comparison.status == CompareStatus.MATCH, (node, oracle.element_words(comparison.oracle))


@pytest.mark.parametrize("name, subset", [("affine_c2", ["a", "b"]), ("affine_g2", ["a", "b"]), ("affine_a3", ["a", "c"])])
def test_longest_element_of_minus_one_type_keeps_its_parabolic(name, subset):
    matrix = corpus.CORPUS[name]()
    oracle = OracleService(matrix, max_length=4)
    I = matrix.node_set(subset)
    assert oracle.engine.finite_types.is_minus_one_type(I)
    result = oracle.oracle_fc_element(oracle.engine.longest_element(I))
    assert oracle.engine.group_elements(I) <= result.elements


def test_conjugate_table_is_built_once_per_depth(affine_a2):
    oracle = OracleService(affine_a2, max_length=4)
    table = oracle.conjugate_table()
    for node in affine_a2.nodes:
        oracle.compare_with_classifier(node, 4)
    assert oracle.conjugate_table(4) is table
    assert len({c.roots for c in table}) == len(table)
    for c in table:
        assert (c.v * c.v_inverse).is_identity
        assert not any(oracle.engine.has_right_descent(c.v, j) for j in c.J)


@pytest.mark.slow
def test_random_oracle_shrinks_with_depth():
    rng = random.Random(11)
    for matrix in corpus.random_matrices(1000, ranks=(2, 3), seed=13):
        oracle = OracleService(matrix)
        a = rng.choice(matrix.nodes)
        r_a = oracle.engine.simple_reflection(a)
        sets = [oracle.oracle_fc_element(r_a, limit).elements for limit in (1, 2, 3)]
        assert sets[0] >= sets[1] >= sets[2]
        assert r_a in sets[2]
        prediction = oracle.classifier.finite_continuation(a)
        if prediction.is_visible:
            assert oracle.engine.group_elements(prediction.J) <= sets[2]

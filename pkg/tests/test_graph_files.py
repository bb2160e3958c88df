"""
Graph file format and the shipped corpus
"""
import json

import pytest
from pydantic import ValidationError

from app.exceptions import InputError
from app.schemas import GraphFile
from app.services.graph_file_service import GraphFileService
from tests import corpus


@pytest.mark.parametrize("name", sorted(corpus.CORPUS))
def test_shipped_graphs_match_corpus(name, graphs_dir):
    assert GraphFileService(graphs_dir).load_matrix(name) == corpus.CORPUS[name]()


def test_corpus_listing(graphs_dir):
    assert GraphFileService(graphs_dir).corpus() == sorted(corpus.CORPUS)


def test_canonical_file_omits_commuting_pairs(graphs_dir):
    service = GraphFileService(graphs_dir)
    canonical = GraphFile.from_matrix(corpus.g5())
    assert canonical == service.load("g5")
    assert [edge.m for edge in canonical.edges] == [4, 3, 3, "inf"]


def test_load_by_path(tmp_path, graphs_dir):
    target = tmp_path / "g7_copy.json"
    target.write_text(GraphFile.from_matrix(corpus.g7()).model_dump_json(indent=2), encoding="utf-8")
    assert GraphFileService(graphs_dir).load_matrix(str(target)) == corpus.g7()


def test_missing_file_lists_shipped_graphs(graphs_dir):
    with pytest.raises(InputError) as info:
        GraphFileService(graphs_dir).resolve("no_such_graph")
    assert "g5, g6, g7" in str(info.value)


def test_non_utf8_file_is_an_input_error(tmp_path, graphs_dir):
    target = tmp_path / "latin1.json"
    target.write_bytes(b'{"nodes": ["\xe9"], "edges": []}')
    with pytest.raises(InputError, match="not UTF-8"):
        GraphFileService(graphs_dir).load(str(target))


@pytest.mark.parametrize(
    "payload, fragment",
    [
        ({"nodes": ["a", "a"], "edges": []}, "duplicate node"),
        ({"nodes": ["a"], "edges": [{"u": "a", "v": "z", "m": 3}]}, "unknown node"),
        ({"nodes": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": 3}, {"u": "b", "v": "a", "m": 4}]}, "twice"),
        ({"nodes": ["a", "b"], "edges": [{"u": "a", "v": "a", "m": 3}]}, "itself"),
        ({"nodes": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": 1}]}, ">= 2"),
        ({"nodes": [], "edges": []}, "at least 1"),
    ],
)
def test_invalid_graph_files(payload, fragment):
    with pytest.raises(ValidationError) as info:
        GraphFile.model_validate_json(json.dumps(payload))
    assert fragment in str(info.value)


@pytest.mark.parametrize("label", ["5", "infinity", 3.0, True])
def test_labels_must_be_integers_or_inf(label):
    with pytest.raises(ValidationError):
        GraphFile.model_validate({"nodes": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": label}]})


def test_unknown_fields_rejected():
    with pytest.raises(ValidationError):
        GraphFile.model_validate({"nodes": ["a"], "edges": [], "labels": {}})

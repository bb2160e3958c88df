"""
Finite continuation classifier on the shipped graphs and hand-built diagrams
"""
import pytest

from app.exceptions import BadArguments, CaseConflict, NotAnOddComponent, UnknownNode
from app.models.coxeter_matrix import CoxeterMatrix
from app.models.fc_result import CaseTag, FcKind, Verdict
from app.services.classifier_service import FcClassifierService
from tests import corpus


def fc_table(matrix: CoxeterMatrix) -> dict[str, tuple]:
    results = FcClassifierService(matrix).analyze()
    return {
        a: (r.kind, r.case_tag, None if r.J is None else r.J.names())
        for a, r in results.items()
    }


VISIBLE, NOT_VISIBLE = FcKind.VISIBLE, FcKind.NOT_VISIBLE


# ============ Corpus ============

def test_dihedral_six_is_case_a(i2_6):
    assert fc_table(i2_6) == {
        "a": (VISIBLE, CaseTag.A, ["a", "b"]),
        "b": (VISIBLE, CaseTag.A, ["a", "b"]),
    }


def test_reducible_finite_group_gives_whole_group(a1_x_i2_3):
    for kind, case, J in fc_table(a1_x_i2_3).values():
        assert (kind, case, J) == (VISIBLE, CaseTag.A, ["a", "b", "c"])


@pytest.mark.parametrize("name", corpus.AFFINE)
def test_affine_groups_have_trivial_continuation(name):
    matrix = corpus.CORPUS[name]()
    for a, (kind, case, J) in fc_table(matrix).items():
        assert (kind, case, J) == (VISIBLE, CaseTag.B, [a])


def test_focus_graph(g5):
    classifier = FcClassifierService(g5)
    M = classifier.graph.odd_component("a")
    assert classifier.find_focus(M) == ("a", "b")
    assert classifier.find_half_focus(M) is None
    assert fc_table(g5) == {
        "b": (VISIBLE, CaseTag.B, ["b"]),
        "a": (VISIBLE, CaseTag.C, ["b", "a"]),
        "c": (NOT_VISIBLE, CaseTag.C, None),
        "d": (NOT_VISIBLE, CaseTag.C, None),
    }
    assert classifier.finite_continuation("c").witness == ("a", "b")


def test_half_focus_graph(g6):
    classifier = FcClassifierService(g6)
    M = classifier.graph.odd_component("a")
    assert classifier.find_half_focus(M) == ("a", "b")
    assert classifier.find_foci(M) == []
    table = fc_table(g6)
    assert table["a"] == (VISIBLE, CaseTag.D, ["a", "b"])
    assert table["b"] == (VISIBLE, CaseTag.D, ["a", "b"])
    assert table["c"] == (NOT_VISIBLE, CaseTag.D, None)
    assert table["d"] == (NOT_VISIBLE, CaseTag.D, None)


def test_c3_neighbour_graph(g7):
    classifier = FcClassifierService(g7)
    M = classifier.graph.odd_component("a")
    assert classifier.c3_neighbours(M) == ["b"]
    table = fc_table(g7)
    assert table["a"] == (VISIBLE, CaseTag.B, ["a", "b"])
    assert table["a2"] == (VISIBLE, CaseTag.B, ["a2", "b"])
    assert table["c"] == (NOT_VISIBLE, CaseTag.B, None)
    assert classifier.finite_continuation("a").witness == ("b",)


def test_focus_rejected_when_component_is_spherical():
    matrix = corpus.b3_focus_candidate()
    classifier = FcClassifierService(matrix)
    M = classifier.graph.odd_component("a")
    assert classifier.find_foci(M) == []
    analysis = classifier.analyze_component(M)
    assert analysis.case_tag == CaseTag.A
    assert any("(5)" in note for note in analysis.diagnostics)
    assert classifier.finite_continuation("a").J.names() == ["b", "a", "c"]


# ============ Result invariants ============

@pytest.mark.parametrize("name", sorted(corpus.CORPUS))
def test_visible_results_contain_node_and_are_spherical(name):
    matrix = corpus.CORPUS[name]()
    classifier = FcClassifierService(matrix)
    for a, result in classifier.analyze().items():
        if result.kind == VISIBLE:
            assert a in result.J
            assert classifier.finite_types.is_spherical(result.J)
        else:
            assert result.J is None
            assert result.case_tag in (CaseTag.B, CaseTag.C, CaseTag.D)


@pytest.mark.parametrize("name", sorted(corpus.CORPUS))
def test_results_do_not_depend_on_node_order(name):
    matrix = corpus.CORPUS[name]()
    reversed_matrix = matrix.permuted(list(reversed(matrix.nodes)))
    original = fc_table(matrix)
    shuffled = fc_table(reversed_matrix)
    for a in matrix.nodes:
        kind, case, J = original[a]
        kind2, case2, J2 = shuffled[a]
        assert (kind, case) == (kind2, case2)
        assert (J is None and J2 is None) or set(J) == set(J2)


# ============ Chains and arguments ============

def test_c_chain_infers_focus_node(g5):
    classifier = FcClassifierService(g5)
    M = classifier.graph.odd_component("a")
    assert classifier.c_chain(M, "b", "c").names() == ["b", "a", "c"]
    assert classifier.c_chain(M, "b", "a", a="a").names() == ["b", "a"]


def test_c_chain_needs_unique_neighbour(g6):
    classifier = FcClassifierService(g6)
    M = classifier.graph.odd_component("a")
    with pytest.raises(BadArguments):
        classifier.c_chain(M, "c", "a")


def test_d_chain(g6):
    classifier = FcClassifierService(g6)
    M = classifier.graph.odd_component("a")
    assert classifier.d_chain(M, "a", "b", "c").names() == ["a", "b", "c"]


def test_arguments_are_validated(g5):
    classifier = FcClassifierService(g5)
    with pytest.raises(NotAnOddComponent):
        classifier.c3_neighbours(g5.node_set(["a"]))
    with pytest.raises(UnknownNode):
        classifier.finite_continuation("z")


# ============ Rigidity ============

@pytest.mark.parametrize("name", corpus.AFFINE)
def test_affine_groups_are_reflection_rigid(name):
    report = FcClassifierService(corpus.CORPUS[name]()).rigidity_report()
    assert report.hypotheses_hold
    assert report.cross_check_passed
    assert report.verdict == Verdict.REFLECTIONS_DETERMINED
    assert all(report.fc_trivial.values())
    assert any("external" in note for note in report.notes)


def test_rigidity_not_applicable(g5, i2_6, a1_x_i2_3):
    report = FcClassifierService(g5).rigidity_report()
    assert report.verdict == Verdict.NOT_APPLICABLE
    assert not report.two_spherical
    assert report.fc_trivial == {"b": True, "a": False, "c": False, "d": False}

    assert "W is finite" in FcClassifierService(i2_6).rigidity_report().notes
    assert "W is reducible" in FcClassifierService(a1_x_i2_3).rigidity_report().notes


# ============ Classification invariants ============

def check_component_invariants(matrix: CoxeterMatrix) -> None:
    classifier = FcClassifierService(matrix)
    for M in classifier.graph.odd_components():
        analysis = classifier.analyze_component(M)
        results = {a: classifier.finite_continuation(a) for a in M.names()}
        visible = {a: r for a, r in results.items() if r.kind == VISIBLE}
        assert visible, M.names()
        for a, result in visible.items():
            assert a in result.J
            assert analysis.spherical_union.issubset(result.J)
            assert classifier.finite_types.is_spherical(result.J)
        if analysis.case_tag == CaseTag.B:
            shared = {r.J.difference([matrix.index(a)]).members for a, r in visible.items()}
            assert len(shared) == 1
        elif analysis.case_tag == CaseTag.C:
            assert len(visible) == 1
        elif analysis.case_tag == CaseTag.D:
            assert len(visible) == 2


@pytest.mark.parametrize("name", sorted(corpus.CORPUS))
def test_component_invariants_on_corpus(name):
    check_component_invariants(corpus.CORPUS[name]())


def test_component_invariants_on_random_matrices():
    for matrix in corpus.random_matrices(500, ranks=(2, 3, 4), seed=17):
        check_component_invariants(matrix)


def test_case_b_shares_extension_across_component(g7):
    classifier = FcClassifierService(g7)
    J_a = classifier.finite_continuation("a").J
    J_a2 = classifier.finite_continuation("a2").J
    assert J_a.difference([g7.index("a")]).names() == J_a2.difference([g7.index("a2")]).names() == ["b"]


def test_overlapping_cases_raise_conflict(g5, monkeypatch):
    classifier = FcClassifierService(g5)
    M = classifier.graph.odd_component("a")
    found = classifier._half_foci

    def with_extra_half_focus(component, even):
        half, notes = found(component, even)
        return half + [(g5.index("c"), g5.index("d"))], notes

    monkeypatch.setattr(classifier, "_half_foci", with_extra_half_focus)
    with pytest.raises(CaseConflict) as info:
        classifier.finite_continuation("a")
    assert info.value.cases == [CaseTag.C.value, CaseTag.D.value]
    assert info.value.component == M.names()

from fractions import Fraction

import pytest

from src.conditions.evaluator import (
    applicable_bound_lemmas,
    evaluate_bound_lemma,
    evaluate_condition,
    exceptions_matching,
)
from src.conditions.facts import GraphFacts
from src.graphs.bipartite import BipartiteGraph
from src.graphs.families import generate_family
from src.graphs.graph import Graph
from src.graphs.named import complete_graph, cycle_graph
from src.models.enums.family import Family
from src.models.family import FamilyParams
from src.utils.exceptions import ClassMismatchError, DisconnectedGraphError, UnknownEntryError


def test_evaluate_condition__edge_lemma_holds(k55: BipartiteGraph) -> None:
    # Act
    verdict = evaluate_condition("L4.1", k55, 1)

    # Assert
    assert verdict.applicable
    assert verdict.hypothesis_holds
    assert verdict.n == 5
    assert verdict.lhs == Fraction(25)
    assert verdict.rhs == Fraction(19)


def test_evaluate_condition__disconnected_complement() -> None:
    # Act
    verdict = evaluate_condition("T7.2", complete_graph(16), 1)

    # Assert
    assert not verdict.applicable
    assert not verdict.hypothesis_holds
    assert verdict.lhs is None
    assert verdict.rhs == Fraction(1530)
    assert any("disconnected" in reason for reason in verdict.reasons)


def test_evaluate_condition__class_mismatch_is_not_an_error(c6: Graph) -> None:
    # Act
    verdict = evaluate_condition("L3.1", c6, 1)

    # Assert
    assert not verdict.applicable
    assert verdict.n is None
    assert verdict.rhs is None
    assert "requires a bipartite graph with fixed parts" in verdict.reasons


def test_evaluate_condition__unbalanced_parts(k23: BipartiteGraph) -> None:
    # Act
    balanced = evaluate_condition("L4.1", k23.oriented(), 1)
    nearly = evaluate_condition("L5.1", k23.oriented(), 1)

    # Assert
    assert not balanced.applicable
    assert nearly.n == 3
    assert nearly.lhs == Fraction(6)


def test_evaluate_condition__nearly_balanced_needs_the_larger_part_as_x(k23: BipartiteGraph) -> None:
    # Act
    verdict = evaluate_condition("L5.1", k23, 1)

    # Assert
    assert k23.part_sizes() == (2, 3)
    assert not verdict.applicable
    assert verdict.n is None
    assert "parts (2, 3) are not nearly balanced with X the larger part" in verdict.reasons


def test_evaluate_condition__size_and_degree_bounds(c6: Graph) -> None:
    # Act
    verdict = evaluate_condition("L6.1", c6, 3)

    # Assert
    assert not verdict.applicable
    assert any("minimum degree" in reason for reason in verdict.reasons)
    assert any("6*k + 10" in reason for reason in verdict.reasons)


def test_evaluate_condition__k_connected_requirement(c6: Graph) -> None:
    # Act
    below = evaluate_condition("L8.1", c6, 1)
    not_connected_enough = evaluate_condition("L8.1", c6, 3)

    # Assert
    assert any("below the minimum" in reason for reason in below.reasons)
    assert "G is not 3-connected" in not_connected_enough.reasons


def test_evaluate_condition__unknown_entry(c6: Graph) -> None:
    # Act / Assert
    with pytest.raises(UnknownEntryError):
        evaluate_condition("T2.1", c6, 1)


def test_evaluate_bound_lemma__wiener_of_complement(c5: Graph) -> None:
    # Act
    evaluation = evaluate_bound_lemma("L2.4", c5)

    # Assert
    assert evaluation.lhs == Fraction(15)
    assert evaluation.rhs == Fraction(25)
    assert evaluation.satisfied


def test_evaluate_bound_lemma__quasi_complement_of_matching(matching_3: BipartiteGraph) -> None:
    # Act
    evaluation = evaluate_bound_lemma("L2.1", matching_3)

    # Assert
    assert evaluation.n == 3
    assert evaluation.edge_count == 3
    assert evaluation.lhs == Fraction(27)
    assert evaluation.rhs == Fraction(45)
    assert evaluation.satisfied


def test_evaluate_bound_lemma__harary_lower_bound(c5: Graph) -> None:
    # Act
    evaluation = evaluate_bound_lemma("L2.6", c5)

    # Assert
    assert evaluation.lhs == Fraction(15, 2)
    assert evaluation.rhs == Fraction(25, 4)
    assert evaluation.satisfied


def test_evaluate_bound_lemma__disconnected_complement() -> None:
    # Act / Assert
    with pytest.raises(DisconnectedGraphError):
        evaluate_bound_lemma("L2.6", complete_graph(5))


def test_evaluate_bound_lemma__class_mismatch(c5: Graph) -> None:
    # Act / Assert
    with pytest.raises(ClassMismatchError):
        evaluate_bound_lemma("L2.1", c5)


def test_applicable_bound_lemmas(c5: Graph, matching_3: BipartiteGraph) -> None:
    # Act / Assert
    assert applicable_bound_lemmas(c5) == ["L2.4", "L2.5", "L2.6"]
    assert applicable_bound_lemmas(GraphFacts(matching_3))[:3] == ["L2.1", "L2.2", "L2.3"]
    assert applicable_bound_lemmas(complete_graph(4)) == []


def test_exceptions_matching__b_family() -> None:
    # Arrange
    g = generate_family(FamilyParams(family=Family.B, n=5, k=1))

    # Act
    verdict = evaluate_condition("L4.1", g, 1)
    memberships = exceptions_matching("L4.1", g, 1)

    # Assert
    assert verdict.hypothesis_holds
    assert [m.member for m in memberships] == [True]


def test_exceptions_matching__k_restricted_exception(k55: BipartiteGraph) -> None:
    # Act
    at_one = exceptions_matching("L3.1", k55, 1)
    at_two = exceptions_matching("L3.1", k55, 2)

    # Assert
    assert len(at_one) == 2
    assert len(at_two) == 1
    assert not any(m.member for m in at_one)


def test_exceptions_matching__class_does_not_fit() -> None:
    # Act
    memberships = exceptions_matching("L4.1", cycle_graph(10), 1)

    # Assert
    assert memberships[0].member is False
    assert memberships[0].note == "class does not fit"

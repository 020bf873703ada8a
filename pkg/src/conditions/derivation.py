from functools import cache
import logging

import sympy as sp

from src.conditions.catalog import edge_threshold_source, get_bound_lemma, get_entry, threshold
from src.conditions.evaluator import evaluate_bound_lemma, evaluate_condition
from src.conditions.facts import GraphFacts
from src.conditions.formulas import substitution_gap
from src.graphs.bipartite import BipartiteGraph
from src.graphs.graph import Graph
from src.models.condition import EdgeImplication
from src.utils.exceptions import GraphError

logger = logging.getLogger(__name__)


@cache
def derivation_gap(entry_id: str) -> sp.Expr | None:
    """Theorem threshold minus its bound lemma evaluated at the edge-lemma threshold.

    Zero means the first step of the proof is an exact re-expression of the edge
    inequality. None for edge lemmas.
    """
    entry = get_entry(entry_id)
    if entry.bound_lemma is None:
        return None
    lemma = get_bound_lemma(entry.bound_lemma)
    gap = substitution_gap(entry.formula, lemma.formula, edge_threshold_source(entry))
    logger.debug(f"{entry.id} derivation gap: {gap}")
    return gap


def implied_edge_inequality(entry_id: str, g: Graph | BipartiteGraph | GraphFacts, k: int) -> EdgeImplication:
    """Replay a theorem proof's first step on g: hypothesis plus bound lemma should force the edge inequality."""
    entry = get_entry(entry_id)
    facts = g if isinstance(g, GraphFacts) else GraphFacts(g)
    verdict = evaluate_condition(entry.id, facts, k)
    premises = verdict.hypothesis_holds and entry.bound_lemma is not None
    if premises and entry.bound_lemma is not None:
        try:
            premises = evaluate_bound_lemma(entry.bound_lemma, facts).satisfied
        except GraphError:
            premises = False
    edge_entry = entry.edge_lemma or entry.id
    edge_threshold = threshold(edge_entry, verdict.n, k) if verdict.n is not None else None
    implied = facts.edge_count > edge_threshold if premises and edge_threshold is not None else None
    gap = derivation_gap(entry.id)
    return EdgeImplication(
        entry_id=entry.id,
        k=k,
        premises_hold=premises,
        edge_count=facts.edge_count,
        edge_threshold=edge_threshold,
        implied=implied,
        derivation_gap=None if gap is None else str(gap),
    )

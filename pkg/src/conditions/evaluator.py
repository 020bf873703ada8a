import logging

from src.conditions.catalog import BOUND_LEMMAS, get_bound_lemma, get_entry, min_order, threshold
from src.conditions.facts import GraphFacts
from src.conditions.formulas import parse_formula
from src.conditions.membership import is_sub_family
from src.graphs.bipartite import BipartiteGraph
from src.graphs.graph import Graph
from src.models.condition import BoundEvaluation, BoundLemma, ConditionVerdict, ExceptionMembership
from src.models.enums.setting import Setting
from src.models.family import FamilyParams
from src.utils.exceptions import (
    ClassMismatchError,
    DegenerateOrderError,
    DisconnectedGraphError,
    FamilyRangeError,
    GraphError,
)

logger = logging.getLogger(__name__)


def setting_order(setting: Setting, facts: GraphFacts) -> tuple[int | None, str | None]:
    """The n a statement in this setting uses for the graph, or a reason it does not fit."""
    if setting in (Setting.GENERAL, Setting.K_CONNECTED):
        return facts.graph.n, None
    if facts.bipartite is None:
        return None, "requires a bipartite graph with fixed parts"
    x_size, y_size = facts.bipartite.part_sizes()
    if setting is Setting.BALANCED_BIPARTITE:
        if x_size != y_size:
            return None, f"parts ({x_size}, {y_size}) are not balanced"
        return x_size, None
    # X is the larger part; callers orient the graph first
    if x_size != y_size + 1:
        return None, f"parts ({x_size}, {y_size}) are not nearly balanced with X the larger part"
    return x_size, None


def evaluate_condition(entry_id: str, g: Graph | BipartiteGraph | GraphFacts, k: int) -> ConditionVerdict:
    entry = get_entry(entry_id)
    facts = g if isinstance(g, GraphFacts) else GraphFacts(g)
    reasons: list[str] = []
    if k < entry.min_k:
        reasons.append(f"k={k} is below the minimum {entry.min_k}")
    n, mismatch = setting_order(entry.setting, facts)
    if mismatch is not None:
        reasons.append(mismatch)
    if facts.graph.n == 0:
        reasons.append("graph has no vertices")
    elif entry.setting is not Setting.K_CONNECTED and facts.min_degree < k:
        reasons.append(f"minimum degree {facts.min_degree} is below k={k}")
    if entry.requires_k_connected and not facts.is_k_connected(k):
        reasons.append(f"G is not {k}-connected")
    bound = min_order(entry, k)
    if n is not None and bound is not None and n < bound:
        reasons.append(f"n={n} violates n >= {entry.size_bound}")

    lhs = facts.measure_value(entry.measure, entry.complement_kind)
    if lhs is None and entry.requires_complement_connected:
        reasons.append(f"{entry.complement_kind.value.replace('_', '-')} is disconnected")
    rhs = None
    if n is not None:
        try:
            rhs = threshold(entry.id, n, k)
        except DegenerateOrderError as e:
            reasons.append(str(e))

    hypothesis_holds = lhs is not None and rhs is not None and entry.comparator.holds(lhs, rhs)
    return ConditionVerdict(
        entry_id=entry.id,
        k=k,
        n=n,
        applicable=not reasons,
        reasons=reasons,
        hypothesis_holds=hypothesis_holds,
        lhs=lhs,
        rhs=rhs,
        comparator=entry.comparator,
        conclusion=entry.conclusion,
        exceptions=list(entry.exceptions),
    )


def _bound_fit(lemma: BoundLemma, facts: GraphFacts) -> int:
    n, mismatch = setting_order(lemma.setting, facts)
    if mismatch is not None or n is None:
        raise ClassMismatchError(f"{lemma.id} {mismatch}")
    if n < lemma.min_n:
        raise DegenerateOrderError(f"{lemma.id} needs n >= {lemma.min_n}, got n={n}")
    return n


def evaluate_bound_lemma(lemma_id: str, g: Graph | BipartiteGraph | GraphFacts) -> BoundEvaluation:
    lemma = get_bound_lemma(lemma_id)
    facts = g if isinstance(g, GraphFacts) else GraphFacts(g)
    n = _bound_fit(lemma, facts)
    lhs = facts.measure_value(lemma.measure, lemma.complement_kind)
    if lhs is None:
        raise DisconnectedGraphError(f"{lemma.id} needs a connected {lemma.complement_kind.value.replace('_', '-')}")
    rhs = parse_formula(lemma.formula).evaluate(n, 0, facts.edge_count)
    satisfied = lemma.comparator.holds(lhs, rhs)
    if not satisfied:
        logger.warning(f"{lemma.id} violated: lhs={lhs}, rhs={rhs}, n={n}, e={facts.edge_count}")
    return BoundEvaluation(
        lemma_id=lemma.id,
        n=n,
        edge_count=facts.edge_count,
        lhs=lhs,
        rhs=rhs,
        comparator=lemma.comparator,
        satisfied=satisfied,
    )


def applicable_bound_lemmas(g: Graph | BipartiteGraph | GraphFacts) -> list[str]:
    """Ids of the bound lemmas whose class, order and connectivity preconditions g meets."""
    facts = g if isinstance(g, GraphFacts) else GraphFacts(g)
    if facts.graph.n == 0:
        return []
    fitting = []
    for lemma in BOUND_LEMMAS:
        n, mismatch = setting_order(lemma.setting, facts)
        if mismatch is not None or n is None or n < lemma.min_n:
            continue
        if facts.measure_value(lemma.measure, lemma.complement_kind) is not None:
            fitting.append(lemma.id)
    return fitting


def exceptions_matching(
    entry_id: str, g: Graph | BipartiteGraph | GraphFacts, k: int
) -> list[ExceptionMembership]:
    """Membership of g in each exception family the entry lists for this k."""
    entry = get_entry(entry_id)
    facts = g if isinstance(g, GraphFacts) else GraphFacts(g)
    n, _ = setting_order(entry.setting, facts)
    memberships = []
    for exception in entry.exceptions:
        if not exception.applies_to(k):
            continue
        if n is None:
            memberships.append(
                ExceptionMembership(entry_id=entry.id, exception=exception, member=False, note="class does not fit")
            )
            continue
        try:
            member: bool | None = is_sub_family(facts.source, FamilyParams(family=exception.family, n=n, k=k))
            note = None
        except FamilyRangeError as e:
            member, note = False, str(e)
        except GraphError as e:
            logger.warning(f"Membership in {exception.describe()} undecided, {str(e)}")
            member, note = None, str(e)
        memberships.append(ExceptionMembership(entry_id=entry.id, exception=exception, member=member, note=note))
    return memberships

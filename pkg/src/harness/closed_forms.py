from dataclasses import dataclass
from fractions import Fraction
import logging

from src.conditions.formulas import parse_formula
from src.graphs.bipartite import BipartiteGraph
from src.graphs.families import family_range, generate_family
from src.graphs.graph import Graph
from src.graphs.operations import complement, quasi_complement
from src.metrics.indices import indices_without_isolated
from src.models.enums.family import Family
from src.models.enums.measure import ComplementKind, Measure
from src.models.family import FamilyParams
from src.models.index_report import IndexReport
from src.models.verification import ClosedFormCheck
from src.utils.exceptions import GraphError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClosedForm:
    family: Family
    measure: Measure
    complement_kind: ComplementKind
    formula: str
    label: str | None = None


CLOSED_FORMS: tuple[ClosedForm, ...] = (
    ClosedForm(Family.C, Measure.EDGE_COUNT, ComplementKind.NONE, "n*(n - k - 1) + k**2"),
    ClosedForm(Family.C, Measure.HARARY, ComplementKind.QUASI_COMPLEMENT, "(n**2 + 2*k*n - n - 2*k**2)/4"),
    ClosedForm(Family.L_UNDER, Measure.WIENER, ComplementKind.COMPLEMENT, "n**2 - 2*n - k*n + k**2 + 2*k + 1"),
    ClosedForm(
        Family.L_UNDER,
        Measure.WIENER,
        ComplementKind.COMPLEMENT,
        "n**2 - n - (k + 1)*(n - k - 1)",
        label="W of complement via the K_{a,b} distance pattern",
    ),
    ClosedForm(
        Family.L_UNDER, Measure.HYPER_WIENER, ComplementKind.COMPLEMENT, "(3*n**2 - 7*n - 4*k*n + 4*k**2 + 8*k + 4)/2"
    ),
    ClosedForm(Family.L_UNDER, Measure.HARARY, ComplementKind.COMPLEMENT, "(n**2 + n + 2*k*n - 2*k**2 - 2)/4"),
    ClosedForm(
        Family.N_UNDER, Measure.WIENER, ComplementKind.COMPLEMENT, "(2*n**2 - 4*n - 6*k*n + 5*k**2 + 7*k + 2)/2"
    ),
    ClosedForm(
        Family.N_UNDER, Measure.HYPER_WIENER, ComplementKind.COMPLEMENT, "3*n**2 - 7*n - 10*k*n + 9*k**2 + 13*k + 4"
    ),
    ClosedForm(Family.N_UNDER, Measure.HARARY, ComplementKind.COMPLEMENT, "(n**2 + n + 2*k*n - 2*k**2 - 6*k - 2)/4"),
    ClosedForm(Family.L, Measure.WIENER, ComplementKind.COMPLEMENT, "n**2 - k*n - 3*n + k**2 + k + 2"),
    ClosedForm(Family.L, Measure.HYPER_WIENER, ComplementKind.COMPLEMENT, "3*n**2 - 4*k*n - 9*n + 4*k**2 + 4*k + 6"),
    ClosedForm(Family.L, Measure.HARARY, ComplementKind.COMPLEMENT, "(n**2 - 3*n + 2*k*n - 2*k**2 - 2*k + 2)/4"),
    ClosedForm(Family.N, Measure.WIENER, ComplementKind.COMPLEMENT, "n**2 - 3*k*n - n + 5*k**2/2 + 3*k/2"),
    ClosedForm(Family.N, Measure.HYPER_WIENER, ComplementKind.COMPLEMENT, "3*n**2 - 10*k*n - 3*n + 9*k**2 + 5*k"),
    ClosedForm(Family.N, Measure.HARARY, ComplementKind.COMPLEMENT, "(n**2 - n - 3*k**2 + k)/4"),
)


def quantity_label(form: ClosedForm) -> str:
    if form.label is not None:
        return form.label
    if form.complement_kind is ComplementKind.NONE:
        return f"{form.measure.value} of {form.family.value}"
    kind = form.complement_kind.value.replace("_", "-")
    return f"{form.measure.value} of {kind} (isolated vertices removed)"


def _pick(report: IndexReport, measure: Measure) -> Fraction:
    match measure:
        case Measure.WIENER:
            return Fraction(report.wiener)
        case Measure.HYPER_WIENER:
            return Fraction(report.hyper_wiener)
        case _:
            return report.harary


def _computed_value(form: ClosedForm, g: Graph | BipartiteGraph) -> Fraction:
    graph = g.graph if isinstance(g, BipartiteGraph) else g
    if form.measure is Measure.EDGE_COUNT:
        return Fraction(graph.edge_count)
    if form.complement_kind is ComplementKind.QUASI_COMPLEMENT:
        if not isinstance(g, BipartiteGraph):
            raise TypeError(f"Quasi-complement of {form.family.value} needs a bipartite family")
        target = quasi_complement(g).graph
    else:
        target = complement(graph)
    return _pick(indices_without_isolated(target), form.measure)


def check_closed_form(form: ClosedForm, params: FamilyParams) -> ClosedFormCheck:
    formula_value = parse_formula(form.formula).evaluate(params.n, params.k)
    quantity = quantity_label(form)
    try:
        computed: Fraction | None = _computed_value(form, generate_family(params))
        note = None
    except GraphError as e:
        computed, note = None, str(e)
    match = computed == formula_value
    if computed is not None and not match:
        logger.warning(f"{quantity} on {params.label()}: formula {formula_value} but computed {computed}")
    return ClosedFormCheck(
        params=params, quantity=quantity, formula_value=formula_value, computed_value=computed, match=match, note=note
    )


def verify_closed_forms(n_max: int = 14, k_max: int = 3, n_min: int = 1) -> list[ClosedFormCheck]:
    """Every closed form at every valid (n, k) with n_min <= n <= n_max and k <= k_max."""
    checks = []
    for form in CLOSED_FORMS:
        for n in range(n_min, n_max + 1):
            for k in family_range(form.family, n):
                if k > k_max:
                    break
                checks.append(check_closed_form(form, FamilyParams(family=form.family, n=n, k=k)))
    mismatches = sum(1 for c in checks if not c.match)
    logger.info(f"Checked {len(checks)} closed-form values, {mismatches} mismatches")
    return checks

from src.conditions.derivation import derivation_gap
from src.conditions.formulas import Term, parse_formula
from src.models.condition import CatalogEntryDump, ConditionEntry, PolynomialTerm


def _to_polynomial_terms(terms: tuple[Term, ...]) -> list[PolynomialTerm]:
    return [PolynomialTerm(n_power=i, k_power=j, coefficient=c) for (i, j, _), c in terms]


def to_catalog_entry_dump(entry: ConditionEntry) -> CatalogEntryDump:
    formula = parse_formula(entry.formula)
    gap = derivation_gap(entry.id)
    return CatalogEntryDump(
        **entry.model_dump(),
        numerator_terms=_to_polynomial_terms(formula.numerator),
        denominator_terms=_to_polynomial_terms(formula.denominator),
        derivation_gap=None if gap is None else str(gap),
    )

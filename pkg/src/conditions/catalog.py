from collections.abc import Iterable
from fnmatch import fnmatchcase
from fractions import Fraction

from src.conditions.formulas import parse_formula
from src.models.condition import BoundLemma, ConditionEntry, ExceptionDescriptor
from src.models.enums.comparator import Comparator
from src.models.enums.family import Family
from src.models.enums.hamiltonicity_property import HamiltonicityProperty
from src.models.enums.measure import ComplementKind, Measure
from src.models.enums.setting import Setting
from src.utils.exceptions import UnknownEntryError

_BALANCED = Setting.BALANCED_BIPARTITE
_NEARLY = Setting.NEARLY_BALANCED_BIPARTITE
_GENERAL = Setting.GENERAL
_K_CONNECTED = Setting.K_CONNECTED

_TRACEABLE = HamiltonicityProperty.TRACEABLE
_HAMILTONIAN = HamiltonicityProperty.HAMILTONIAN
_HAMILTON_CONNECTED = HamiltonicityProperty.HAMILTON_CONNECTED
_FROM_EVERY_VERTEX = HamiltonicityProperty.TRACEABLE_FROM_EVERY_VERTEX

_R_WHEN_K_IS_1 = ExceptionDescriptor(family=Family.R, k_equals=1)


def _edge_lemma(
    entry_id: str,
    setting: Setting,
    formula: str,
    conclusion: HamiltonicityProperty,
    citation: str,
    exceptions: tuple[ExceptionDescriptor, ...] = (),
    size_bound: str | None = None,
    annotations: tuple[str, ...] = (),
) -> ConditionEntry:
    k_connected = setting is _K_CONNECTED
    return ConditionEntry(
        id=entry_id,
        setting=setting,
        measure=Measure.EDGE_COUNT,
        complement_kind=ComplementKind.NONE,
        comparator=Comparator.GT,
        formula=formula,
        conclusion=conclusion,
        exceptions=exceptions,
        min_k=2 if k_connected else 1,
        size_bound=size_bound,
        requires_k_connected=k_connected,
        citation=citation,
        annotations=annotations,
    )


def _theorem(
    entry_id: str,
    lemma: ConditionEntry,
    measure: Measure,
    comparator: Comparator,
    formula: str,
    bound_lemma: str,
    citation: str,
    exceptions: tuple[ExceptionDescriptor, ...] = (),
    annotations: tuple[str, ...] = (),
) -> ConditionEntry:
    return ConditionEntry(
        id=entry_id,
        setting=lemma.setting,
        measure=measure,
        complement_kind=ComplementKind.QUASI_COMPLEMENT if lemma.setting.is_bipartite else ComplementKind.COMPLEMENT,
        comparator=comparator,
        formula=formula,
        conclusion=lemma.conclusion,
        exceptions=exceptions,
        min_k=lemma.min_k,
        size_bound=lemma.size_bound,
        requires_complement_connected=True,
        requires_k_connected=lemma.requires_k_connected,
        edge_lemma=lemma.id,
        bound_lemma=bound_lemma,
        citation=citation,
        annotations=annotations,
    )


_L3_1 = _edge_lemma(
    "L3.1",
    _BALANCED,
    "n*(n - k - 2) + (k + 2)**2",
    _TRACEABLE,
    "e(G)>n(n-k-2)+(k+2)^2",
    exceptions=(ExceptionDescriptor(family=Family.Q), _R_WHEN_K_IS_1),
    size_bound="2*k + 3",
)
_L4_1 = _edge_lemma(
    "L4.1",
    _BALANCED,
    "n*(n - k - 1) + (k + 1)**2",
    _HAMILTONIAN,
    "hamiltonian unless $G\\subseteq B_{n}^{k}$",
    exceptions=(ExceptionDescriptor(family=Family.B),),
    size_bound="2*k + 3",
)
_L5_1 = _edge_lemma(
    "L5.1",
    _NEARLY,
    "n*(n - k - 2) + (k + 1)**2",
    _TRACEABLE,
    "traceable unless $G\\subseteq C_{n}^{k}$",
    exceptions=(ExceptionDescriptor(family=Family.C),),
    size_bound="2*k + 1",
    annotations=("the C_n^k range 1 <= k <= n/2 is accepted as stated although C_n^k has 2n-1 vertices",),
)
_L6_1 = _edge_lemma(
    "L6.1",
    _GENERAL,
    "binomial(n - k - 2, 2) + (k + 1)*(k + 2)",
    _TRACEABLE,
    "\\binom{n-k-2}{2}+(k+1)(k+2)",
    exceptions=(ExceptionDescriptor(family=Family.L_UNDER), ExceptionDescriptor(family=Family.N_UNDER)),
    size_bound="6*k + 10",
)
_L7_1 = _edge_lemma(
    "L7.1",
    _GENERAL,
    "binomial(n - k - 1, 2) + (k + 1)**2",
    _HAMILTONIAN,
    "\\binom{n-k-1}{2}+(k+1)^2",
    exceptions=(ExceptionDescriptor(family=Family.L), ExceptionDescriptor(family=Family.N)),
    size_bound="6*k + 5",
)
_L8_1 = _edge_lemma(
    "L8.1",
    _K_CONNECTED,
    "(n*(n - 1) - k*(n - k - 1))/2",
    _HAMILTON_CONNECTED,
    "then $G$ is Hamilton-connected",
)
_L9_1 = _edge_lemma(
    "L9.1",
    _K_CONNECTED,
    "(n*(n - 1) - k*(n - k))/2",
    _FROM_EVERY_VERTEX,
    "traceable from every vertex",
)

_W = Measure.WIENER
_WW = Measure.HYPER_WIENER
_H = Measure.HARARY
_GT = Comparator.GT
_LT = Comparator.LT

CATALOG: tuple[ConditionEntry, ...] = (
    _L3_1,
    _theorem(
        "T3.2",
        _L3_1,
        _W,
        _GT,
        "4*n**3 - (2*k + 9)*n**2 + (2*k**2 + 10*k + 14)*n - 2*(k + 2)**2",
        "L2.1",
        "4n^3-(2k+9)n^2+(2k^2+10k+14)n",
        exceptions=(_R_WHEN_K_IS_1,),
    ),
    _theorem(
        "T3.3",
        _L3_1,
        _WW,
        _GT,
        "4*n**4 - (2*k + 10)*n**3 + (2*k**2 + 9*k + 14)*n**2 - (k**2 + 3*k + 3)*n - (k + 2)**2",
        "L2.2",
        "4n^4-(2k+10)n^3+(2k^2+9k+14)n^2",
        exceptions=(_R_WHEN_K_IS_1,),
    ),
    _theorem(
        "T3.4",
        _L3_1,
        _H,
        _LT,
        "((4*k + 12)*n**2 - (4*k**2 + 20*k - 25)*n + 4*k**2 + 16*k + 16)/(4*n - 2)",
        "L2.3",
        "(4k+12)n^2-(4k^2+20k-25)n",
        exceptions=(_R_WHEN_K_IS_1,),
        annotations=(
            "the statement assumes G connected where its siblings assume the quasi-complement connected; "
            "the quasi-complement is required here so that its Harary index is defined",
        ),
    ),
    _L4_1,
    _theorem(
        "T4.2",
        _L4_1,
        _W,
        _GT,
        "4*n**3 - (2*k + 7)*n**2 + (2*k + 2*(k + 1)**2 + 4)*n - 2*(k + 1)**2",
        "L2.1",
        "4n^3-(2k+7)n^2",
    ),
    _theorem(
        "T4.3",
        _L4_1,
        _WW,
        _GT,
        "4*n**4 - (2*k + 8)*n**3 + (2*k**2 + 5*k + 7)*n**2 - (k**2 + k + 1)*n - (k + 1)**2",
        "L2.2",
        "4n^4-(2k+8)n^3+(2k^2+5k+7)n^2",
    ),
    _theorem(
        "T4.4",
        _L4_1,
        _H,
        _LT,
        "((4*k + 8)*n**2 - (4*k**2 + 12*k + 9)*n + 4*k**2 + 8*k + 4)/(4*n - 2)",
        "L2.3",
        "(4k+8)n^2-(4k^2+12k+9)n",
    ),
    _L5_1,
    _theorem(
        "T5.2",
        _L5_1,
        _W,
        _GT,
        "4*n**3 - (2*k + 14)*n**2 + (4*k + 2*(k + 1)**2 + 16)*n - 4*(k + 1)**2 - 4",
        "L2.nearly-W",
        "4n^3-(2k+14)n^2",
        annotations=("no exception clause is stated although the edge lemma has one; failures are reported",),
    ),
    _theorem(
        "T5.3",
        _L5_1,
        _WW,
        _GT,
        "4*n**4 - (2*k + 18)*n**3 + (2*k**2 + 9*k + 65/2)*n**2 - (5*k**2 + 12*k + 53/2)*n + 2*k**2 + 4*k + 8",
        "L2.nearly-WW",
        "4n^4-(2k+18)n^3",
        annotations=("no exception clause is stated although the edge lemma has one; failures are reported",),
    ),
    _theorem(
        "T5.4",
        _L5_1,
        _H,
        Comparator.LE,
        "((4*k + 8)*n**2 - (4*k**2 + 16*k + 17)*n + 8*k**2 + 16*k + 8)/(4*n - 6)",
        "L2.nearly-H",
        "(4k^2+16k+17)n+8k^2+16k+8",
        exceptions=(ExceptionDescriptor(family=Family.C, k_max=6),),
        annotations=(
            "the comparator is <= as printed",
            "the exception C_n^k (k <= 6) is applied as printed; oracle outcomes on C_n^k for k >= 7 are recorded",
        ),
    ),
    _L6_1,
    _theorem(
        "T6.2",
        _L6_1,
        _W,
        _GT,
        "(n**3 - (2*k + 6)*n**2 + (3*k**2 + 15*k + 19)*n - 6*k**2 - 22*k - 20)/2",
        "L2.4",
        "(3k^2+15k+19)n-6k^2-22k-20",
    ),
    _theorem(
        "T6.3",
        _L6_1,
        _WW,
        _GT,
        "n**4/4 - (k/2 + 3/2)*n**3 + (3*k**2/4 + 13*k/4 + 15/4)*n**2 - (3*k**2/4 + 7*k/4 + 1/2)*n"
        " - 3*k**2/2 - 11*k/2 - 5",
        "L2.5",
        "\\frac{3}{4}k^2+\\frac{13}{4}k+\\frac{15}{4}",
    ),
    _theorem(
        "T6.4",
        _L6_1,
        _H,
        _LT,
        "((2*k + 4)*n**2 - (3*k**2 + 15*k + 18)*n + 6*k**2 + 22*k + 20)/(2*n - 2)",
        "L2.6",
        "(2k+4)n^2-(3k^2+15k+18)n",
    ),
    _L7_1,
    _theorem(
        "T7.2",
        _L7_1,
        _W,
        _GT,
        "(n**3 - (2*k + 4)*n**2 + (3*k**2 + 11*k + 19)*n - 6*k**2 - 14*k - 8)/2",
        "L2.4",
        "(3k^2+11k+19)n-6k^2-14k-8",
    ),
    _theorem(
        "T7.3",
        _L7_1,
        _WW,
        _GT,
        "n**4/4 - (k/2 + 1)*n**3 + (3*k**2/4 + 9*k/4 + 3/2)*n**2 - (3*k**2/4 + 3*k/4 + 1/4)*n"
        " - (3*k**2/2 + 7*k/2 + 2)",
        "L2.5",
        "\\frac{3}{4}k^2+\\frac{9}{4}k+\\frac{3}{2}",
    ),
    _theorem(
        "T7.4",
        _L7_1,
        _H,
        _LT,
        "((2*k + 2)*n**2 - (3*k**2 + 11*k + 8)*n + 6*k**2 + 14*k + 8)/(2*n - 2)",
        "L2.6",
        "(2k+2)n^2-(3k^2+11k+8)n",
        annotations=("one restatement of the hypothesis omits its comparator; it is read as '<' like its siblings",),
    ),
    _L8_1,
    _theorem(
        "T8.2",
        _L8_1,
        _W,
        _GT,
        "n**3/2 - (k/2 + 1)*n**2 + (k**2 + 3*k + 1)*n/2 - k**2 - k",
        "L2.4",
        "\\frac{1}{2}(k^2+3k+1)n-k^2-k",
    ),
    _theorem(
        "T8.3",
        _L8_1,
        _WW,
        _GT,
        "n**4/4 - (k/4 + 1/2)*n**3 + (k**2/4 + k/2 + 1/4)*n**2 - (k**2/4 - k/4)*n - k**2/2 - k/2",
        "L2.5",
        "(\\frac{1}{4}k^2+\\frac{1}{2}k+\\frac{1}{4})n^2",
    ),
    _theorem(
        "T8.4",
        _L8_1,
        _H,
        _LT,
        "((k + 1)*n**2 - (k**2 + 3*k + 1)*n + 2*k**2 + 2*k)/(2*(n - 1))",
        "L2.6",
        "(k+1)n^2-(k^2+3k+1)n+2k^2+2k",
    ),
    _L9_1,
    _theorem(
        "T9.2",
        _L9_1,
        _W,
        _GT,
        "n**3/2 - (k/2 + 1)*n**2 + (k**2 + 2*k + 1)*n/2 - k**2",
        "L2.4",
        "\\frac{1}{2}(k^2+2k+1)n-k^2",
    ),
    _theorem(
        "T9.3",
        _L9_1,
        _WW,
        _GT,
        "n**4/4 - (k/4 + 1/2)*n**3 + (k**2/4 + k/4 + 1/4)*n**2 - (k**2/4 - k/2)*n - k**2/2",
        "L2.5",
        "(\\frac{1}{4}k^2+\\frac{1}{4}k+\\frac{1}{4})n^2",
    ),
    _theorem(
        "T9.4",
        _L9_1,
        _H,
        _LT,
        "((k + 1)*n**2 + (-k**2 - 2*k - 1)*n + 2*k**2)/(2*n - 2)",
        "L2.6",
        "(k+1)n^2+(-k^2-2k-1)n+2k^2",
    ),
)

_QUASI = ComplementKind.QUASI_COMPLEMENT
_COMPLEMENT = ComplementKind.COMPLEMENT

BOUND_LEMMAS: tuple[BoundLemma, ...] = (
    BoundLemma(
        id="L2.1",
        setting=_BALANCED,
        measure=_W,
        complement_kind=_QUASI,
        comparator=Comparator.LE,
        formula="2*n**3 - 3*n**2 + 2*n + 2*(n - 1)*e",
        citation="2n^3-3n^2+2n+2(n-1)e(G)",
    ),
    BoundLemma(
        id="L2.2",
        setting=_BALANCED,
        measure=_WW,
        complement_kind=_QUASI,
        comparator=Comparator.LE,
        formula="2*n**4 - 5*n**3 + 5*n**2 - n + (2*n**2 - n - 1)*e",
        citation="2n^4-5n^3+5n^2-n+(2n^2-n-1)e(G)",
    ),
    BoundLemma(
        id="L2.3",
        setting=_BALANCED,
        measure=_H,
        complement_kind=_QUASI,
        comparator=Comparator.GE,
        formula="(4*n**3 - n)/(4*n - 2) - (2*n - 2)/(2*n - 1)*e",
        min_n=2,
        citation="\\frac{4n^3-n}{4n-2}-\\frac{2n-2}{2n-1}e(G)",
    ),
    BoundLemma(
        id="L2.4",
        setting=_GENERAL,
        measure=_W,
        complement_kind=_COMPLEMENT,
        comparator=Comparator.LE,
        formula="n*(n - 1)/2 + (n - 2)*e",
        citation="\\frac{1}{2}n(n-1)+(n-2)e(G)",
    ),
    BoundLemma(
        id="L2.5",
        setting=_GENERAL,
        measure=_WW,
        complement_kind=_COMPLEMENT,
        comparator=Comparator.LE,
        formula="n*(n - 1)/2 + (n**2 - n - 2)*e/2",
        citation="\\frac{1}{2}(n^2-n-2)e(G)",
    ),
    BoundLemma(
        id="L2.6",
        setting=_GENERAL,
        measure=_H,
        complement_kind=_COMPLEMENT,
        comparator=Comparator.GE,
        formula="(n**2 - n)/2 - (n - 2)/(n - 1)*e",
        min_n=2,
        citation="\\frac{1}{2}(n^2-n)-\\frac{n-2}{n-1}e(G)",
    ),
    BoundLemma(
        id="L2.nearly-W",
        setting=_NEARLY,
        measure=_W,
        complement_kind=_QUASI,
        comparator=Comparator.LE,
        formula="2*n**3 - 6*n**2 + 8*n - 4 + 2*(n - 2)*e",
        citation="2n^3-6n^2+8n-4+2(n-2)e(G)",
    ),
    BoundLemma(
        id="L2.nearly-WW",
        setting=_NEARLY,
        measure=_WW,
        complement_kind=_QUASI,
        comparator=Comparator.LE,
        formula="2*n**4 - 9*n**3 + 37*n**2/2 - 35*n/2 + 6 + (2*n**2 - 5*n + 2)*e",
        citation="(2n^2-5n+2)e(G)",
    ),
    BoundLemma(
        id="L2.nearly-H",
        setting=_NEARLY,
        measure=_H,
        complement_kind=_QUASI,
        comparator=Comparator.GE,
        formula="(4*n**3 - 8*n**2 + 3*n)/(4*n - 6) - 2*(n - 2)/(2*n - 3)*e",
        min_n=3,
        citation="\\frac{4n^3-8n^2+3n}{4n-6}",
    ),
)

_ENTRIES = {entry.id: entry for entry in CATALOG}
_BOUNDS = {lemma.id: lemma for lemma in BOUND_LEMMAS}


def get_entry(entry_id: str) -> ConditionEntry:
    try:
        return _ENTRIES[entry_id]
    except KeyError as e:
        raise UnknownEntryError(f"Unknown catalog entry {entry_id!r}") from e


def get_bound_lemma(lemma_id: str) -> BoundLemma:
    try:
        return _BOUNDS[lemma_id]
    except KeyError as e:
        raise UnknownEntryError(f"Unknown bound lemma {lemma_id!r}") from e


def select_entries(patterns: Iterable[str] | None = None) -> list[ConditionEntry]:
    """Entries matching any of the ids or shell-style patterns ("T4.*"), in catalog order."""
    if patterns is None:
        return list(CATALOG)
    wanted = [p.strip() for p in patterns if p.strip()]
    selected = [entry for entry in CATALOG if any(fnmatchcase(entry.id, p) for p in wanted)]
    unmatched = [p for p in wanted if not any(fnmatchcase(entry.id, p) for entry in CATALOG)]
    if unmatched:
        raise UnknownEntryError(f"No catalog entry matches {', '.join(unmatched)}")
    return selected


def threshold(entry_id: str, n: int, k: int) -> Fraction:
    return parse_formula(get_entry(entry_id).formula).evaluate(n, k)


def min_order(entry: ConditionEntry, k: int) -> int | None:
    """Smallest n allowed by the entry's size bound, None when it has none."""
    if entry.size_bound is None:
        return None
    return int(parse_formula(entry.size_bound).evaluate(0, k))


def edge_threshold_source(entry: ConditionEntry) -> str:
    return entry.formula if entry.is_edge_lemma else get_entry(entry.edge_lemma or "").formula

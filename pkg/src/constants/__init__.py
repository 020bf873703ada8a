# Distance matrix marker for vertex pairs in different components
UNREACHABLE = -1

# Orders at or above this use the sparse scipy all-pairs path instead of bitset BFS
SPARSE_APSP_MIN_N = 64

# Oracle guardrails
DEFAULT_ORACLE_SIZE_CAP = 20
DEFAULT_SUBSET_SEARCH_CAP = 16
EXHAUSTIVE_CONNECTIVITY_MAX_N = 10

# Enumeration guardrails
ENUMERATION_GENERAL_CAP = 7
ENUMERATION_BIPARTITE_CAP = 26

# Sampling
DEFAULT_SEED = 0
DEFAULT_RETRY_BUDGET = 1000

# Verification runs hand the worker pool this many corpus graphs at a time
DEFAULT_VERIFY_BATCH_SIZE = 1024

# graph6
GRAPH6_HEADER = ">>graph6<<"

# CLI exit codes
EXIT_OK = 0
EXIT_INTERNAL_ERROR = 1
EXIT_INPUT_ERROR = 2
EXIT_FINDINGS = 3

# Report columns
SUMMARY_COLUMNS = (
    "entry_id",
    "applicable",
    "hypothesis_holds",
    "consistent",
    "explained",
    "undecided",
    "findings",
    "implication_failures",
)

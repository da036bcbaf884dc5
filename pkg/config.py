"""
Centralized configuration for the QSD DNA code toolkit.
"""

# ===== RING SETTINGS =====
DNA_RINGS = ("E", "F")                  # Rings that carry QSD codes and a GC map
NO_GC_RINGS = ("C", "J", "K")           # No natural GC-content map exists for these

# ===== BINARY CODE SETTINGS =====
WORD_BITS_MAX = 64                      # Bit-packed rows must fit a machine word
ENUMERATE_MAX_K = 16                    # Max dimension for full codeword enumeration
CANONICAL_MAX_N = 16                    # Canonical form search limit
CANONICAL_MEMO_MAX = 200_000           # Canonical forms kept before the memo is flushed

# ===== CENSUS SETTINGS =====
CENSUS_MAX_N = 12                       # Default limit for classify_so
CENSUS_STRETCH_MAX_N = 15               # Limit when --stretch is given
EQUIVALENCE_ORACLE_MAX_N = 7            # Brute-force n! equivalence check limit

# Stretch targets: (n, k) -> (count with d=2, count with d=4)
STRETCH_TARGETS = {
    (14, 6): (15, 12),
    (15, 6): (23, 25),
}

# ===== QSD SETTINGS =====
QSD_EXHAUSTIVE_MAX_N = 8                # Exhaustive pairwise orthogonality check limit
QSD_EXPAND_MAX_N = 16                   # Never expand more than 2^16 words

# ===== D_RC SETTINGS =====
DRC_MAX_N = 10                          # d_rc_exact supported length
DRC_TABLE_MAX_N = 8                     # Golden d_rc tables cover n <= 8
ORACLE_MAX_N = 6                        # Literal max over all n! permutations
PAIR_CHUNK = 4096                       # Rows per block in pairwise distance matrices

# ===== FILES =====
GOLDEN_PSI_FILE = "data/golden_psi.json"
GOLDEN_DRC_FILE = "data/golden_drc.json"
CENSUS_CACHE_FILE = "data/census_cache.json"
REPORT_DIR = "docs"

# ===== RUNNER SETTINGS =====
PARALLELISM_ENV = "QSD_PARALLELISM"     # Default worker count comes from this env var
DEFAULT_FORMAT = "csv"                  # csv | json | text
OUTPUT_FORMATS = ("csv", "json", "text")
DEFAULT_BUDGET_SECONDS = 3600           # Stretch census budget when --budget is omitted
VERIFY_MAX_N = 8                        # Property suites run over n <= 8

# Exit codes
EXIT_PASS = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

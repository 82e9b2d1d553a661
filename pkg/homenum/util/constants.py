ORACLE_MAX_MAPS = 10**7  # default brute-force guard, |B|^|A|
TW_MAX_EXACT = 22  # largest irreducible kernel for the exact treewidth search
BRUTE_CORE_MAX = 7
BRUTE_TW_MAX = 8

CAND_FAMILIES = [
    "path",
    "cycle",
    "clique",
    "looped_clique",
    "clique_one_loop",
    "grid",
    "loop_path_one_end",
    "loop_path_both_ends",
    "clique_plus_loop",
    "padded_clique",
    "multicolored_clique",
]
CAND_ENUM_MODES = ["endoseq", "kcore", "tw"]
CAND_BENCH_MODES = ["kcore", "tw"]  # bench sources are generated, no sequence file

EDGE = "E"  # the binary symbol of graph families

# exit codes of the CLI, one per error class
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_WIDTH = 3
EXIT_SEQUENCE = 4
EXIT_SIZE_GUARD = 5
EXIT_NOT_HOM = 6

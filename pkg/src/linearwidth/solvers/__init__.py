from .approx import lw_approx
from .bruteforce import BRUTE_MAX_EDGES, decide_bruteforce, lw_bruteforce
from .closure import CLOSURE_MAX_VERTICES, MemoTable, decide_closure, is_extendable, lw_closure_2n
from .partial import PartialLayout, PrunePreconditionError, check_prune_lemma, is_k_extendable
from .pathwidth import PW_MAX_VERTICES, pw_exact, vertex_order_to_pd
from .results import SearchStats, SizeGuardError, SolveResult
from .subset_dp import DP2M_MAX_EDGES, decide_dp_2m, lw_dp_2m

__all__ = [
    "BRUTE_MAX_EDGES", "CLOSURE_MAX_VERTICES", "DP2M_MAX_EDGES", "PW_MAX_VERTICES",
    "MemoTable", "PartialLayout", "PrunePreconditionError", "SearchStats", "SizeGuardError",
    "SolveResult", "check_prune_lemma", "decide_bruteforce", "decide_closure", "decide_dp_2m",
    "is_extendable", "is_k_extendable", "lw_approx", "lw_bruteforce", "lw_closure_2n",
    "lw_dp_2m", "pw_exact", "vertex_order_to_pd",
]

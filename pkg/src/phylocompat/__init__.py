"""Compatibility of quartets, multi-state characters and rooted triplets.

Exhaustive and structural decision procedures, plus generators for the
minimally incompatible families Q_{s,t}, C_Q and the triplet families.
"""

from .characters import (
    c_of_q,
    chi_of_quartet,
    compat_characters_brute,
    is_minimally_incompatible_characters,
    max_states,
)
from .constructions import (
    g_map,
    gen_corollary3_triplets,
    gen_Qst,
    gen_Rr,
    gen_theorem3_set,
    gen_theorem5_set,
    witness_tree_missing_q0,
    witness_tree_missing_qxy,
)
from .quartets import (
    CompatReport,
    MinimalityReport,
    QuartetGraph,
    UnificationStep,
    Verdict,
    admissible,
    compat_quartets,
    compat_quartets_brute,
    find_complete_unification,
    is_minimally_incompatible_quartets,
    quartet_graph,
    quartet_set_of_graph,
    to_dot,
    unify,
)
from .trees import (
    Character,
    PhyloError,
    Quartet,
    RootedTree,
    Triplet,
    UnrootedTree,
    canonical_form,
    displays_quartet,
    displays_triplet,
    enumerate_rooted_binary,
    enumerate_unrooted_binary,
    is_convex,
    parse_newick,
    restrict,
    restrict_rooted,
    serialize_newick,
    unroot,
)
from .triplets import (
    RSGraph,
    build_compat,
    compat_triplets,
    compat_triplets_brute,
    extract_incompatible_subset,
    quartets_of_triplets,
    rs_graph,
    theorem7_literal,
    triplets_of_quartets,
)

__all__ = [
    "c_of_q",
    "chi_of_quartet",
    "compat_characters_brute",
    "is_minimally_incompatible_characters",
    "max_states",
    "g_map",
    "gen_corollary3_triplets",
    "gen_Qst",
    "gen_Rr",
    "gen_theorem3_set",
    "gen_theorem5_set",
    "witness_tree_missing_q0",
    "witness_tree_missing_qxy",
    "CompatReport",
    "MinimalityReport",
    "QuartetGraph",
    "UnificationStep",
    "Verdict",
    "admissible",
    "compat_quartets",
    "compat_quartets_brute",
    "find_complete_unification",
    "is_minimally_incompatible_quartets",
    "quartet_graph",
    "quartet_set_of_graph",
    "to_dot",
    "unify",
    "Character",
    "PhyloError",
    "Quartet",
    "RootedTree",
    "Triplet",
    "UnrootedTree",
    "canonical_form",
    "displays_quartet",
    "displays_triplet",
    "enumerate_rooted_binary",
    "enumerate_unrooted_binary",
    "is_convex",
    "parse_newick",
    "restrict",
    "restrict_rooted",
    "serialize_newick",
    "unroot",
    "RSGraph",
    "build_compat",
    "compat_triplets",
    "compat_triplets_brute",
    "extract_incompatible_subset",
    "quartets_of_triplets",
    "rs_graph",
    "theorem7_literal",
    "triplets_of_quartets",
]

__version__ = "0.1.0"

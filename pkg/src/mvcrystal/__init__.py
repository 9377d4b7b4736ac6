"""Exact-arithmetic MV polytopes through Lusztig data.

Realizes highest-weight crystals as MV polytopes, decides Demazure and
opposite Demazure membership, computes extremal polytopes, and locates
the finest strata of both filtrations, all over plain integers.
"""

from .weyl import (
    Coweight,
    RootDatum,
    SizeGateError,
    Weight,
    WeylElement,
    act_coweight,
    act_weight,
    bruhat_leq,
    coset_max,
    coset_min,
    elements_leq,
    full_group,
    longest_element,
    omega,
    pair,
    root_datum,
)
from .words import (
    Move,
    ReducedWord,
    all_words_w0,
    apply_move,
    enumerate_S,
    enumerate_S_hat,
    hecke_product,
    longest_word,
    min_S,
    move_path,
    sigma_map,
    word_through,
)
from .polytopes import (
    BZDatum,
    GGMSDatum,
    LusztigDatum,
    bz_data,
    canonicalize,
    change_word,
    contains,
    datum_from_json,
    datum_to_json,
    e,
    e_max,
    epsilon,
    f,
    f_max,
    highest_polytope,
    lowest_polytope,
    phi,
    star,
    validate,
    vertices,
    weight,
)
from .demazure import (
    MembershipReport,
    extremal,
    in_demazure,
    in_opposite_demazure,
    in_opposite_demazure_fmax,
    in_opposite_demazure_polytopal,
    oracle_demazure_set,
    oracle_opposite_set,
)
from .strata import (
    Stratum,
    check_iota_star,
    iota,
    iota_shortcut,
    kappa,
    kappa_predicate,
    oracle_iota,
    oracle_kappa,
    stratum,
)
from .crystal import (
    CrystalGraph,
    CrystalNode,
    generate_binf_truncated,
    generate_crystal,
    graph_from_json,
    scan_question,
)

__version__ = "0.1.0"

"""Stallings pregroups: axiom checking, reduced words, and their universal groups."""

from .action import act, act_case, base_word, lambda_fold
from .factory import (
    FiniteGroup,
    Monomorphism,
    TreeOfGroups,
    amalgam_oracle_eq,
    amalgam_pregroup,
    bab_pregroup,
    group_cyclic,
    group_from_table,
    group_s3,
    hnn_pregroup,
    monomorphism,
    subgroup_of,
    subgroup_pregroup,
    tree_of_groups,
    tree_pregroup,
)
from .table import (
    AxiomReport,
    LemmaReport,
    PregroupTable,
    UndefinedProduct,
    check_axioms,
    check_lemmas,
    new_table,
)
from .universal import UElement, u_embed, u_eq, u_from_word, u_identity, u_inv, u_len, u_mul
from .words import (
    canonical_form,
    enumerate_class,
    equivalent,
    equivalent_bruteforce,
    interleave,
    interleaver_product,
    is_reduced,
    reduce_all,
    reduce_leftmost,
)

__version__ = "0.1.0"

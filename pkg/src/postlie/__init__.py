"""Exact symbolic Post-Lie and Post-Hopf computations.

The free Post-Hopf algebra on decorated planar binary forests and its
associative sibling on sentences of words, with the recursive product,
two closed combinatorial product formulas, the contraction isomorphism
with planar rooted trees, and an exact verification toolbox for the
(Post-)Lie and (Post-)Hopf axioms.
"""

from .linear import (
    LinComb,
    ParseError,
    Scalar,
    TensorPair,
    TensorWord,
    bilinear,
    concat,
    coproduct,
    counit,
    iterated_reduced,
    lincomb_json,
    lincomb_text,
    reduced_coproduct,
    unshuffle,
)
from .trees import (
    Forest,
    Leaf,
    PRTree,
    Tree,
    Vee,
    butcher,
    contract_rightmost,
    degree,
    enumerate_forests,
    enumerate_prtrees,
    enumerate_trees,
    expand_leftmost,
    leaf,
    left_graft_sum,
    parse_forest,
    parse_prtree,
    parse_tree,
    vee,
)
from .perms import (
    Permutation,
    normal_form,
    parse_permutation,
    sentence_text,
    sentence_to_perm,
)
from .forests import (
    LevelledLeaf,
    LevelledNode,
    consecutive_right_grafts,
    forest_from_permutation,
    graft_forest,
    grafting_multiset,
    levelled_from_word,
    parse_levelled,
    right_graft_sum,
    star,
    star_by_multiset,
    star_by_symmetric_group,
)
from .words import Sentence, parse_sentence, star_by_injections
from .words import star as star_sentences
from .verify import (
    AxiomReport,
    FinPostLie,
    check_left_postlie,
    check_right_postlie,
    convolution_inverse,
    hopf_relation_suite,
    load_structure_constants,
    opposite,
    pbw_dims,
    primitive_kernel,
    symmetrization_check,
    trees_engine,
    words_engine,
)
from .cli import main

__version__ = "0.1.0"

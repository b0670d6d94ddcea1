"""Search for short descriptions of group elements.

Descriptions (sequences of monoid homomorphisms, or compositions of integer
polynomials) are sampled uniformly, evaluated, and decoded through a chain
of bijections into words of a free group or pairs of permutations; the
resulting objects are tested for structure (identity words, groups other
than S_n and A_n, solvable groups) far more often than uniform sampling of
objects of the same size would find it.
"""

from .codec import (
    Permutation,
    nat_to_pair,
    nat_to_perm,
    nat_to_perm_pair,
    nat_to_word,
    pair_to_nat,
    perm_pair_to_nat,
    perm_to_nat,
    word_to_nat,
)
from .descriptions import (
    GenAlphabet,
    MonoidHom,
    Poly,
    PolyDescription,
    PolyDescSpace,
    WordDescription,
    WordDescSpace,
    sample_poly_description,
    sample_word_description,
)
from .freewords import free_reduce, is_identity_abelian, is_identity_free
from .harness import (
    FrequencyTable,
    PermExperimentConfig,
    TrialRecord,
    WordExperimentConfig,
    aggregate,
    run_perm_baseline,
    run_perm_search,
    run_word_baseline,
    run_word_search,
)
from .permgroup import (
    GroupClass,
    PermGroup,
    StabilizerChain,
    classify,
    is_solvable,
    random_sn_pair,
    theorem3_bound,
)

__all__ = [
    "Permutation",
    "nat_to_pair",
    "nat_to_perm",
    "nat_to_perm_pair",
    "nat_to_word",
    "pair_to_nat",
    "perm_pair_to_nat",
    "perm_to_nat",
    "word_to_nat",
    "GenAlphabet",
    "MonoidHom",
    "Poly",
    "PolyDescription",
    "PolyDescSpace",
    "WordDescription",
    "WordDescSpace",
    "sample_poly_description",
    "sample_word_description",
    "free_reduce",
    "is_identity_abelian",
    "is_identity_free",
    "FrequencyTable",
    "PermExperimentConfig",
    "TrialRecord",
    "WordExperimentConfig",
    "aggregate",
    "run_perm_baseline",
    "run_perm_search",
    "run_word_baseline",
    "run_word_search",
    "GroupClass",
    "PermGroup",
    "StabilizerChain",
    "classify",
    "is_solvable",
    "random_sn_pair",
    "theorem3_bound",
]

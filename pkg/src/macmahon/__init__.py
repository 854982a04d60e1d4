"""Exact q-series library for MacMahon-type sums: nested series over
strictly increasing indices with quadratic denominators, their Eisenstein
decompositions, quasi-shuffle structure, limit products, and congruence
scanning, all in rational (or cyclotomic) arithmetic.
"""

from .arith import (
    CHI_3_2,
    CHI_4_2,
    CHARACTERS,
    DirichletCharacter,
    bernoulli,
    eulerian_polynomial,
    generalized_bernoulli,
    l_nonpositive,
    stirling_first_unsigned,
    stirling_second,
    zeta_nonpositive,
)
from .cyclotomic import Cyclotomic12, I_SQRT3, ZETA3, ZETA4, ZETA6
from .decompose import (
    DecompositionReport,
    SymmetricNumerator,
    decompose_a0,
    decompose_a1,
    decompose_a2,
    decompose_am1,
    decompose_ukk,
    partial_fractions,
    stirling_transform,
    verify_decomposition,
)
from .eisenstein import (
    Generator,
    QmfExpression,
    expression_series,
    f_series,
    g_chi_series,
    g_series,
    generator_series,
)
from .identities import (
    CheckReport,
    CongruenceClaim,
    binomial_identity_check,
    congruence_scan,
    exp_identity_check,
    explicit_identity_check,
    explicit_weight,
    general_limit_check,
    generating_function_check,
    isobaric_check,
    jacobi_triple_product_check,
    limit_check,
    limit_product,
)
from .polynomials import Polynomial, X
from .quasishuffle import (
    ShuffleSum,
    evaluate,
    exp_letter,
    isobaric_expansion,
    isobaric_reconstruction,
    parse_word,
    quasi_shuffle,
    word_to_string,
)
from .series import TruncatedSeries, denominator_term, product_over_n
from .sums import h_series, m_coefficient, u_general_series, u_series

__version__ = "0.1.0"

"""Reduced arithmetically Gorenstein configurations with prescribed h-vectors.

Builders for configurations of linear subvarieties (ACM and Gorenstein),
the lex-segment and LOIM machinery behind them, Betti tables, Billera-Lee
simplicial complexes, and a brute-force oracle to check all of it.
"""

from .betti import (
    BettiTable,
    betti_upper_bound_check,
    closed_form_max_resolution,
    gorenstein_max_betti,
    lex_betti,
    sum_linked_betti,
)
from .configurations import (
    Configuration,
    Label,
    beta_bar,
    build_g_max,
    build_gorenstein,
    build_z,
    build_z_max,
    check_subspace_property,
    is_generalized_stick_figure,
    prime_component,
    relabel_g_max,
    residual,
)
from .hilbert import (
    basic_double_link_hvector,
    ci_hvector,
    hvector_of,
    linked_hvector,
    sum_linked_hvector,
)
from .monomials import decompose, decomposition_hvector_check, lex_segment_ideal, loim, phi
from .sequences import (
    difference,
    integrate,
    is_o_sequence,
    is_si_sequence,
    macaulay_bound,
    si_params,
)
from .simplicial import billera_lee_ball, boundary_complex, complex_of, f_to_h, h_to_f, is_shelling

__version__ = "0.1.0"

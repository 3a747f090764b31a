"""Exact lattice-point enumeration for arbor polytopes: Ehrhart and
h*-polynomials, h-vectors, gamma and magic decompositions, parking and
descent statistics, plus conjecture checkers over exhaustively enumerated
small arbors."""

from .arbor import (
    Arbor,
    InvalidArborError,
    arbor_from_json,
    arbor_to_json,
    enumerate_arbors,
    linear,
    make_arbor,
    octopus,
)
from .closedform import (
    ehrhart_Qndk,
    ehrhart_Qnk,
    f_poly,
    f_poly_general,
    gamma_vector_Qnk,
    h_poly_Qnk,
    h_poly_Qnk_lemma,
    magic_identity_check,
)
from .lattice import (
    HPolytope,
    composition_ehrhart_oracle,
    count_dilate,
    ehrhart_interpolated,
    h_vector,
    hstar,
    polytope_Qndk,
    polytope_of_arbor,
)
from .parking import (
    descent_count,
    descent_enumerator,
    exc_enumerator,
    multiset_descent_enumerator,
    park,
    unlucky_generating_poly,
    words_W,
    words_Wtau,
)
from .polyalg import (
    GammaVector,
    HVector,
    MagicVector,
    Poly,
    VerificationError,
    all_roots_real_in,
    format_poly,
    from_magic_basis,
    hstar_from_ehrhart,
    is_palindromic,
    is_unimodal,
    lagrange_interpolate,
    m_sequence_check,
    sturm_real_root_count,
    to_gamma_basis,
    to_magic_basis,
)

__version__ = "0.1.0"

"""Exact decision procedures for forcing algebras over polynomial rings."""

from .field import GF, QQ, Field
from .forcing import (
    CriterionReport,
    FiberDescription,
    ForcingData,
    HypothesisError,
    Verdict,
    data_ideal,
    derivative_ideal,
    fiber,
    fiber_completely_singular,
    forcing_equation,
    has_section,
    horizontal_component,
    is_domain,
    is_irreducible,
    is_normal,
    is_surjective,
    jacobian_ideal,
    jacobian_normality,
)
from .groebner import DegreeCapExceeded, GroebnerBasis, buchberger, normal_form, s_polynomial
from .ideal import (
    UNIT,
    Ideal,
    codimension,
    content_wrt_block,
    dimension,
    elimination,
    equal_up_to_radical,
    gcd,
    ideal_quotient,
    in_square_ideal,
    intersection,
    membership,
    radical_membership,
)
from .matrix import (
    ForcingMatrix,
    adjoint_membership_check,
    col_op,
    fitting_ideal,
    forcing_ideal,
    is_regular_sequence,
    matrix_fiber,
    regular_sequence_necessary_check,
    row_op,
)
from .orders import GREVLEX, LEX, BlockElim, GrevLex, Lex, MonomialOrder
from .poly import ParseError, PolyRing, Polynomial, RingMismatchError

__version__ = "0.1.0"

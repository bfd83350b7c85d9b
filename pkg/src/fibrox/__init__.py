"""fibrox: fiber cones of equigenerated monomial ideals as determinantal rings."""

from .determinantal import (
    LabeledMatrix,
    binomial_two_minors,
    build_associate_matrix,
    build_bivariate_matrix,
    build_matrix,
)
from .errors import (
    BoundExceededError,
    DegreeMismatchError,
    DimensionError,
    FibroxError,
    ParseError,
    PreconditionError,
    UnsupportedInputError,
)
from .invariants import InvariantReport, analytic_spread, integer_rank, is_freiman, mu_square
from .io import format_ideal, load_ideal, parse_ideal
from .monomial import Monomial, MonomialIdeal, ideal, lex_compare, minimalize, mono, power_basis
from .relations import TBinomial, binomial, parse_binomial
from .sorting import (
    is_sortable,
    is_sorted_pair,
    sort_pair,
    sortability_witness,
    sorting_normal_form,
    unsorted_pair_relations,
)
from .stable import (
    BoundVector,
    borel_closure,
    is_c_bounded,
    is_stable,
    is_strongly_stable,
    veronese_type,
)
from .toric import fibers, first_failing_degree, generated_up_to, generation_degrees, quadratic_kernel

__version__ = "0.1.0"

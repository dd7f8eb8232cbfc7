"""Exact joint linear differential resolvents for pseudopolynomials in
the roots of systems of univariate polynomials, over Q or a prime field.
"""

from .alphapoly import AlphaPoly, det_cofactor, det_fraction_free, signed_maximal_minors
from .elimination import (
    Degenerate,
    eliminate_resolvent,
    equal_up_to_unit,
    normalize_lodo,
    template_from_lodo,
)
from .errors import (
    AllZero,
    DimensionMismatch,
    JointresError,
    NotInvertible,
    ParseError,
    PoleAtSample,
    TooLarge,
    UnsupportedDegree,
    ValidationError,
)
from .fields import GF, QQ, PrimeField, Rationals
from .io import (
    ResolventFile,
    parse_problem,
    parse_resolvent,
    resolvent_file_from_result,
    serialize_problem,
    serialize_resolvent,
)
from .logbell import (
    apply_to_exp,
    apply_to_log_power,
    bell_b,
    bell_partial,
    log_resolvent,
    pochhammer,
)
from .polys import XPoly, XRat, content_primitive, gcd_monic, lcm_monic
from .powersum import (
    IdenticallyZero,
    Resolvent,
    ResolventTemplate,
    build_specialization_matrix,
    default_specializations,
    powersum_resolvent,
    thm83_template,
)
from .symmetric import PowersumTable, combined_sum, powersums_from_elementary
from .tower import (
    Lodo,
    MonicPoly,
    ProblemSpec,
    PseudoTerm,
    TensorVector,
    TPoly,
    apply_lodo,
    derivative_table,
    lodo_derive,
    numeric_residual,
    root_derivative,
)

__version__ = "0.1.0"

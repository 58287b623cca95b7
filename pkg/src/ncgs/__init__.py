"""Noncommutative Gröbner–Shirshov bases for polynomials and power series.

The package checks the two Composition–Diamond conditions (classical and
series), certifies residual nilpotence of presented augmented algebras,
computes truncated quotients ``A/I^n`` and their invariants, and verifies
a periodic resolution for one parafree algebra.
"""

__version__ = "0.1.0"

from .fields import QQ, PrimeField, Rationals
from .words import (
    Alphabet,
    OrderError,
    OrderSpec,
    Word,
    check_admissible,
    enumerate_words,
)
from .poly import Poly, PolyError, TruncatedPoly, truncate
from .parse import ParseError, parse_poly
from .rewrite import (
    CapExceeded,
    ReductionResult,
    RewriteSystem,
    Status,
    normal_form,
    reduce_max,
    reduce_min,
)
from .gsbases import (
    Composition,
    GSReport,
    brute_force_normal_word_counts,
    check_gs_classical,
    check_gs_series,
    complete_classical,
    find_compositions,
    leading_words,
    normal_word_counts,
    normal_words,
)
from .presentation import (
    Presentation,
    PresentationError,
    bundled_examples,
    dump_presentation,
    load_presentation,
    parse_presentation,
)
from .quotients import (
    build_truncated_quotient,
    filtration_dims,
    gr1_dependence,
    hopf_h2_graded,
    paraequivalence_check,
    quotient_dim_bruteforce,
    quotient_dims,
)
from .certify import (
    Certificate,
    ParafreeFamily,
    PreconditionError,
    build_parafree_presentation,
    certify_residual_nilpotence,
    check_acyclic,
    generate_family_example,
)

__all__ = [name for name in dir() if not name.startswith("_")]

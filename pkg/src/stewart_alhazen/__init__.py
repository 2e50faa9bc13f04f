"""Exact analysis of the quartics X^4 - rX - 1 and of the circular mirror problem."""

from .errors import (
    DegenerateConfiguration,
    DomainError,
    EmbeddingDegenerate,
    InvalidScenario,
    StewartAlhazenError,
)
from .exact_core import (
    Polynomial,
    format_rational,
    make_rational,
    parse_rational,
    poly_eval,
    poly_mul,
    rational_roots,
    rational_sqrt,
)
from .numerics import Tolerance, monotone_root, quartic_real_roots
from .stewart import (
    Constructibility,
    GaloisGroup,
    analyze,
    companion_cubic,
    constructibility_verdict,
    factor_parameters,
    galois_class,
    reducibility_verdict,
    resolvent_cubic,
    stewart_discriminant,
    stewart_roots,
)
from .mirror import (
    Classification,
    MirrorScenario,
    Point,
    alhazen_quartic,
    carrega_quartic,
    circle_param,
    cross_ratio_slopes,
    hyperbola_coefficients,
    param_of,
    solve_mirror,
    stewart_scenario,
    verify_solution,
)
from .diophantine import c2_witness_search, diophante_triple, search_biquadratic

__version__ = "0.1.0"

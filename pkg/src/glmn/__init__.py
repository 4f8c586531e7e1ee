"""Casimir elements of U(gl(m|n)) via quasideterminants, computed exactly."""

from .algebra import (
    Element,
    Envelope,
    FreeAlgebra,
    SuperDims,
    bracket,
    formal_matrix,
    linear_combine,
    multiply,
    normal_order,
    parity,
    super_bracket,
)
from .casimir import (
    CasimirFamily,
    berezinian,
    berezinian_direct,
    berezinian_factored,
    berezinian_factors,
    casimir,
    check_central,
    ehat,
    leading_submatrix,
    ncsf_matrix,
)
from .harish_chandra import (
    SusyKind,
    check_supersymmetric,
    hc_image,
    hc_image_berezinian,
    hc_project,
    shift_to_xy,
    susy_oracle,
)
from .ncsf import NcsfKind, ncsf_coefficient, ncsf_paths, ncsf_series
from .polynomial import WeightPolynomial
from .series import (
    SeriesError,
    SeriesMatrix,
    TruncSeries,
    matrix_invert,
    quasideterminant,
    series_arith,
    series_diff,
    series_invert,
    series_log,
)

__version__ = "0.1.0"

"""Remote preparation of entanglement from isotropic two-qudit states.

Closed-form outcome negativities and optimality thresholds, cross-checked
by a brute-force tensor oracle and a simplex search.
"""

from .analytic import (
    PtSpectrum,
    advantage_interval,
    average_negativity,
    condition_R,
    condition_dim,
    condition_final,
    negativity_bell,
    negativity_closed,
    negativity_pair,
    negativity_uniform_rank,
    negativity_upper_bound,
    post_state_closed,
    pt_spectrum_closed,
    threshold_fidelity,
)
from .linalg import (
    BACKEND,
    contract_13,
    hermitian_eigenvalues,
    kron,
    partial_transpose_second,
    trace_norm_hermitian,
)
from .oracle import build_joint, measure_outcome, negativity_numeric
from .search import (
    ScanRecord,
    SearchReport,
    find_crossing,
    maximize_outcome,
    scan,
)
from .states import (
    IsoParams,
    MeasurementEnsemble,
    SchmidtVector,
    bell_measurement,
    fourier_diag_state,
    gen_bell,
    isotropic,
    max_entangled,
    mixed_measurement,
    pair_state,
    schmidt_spectrum,
    schmidt_state,
)

__version__ = "0.1.0"

"""Entanglement-of-formation measures for multi-qubit states.

The measure averages, over every bipartition of the parties, the entropy of
the reduced state plus the reduction's internal entanglement. Three-qubit
pure states have a closed form in the basis amplitudes; mixed states are
handled by numerical minimization over pure-state decompositions.
"""

from egf.bipartite import (
    BipartitePureAnalysis,
    PolarizationVector,
    ef_ensemble,
    ef_pure_2qubit,
    polarization,
    wootters_ef_mixed,
)
from egf.multiparty import (
    OptimizerConfig,
    OptimizerResult,
    average_egf,
    decomposition_average,
    egf_mixed,
    egf_pure,
    enumerate_reductions,
)
from egf.qlinalg import (
    ConvergenceError,
    DensityMatrix,
    Ensemble,
    NormalizationError,
    PureState,
    Spectrum,
    apply_local_unitary,
    binary_entropy,
    hermitian_eigensystem,
    hermitian_eigenvalues,
    partial_trace,
    permute_qubits,
    projector,
    random_pure_state,
    random_unitary,
    tensor,
    von_neumann_entropy,
)
from egf.tripartite import (
    InternalConsistencyError,
    TripartiteAmplitudes,
    TripartiteReport,
    correlation_index,
    egf_closed_form,
    egf_from_reductions,
    egf_pure_value,
    pair_min_eigenvalues,
    pair_weights,
    pair_xi,
    single_xi,
    traced_pair_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "BipartitePureAnalysis",
    "ConvergenceError",
    "DensityMatrix",
    "Ensemble",
    "InternalConsistencyError",
    "NormalizationError",
    "OptimizerConfig",
    "OptimizerResult",
    "PolarizationVector",
    "PureState",
    "Spectrum",
    "TripartiteAmplitudes",
    "TripartiteReport",
    "apply_local_unitary",
    "average_egf",
    "binary_entropy",
    "correlation_index",
    "decomposition_average",
    "ef_ensemble",
    "ef_pure_2qubit",
    "egf_closed_form",
    "egf_from_reductions",
    "egf_mixed",
    "egf_pure",
    "egf_pure_value",
    "enumerate_reductions",
    "hermitian_eigensystem",
    "hermitian_eigenvalues",
    "pair_min_eigenvalues",
    "pair_weights",
    "pair_xi",
    "partial_trace",
    "permute_qubits",
    "polarization",
    "projector",
    "random_pure_state",
    "random_unitary",
    "single_xi",
    "tensor",
    "traced_pair_decomposition",
    "von_neumann_entropy",
    "wootters_ef_mixed",
    "__version__",
]

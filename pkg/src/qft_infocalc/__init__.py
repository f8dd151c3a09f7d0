"""Quantum-information entropy calculus, discrete SUSY QM and O(3) sigma-model dynamics."""

from .channels import DecoherenceParams, decohere, pauli_decompose, pauli_error
from .clifford import (
    Antiqubit,
    GammaRep,
    antiqubit_density,
    check_clifford,
    check_qubit_field_algebra,
    dirac_adjoint,
)
from .entropy import (
    EntropyReport,
    chain_rule_check,
    conditional_amplitude_operator,
    conditional_entropy,
    conditional_mutual,
    holographic_bound_bits,
    mutual_entropy,
    shannon,
    ternary_mutual,
    von_neumann,
)
from .linalg import Spectrum, herm_eig, matrix_func_on_support, partial_trace, tensor
from .protocols import (
    InfoDiagram,
    SpeciesWeights,
    builtin_diagrams,
    check_conservation,
    superdense,
    teleport,
    teleport_branches,
)
from .states import (
    DensityMatrix,
    QubitState,
    bell_state,
    density_of,
    ghz_state,
    measure,
    werner_state,
)
from .susyqm import build_model, pair_spectra, sqrt_not, supercharge_map
from .sigma_lattice import LatticeField, energy, step

__version__ = "0.1.0"

# %% [markdown]
# # Gamma matrices, antiqubits and the qubit-field algebra
#
# Two 2x2 gamma matrices, i*sigma_2 and sigma_3, satisfy the Clifford algebra
# of a 1+1 dimensional metric diag(-1, 1).  The antiqubit of a qubit is its
# Dirac adjoint: a covector whose density matrix has the same spectrum as the
# qubit's own.

# %%
import numpy as np

from qft_infocalc import clifford
from qft_infocalc.entropy import von_neumann
from qft_infocalc.linalg import random_unitary
from qft_infocalc.states import QubitState, density_of

rep = clifford.GammaRep()
print("gamma0 =\n", rep.gamma0.real)
print("gamma1 =\n", rep.gamma1.real)
report = clifford.check_clifford(rep)
print("anticommutator deviations:", report.details, "passed:", report.passed)

# %% [markdown]
# ## The antiqubit map
# Applying the adjoint twice gives back minus the qubit, because gamma0 squares to -I.

# %%
q = QubitState(0.6, 0.8j)
bar = clifford.dirac_adjoint(q)
print("antiqubit coefficients (<0|, <1|):", bar.row)
print("adjoint twice:", clifford.dirac_adjoint(bar.as_ket()).as_ket().vector, "vs", -q.vector)

rho, rho_bar = density_of(q), clifford.antiqubit_density(q)
print("qubit density:\n", np.round(rho.matrix, 3))
print("antiqubit density:\n", np.round(rho_bar.matrix, 3))
print("entropies:", von_neumann(rho), von_neumann(rho_bar))

# %% [markdown]
# ## Qubit-field observables
# The Pauli triple and any unitary rotation of it obey
# Phi_j Phi_k = delta_jk I + i eps_jkl Phi_l.  Replacing sigma_3 by I breaks it.

# %%
rng = np.random.default_rng(0)
print("Pauli:", clifford.check_qubit_field_algebra(clifford.PAULI).max_deviation)
print("rotated:", clifford.check_qubit_field_algebra(clifford.rotated_pauli(random_unitary(2, rng))).max_deviation)
bad = (clifford.SIGMA1, clifford.SIGMA2, clifford.I2)
print("with identity:", clifford.check_qubit_field_algebra(bad).max_deviation)

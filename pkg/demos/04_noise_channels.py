# %% [markdown]
# # Decoherence and Pauli errors

# %%
import numpy as np

from qft_infocalc.channels import DecoherenceParams, decohere, pauli_decompose, pauli_error
from qft_infocalc.clifford import PAULI
from qft_infocalc.entropy import von_neumann
from qft_infocalc.states import QubitState, density_of

s = 1 / np.sqrt(2)
rho = density_of(QubitState(s, s))
for t in (0.0, 0.5, 1.0, 2.0, 5.0):
    out = decohere(rho, DecoherenceParams(t, tau=1.0))
    print(f"t={t}: off-diagonal {out.matrix[0, 1].real:.5f}, entropy {von_neumann(out):.5f}")

# %% [markdown]
# sigma_2 multiplies the state by a global phase i, which is kept separately.

# %%
q = QubitState(0.6, 0.8)
for k in (1, 2, 3):
    r = pauli_error(k, q)
    print(f"sigma_{k}: state {r.state.vector}, phase {r.phase}")

err = 0.3 * PAULI[0] - 0.1 * PAULI[2]
print("decomposition:", pauli_decompose(err))

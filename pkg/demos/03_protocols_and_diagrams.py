# %% [markdown]
# # Teleportation, superdense coding and information diagrams

# %%
import itertools

import numpy as np

from qft_infocalc import protocols
from qft_infocalc.states import QubitState

q = QubitState(0.6, 0.8j)
for b in protocols.teleport_branches(q):
    print(f"bits {b.bits}: probability {b.probability:.3f}, fidelity {b.fidelity:.15f}")

res = protocols.teleport(q, seed=2024)
print("seeded run:", res.classical_bits, res.output.vector)

# %% [markdown]
# Two classical bits ride on one qubit of a shared pair.

# %%
for bits in itertools.product((0, 1), repeat=2):
    print(bits, "->", protocols.superdense(bits))

# %% [markdown]
# ## Entropy ledger
# Every vertex must pass out as much entropy as it takes in, with qubits and
# ebits worth +1, antiqubits and antiebits worth -1 and classical bits +1.

# %%
figs = protocols.builtin_diagrams()
for name, d in figs.items():
    print(name, protocols.check_conservation(d).residuals)

# An ebit sent forward equals an antiebit sent backward.
print(protocols.edge_multiset(protocols.canonical_form(figs["fig3"])) == protocols.edge_multiset(figs["fig2"]))

broken = protocols.InfoDiagram(
    [protocols.Vertex("M", "M")],
    [protocols.Edge(protocols.SOURCE, "M", "q"), protocols.Edge("M", protocols.SINK, "c", 2)],
)
print("unbalanced vertex:", protocols.check_conservation(broken).violations)

# %% [markdown]
# # Negative conditional entropy and tripartite bookkeeping
#
# For a maximally entangled pair the joint state is pure while each half is
# maximally mixed, so S(A|B) = S(AB) - S(B) = 0 - 1 = -1 bit.

# %%
import numpy as np

from qft_infocalc import entropy
from qft_infocalc.states import bell_state, ghz_state, random_full_rank_state, random_pure_state, werner_state

rho = bell_state()
print("S(AB) =", entropy.von_neumann(rho))
print("S(A|B) =", entropy.conditional_entropy(rho).value)
print("I(A:B) =", entropy.mutual_entropy(rho))

# %% [markdown]
# ## The conditional amplitude operator
# For full-rank states exp(-sigma), sigma = I (x) ln rho_B - ln rho_AB, gives
# the same number through -Tr[rho_AB log2 rho_A|B].  Along the Werner family
# the conditional entropy turns negative once p exceeds about 0.75.

# %%
for p in (0.0, 0.25, 0.5, 0.75, 0.9):
    rep = entropy.conditional_entropy(werner_state(p))
    print(f"p={p:4}: difference {rep.difference_value:+.6f}  operator {rep.operator_value:+.6f}")

rng = np.random.default_rng(1)
rep = entropy.conditional_entropy(random_full_rank_state([2, 2], rng))
print("random state, methods agree:", rep.methods_agree)

# %% [markdown]
# ## Three parties
# A pure tripartite state has vanishing ternary mutual entropy and pairs of
# marginals with equal entropy.  The GHZ state also shows why the chain rule
# needs S(d|u) rather than S(d).

# %%
print(entropy.tripartite_entropies(ghz_state()))
print("S(u:d|s) =", entropy.conditional_mutual(ghz_state()))
chain = entropy.chain_rule_check(ghz_state())
print("chain rule residuals: telescoping", chain.telescoping_residual, "with S(d)", chain.printed_form_residual)
worst = max(abs(entropy.ternary_mutual(random_pure_state([2, 2, 2], rng))) for _ in range(200))
print("largest |S(u:d:s)| over 200 random pure states:", worst)

# %% [markdown]
# ## Holographic bound

# %%
for area in (1e-60, 1.0, 4 * np.pi * 6.96e8**2):
    print(f"A = {area:.3e} m^2  ->  {entropy.holographic_bound_bits(area):.3e} bits")

# Multiplicity: certified values, the Hilbert-Samuel estimate, and where the estimate misleads.
# %%
from affsemi import a_k_set, build, hilbert_samuel_estimate, multiplicity, reduction_number
from affsemi.invariants import a_k_stable_index, hilbert_samuel_function

for gens in ([(5, 0), (0, 5), (6, 0), (0, 6)], [(4, 0), (0, 4), (1, 3), (3, 1)], [(2, 0), (0, 4), (1, 1), (1, 2)]):
    m = multiplicity(build(gens))
    print(gens, "->", m.value, m.method, "certified" if m.certified else "estimate", m.cross_checks)

# %%
# second differences of H plateau at 10 before dropping to the true value 9
S = build([(5, 1), (1, 2), (7, 8), (5, 8), (6, 2)])
H = hilbert_samuel_function(S, 16)
print("second differences:", [H[n] - 2 * H[n - 1] + H[n - 2] for n in range(2, 17)])
print("3-window estimate:", hilbert_samuel_estimate(S), " certified:", multiplicity(S).value)

# %%
# A_k is still growing past the reduction number here
S = build([(0, 3), (3, 2), (8, 7), (3, 6)])
r = reduction_number(S)
print("r =", r, " settles at", a_k_stable_index(S))
for k in range(r - 1, r + 3):
    print(f"  |A_{k}| = {len(a_k_set(S, k))}")
print("multiplicity:", multiplicity(S).value)

# Associated graded ring: Cohen-Macaulayness, Gorenstein property, betas and regularity.
# %%
from affsemi import PreconditionFailed, betas_and_dS, build, gr_is_cohen_macaulay, gr_is_gorenstein, regularity
from affsemi.invariants import apery_maxima_graded

for gens in ([(0, 2), (2, 1), (0, 3), (1, 2)], [(3, 1), (0, 4), (1, 3), (2, 2)], [(6, 0), (0, 4), (3, 3), (3, 9)]):
    S = build(gens)
    betas, d_S = betas_and_dS(S)
    print(gens)
    print("  gr CM:", gr_is_cohen_macaulay(S), " gr Gorenstein:", gr_is_gorenstein(S))
    print("  betas:", betas, " d_S:", d_S, " graded maxima:", apery_maxima_graded(S))
    try:
        print("  regularity:", regularity(S))
    except PreconditionFailed as exc:
        print("  regularity unavailable:", exc)

# %%
# a homogeneous example in three dimensions
S = build([(5, 0, 0), (0, 5, 0), (0, 0, 5), (4, 1, 0), (2, 0, 3), (1, 0, 4), (1, 3, 1)])
betas, d_S = betas_and_dS(S)
print("homogeneous:", S.is_homogeneous(), " |Ap| =", sum(betas), " betas:", betas)
print("(18,10,2): order", S.order((18, 10, 2)), "via", S.maximal_expression((18, 10, 2)))

# Which semigroups have a monomial minimal reduction, and how fast m^n settles.
# %%
from affsemi import (
    alternative_reduction_generators,
    build,
    dim2_line_test,
    has_monomial_reduction,
    reduction_number,
    reduction_report,
)
from affsemi.reduction import line_slope

for gens in ([(3, 1), (0, 4), (2, 2)], [(4, 1), (1, 3), (2, 2)], [(6, 0), (0, 4), (3, 3), (3, 9)]):
    S = build(gens)
    rep = reduction_report(S)
    print(gens)
    print("  degrees:", [str(q) for q in rep.degrees])
    print("  reduction:", rep.has_monomial_reduction, " line slope:", line_slope(S), " line test:", dim2_line_test(S))
    if has_monomial_reduction(S):
        print("  r =", reduction_number(S), " bound s*l-1 =", rep.bound_sl_minus_1, " lower =", rep.lower_bound_max_apery_order)

# %%
# with no monomial reduction, mix binomials and degree-one monomials instead
S = build([(2, 0), (0, 4), (1, 1), (1, 2), (2, 1)])
desc = alternative_reduction_generators(S)
print("binomials:", desc.binomial_generators)
print("monomials:", desc.monomial_generators)

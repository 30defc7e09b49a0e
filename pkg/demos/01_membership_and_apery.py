# Membership, order and the Apery set of a planar semigroup.
# %%
from affsemi import apery_set, build, fundamental_domain_points, group_contains, pick_identity_check, rem_decompose

S = build([(3, 1), (0, 4), (2, 2)])
print("extremal rays:", S.extremal_rays, "others:", S.others)

# %%
# order = longest factorisation length
for v in [(2, 2), (4, 4), (5, 3), (1, 1)]:
    if S.contains(v):
        print(v, "order", S.order(v), "max expression", S.maximal_expression(v))
    else:
        print(v, "is not in S")

# %%
ap = apery_set(S)
for w in ap:
    print(f"{w.value}  order={w.order}  rem={w.rem}  floor={w.floor}")
print("rem of (4,4):", rem_decompose(S, (4, 4)))

# %%
# in the plane, |Ap| + #(parallelogram points outside the group) = |det| exactly when rem is injective
T = build([(5, 3), (3, 5), (2, 2)])
pts = sorted(fundamental_domain_points(T))
print("outside the group:", [z for z in pts if not group_contains(T, z)])
print(pick_identity_check(T))

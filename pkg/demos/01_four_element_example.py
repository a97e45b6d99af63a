#!/usr/bin/env python3
# coding: utf-8

# # Separators on a small monoid
#
# The monoid {0, a, b, 1} has a zero, two orthogonal idempotents a and b
# (ab = ba = 0) and an identity.  We compute idealizers and separators of a
# few subsets and look at how they classify.

# %%

from semisep import Semigroup, classify, idealizer, separator, separator_fixed_points

S = Semigroup(
    [[0, 0, 0, 0],
     [0, 1, 0, 1],
     [0, 0, 2, 2],
     [0, 1, 2, 3]],
    names=["0", "a", "b", "1"],
)
show = lambda A: "{" + ",".join(S.name(x) for x in A) + "}"  # noqa: E731

# %%
# The separator keeps the elements whose left and right multiplications
# never move anything across the boundary of A.

for members in [(), ("1",), ("a",), ("a", "1"), ("0", "a", "b"), ("a", "b", "1"), ("0", "a", "b", "1")]:
    A = S.subset(members)
    print(f"Sep{show(A):12s} = {show(separator(S, A)):10s} Id = {show(idealizer(S, A)):10s} {classify(S, A)}")

# %%
# {a,b,1} is not closed (ab = 0), and its separator collapses to {1},
# the same as for its complement {0}.

print(show(separator(S, S.subset("ab1"))), show(separator(S, S.subset("0"))))

# %%
# Subsets equal to their own separator are exactly the unitary subsemigroups.

print([show(A) for A in separator_fixed_points(S)])

# %%
# The whole 16-entry separator table is one vectorised numpy pass.

from semisep import separator_table

bits = lambda m: [x for x in range(4) if m >> x & 1]  # noqa: E731
for a, m in enumerate(separator_table(S)):
    print(f"{show(bits(a)):10s} -> {show(bits(m))}")

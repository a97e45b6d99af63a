#!/usr/bin/env python3
# coding: utf-8

# # Ideals, primes and unitary subsemigroups
#
# A proper ideal never meets its separator, and a non-empty ideal is prime
# exactly when its complement is a unitary subsemigroup.  Both facts are
# easy to watch on small tables.

# %%

from semisep import Semigroup, is_ideal, is_maximal_ideal, is_prime_ideal, separator
from semisep.ideals import enumerate_prime_ideals, prime_ideals_via_complement, unitary_subsemigroups

S = Semigroup([[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 2, 2], [0, 1, 2, 3]], names=["0", "a", "b", "1"])
show = lambda A: "{" + ",".join(S.name(x) for x in A) + "}"  # noqa: E731

# %%

for A in S.subsets():
    if A and is_ideal(S, A):
        flags = [f for f, ok in [("prime", is_prime_ideal(S, A)), ("maximal", is_maximal_ideal(S, A))] if ok]
        print(f"{show(A):10s} Sep = {show(separator(S, A)):6s} {' '.join(flags)}")

# %%
# Two routes to the prime ideals: directly, and as complements of unitary
# subsemigroups.  They agree.

print([show(P) for P in enumerate_prime_ideals(S)])
print([show(P) for P in prime_ideals_via_complement(S)])
print("unitary:", [show(U) for U in unitary_subsemigroups(S)])

#!/usr/bin/env python3
# coding: utf-8

# # Separators under homomorphisms
#
# Surjective endomorphisms carry separators of subsemigroups onto
# separators of their images.  For a surjection between two subsemigroups
# A -> B the picture can break, and a search over order <= 3 finds the
# smallest case.

# %%

from semisep import Semigroup
from semisep.corpus import corpus_up_to
from semisep.morphisms import check_theorem4, enumerate_endomorphisms, remark5_scan

S = Semigroup([[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 2, 2], [0, 1, 2, 3]], names=["0", "a", "b", "1"])
for phi in enumerate_endomorphisms(S, surjective_only=True):
    row = check_theorem4(S, phi)
    print(phi.map, "pass" if row.passed else "FAIL", row.instances_checked)

# %%

corpus = corpus_up_to(3)
scan = remark5_scan(corpus)
print(scan.to_dict())

# %%
# With separators computed inside A and B themselves, every subsemigroup is
# its own separator and nothing can go wrong:

print(remark5_scan(corpus, separators="restricted").witness)

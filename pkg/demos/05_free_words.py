#!/usr/bin/env python3
# coding: utf-8

# # Subsemigroups of a free semigroup
#
# Words are tuples of letter indices; a, b, ... print as letters.  A
# finitely generated subsemigroup is free when its base (the generators
# that cannot be split further) is a code.

# %%

from semisep.freewords import (
    GeneratorSet,
    base,
    bounded_separator,
    bounded_stability_check,
    check_theorem13_condition,
    factorizations,
    format_word,
    is_code,
    is_free_subsemigroup,
    parse_word,
)

for text in ["a,ab", "a,ab,b", "ab,ba,aba"]:
    G = GeneratorSet.parse(text)
    r = is_code(base(G))
    print(f"{str(G):12s} base {str(base(G)):10s} free={is_free_subsemigroup(G)}",
          "" if r else f"witness {format_word(r.witness)}")

# %%

G = GeneratorSet.parse("ab,ba,aba")
print(factorizations(parse_word("ababa"), G, listing=True))
print(bounded_stability_check(G, 5).counterexample)

# %%
# In <aa> over {a, b} the bounded separator keeps only the even powers of a,
# and no word t, s with tst, t in T and s outside T turns up.

T = GeneratorSet.parse("aa", 2)
print([format_word(w) for w in bounded_separator(T, 4, 6).words])
print(check_theorem13_condition(T, 8).to_dict())

"""Plücker coordinates: chains, straightening laws, and randomized checks.

Everything symbolic here is exact integer arithmetic; the randomized part
evaluates monomials at seeded points of Schubert varieties over the prime
field F_{2^31 - 1} and checks ranks and vanishing.
"""

import itertools
import random

from smtkit import (
    index_leq,
    schubert_point_sample,
    standard_monomials_grassmann,
    straighten,
    verify_hodge_i,
    verify_hodge_iii,
)
from smtkit.pluecker import all_indices, relation_residual, sample_flag_point, \
    flag_monomial_evaluate, perm_from_word

print("== standard chains on Gr(2,4) ==")
for m in (1, 2, 3):
    print(f"degree {m}: {len(standard_monomials_grassmann(2, 4, m))} chains")

print("\n== the classic two-term relation ==")
rel = straighten((1, 4), (2, 3), 2, 4)
terms = " ".join(f"{c:+d} p{list(a)} p{list(b)}" for c, (a, b) in rel.rhs)
print(f"p[1,4] p[2,3] = {terms}")
print(f"residual after symbolic re-expansion: {relation_residual(rel)}")

print("\n== every non-standard pair of Gr(2,5) ==")
coeffs = set()
for I, J in itertools.combinations(all_indices(2, 5), 2):
    if index_leq(I, J) or index_leq(J, I):
        continue
    rel = straighten(I, J, 2, 5)
    coeffs.update(c for c, _ in rel.rhs)
    terms = " ".join(f"{c:+d} p{list(a)} p{list(b)}" for c, (a, b) in rel.rhs)
    print(f"p{list(I)} p{list(J)} = {terms}")
print(f"observed coefficient set: {sorted(coeffs)} "
      "(all +-1 in this convention; an observation, not a theorem)")

print("\n== a longer relation on Gr(3,6) ==")
rel = straighten((1, 4, 5), (2, 3, 6), 3, 6)
for c, (a, b) in rel.rhs:
    print(f"  {c:+d} p{list(a)} p{list(b)}")
print(f"exact: {relation_residual(rel) == {}}")

print("\n== randomized rank verification over F_p ==")
for m in (1, 2, 3):
    rep = verify_hodge_i(2, 4, m)
    print(f"degree {m}: expected rank {rep.expected_rank}, ranks by seed "
          f"{rep.ranks_by_seed}, pass {rep.passed}")

print("\nper-Schubert restriction bases on Gr(2,4), degree 2:")
for I in all_indices(2, 4):
    rep = verify_hodge_iii(I, 2, 4, 2)
    print(f"  X_{list(I)}: standard-on-X count {rep.expected_rank}, pass {rep.passed}")

print("\n== the nonvanishing side of the restriction counterexample ==")
p_s1 = perm_from_word((0,), 3)
p_s2 = perm_from_word((1,), 3)
rng = random.Random(1)
vals = [
    flag_monomial_evaluate(sample_flag_point((1, 0), 3, rng), [(p_s1, 1), (p_s2, 2)])
    for _ in range(5)
]
print("p_{s1(w1)} p_{s2(w2)} at five samples of X_{s2.s1}:", vals)
print("(nonzero, although the monomial is not standard there; demo 03)")

"""Walk one description through the whole decoding chain by hand.

Two cubics applied to the seed 15 give a 14-digit integer; the pairing
function splits it into two 7-digit integers; each unranks to a
permutation of 11 points; together they generate a group worth looking at.
"""

from random import Random

from algsearch import (
    PermGroup,
    classify,
    is_solvable,
    nat_to_pair,
    nat_to_perm,
)
from algsearch.descriptions import parse_poly_description

desc = parse_poly_description("8,2,3,1;6,7,4,2;15")
value = desc.evaluate()
print(f"description 8,2,3,1;6,7,4,2;15 evaluates to {value}")

i, j = nat_to_pair(value)
print(f"pairs to ({i}, {j})")

g, h = nat_to_perm(i), nat_to_perm(j)
print(f"first:  {g.cycle_string()}")
print(f"second: {h.cycle_string()}")

rng = Random(0)
verdict = classify(g, h, rng)
print(f"the pair generates: {verdict.label} of degree {verdict.degree}"
      + (f", order {verdict.order}" if verdict.order else ""))
print(f"solvable: {is_solvable(PermGroup([g, h]), rng)}")

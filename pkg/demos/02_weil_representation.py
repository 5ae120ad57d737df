"""The Weil representation as exact cyclotomic matrices."""

from thetalift.lattice import named_lattice
from thetalift.weilrep import decompose_sl2, milgram_check, rho, rho_S, verify_relations

A = named_lattice("A2").discriminant_form
print(rho_S(A).render())
print()
for k, ok in verify_relations(A).items():
    print(f"{k:14s} {ok}")
print("Milgram:", milgram_check(A))

# an arbitrary element of SL2(Z), written in S and T
g = [[7, 3], [2, 1]]
word = decompose_sl2(g)
print(f"\n{g} = {word}")
print("rho(g) row 0:", " | ".join(str(x) for x in rho(A, g).entries[0]))

"""Level one Hecke eigenforms with exact number-field coefficients."""

from thetalift.modforms import charpoly, eigenforms, hecke_matrix, satake

for k in (12, 24, 36):
    T2 = hecke_matrix(k, 2)
    print(f"weight {k}: T2 = {T2}, charpoly {charpoly(T2)}")
    for f in eigenforms(k, 12):
        print(f"   field {f.field.poly_str()}: c(2..5) = {[str(f.c(n)) for n in range(2, 6)]}")

(delta,) = eigenforms(12, 10)
s = satake(delta, 2)
print("\nSatake checks at p = 2:", s.exact_checks())
print("alpha_0, alpha_1 =", s.numeric(delta.real_embeddings()[0]))

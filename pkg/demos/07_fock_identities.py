"""Schwartz forms in the Fock model: what holds exactly and where the constants go wrong."""

from thetalift.fock import LEMMAS, build_phi_KM, pair_to_scalar, to_schrodinger, verify_lemma

phi = build_phi_KM(1, 1)
print("phi_KM for (1,1):", phi.terms, "times 2^(%d/2)" % phi.sqrt2_exponent)

print("\nphi_{2,0} for signature (2,2) in the Schrodinger model:")
for mono, c in sorted(to_schrodinger(pair_to_scalar(2, 2, 0)).items()):
    print(f"  {c} * x^{mono}")

grid = [(p, q, ell) for p in (1, 2, 3) for q in (0, 1, 2) for ell in range(4)]
for name in LEMMAS + ("phiformel_rescaled", "decomp_operator", "decomp_rescaled"):
    fails = [g for g in grid if not verify_lemma(name, *g).passed]
    print(f"{name:22s} {len(grid) - len(fails):2d}/{len(grid)} pass", f"first failure {fails[0]}" if fails else "")

print("\nwitness:", verify_lemma("phiformel", 2, 0, 1).witness)

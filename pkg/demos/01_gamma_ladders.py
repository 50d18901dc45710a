"""Climbing the gamma-matrix ladders.

Starting from the 4x4 Dirac matrices we build a purely imaginary basis
for Cl(7), double it into a completely real basis for Cl(8,0), and
separately into a real basis for Cl(1,7).  Every anticommutator identity
is checked exactly -- no floating point anywhere.
"""

from triality import (cl7_basis, cl8_basis, cl17_basis, dirac_gammas,
                      volume_element, Matrix, anticommutator, rational)

print(__doc__)

# --- the Dirac floor --------------------------------------------------------
dirac = dirac_gammas()
print("gamma_0 (Dirac basis):")
print(dirac[0])
print("\ngamma_5 = i gamma_0 gamma_1 gamma_2 gamma_3:")
print(dirac.gamma5)
assert dirac.satisfies_clifford()
print("\n{gamma_mu, gamma_nu} = 2 eta_mu_nu with eta = diag(+,-,-,-): exact\n")

# --- seven anticommuting imaginary matrices ---------------------------------
c7 = cl7_basis()
print("g_4 of the Cl(7) ladder (note: purely imaginary):")
print(c7[3])
for i in range(7):
    for j in range(7):
        target = Matrix.identity(8).scale(rational(2 * (i == j)))
        assert anticommutator(c7[i], c7[j]) == target
print("\nall 28 anticommutator relations of Cl(7) hold exactly\n")

# --- doubling to a real Cl(8,0) ----------------------------------------------
c8 = cl8_basis()
print(f"Cl(8,0): {len(c8.gammas)} real 16x16 matrices; relations:",
      "exact" if c8.satisfies_clifford() else "BROKEN")
vol8 = volume_element(c8)
print("volume element omega = Gamma_0 ... Gamma_7:")
print("  omega^2 == +I:", vol8.squares_to_plus_identity)
print("  omega anticommutes with every Gamma:", vol8.anticommutes_with_all)
print("  so (I + omega)/2 and (I - omega)/2 project onto the two chiralities\n")

# --- the Lorentzian ladder ----------------------------------------------------
c17 = cl17_basis()
vol17 = volume_element(c17)
print(f"Cl(1,7): {len(c17.gammas)} real 16x16 matrices; relations:",
      "exact" if c17.satisfies_clifford() else "BROKEN")
print("  omega^2 == -I (a pseudo-scalar):", vol17.squares_to_minus_identity)
chiral = cl17_basis(chiral=True)
blocky = all((chiral[i] @ chiral[j]).block(0, 8, 8).is_zero
             for i in range(8) for j in range(i + 1, 8))
print("  after the chiral change of basis, all degree-2 elements are")
print("  block diagonal:", blocky)

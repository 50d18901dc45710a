"""Diagonalizing the triality: g2 as the fixed subspace, plus null ladders.

The eigenvector matrix of the quartet action regroups the 28 generators
by triality eigenvalue: 14 land on eigenvalue 1 (they form g2 and each is
fixed in place), 7 on e^{+i2pi/3} and 7 on e^{-i2pi/3}.  The handed
generators are null for the Killing form and pair up like raising and
lowering operators: the total Killing trace drops from -28 to -14.
"""

from triality import (Subspace, diagonalize, g2_basis, graded_basis,
                      killing_form, killing_trace, outer_h, outer_k,
                      vector_basis, is_closed, ZERO, commutator)

print(__doc__)

diag = diagonalize("H")
print("eigenvector matrix U (columns: fixed-3, fixed-8, e^{+i2pi/3}, "
      "e^{-i2pi/3}):")
print(diag.change_of_basis)
print("\nD = diag(1, 1, e^{+i2pi/3}, e^{-i2pi/3}); the columns diagonalize")
print("the action of H on quartet coefficients (H^T U = U D holds exactly).")

v = vector_basis()
graded = graded_basis(v, outer_h())
print("\na fixed generator, (V_23 + V_67)/sqrt2:")
print(graded.g2_part[0])
print("\na right-handed generator, (i sqrt3 V_01 - V_23 + V_45 + V_67)/sqrt6:")
print(graded.right_part[0])

print("\ninvariant part closed under the bracket:", is_closed(graded.g2_part))
print("the 14 handed generators do not close:",
      not is_closed(graded.right_part + graded.left_part))
print("invariant span equals the Lambda span of the spin(7) intersection:",
      Subspace.from_matrices(graded.g2_part)
      == Subspace.from_matrices(g2_basis().lambdas))

print("\nKilling trace of the original 28 generators:",
      killing_trace(v.matrices()))
print("Killing trace of the graded basis:",
      killing_trace(graded.all_generators()))
print("every handed generator is null:",
      all(killing_form(x, x) == ZERO
          for x in graded.right_part + graded.left_part))

sib = [sum(1 for l in graded.left_part if commutator(r, l).is_zero)
       for r in graded.right_part]
print("each right generator commutes with exactly one left generator:",
      sib == [1] * 7)

u = diag.change_of_basis
k_prime = u.dagger() @ outer_k().core @ u
print("\nK in the eigenbasis (fixes g2, swaps the two handed eigenspaces):")
print(k_prime)

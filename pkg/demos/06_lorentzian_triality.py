"""Triality for spin(1,7): the more natural stage.

With a time axis the vector basis gains seven symmetric boosts, the
spinor bases become exact complex conjugates of one another, and the
triality core T maps each constructed basis precisely onto the next with
no leftover change of basis.  T is symmetric, its eigenvectors are real,
and the diagonalizing rearrangement never leaves the real algebra.
"""

from triality import (GEN_INDICES, LORENTZIAN, Matrix, ONE, MINUS_ONE,
                      apply_outer, diagonalize, graded_basis, killing_trace,
                      outer_conj, outer_t, s3_closure, spinor_bases,
                      vector_basis)

print(__doc__)

v = vector_basis(LORENTZIAN)
left, right = spinor_bases(LORENTZIAN)
eta = Matrix.diag((ONE,) + (MINUS_ONE,) * 7)

print("V_{0,3} is now a boost (symmetric):")
print(v[(0, 3)])
print("\nX^T eta = -eta X for all 28 vector generators:",
      all((v[i].T @ eta + eta @ v[i]).is_zero for i in GEN_INDICES))

print("\nspinor boosts are Hermitian, rotations anti-Hermitian:",
      all((left[(i, j)].is_hermitian if i == 0
           else left[(i, j)].is_antihermitian)
          for (i, j) in GEN_INDICES))
print("L_ij^* == R_ij for every index:",
      all(left[i].conj() == right[i] for i in GEN_INDICES))

t = outer_t()
print("\nT (symmetric, complex):")
print(t.core)
s1 = apply_outer(t, v)
s2 = apply_outer(t, s1)
s3 = apply_outer(t, s2)
print("T(V) == L:", all(s1[i] == left[i] for i in GEN_INDICES))
print("T^2(V) == R:", all(s2[i] == right[i] for i in GEN_INDICES))
print("T^3(V) == V:", all(s3[i] == v[i] for i in GEN_INDICES))
print("T^2 == T^* == T^-1:",
      t.core.power(2) == t.core.conj()
      and (t.core.power(2) @ t.core) == Matrix.identity(4))

closure = s3_closure([t, outer_conj()])
print(f"closure of {{T, conj}}: {len(closure.elements)} elements, S3:",
      closure.is_s3)

diag = diagonalize("T")
b = diag.change_of_basis
print("\nthe eigenvector matrix B is real and orthogonal:",
      b.is_real and b.is_orthogonal)
print(b)

graded = graded_basis(v, t)
print("\ngraded vector basis stays real:",
      all(x.is_real for x in graded.all_generators()))
print("every graded generator still satisfies X^T eta + eta X = 0:",
      all((x.T @ eta + eta @ x).is_zero for x in graded.all_generators()))
print("Killing trace of the original Lorentzian basis:",
      killing_trace(v.matrices()))
print("Killing trace of the graded basis:",
      killing_trace(graded.all_generators()))
print("\n(both are -14: seven boosts contribute +1 each, and the graded")
print("handed generators are null -- the two readings agree.)")

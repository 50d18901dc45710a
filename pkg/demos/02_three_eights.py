"""The three 8-dimensional representations of so(8).

The vector basis V rotates coordinates; the spinor bases L and R are the
two chiral blocks of the degree-2 Clifford elements.  All three families
are real antisymmetric 8x8 matrices, they span exactly the same
28-dimensional space, and they share their structure constants -- which
is what makes a quartet-level map between them a Lie algebra
homomorphism.
"""

from triality import (basis, same_span, same_structure_constants,
                      vector_basis, spinor_bases, GEN_INDICES)

print(__doc__)

v = vector_basis()
left, right = spinor_bases()

print("V_{0,1} -- a single rotation plane:")
print(v[(0, 1)])
print("\nL_{0,1} -- the same index in the left-handed spinor basis:")
print(left[(0, 1)])
print("\nR_{0,1} -- and in the right-handed basis:")
print(right[(0, 1)])

print("\nsign convention: the (1,5) and (2,6) generators are negated, e.g.")
print("V_{1,5} has -1 above the diagonal:")
print(v[(1, 5)])

for kind in "VLR":
    b = basis(kind)
    assert all(b[idx].is_real and b[idx].is_antisymmetric
               for idx in GEN_INDICES)
print("\nall 84 generators are real and antisymmetric: exact")

report = same_span(v, left)
print(f"span(V) == span(L): {report.equal} "
      f"(dimensions {report.dim_first}, {report.dim_second}, "
      f"union {report.dim_union})")
print(f"span(V) == span(R): {same_span(v, right).equal}")

print("structure constants V vs L:",
      "match" if same_structure_constants(v, left).equal else "differ")
print("structure constants L vs R:",
      "match" if same_structure_constants(left, right).equal else "differ")
print("\nThree distinct representations, one underlying algebra.")

"""Green's form, its radical, and PBW expansions for n = 2.

Run with ``python3 demos/pbw_basis.py``.
"""

from qhall import HallVector, MultiPartition, Word, expand_monomial, pbw_expand, radical_basis
from qhall.basis import canonical_section, separated_elements, transition_matrix

d = (2, 1)
alpha = MultiPartition(2, ((2,), (1,)))

print("separated classes:", ", ".join(map(str, separated_elements(d))))
for y in radical_basis(d):
    print("radical vector:\n ", str(y).replace("\n", "\n  "))

print("\nu_alpha modulo the radical:")
print(" ", str(pbw_expand(HallVector.basis_vector(alpha))).replace("\n", "\n  "))

for letters in [(1, 1, 2), (2, 1, 1), (1, 2, 1)]:
    w = Word(2, letters)
    print(f"\nE_{w} =")
    print(" ", str(pbw_expand(expand_monomial(w))).replace("\n", "\n  "))

m = transition_matrix(canonical_section(d), d)
print("\ncanonical transition matrix is upper triangular:", m.is_upper_triangular())
for pi, w, row in zip(m.rows, m.words, m.entries):
    print(f"  {str(w):4s}", "  ".join(f"{str(c):>10s}" for c in row))

# a bigger piece: the radical is as large as the non-separated part
for big in [(2, 2), (3, 2), (2, 1, 1)]:
    print(big, "radical dimension", len(radical_basis(big)))

"""Non-Galois triple covers of the line, indexed by (d1, d2) with l1 = 2d1 - d2, l2 = 2d2 - d1."""
from stackycovers.triple_cover import (
    TripleCoverParams,
    gamma_char_lattice,
    pic_injectivity_index,
    tautological_family_triple,
    triple_hom_witness,
)

p = TripleCoverParams(4, 4)
print("character lattice of Gamma(l1, l2):")
print(gamma_char_lattice(p.l1, p.l2))

w = triple_hom_witness(p)
print("least witness:", dict(w.assignments))

rec = pic_injectivity_index(p)
print("pullback in target coordinates:", rec.image_matrix)
print("index:", rec.index, "smith diagonal:", rec.smith_diagonal)
print("metadata:", rec.metadata)

for d1 in range(4, 9):
    for d2 in range(4, 9):
        try:
            q = TripleCoverParams(d1, d2)
        except ValueError:
            continue
        family, bs_trivial = tautological_family_triple(q)
        print(d1, d2, "BS trivial" if bs_trivial else "BS nontrivial")

# Codimension of the locus with extra automorphisms.
from stackycovers.strata import STANDARD_AMBIENT_OFFSET, aut_locus_codim_p1, aut_locus_codim_p2

for rd in (6, 7, 8, 12):
    rec = aut_locus_codim_p1(rd)
    print(f"P^1, rd={rd}: ambient {rec.ambient_dim}, largest stratum {rec.max_stratum_dim}, codim {rec.codim}")

for offset in (8, STANDARD_AMBIENT_OFFSET):
    print("plane curves, ambient offset", offset)
    for d in range(4, 9):
        rec = aut_locus_codim_p2(d, offset)
        bad = [(s.case_id, s.m) for s in rec.violations]
        print(f"  d={d}: ambient {rec.ambient_dim}, codim >= 2: {rec.codim_at_least_two}, violations {bad}")

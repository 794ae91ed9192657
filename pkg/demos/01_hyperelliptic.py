# Hyperelliptic curves are double covers of the line branched in 2g + 2 points,
# so they sit at n = 1, r = 2, d = g + 1.
from stackycovers.simple_cyclic import SimpleCyclicParams, rationality_simple, tautological_family_exists

print(f"{'g':>3} {'family':>7} {'rational':>9}")
for g in range(2, 13):
    p = SimpleCyclicParams(1, 2, g + 1)
    family, bs_trivial = tautological_family_exists(p)
    print(f"{g:>3} {str(family):>7} {rationality_simple(p).outcome.value:>9}")

# A universal curve exists over an open set exactly when g is odd.
# The Brauer-Severi obstruction never vanishes here since gcd(rd, 2) = 2.
v = rationality_simple(SimpleCyclicParams(1, 2, 4))
for key, why in v.reasons:
    print(key, "-", why)

from stackycovers.simple_cyclic import (
    SimpleCyclicParams,
    pic_divisor_stack,
    pic_index,
    pic_quotient,
    pic_stack,
    verify_coarse_pic_trivial,
)

p = SimpleCyclicParams(1, 2, 4)
print("Pic of the cover stack:  ", pic_stack(p))
print("Pic of the divisor stack:", pic_divisor_stack(p))
print("index of the pullback:   ", pic_index(p, p.r))

# intermediate quotients by mu_k, k | r
p = SimpleCyclicParams(2, 6, 2)
for k in (1, 2, 3, 6):
    q = pic_quotient(p, k)
    print(f"k={k}: {q.generator_label} of order {q.order}, index {pic_index(p, k)}")

# The coarse space has trivial Picard group once rd >= 4. The proof reduces to a
# gcd computation with an alternating geometric sum, which grows quickly.
proof = verify_coarse_pic_trivial(SimpleCyclicParams(4, 12, 5))
print(proof.m, proof.rd, proof.power, proof.gcd_m_rd_power, proof.conclusion)

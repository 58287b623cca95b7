"""Truncated quotients and paraequivalence with the free algebra of rank 2."""
from ncgs import load_presentation, paraequivalence_check, quotient_dim_bruteforce, quotient_dims

p = load_presentation("main")
dims, gr = quotient_dims(p, 6)
print(" n  dim A/I^n  dim Gr_(n-1)")
for n, (d, g) in enumerate(zip(dims, gr), start=1):
    print(f"{n:2} {d:10} {g:13}")

print("plain linear algebra agrees for n <= 4:",
      dims[:4] == [quotient_dim_bruteforce(p, n) for n in range(1, 5)])
table = paraequivalence_check(p, free_rank=2, n=6)
print("same graded dimensions as k<a, b>:", table.passed)

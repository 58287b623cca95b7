"""Generating certified examples k<x1..xn, y1..ym | u = phi>."""
from ncgs.certify import PreconditionError, generate_family_example

for u, phi in [("x1*x2", "y1 - y1^2"), ("x1*x2*x2", "y1*y2 + y2"), ("x2*x1", "y1^2")]:
    m = 2 if "y2" in phi else 1
    pres, cert = generate_family_example(2, m, u, phi)
    print(f"{u:10} = {phi:12} -> {cert.verdict}")

try:
    generate_family_example(2, 1, "x1*x2*x1", "y1^2")
except PreconditionError as e:
    print("refused:", e, "| witness:", e.witness)

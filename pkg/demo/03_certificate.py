"""Certifying residual nilpotence of a parafree presentation.

The certificate needs both checks to close and each relation to have the
same largest term (deg-lex) and smallest term (theta-lex).
"""
from ncgs import certify_residual_nilpotence, load_presentation

p = load_presentation("main")
for r in p.relations:
    print("  ", r)
cert = certify_residual_nilpotence(p, weight_bound=30)
print("verdict:", cert.verdict)
for m in cert.leading:
    print(f"   max {m.max_term:6} min {m.min_term:6} match={m.equal}")

# the same relations with too small a bound only give a partial answer
print("bound 3:", certify_residual_nilpotence(p, weight_bound=3).verdict)

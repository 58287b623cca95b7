"""Word orders: which ones can drive rewriting, and which ones cannot.

Deg-lex and theta-lex respect multiplication on both sides, and every
word has only finitely many words below it.  Plain lex fails both tests.
"""
from ncgs import Alphabet, OrderError, OrderSpec, check_admissible

ab = Alphabet(("x", "y"))
for order in (OrderSpec.deglex(ab), OrderSpec.theta_lex(ab, (1, 2)), OrderSpec.lex(ab)):
    rep = check_admissible(order, 4)
    print(f"{order.describe():32} admissible up to length 4: {rep.passed}")
    if not rep.passed:
        print("   first counterexample:", rep.to_dict(ab)["violations"][0])

x, y = ab.word("x"), ab.word("y")
lex = OrderSpec.lex(ab)
# under lex, y*x > y*y*x > y*y*y*x > ... never stops descending
chain = [y * n + x for n in range(1, 6)]
print("lex: y^n x strictly decreasing for n = 1..5:",
      all(lex.compare(a, b) > 0 for a, b in zip(chain, chain[1:])))

try:
    OrderSpec(ab, "theta-lex", weights=(0, 1))
except OrderError as e:
    print("zero weight rejected:", str(e).split(":")[0])

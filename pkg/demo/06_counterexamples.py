"""Why the series side needs an N-order, and why min terms alone are not enough."""
from ncgs import OrderError, check_gs_series, gr1_dependence, load_presentation

try:
    load_presentation("counterexample-one")
except OrderError as e:
    print("vector-weight order refused:\n  ", e)

p = load_presentation("counterexample-two")
print("relation:", p.relations[0])
print("series check:", check_gs_series(p.relations, p.order_min, 30).verdict)
x3, x4 = p.letter("x3"), p.letter("x4")
print("rank of {x3, x4} in I/I^2:", gr1_dependence(p, [x3, x4]),
      "(two normal words, yet linearly dependent)")

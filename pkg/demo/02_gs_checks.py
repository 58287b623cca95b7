"""Classical and series Gröbner–Shirshov checks on the commutative plane.

The single relation xy - yx, with x > y, has no self-overlap, so the
relation set is trivially closed.  Normal words are y^a x^b.
"""
from ncgs import check_gs_classical, check_gs_series, complete_classical, load_presentation

p = load_presentation("kxy")
print("relations:", [str(r) for r in p.relations])
cl = check_gs_classical(p.relations, p.order_max, trace=True)
print("classical:", cl.verdict, cl.counts())
se = check_gs_series(p.relations, p.order_min, 30)
print("series:   ", se.verdict, se.counts())

comp = complete_classical(p.relations, p.order_max, 4)
words = [p.alphabet.format(w) or "1" for w in comp.normal_words()]
print("normal words below length 4:", words)
print("count per length:", [sum(1 for w in comp.normal_words() if len(w) == n) for n in range(4)])

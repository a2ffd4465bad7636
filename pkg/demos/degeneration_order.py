"""The degeneration order on one dimension vector, and composition series counts.

Run with ``python3 demos/degeneration_order.py``.  The Hasse diagram is
printed as DOT; pipe it through ``dot -Tpng`` to draw it.
"""

from qhall import Word, bracket, covers_closure, degeneration_poset, wp

d = (2, 2)
poset = degeneration_poset(d)
print(f"{len(poset.elements)} isoclasses of dimension vector {d}")
print("same order from exchange moves:", poset.leq == covers_closure(d).leq)

print(poset.to_dot())

# <w|la> is nonzero exactly below the generic extension wp(w)
w = Word(2, (1, 2, 1, 2))
top = wp(w)
print(f"\nw = {w}, generic extension {top}")
for la in poset.linear_extension():
    c = bracket(w, la)
    if c:
        print(f"  {str(la):24s} {c}")

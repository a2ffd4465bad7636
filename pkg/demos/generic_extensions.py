"""Walk through generic extensions of simple modules on a 3-cycle.

Run with ``python3 demos/generic_extensions.py``.
"""

from qhall import MultiPartition, Word, fiber, fiber_size, is_distinguished, wp
from qhall.monoid import canonical_word, sigma_minus, sigma_plus

n = 3
pi = MultiPartition(n, ((4, 3, 3, 1, 1), (3, 2, 1), (2, 2)))
print("pi =", pi)

# putting a simple S_i on top of M(pi) generically
for i in range(1, n + 1):
    print(f"  S_{i} * M(pi) ->", sigma_plus(i, pi))

# peeling simples back off; only vertices 1 and 2 are possible here
for i in (1, 2):
    print(f"  peel S_{i}:", sigma_minus(i, pi))

w = canonical_word(pi)
print("canonical word:", w, "maps back:", wp(w) == pi)
print("words with this generic extension:", fiber_size(pi))

small = MultiPartition(n, ((3, 2, 1), (1, 1), (1,)))
print("\nfiber of", small)
for word in fiber(small):
    mark = "distinguished" if is_distinguished(word) else ""
    print(f"  {word}  {mark}")

# generic extensions compose like a monoid: S_1 S_2 S_1 = S_1 S_1 S_2 on a 3-cycle
print("\nwp(121) == wp(112):", wp(Word(n, (1, 2, 1))) == wp(Word(n, (1, 1, 2))))

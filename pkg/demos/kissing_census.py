"""Short-vector counts vs the handshake bound, by exact enumeration.

The number of lattice vectors with norm in [sigma, u sigma] is even (pairs
+/-lambda) and bounded by 10 (e u^p n / p) exp(u^p n / p).  The bound is
loose by design; the census shows how loose on familiar lattices.
"""

import numpy as np

from latbounds import (Lattice, handshake_bound, handshake_census,
                       integer_lattice, lll_reduce, shortest_vector)

print("== Z^n at u = 1: the 2n unit vectors, nothing else ==")
for n in range(1, 7):
    hc = handshake_census(integer_lattice(n), 2.0, 1.0)
    print(f"n = {n}: count {hc.count:3d}  bound {hc.bound:12.1f}")

print()
print("== widening the window to u = 1.5 picks up the diagonals ==")
for n in (2, 3, 4):
    hc = handshake_census(integer_lattice(n), 2.0, 1.5)
    print(f"n = {n}: count {hc.count:3d}  (2n units + diagonal pairs)")

print()
print("== D4: kissing number 24 ==")
D4 = Lattice(np.array([[1.0, -1.0, 0.0, 0.0], [0.0, 1.0, -1.0, 0.0],
                       [0.0, 0.0, 1.0, -1.0], [0.0, 0.0, 1.0, 1.0]]),
             name="D4")
sigma, mins = shortest_vector(D4, 2.0)
print(f"sigma(D4) = {sigma:.6f} with {len(mins)} minimizers")
for u in (1.0, 1.5):
    hc = handshake_census(D4, 2.0, u)
    print(f"u = {u}: count {hc.count}  bound {hc.bound:.1f}  "
          f"{'OK' if hc.passed else 'VIOLATED'}")

# the census is a lattice invariant: a skewed basis gives the same answer
U = np.array([[1, 0, 0, 0], [3, 1, 0, 0], [0, -2, 1, 0], [1, 0, 0, 1]],
             dtype=float)
skewed = lll_reduce(Lattice(U @ D4.basis))
print(f"same lattice, skewed then reduced basis: "
      f"count {handshake_census(skewed, 2.0, 1.0).count}")

print()
print("== l^1 window on Z^2 ==")
hc = handshake_census(integer_lattice(2), 1.0, 1.0)
print(f"p = 1, u = 1: count {hc.count}  bound {handshake_bound(2, 1.0, 1.0):.1f}")

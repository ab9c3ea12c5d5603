"""Take a random plane partition of a shifted staircase minus a smaller one,
split it into diagonals, and recover it from the resulting reverse tableau."""
import random

from truncated_tableaux.oracle import iter_plane_partitions
from truncated_tableaux.phi import phi_shifted, phi_shifted_inverse, phi_straight, phi_straight_inverse
from truncated_tableaux.shapes import rect_minus_staircase, shifted_staircase_minus_staircase

rng = random.Random(7)

n, k = 5, 1
fillings = list(iter_plane_partitions(shifted_staircase_minus_staircase(n, k), 3))
T = rng.choice(fillings)
print(f"{len(fillings)} plane partitions of shifted delta_{n}\\delta_{k} with entries <= 3; picked:")
for i, row in enumerate(T):
    print("  " + "   " * i + "  ".join(f"{v}" for v in row))

P = phi_shifted(T, n, k)
print(f"diagonals nest as outer {P.outer.parts} over inner {P.inner.parts}")
print("reverse tableau rows:", P.rows)
print(f"weight {sum(map(sum, T))} = {P.total} + {n - k} * {P.inner.size}")
assert phi_shifted_inverse(P, n, k) == T

n, m, k = 3, 4, 1
T = rng.choice(list(iter_plane_partitions(rect_minus_staircase(n, m, k), 2)))
P, Q = phi_straight(T, n, m, k)
print(f"\nstraight {n}^{m}\\delta_{k}: {T}")
print("  P:", P.rows, "inner", P.inner.parts)
print("  Q:", Q.rows)
assert phi_straight_inverse(P, Q, n, m, k) == T
print("both directions agree")

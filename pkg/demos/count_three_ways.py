"""Count standard fillings of the three truncated families three ways:
closed product, q -> 1 limit of the generating function, and brute force."""
from truncated_tableaux import formulas as F
from truncated_tableaux.oracle import count_syt_oracle
from truncated_tableaux.shapes import rect_minus_almost_square, rect_minus_staircase, shifted_staircase_minus_staircase

print("shifted staircase minus its corner box")
for n in range(3, 7):
    shape = shifted_staircase_minus_staircase(n, 1)
    brute = count_syt_oracle(shape, max_cells=30) if shape.size <= 20 else "-"
    print(f"  n={n}: product {F.count_staircase_minus_box(n)}, limit {F.count_staircase_minus_box_limit(n)}, brute {brute}")

print("rectangle minus staircase")
for n, m, k in [(3, 3, 1), (3, 5, 2), (4, 4, 1), (4, 5, 2)]:
    shape = rect_minus_staircase(n, m, k)
    print(
        f"  {shape.describe()}: product {F.count_rect_minus_staircase(n, m, k)}, "
        f"limit {F.count_rect_minus_staircase_limit(n, m, k)}, brute {count_syt_oracle(shape)}"
    )

print("rectangle minus almost square")
for n, m, k in [(3, 3, 2), (3, 5, 2), (4, 4, 2), (5, 5, 3)]:
    shape = rect_minus_almost_square(n, m, k)
    print(
        f"  {shape.describe()}: product {F.count_rect_minus_almost_square(n, m, k)}, "
        f"limit {F.count_rect_minus_almost_square_limit(n, m, k)}, brute {count_syt_oracle(shape)}"
    )

# far past brute-force range the closed forms stay exact
print("10^12 minus delta_4:", F.count_rect_minus_staircase(10, 12, 4))

"""Two exponents are plausible for t = q^s in the almost-square series.
Compare both against enumeration and show the counts each one implies."""
from truncated_tableaux import formulas as F
from truncated_tableaux.oracle import pp_series_oracle
from truncated_tableaux.qseries import count_from_gf
from truncated_tableaux.shapes import rect_minus_almost_square

ORDER = 12
for n, m, k in [(3, 3, 2), (4, 4, 2), (4, 5, 2), (5, 5, 3)]:
    oracle = pp_series_oracle(rect_minus_almost_square(n, m, k), ORDER)
    print(f"{n}^{m} minus almost-square {k}, oracle head {oracle.coeffs[:8]}")
    for variant in F.TExponent:
        s = F.almost_square_t_exponent(n, k, variant)
        try:
            series = F.gf_rect_minus_almost_square(n, m, k, ORDER, variant)
            count = count_from_gf(F.almost_square_rational(n, m, k, variant), n * m - k * k + 1)
        except Exception as exc:  # the wrong exponent can break integrality
            print(f"  {variant.value:>6} (s={s}): {type(exc).__name__}")
            continue
        verdict = "matches" if series == oracle else "differs"
        print(f"  {variant.value:>6} (s={s}): series {verdict}, implied count {count}")
    print(f"  product formula count {F.count_rect_minus_almost_square(n, m, k)}")

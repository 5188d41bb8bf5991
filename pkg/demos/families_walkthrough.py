"""Exponential and quasi-hyperbolic agents, finite and infinite horizons."""
from fractions import Fraction

from discountorder import Exponential, QuasiHyperbolic, is_more_patient, realize
from discountorder.patience import (
    exponential_infinite_collapse,
    exponential_patience_threshold,
    infinite_family_patience,
)

# A larger factor does not guarantee more patience at short horizons
A, B = Exponential("2/5"), Exponential("3/10")
v = is_more_patient(realize(A, 3), realize(B, 3))
print("Exp(2/5) over Exp(3/10), T=3:", v.holds, "fails at", v.failing_index)

# Close enough to 1 it does
for b in ("3/10", "1/2", "9/10"):
    for T in (3, 5, 8):
        a_bar = exponential_patience_threshold(b, T)
        print(f"b={b:>4} T={T}: a_bar ~ {float(a_bar):.6f}")

# With an unbounded horizon only identical factors survive
print("collapse index for (9/10, 1/2):", exponential_infinite_collapse("9/10", "1/2"))
for t in range(1, 6):
    a, b = Fraction(9, 10), Fraction(1, 2)
    print(t, float((b / a) ** (t - 1) * (1 - b) / (1 - a)))

print(infinite_family_patience(Exponential("9/10"), Exponential("1/2")).holds)
print(infinite_family_patience(QuasiHyperbolic("1/2", "1/2"), QuasiHyperbolic("1/2", "1/2")).holds)
# derived result: distinct quasi-hyperbolic parameters always fail eventually
qh = infinite_family_patience(QuasiHyperbolic("1/2", "9/10"), QuasiHyperbolic("1/2", "4/5"))
print(qh.holds, qh.failing_index)

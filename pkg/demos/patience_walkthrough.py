"""Comparing two agents: the three-period example where ratios mislead."""
from discountorder import DiscountSequence, PrizeSequence, decompose, is_more_patient, ratio_trace
from discountorder.patience import (
    gap_ratio_report,
    monotone_ratio_check,
    patience_counterexample,
    patience_gap,
    patience_ratios,
)

alpha = DiscountSequence(["1/2", "12/25", "91/250"])  # Alice
beta = DiscountSequence(["1", "2/3", "1/2"])          # Bob

# alpha_t / beta_t rises, so the monotone-ratio order says Alice waits better
print("ratios:", [str(a / b) for a, b in zip(alpha, beta)])
print("monotone ratio:", monotone_ratio_check(alpha, beta))

# but the gap test fails
v = is_more_patient(alpha, beta)
print("more patient:", v.holds, "failing index:", v.failing_index)
print({k: str(val) for k, val in v.diagnostics.items()})

rep = gap_ratio_report(alpha, beta)
print("threshold beta1/alpha1 =", rep.threshold, " adjacent inf =", rep.adjacent_inf)

# A concrete delay that Alice dislikes more than Bob does
x = PrizeSequence(["1", "3/2", "1"])
y = PrizeSequence(["1", "1", "3/2"])
ra, rb = patience_ratios(alpha, beta, x, y)
print("Alice", ra, "Bob", rb, "gap", patience_gap(alpha, beta, x, y), f"~ {float(patience_gap(alpha, beta, x, y)):.6f}")

# Along the deterioration chain Bob's value ratio beta.z / alpha.z moves up
print("trace:", [str(r) for r in ratio_trace(alpha, beta, decompose(x, y))])

# The library builds its own witness and checks it before returning
cx, cy = patience_counterexample(alpha, beta)
print("witness", [str(t) for t in cx], [str(t) for t in cy])

"""Dominance, superiority and the two lemmas behind them."""
from discountorder import PrizeSequence, WeightSequence, abel_sum, decompose, dominates, tighten, weighted_sum
from discountorder.dominance import partial_sums

# Two streams with the same total.  x pays earlier.
x = PrizeSequence(["3", "1", "0", "2"])
y = PrizeSequence(["1", "1", "2", "2"])
print("partial sums x:", [str(v) for v in partial_sums(x)])
print("partial sums y:", [str(v) for v in partial_sums(y)])
print("x dominates y:", dominates(x, y).holds)

# The other direction fails, and the verdict carries a step-weight witness
# (ones up to the failing period, zeros after) under which y beats x strictly.
v = dominates(y, x)
print("y dominates x:", v.holds, "fails at p =", v.failure_index)
w = v.witness_weights
print("witness", [str(t) for t in w], "->", weighted_sum(w, y), "<", weighted_sum(w, x))

# Any impatient weighting agrees with dominance.
for w in (WeightSequence([1, 1, 1, 1]), WeightSequence([1, "1/2", "1/4", "1/8"]), WeightSequence([1, 0, 0, 0])):
    print([str(t) for t in w], weighted_sum(w, x), ">=", weighted_sum(w, y))

# Summation by parts reproduces the inner product exactly
print("abel sum", abel_sum(x, y), "direct", sum(a * b for a, b in zip(x, y)))

# Tightening shaves x down to y's total without losing dominance
x_big = PrizeSequence(["4", "1", "0", "2"])
xt = tighten(x_big, y)
print("tighten", [str(t) for t in x_big], "->", [str(t) for t in xt])

# A dominating pair unwinds into binary deteriorations
chain = decompose(x, y)
for z, step in zip(chain.sequences(), chain.steps):
    print([str(t) for t in z], f"-- move {step.eta} from {step.t1} to {step.t2} -->")
print([str(t) for t in chain.end])

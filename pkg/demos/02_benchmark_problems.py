"""
The six symbolic-regression benchmarks
======================================

Each problem pairs a target function with a sampling domain.  Fitness
cases are drawn uniformly from the domain with a seeded generator, so a
case set can be regenerated exactly from its seed.
"""
from gp_parsimony import PROBLEM_ORDER, get_problem, sample_cases, target_value

for pid in PROBLEM_ORDER:
    p = get_problem(pid)
    print(f"{p.id:<20} {p.n_vars} var(s) on [{p.domain_low:g}, {p.domain_high:g}]  {p.name}")

print()

# Target functions evaluate exactly, with true (unprotected) arithmetic.
print("quartic(1) =", target_value(get_problem("quartic"), [1.0]))
print("cubic_constants(1) =", target_value(get_problem("cubic_constants"), [1.0]))
print("bivariate(2, 3) =", target_value(get_problem("bivariate"), [2.0, 3.0]))

# Sampling is deterministic per seed: same seed, same cases.
quartic = get_problem("quartic")
a = sample_cases(quartic, 5, seed=42)
b = sample_cases(quartic, 5, seed=42)
print("\nsame seed reproduces cases:", all(
    x.inputs == y.inputs and x.target == y.target
    for x, y in zip(a.cases, b.cases)
))

print("first three cases (seed 42):")
for case in a.cases[:3]:
    print(f"  x={case.inputs[0]:+.4f}  target={case.target:+.4f}")

c = sample_cases(quartic, 5, seed=43)
print("different seed differs:", any(
    x.inputs != y.inputs for x, y in zip(a.cases, c.cases)
))

# %% [markdown]
# # Initial coverage rates and the linear-profile optimum
#
# Closed-form rates `2 sqrt(A n / pi) v(n)` for the four velocity profiles,
# plus the best group size when speed drops linearly with n.  No simulation.

# %%
import math

import matplotlib.pyplot as plt
import numpy as np

from splitsim.analysis import best_integer_n, initial_rate, linear_zero_n, optimal_n_linear

A, V0, GAMMA = math.pi * 0.01, 0.005, 4e-6
ns = np.arange(1, 1300)

# %%
for kind in ("constant", "linear", "radius", "area"):
    rates = np.array([initial_rate(kind, int(n), A, V0, GAMMA) for n in ns])
    plt.loglog(ns, rates, label=kind)
plt.xlabel("n")
plt.ylabel("initial rate [area / step]")
plt.legend()
plt.savefig("initial_rates.svg")

# %% [markdown]
# The linear profile peaks where `a sqrt(n) - b n^1.5` does, at `n = (V0 + gamma) / (3 gamma)`.

# %%
n_star = optimal_n_linear(V0, GAMMA)
n_int = best_integer_n("linear", linear_zero_n(V0, GAMMA), A, V0, GAMMA)
print(f"continuous optimum {n_star:.3f}, integer scan {n_int}")

# %% [markdown]
# # No gradual motion
#
# Agents jump to uniform random positions every round.  Group size should not
# matter: the mean curves for n = 1 and n = 1000 overlap and both bend away
# from the ideal line `100 A / p^2` per round as revisits pile up.

# %%
import math

import matplotlib.pyplot as plt
import numpy as np

from splitsim.analysis import expected_teleport_coverage, ideal_teleport_increment
from splitsim.engine import SimConfig, run_teleport

A = math.pi * 0.01
rounds = 80

# %%
for n in (1, 10, 1000):
    cfg = SimConfig(n=n, m=2000, mode="teleport", max_steps=rounds)
    mean = np.mean([run_teleport(cfg, s).series.c for s in range(30)], axis=0)
    plt.plot(mean, label=f"n={n}")
k = np.arange(rounds + 1)
plt.plot(k, np.minimum(100, k * ideal_teleport_increment(A, 1.0)), "k--", label="ideal")
plt.plot(k, expected_teleport_coverage(k, A, 1.0), "k:", label="independent placement")
plt.xlabel("round")
plt.ylabel("coverage [%]")
plt.legend()
plt.savefig("teleport.svg")

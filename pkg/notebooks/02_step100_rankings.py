# %% [markdown]
# # Coverage after 100 steps
#
# Every profile and group size, collisions off, ten seeds each.  Takes about
# a minute.  The rankings should follow the closed-form rates: constant rises
# with n, linear peaks at n = 500 among the tested sizes, radius is flat,
# area falls.

# %%
import matplotlib.pyplot as plt
import numpy as np

from splitsim.engine import SimConfig, run
from splitsim.motion import VelocityProfile

N_VALUES = (1, 2, 10, 100, 500, 1000)
seeds = range(10)

# %%
c100 = {}
for kind in ("constant", "linear", "radius", "area"):
    c100[kind] = [
        np.mean([run(SimConfig(n=n, max_steps=100, profile=VelocityProfile(kind)), s).final_coverage for s in seeds])
        for n in N_VALUES
    ]
    print(kind, np.round(c100[kind], 2))

# %%
for kind, vals in c100.items():
    plt.semilogx(N_VALUES, vals, "o-", label=kind)
plt.xlabel("n")
plt.ylabel("c(100) [%]")
plt.legend()
plt.savefig("step100.svg")

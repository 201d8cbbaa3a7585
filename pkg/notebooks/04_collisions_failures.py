# %% [markdown]
# # Collisions and failures
#
# Collision slowdown: speed falls with the summed lens overlap, never below
# the residual fraction.  Failures: each step an agent stops for good with
# probability `beta (1 - n^-alpha)`.  Both runs use the constant profile.
# Roughly five minutes in total.

# %%
import matplotlib.pyplot as plt
import numpy as np

from splitsim.dynamics import CollisionParams, FailureParams
from splitsim.engine import SimConfig, run

steps = 5000
seeds = range(5)


def mean_curve(**kw):
    curves = [run(SimConfig(max_steps=steps, **kw), s).series.c for s in seeds]
    full = [np.pad(c, (0, steps + 1 - len(c)), mode="edge") for c in curves]
    return np.mean(full, axis=0)


# %%
fig, ax = plt.subplots()
for n in (2, 100, 1000):
    ax.plot(mean_curve(n=n), label=f"n={n} off")
    ax.plot(mean_curve(n=n, collisions=CollisionParams(True, 0.05)), "--", label=f"n={n} on")
ax.set_xlabel("step")
ax.set_ylabel("coverage [%]")
ax.legend()
fig.savefig("collisions.svg")

# %%
fig, axes = plt.subplots(1, 2, sharey=True, figsize=(9, 3.5))
single = mean_curve(n=1)
for ax, alpha in zip(axes, (0.01, 0.1)):
    ax.plot(single, "k", label="n=1")
    for n in (10, 100, 1000):
        ax.plot(mean_curve(n=n, failures=FailureParams(True, 0.1, alpha)), label=f"n={n}")
    ax.set_title(f"failure alpha = {alpha}")
    ax.set_xlabel("step")
axes[0].set_ylabel("coverage [%]")
axes[1].legend()
fig.savefig("failures.svg")

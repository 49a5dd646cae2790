# %% [markdown]
# # How the error scales with array and grid size
#
# Sweep the array size N x N and the oversampling factor M/N, and record the
# normalized TSE of the closed-form design and of the direct-designation
# surrogate. The grid factor matters little; the number of units matters a lot.

# %%
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from risbeam import design, design_baseline, reference_inputs, sample_to_grid

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

sizes = [8, 16, 32, 64]
factors = [2, 4]
results = {}
for f in factors:
    for n in sizes:
        inp = reference_inputs(n, f)
        grid = sample_to_grid(inp.pattern, inp.grid, inp.ris)
        prop = design(inp.pattern, inp.ris, inp.grid, inp.incidents)[1].normalized_tse
        base = design_baseline(grid, inp.ris, inp.incidents)[1].normalized_tse
        results[(n, f)] = (prop, base)
        print(f"N={n:3d}^2  M={f}N  proposed {prop:.5f}  baseline {base:.5f}")

# %%
fig, ax = plt.subplots(figsize=(6, 4))
for f, style in zip(factors, ["-", "--"]):
    ax.semilogy([n * n for n in sizes], [results[(n, f)][0] for n in sizes], "o" + style, label=f"proposed, M={f}N")
    ax.semilogy([n * n for n in sizes], [results[(n, f)][1] for n in sizes], "s" + style, label=f"baseline, M={f}N")
ax.set(xscale="log", xlabel="number of units N", ylabel="normalized TSE")
ax.legend()
fig.tight_layout()
fig.savefig(OUT / "02_error_vs_size.png", dpi=110)
print("wrote", OUT / "02_error_vs_size.png")

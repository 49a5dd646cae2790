# %% [markdown]
# # Living with a few bits
#
# Real reflection units offer a handful of amplitude and phase states. Quantize
# the designed coefficients with b1 amplitude bits and b2 phase bits and look at
# the elevation pi/4 cut through both beam spots.

# %%
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from risbeam import QuantizationConfig, design, reference_inputs, quantize
from risbeam.evaluation import cross_section, peak_near

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

inp = reference_inputs(32, 4)
v, _ = design(inp.pattern, inp.ris, inp.grid, inp.incidents)

fig, ax = plt.subplots(figsize=(8, 4))
for bits in [None, (1, 1), (2, 2), (3, 3)]:
    coeffs = v if bits is None else quantize(v, QuantizationConfig(*bits))
    azi, mag = cross_section(coeffs, inp.incidents, inp.ris, math.pi / 4)
    label = "unquantized" if bits is None else f"b1={bits[0]}, b2={bits[1]}"
    ratio = peak_near(azi, mag, math.pi / 2, math.pi / 6) / peak_near(azi, mag, 3 * math.pi / 2, math.pi / 6)
    print(f"{label:12s} spot level ratio {ratio:.3f} (target 2)")
    ax.plot(azi, mag, label=label)
ax.set(xlabel="azimuth [rad]", ylabel="|g|", title="cut at elevation pi/4")
ax.legend()
fig.tight_layout()
fig.savefig(OUT / "03_quantization.png", dpi=110)
print("wrote", OUT / "03_quantization.png")

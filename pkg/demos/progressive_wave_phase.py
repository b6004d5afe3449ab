# A progressive wave needs complex amplitudes, and complex values need a
# second color channel.
#
# The superposition (a[1] + i a[-1]) vac has a genuinely complex
# wavefunction.  The diverging map only shows Re(psi) and hides half the
# structure; the phase map colors each line by arg(psi) (hue) and |psi|
# (saturation), which makes the traveling character visible as a hue
# rotation across the chain.

import numpy as np

from qchain import ChainParams, RenderSpec, build_state, chain_window
from qchain import real_mode_basis, render_parallel_axes, sample_chain_state

params = ChainParams(n_sites=15)
basis = real_mode_basis(params)
state, label = build_state("(a[1] + i a[-1]) vac", params)

window = chain_window(basis)
for color_mode, outfile in [
    ("diverging_real", "progressive_real.svg"),
    ("phase_hue", "progressive_phase.svg"),
]:
    spec = RenderSpec(sample_count=6000, window=window, seed=0, color_mode=color_mode)
    batch = sample_chain_state(state, basis, spec, state_label=label)
    with open(outfile, "w") as fh:
        fh.write(render_parallel_axes(batch))
    print(f"wrote {outfile}")

vals = sample_chain_state(
    state, basis, RenderSpec(sample_count=2000, window=window, seed=1), state_label=label
).values
print(f"typical |Im psi| / |psi|: {np.median(np.abs(vals.imag) / np.abs(vals)):.3f}")

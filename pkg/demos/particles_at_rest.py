# One and two "particles at rest": quanta in the k = 0 mode.
#
# Exciting the zero-wave-number mode once makes psi proportional to the
# center-of-mass coordinate: configurations displaced up as a whole turn
# red, displaced down turn blue, and the ground-state band at q = 0 fades
# out.  A second quantum flips the center back to negative (H_2 < 0 at 0),
# giving a blue core inside red flanks: one new nodal surface per quantum.

import numpy as np

from qchain import ChainParams, RenderSpec, build_state, chain_window, evaluate
from qchain import real_mode_basis, render_parallel_axes, sample_chain_state

params = ChainParams(n_sites=15)
basis = real_mode_basis(params)
window = chain_window(basis)

for src, outfile in [
    ("a[0] vac", "one_particle_at_rest.svg"),
    ("a[0] a[0] vac", "two_particles_at_rest.svg"),
]:
    state, label = build_state(src, params)
    spec = RenderSpec(sample_count=6000, window=window, seed=0)
    batch = sample_chain_state(state, basis, spec, state_label=label)
    with open(outfile, "w") as fh:
        fh.write(render_parallel_axes(batch))
    # along the uniform-displacement line q = c * (1 .. 1)
    cs = np.array([-1.0, -0.2, 0.0, 0.2, 1.0])
    vals = [evaluate(state, basis, np.full(15, c)).real for c in cs]
    row = "  ".join(f"{v:+.4f}" for v in vals)
    print(f"{label:15s} psi(c*1) at c = -1, -0.2, 0, 0.2, 1:  {row}")
    print(f"  wrote {outfile}")

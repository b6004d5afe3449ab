"""SVG renderers: parallel-axes polyline charts and 2D scatter charts.

Every sample becomes one chart element colored by its wavefunction value.
The diverging map sends zero to the background white (near-nodal samples
vanish into the chart), the largest positive real part to a deep warm red
and the most negative to a deep cool blue, linearly in between; no
quantitative color legend is drawn.  The phase-hue map encodes the complex
argument as hue and the relative magnitude as saturation, for states whose
wavefunction is not real.

Elements are emitted in ascending |psi| order (ties broken by sample index),
so the most significant samples are drawn last and end up on top.  The
writer is plain deterministic text: fixed float formats, no timestamps, and
a metadata block recording the tool version, generator id, seed, and draw
parameters, so identical inputs give byte-identical documents.
"""

from __future__ import annotations

import colorsys
from xml.sax.saxutils import escape

import numpy as np

from .sampling import SampleBatch

__all__ = [
    "diverging_color",
    "phase_color",
    "draw_order",
    "render_parallel_axes",
    "render_scatter2d",
]

TOOL_ID = "qchain 0.1.0"

POSITIVE_RGB = (178, 24, 43)  # deep red
NEGATIVE_RGB = (33, 102, 172)  # deep blue
BACKGROUND_RGB = (255, 255, 255)

AXIS_COLOR = "#c8c8c8"
LABEL_COLOR = "#404040"

# plot-area margins, pixels
_LEFT, _RIGHT, _TOP, _BOTTOM = 58, 16, 34, 40


def _hex(rgb) -> str:
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def _mix_with_background(rgb, strength: float):
    """Linear blend from background white (strength 0) to rgb (strength 1)."""
    return tuple(
        int(round(b + strength * (c - b))) for b, c in zip(BACKGROUND_RGB, rgb)
    )


def diverging_color(value: float, vmax: float) -> str:
    """Two-color diverging map: white at zero, red at +vmax, blue at -vmax."""
    if vmax <= 0:
        return _hex(BACKGROUND_RGB)
    t = min(1.0, max(-1.0, value / vmax))
    target = POSITIVE_RGB if t >= 0 else NEGATIVE_RGB
    return _hex(_mix_with_background(target, abs(t)))


def phase_color(value: complex, vmax: float) -> str:
    """Complex map: hue encodes the argument, saturation the relative magnitude."""
    if vmax <= 0:
        return _hex(BACKGROUND_RGB)
    strength = min(1.0, abs(value) / vmax)
    hue = (np.angle(value) / (2.0 * np.pi)) % 1.0
    full = tuple(int(round(255 * c)) for c in colorsys.hsv_to_rgb(hue, 1.0, 1.0))
    return _hex(_mix_with_background(full, strength))


def draw_order(values) -> np.ndarray:
    """Sample indices sorted by ascending |psi|, ties broken by index."""
    return np.argsort(np.abs(np.asarray(values)), kind="stable")


def _colors(batch: SampleBatch):
    values = batch.values
    if batch.spec.color_mode == "phase_hue":
        vmax = float(np.max(np.abs(values)))
        return [phase_color(v, vmax) for v in values]
    vmax = float(np.max(np.abs(values.real)))
    return [diverging_color(float(v.real), vmax) for v in values.real]


def _document_start(batch: SampleBatch, state_label: str):
    spec = batch.spec
    meta = (
        f"tool={TOOL_ID}; rng=numpy-PCG64; seed={spec.seed}; "
        f"samples={spec.sample_count}; window={spec.window:.17g}; "
        f"n_dims={batch.n_dims}; mode={spec.mode}; color_mode={spec.color_mode}; "
        f"state={state_label}"
    )
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" '
        f'height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">',
        f"<metadata>{escape(meta)}</metadata>",
        f'<rect width="{spec.width}" height="{spec.height}" fill="{_hex(BACKGROUND_RGB)}"/>',
    ]


def _check_batch(batch: SampleBatch):
    if batch.points.shape[0] == 0:
        raise ValueError("cannot render an empty batch")
    if not np.all(np.isfinite(batch.points)) or not np.all(np.isfinite(batch.values)):
        raise ValueError("batch contains non-finite coordinates or values")


def render_parallel_axes(batch: SampleBatch, state_label: str = "") -> str:
    """Parallel-axes chart: one polyline per sample across N site axes.

    The x axis is the site index 1..N, the y axis the coordinate value over
    [-window, window].  Returns the SVG document as a string.
    """
    _check_batch(batch)
    spec = batch.spec
    n = batch.n_dims
    label = state_label or batch.state_label

    plot_w = spec.width - _LEFT - _RIGHT
    plot_h = spec.height - _TOP - _BOTTOM
    if n > 1:
        xs = _LEFT + plot_w * np.arange(n) / (n - 1)
    else:
        xs = np.array([_LEFT + plot_w / 2.0])
    win = spec.window

    def y_pix(q):
        return _TOP + (win - q) * plot_h / (2.0 * win)

    parts = _document_start(batch, label)
    # axis furniture under the data
    zero_y = y_pix(0.0)
    parts.append(
        f'<line x1="{_LEFT}" y1="{zero_y:.2f}" x2="{_LEFT + plot_w}" y2="{zero_y:.2f}" '
        f'stroke="{AXIS_COLOR}" stroke-width="1" stroke-dasharray="4 3"/>'
    )
    label_step = max(1, int(np.ceil(n / 30)))
    for j in range(n):
        x = xs[j]
        parts.append(
            f'<line x1="{x:.2f}" y1="{_TOP}" x2="{x:.2f}" y2="{_TOP + plot_h}" '
            f'stroke="{AXIS_COLOR}" stroke-width="1"/>'
        )
        if j % label_step == 0:
            parts.append(
                f'<text x="{x:.2f}" y="{_TOP + plot_h + 16}" font-size="11" '
                f'fill="{LABEL_COLOR}" text-anchor="middle">{j + 1}</text>'
            )
    for q, anchor_y in ((win, _TOP + 4), (0.0, zero_y + 4), (-win, _TOP + plot_h + 4)):
        parts.append(
            f'<text x="{_LEFT - 8}" y="{anchor_y:.2f}" font-size="11" '
            f'fill="{LABEL_COLOR}" text-anchor="end">{q:.3g}</text>'
        )
    parts.append(
        f'<text x="{_LEFT + plot_w}" y="{_TOP + plot_h + 32}" font-size="12" '
        f'fill="{LABEL_COLOR}" text-anchor="end">site n</text>'
    )
    parts.append(
        f'<text x="{_LEFT - 40}" y="{_TOP - 12}" font-size="12" fill="{LABEL_COLOR}">q</text>'
    )
    if label:
        parts.append(
            f'<text x="{_LEFT}" y="20" font-size="13" fill="#000000">{escape(label)}</text>'
        )

    colors = _colors(batch)
    ys = _TOP + (win - batch.points) * plot_h / (2.0 * win)  # (M, N) pixel rows
    for idx in draw_order(batch.values):
        row = ys[idx]
        pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in zip(xs, row))
        parts.append(
            f'<polyline id="s{idx}" points="{pts}" fill="none" '
            f'stroke="{colors[idx]}" stroke-width="1"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_scatter2d(batch: SampleBatch) -> str:
    """Scatter chart of a two-dimensional batch: one dot per sample at (q1, q2)."""
    _check_batch(batch)
    if batch.n_dims != 2:
        raise ValueError(f"scatter rendering requires 2 dimensions, got {batch.n_dims}")
    spec = batch.spec

    plot_w = spec.width - _LEFT - _RIGHT
    plot_h = spec.height - _TOP - _BOTTOM
    win = spec.window

    def x_pix(q):
        return _LEFT + (q + win) * plot_w / (2.0 * win)

    def y_pix(q):
        return _TOP + (win - q) * plot_h / (2.0 * win)

    parts = _document_start(batch, batch.state_label)
    parts.append(
        f'<rect x="{_LEFT}" y="{_TOP}" width="{plot_w}" height="{plot_h}" '
        f'fill="none" stroke="{AXIS_COLOR}" stroke-width="1"/>'
    )
    for q in (-win, 0.0, win):
        parts.append(
            f'<text x="{x_pix(q):.2f}" y="{_TOP + plot_h + 16}" font-size="11" '
            f'fill="{LABEL_COLOR}" text-anchor="middle">{q:.3g}</text>'
        )
        parts.append(
            f'<text x="{_LEFT - 8}" y="{y_pix(q) + 4:.2f}" font-size="11" '
            f'fill="{LABEL_COLOR}" text-anchor="end">{q:.3g}</text>'
        )
    parts.append(
        f'<text x="{_LEFT + plot_w}" y="{_TOP + plot_h + 32}" font-size="12" '
        f'fill="{LABEL_COLOR}" text-anchor="end">q1</text>'
    )
    parts.append(
        f'<text x="{_LEFT - 40}" y="{_TOP - 12}" font-size="12" fill="{LABEL_COLOR}">q2</text>'
    )
    if batch.state_label:
        parts.append(
            f'<text x="{_LEFT}" y="20" font-size="13" fill="#000000">'
            f"{escape(batch.state_label)}</text>"
        )

    colors = _colors(batch)
    px = _LEFT + (batch.points[:, 0] + win) * plot_w / (2.0 * win)
    py = _TOP + (win - batch.points[:, 1]) * plot_h / (2.0 * win)
    for idx in draw_order(batch.values):
        parts.append(
            f'<circle id="s{idx}" cx="{px[idx]:.2f}" cy="{py[idx]:.2f}" r="2" '
            f'fill="{colors[idx]}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

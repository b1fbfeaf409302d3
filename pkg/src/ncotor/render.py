"""Deterministic renderers: SVG and TikZ polygon pictures, DOT quiver export.

All output is plain text with fixed number formatting and rank-order
iteration, so repeated runs produce byte-identical files.
"""

from __future__ import annotations

import math

from .closure import frame, non_crossing
from .errors import InputError
from .polygon import DiagSet, PolygonSpec
from .quiver import Quiver

_SIZE = 440.0
_CENTER = _SIZE / 2
_RADIUS = 190.0
_LABEL_RADIUS = 207.0

HIGHLIGHTS = ("frame", "nc")


def vertex_xy(spec: PolygonSpec, label: int, radius: float = _RADIUS) -> tuple[float, float]:
    """Position of a vertex on the circle: label 1 at the top, clockwise."""
    phi = (label - 1) * 2.0 * math.pi / spec.N
    return (_CENTER + radius * math.sin(phi), _CENTER - radius * math.cos(phi))


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render_svg(members: DiagSet, highlight: str | None = None) -> str:
    """SVG picture of a configuration: boundary, labels, member chords.

    highlight="frame" paints the frame members red; highlight="nc" adds the
    non-crossing complement as dashed blue chords.
    """
    if highlight is not None and highlight not in HIGHLIGHTS:
        raise InputError(f"highlight must be one of {HIGHLIGHTS}, got {highlight!r}")
    spec = members.spec
    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_SIZE:.0f} {_SIZE:.0f}">'
    )
    out.append(
        "<style>.edge{stroke:#999;stroke-width:1;fill:none}"
        ".member{stroke:#222;stroke-width:2}"
        ".frame{stroke:#c22;stroke-width:2.6}"
        ".nc{stroke:#26c;stroke-width:1.6;stroke-dasharray:6 4}"
        ".vertex{fill:#222}"
        ".label{font:14px sans-serif;fill:#222;text-anchor:middle;dominant-baseline:central}"
        "</style>"
    )
    ring = " ".join(
        ("M" if k == 1 else "L") + f"{_fmt(vertex_xy(spec, k)[0])},{_fmt(vertex_xy(spec, k)[1])}"
        for k in range(1, spec.N + 1)
    )
    out.append(f'<path class="edge" d="{ring} Z"/>')

    frame_set = frame(members) if highlight == "frame" else DiagSet.empty(spec)
    for d in members:
        (x1, y1), (x2, y2) = vertex_xy(spec, d.a), vertex_xy(spec, d.b)
        cls = "frame" if d in frame_set else "member"
        out.append(
            f'<line class="{cls}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}"><title>{d}</title></line>'
        )
    if highlight == "nc":
        for d in non_crossing(members):
            (x1, y1), (x2, y2) = vertex_xy(spec, d.a), vertex_xy(spec, d.b)
            out.append(
                f'<line class="nc" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
                f'x2="{_fmt(x2)}" y2="{_fmt(y2)}"><title>{d}</title></line>'
            )

    for k in range(1, spec.N + 1):
        x, y = vertex_xy(spec, k)
        lx, ly = vertex_xy(spec, k, _LABEL_RADIUS)
        out.append(f'<circle class="vertex" cx="{_fmt(x)}" cy="{_fmt(y)}" r="3"/>')
        out.append(f'<text class="label" x="{_fmt(lx)}" y="{_fmt(ly)}">{k}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_tikz(members: DiagSet, highlight: str | None = None) -> str:
    """TikZ picture of a configuration, unit-circle coordinates."""
    if highlight is not None and highlight not in HIGHLIGHTS:
        raise InputError(f"highlight must be one of {HIGHLIGHTS}, got {highlight!r}")
    spec = members.spec
    out = [r"\begin{tikzpicture}[scale=2.2]"]

    def coords(label: int) -> str:
        phi = (label - 1) * 2.0 * math.pi / spec.N
        return f"({math.sin(phi):.4f},{math.cos(phi):.4f})"

    ring = " -- ".join(coords(k) for k in range(1, spec.N + 1))
    out.append(rf"  \draw[gray] {ring} -- cycle;")
    for k in range(1, spec.N + 1):
        out.append(rf"  \node at {coords(k)} [circle,fill,inner sep=1pt,label={{{k}}}] {{}};")
    frame_set = frame(members) if highlight == "frame" else DiagSet.empty(spec)
    for d in members:
        style = "red,thick" if d in frame_set else "thick"
        out.append(rf"  \draw[{style}] {coords(d.a)} -- {coords(d.b)};")
    if highlight == "nc":
        for d in non_crossing(members):
            out.append(rf"  \draw[blue,dashed] {coords(d.a)} -- {coords(d.b)};")
    out.append(r"\end{tikzpicture}")
    return "\n".join(out) + "\n"


def quiver_dot(q: Quiver) -> str:
    """Graphviz digraph of the translation quiver.

    Node positions come from the mesh coordinates (column, row); tau edges
    are dashed and non-constraining.
    """
    out = ["digraph quiver {"]
    out.append('  graph [rankdir=LR];')
    out.append('  node [shape=plaintext, fontsize=12];')
    for v in q.vertices:
        x = v.column / max(1, q.spec.n)
        out.append(
            f'  "{v.diagonal}" [pos="{x:.1f},{float(v.row):.1f}!"];'
        )
    for (s, t) in q.arrows:
        out.append(f'  "{s}" -> "{t}";')
    for (s, t) in q.tau_edges:
        out.append(f'  "{s}" -> "{t}" [style=dashed, color=gray, constraint=false];')
    out.append("}")
    return "\n".join(out) + "\n"

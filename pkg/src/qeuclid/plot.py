"""SVG and TikZ drawings of certificates.

Figures are illustrations only.  Exact coordinates are converted to floats
when mapped onto the canvas and arcs are drawn as sampled polylines.
"""

from __future__ import annotations

import math
from typing import Dict, List, Sequence, Tuple

from .covering import Certificate, item_label, region_edges
from .hyperbola import BranchSpec

SIZE = 400.0
MARGIN = 40.0
SAMPLES = 48

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2",
           "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939", "#843c39"]


def _branch_y(B: BranchSpec, a: float) -> float:
    r = ((a + B.u) ** 2 - B.epsilon * float(B.M)) / B.m
    return -B.v + B.theta * math.sqrt(max(r, 0.0))


def _polyline(cert: Certificate, region) -> List[Tuple[float, float]]:
    pts: List[Tuple[float, float]] = []
    for e in region_edges(cert, region):
        x0, y0 = float(e.start.x), float(e.start.y)
        x1, y1 = float(e.end.x), float(e.end.y)
        if isinstance(e.curve, BranchSpec) and x0 != x1:
            for k in range(SAMPLES):
                a = x0 + (x1 - x0) * k / SAMPLES
                pts.append((a, y0 if k == 0 else _branch_y(e.curve, a)))
        else:
            pts.append((x0, y0))
    return pts


def _colors(cert: Certificate) -> Dict[Tuple[int, int], str]:
    return {pair: PALETTE[i % len(PALETTE)] for i, pair in enumerate(cert.pairs)}


def _to_canvas(x: float, y: float) -> Tuple[float, float]:
    # S0 is [0,1/2]^2; b grows upwards
    return MARGIN + 2 * SIZE * x, MARGIN + SIZE - 2 * SIZE * y


def render_svg(cert: Certificate) -> str:
    w = SIZE + 2 * MARGIN
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0f}" height="{w:.0f}" '
           f'viewBox="0 0 {w:.0f} {w:.0f}">',
           f'<title>Covering of S0 for m={cert.m}</title>',
           f'<rect x="{MARGIN}" y="{MARGIN}" width="{SIZE}" height="{SIZE}" fill="white" stroke="black"/>']
    colors = _colors(cert)
    for region in cert.regions:
        pts = " ".join("{:.2f},{:.2f}".format(*_to_canvas(x, y)) for x, y in _polyline(cert, region))
        c = colors.get(region.owner, "#999999")
        out.append(f'<polygon class="region" data-owner="{region.owner[0]},{region.owner[1]}" points="{pts}" '
                   f'fill="{c}" fill-opacity="0.25" stroke="{c}" stroke-width="1.5"/>')
    single_crit = sum(q.is_critical for q in cert.points.values()) == 1
    for p in cert.points.values():
        cx, cy = _to_canvas(float(p.x), float(p.y))
        name = "Pc" if p.is_critical and single_crit else item_label(p.label)
        out.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="3" fill="black"/>')
        out.append(f'<text x="{cx + 4:.2f}" y="{cy - 4:.2f}" font-size="11" font-family="sans-serif">{name}</text>')
    for i, (pair, c) in enumerate(colors.items()):
        x = MARGIN + i * (SIZE / max(len(colors), 1))
        out.append(f'<text x="{x:.1f}" y="{MARGIN / 2:.1f}" font-size="10" font-family="sans-serif" fill="{c}">'
                   f'({pair[0]},{pair[1]})</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_tikz(cert: Certificate, standalone: bool = True) -> str:
    scale = 10.0  # 1/2 maps to 5cm
    lines = []
    if standalone:
        lines += [r"\documentclass[tikz]{standalone}", r"\begin{document}"]
    lines.append(r"\begin{tikzpicture}")
    colors = _colors(cert)
    for pair, c in colors.items():
        lines.append(r"\definecolor{pair%s}{HTML}{%s}" % (_tikz_name(pair), c.lstrip("#").upper()))
    lines.append(r"\draw (0,0) rectangle (%.1f,%.1f);" % (scale / 2, scale / 2))
    for region in cert.regions:
        pts = " -- ".join("(%.4f,%.4f)" % (scale * x, scale * y) for x, y in _polyline(cert, region))
        name = "pair" + _tikz_name(region.owner)
        lines.append(r"\filldraw[draw=%s, fill=%s, fill opacity=0.25] %s -- cycle;" % (name, name, pts))
    single_crit = sum(q.is_critical for q in cert.points.values()) == 1
    for p in cert.points.values():
        lab = "P_c" if p.is_critical and single_crit else "P_{%s}" % p.label
        lines.append(r"\fill (%.4f,%.4f) circle (1pt) node[above right] {\tiny $%s$};"
                     % (scale * float(p.x), scale * float(p.y), lab))
    lines.append(r"\end{tikzpicture}")
    if standalone:
        lines.append(r"\end{document}")
    return "\n".join(lines) + "\n"


def _tikz_name(pair: Sequence[int]) -> str:
    return "".join(("m" if k < 0 else "p") + str(abs(k)) for k in pair)

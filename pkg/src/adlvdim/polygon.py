"""Pictures of the mu-polygon, the nu-line and the lattice points counted by d(b, mu)."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .semimodule import SlopeDatum, check_coweight, lattice_points


def _heights(mu: Sequence[int]) -> list:
    out = [0]
    for v in mu:
        out.append(out[-1] + v)
    return out


def ascii_picture(slope: SlopeDatum, mu: Sequence[int]) -> str:
    """One character per integer point (x, y), 0 <= x <= h, 0 <= y <= m.

    ``*`` counted point, ``o`` on the mu-polygon, ``.`` anything else.  The
    nu-line only meets the grid at its end points (m and h are coprime), so its
    heights are listed below the picture.  The last line is ``d = <count>``.
    """
    mu = check_coweight(slope, mu)
    m, h = slope.m, slope.h
    pts = set(lattice_points(slope, mu))
    heights = _heights(mu)
    lines = []
    for y in range(m, -1, -1):
        row = []
        for x in range(h + 1):
            if (x, y) in pts:
                row.append("*")
            elif heights[x] == y:
                row.append("o")
            else:
                row.append(".")
        lines.append(f"{y:>3} " + " ".join(row))
    lines.append("    " + " ".join(str(x % 10) for x in range(h + 1)))
    nu = ", ".join(f"{float(Fraction(x * m, h)):g}" for x in range(1, h))
    lines.append(f"mu = {tuple(mu)}, nu-line heights at x = 1..{h - 1}: {nu}")
    lines.append("legend: * counted point, o mu-polygon")
    lines.append(f"d = {len(pts)}")
    return "\n".join(lines) + "\n"


def svg_picture(slope: SlopeDatum, mu: Sequence[int], unit: int = 40) -> str:
    """Self-contained SVG of the same picture."""
    mu = check_coweight(slope, mu)
    m, h = slope.m, slope.h
    pad = unit
    width, height = h * unit + 2 * pad, m * unit + 2 * pad + unit

    def X(x):
        return pad + x * unit

    def Y(y):
        return pad + (m - y) * unit

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for x in range(h + 1):
        for y in range(m + 1):
            parts.append(f'<circle cx="{X(x)}" cy="{Y(y)}" r="1.5" fill="#bbb"/>')
    mu_pts = " ".join(f"{X(x)},{Y(y)}" for x, y in enumerate(_heights(mu)))
    parts.append(f'<polyline points="{mu_pts}" fill="none" stroke="#1f5fbf" stroke-width="2"/>')
    parts.append(
        f'<line x1="{X(0)}" y1="{Y(0)}" x2="{X(h)}" y2="{Y(m)}" stroke="#c0392b" '
        'stroke-width="2" stroke-dasharray="6,4"/>'
    )
    pts = lattice_points(slope, mu)
    for x, y in pts:
        parts.append(f'<circle cx="{X(x)}" cy="{Y(y)}" r="5" fill="black"/>')
    parts.append(
        f'<text x="{pad}" y="{height - unit // 2}" font-family="monospace" '
        f'font-size="{unit // 2}">d = {len(pts)}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

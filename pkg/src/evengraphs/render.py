"""DOT export of the tree view and a radial SVG of the embedded graph."""

from __future__ import annotations

import math
from typing import Dict, Tuple

from .symmetry import is_symmetric, roots
from .tree import PlaneTree, as_tree


def _label(t: PlaneTree, v: int, w: int) -> str:
    a, b = t.edge_faces(v, w)
    J = t.frame.subdominant
    return ",".join(str(x) for x in sorted({a, b} - J))


def to_dot(g) -> str:
    t = as_tree(g).canonical()
    f = t.frame
    J = f.subdominant
    out = [
        "graph standard {",
        f'  label="n={f.n} J={{{",".join(map(str, sorted(J)))}}}";',
        "  node [shape=circle, fontsize=10];",
    ]
    for v in t.vertices():
        out.append(f'  v{v} [label="{v}"];')
    for v, w in sorted(t.edges()):
        style = ", penwidth=2" if t.multiplicity(v, w) == 2 else ""
        out.append(f'  v{v} -- v{w} [label="{_label(t, v, w)}"{style}];')
    for k in range(f.n):
        kind = "subdominant" if k in J else "dominant"
        out.append(f'  r{k} [shape=plaintext, label="ray {k}: S{k} {kind}"];')
        out.append(f"  v{t.ray_owner(k)} -- r{k} [style=dashed];")
    out.append("}")
    return "\n".join(out) + "\n"


def _layout(t: PlaneTree) -> Dict[int, Tuple[float, float]]:
    n = t.n
    centre = roots(t) if is_symmetric(t) else (t.ray_owner(0),)
    # each vertex sits at the mean direction of the rays beyond it
    depth = {c: 0 for c in centre}
    order = list(centre)
    parent = {c: None for c in centre}
    for v in order:
        for w in t.neighbors(v):
            if w not in depth:
                depth[w] = depth[v] + 1
                parent[w] = v
                order.append(w)
    below: Dict[int, list] = {v: [] for v in t.vertices()}
    for v in reversed(order):
        below[v].extend(~x for x in t.rot[v] if x < 0)
        if parent[v] is not None:
            below[parent[v]].extend(below[v])
    pos = {}
    for v in order:
        if depth[v] == 0 and len(centre) == 1:
            pos[v] = (0.0, 0.0)
            continue
        vx = sum(math.cos(2 * math.pi * (k - 0.5) / n) for k in below[v])
        vy = sum(math.sin(2 * math.pi * (k - 0.5) / n) for k in below[v])
        norm = math.hypot(vx, vy) or 1.0
        r = 60.0 * depth[v] + (30.0 if len(centre) == 2 else 0.0)
        pos[v] = (r * vx / norm, r * vy / norm)
    return pos


def to_svg(g, size: int = 480) -> str:
    t = as_tree(g).canonical()
    f = t.frame
    pos = _layout(t)
    reach = max([math.hypot(*p) for p in pos.values()] + [0.0]) + 80.0
    scale = (size / 2 - 20) / reach
    c = size / 2

    def xy(p):
        return c + scale * p[0], c - scale * p[1]

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    R = reach * scale
    for k in range(f.n):
        a = 2 * math.pi * k / f.n
        lx, ly = c + 0.93 * R * math.cos(a), c - 0.93 * R * math.sin(a)
        fill = "#999" if k in f.subdominant else "#000"
        out.append(f'<text x="{lx:.1f}" y="{ly:.1f}" font-size="11" fill="{fill}" text-anchor="middle">S{k}</text>')
    for v, w in sorted(t.edges()):
        (x1, y1), (x2, y2) = xy(pos[v]), xy(pos[w])
        width = 3 if t.multiplicity(v, w) == 2 else 1.5
        out.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" stroke="black" stroke-width="{width}"/>')
    for k in range(f.n):
        v = t.ray_owner(k)
        a = 2 * math.pi * (k - 0.5) / f.n
        x1, y1 = xy(pos[v])
        x2, y2 = c + 0.8 * R * math.cos(a), c - 0.8 * R * math.sin(a)
        out.append(
            f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" stroke="#555" stroke-dasharray="4 3"/>'
        )
    for v in t.vertices():
        x, y = xy(pos[v])
        out.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="5" fill="black"><title>vertex {v}</title></circle>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

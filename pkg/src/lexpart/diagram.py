"""Splitting-type pictures of canonised classes, as ASCII art or DOT.

The root (least split) is drawn at the bottom.  A copy of w* grows a spine
up and to the left with one leaf to the right at each node; a copy of w is
the mirror image; a copy of zeta joins the two at its root.
"""

from __future__ import annotations

from .canonise import canonise_family
from .families import Chain, RepFamily, ZetaClass, cc_enumerate

__all__ = ["render_ascii", "render_dot", "render"]

NODES = 3


class _Canvas:
    def __init__(self):
        self.cells: dict = {}

    def put(self, x, y, ch):
        self.cells[(x, y)] = ch

    def text(self, x, y, s, leftward=False):
        start = x - len(s) + 1 if leftward else x
        for i, ch in enumerate(s):
            self.put(start + i, y, ch)

    def lines(self) -> list[str]:
        xs = [x for x, _ in self.cells]
        ys = [y for _, y in self.cells]
        out = []
        for y in range(max(ys), min(ys) - 1, -1):
            row = "".join(self.cells.get((x, y), " ") for x in range(min(xs), max(xs) + 1))
            out.append(row.rstrip())
        return out


def _arm(cv: _Canvas, sign: int, step: int, labels: list[str], offset: int):
    """Spine nodes at ``(sign*step*j, step*j)``; leaves point the other way."""
    for j in range(offset, offset + len(labels)):
        x, y = sign * step * j, step * j
        cv.put(x, y, "*")
        lx = x - sign
        cv.put(lx, y + 1, "/" if sign < 0 else "\\")
        cv.text(lx - sign, y + 2, labels[j - offset], leftward=sign > 0)
        for t in range(1, step):
            cv.put(x + sign * t, y + t, "\\" if sign < 0 else "/")
    j = offset + len(labels)
    cv.put(sign * step * j, step * j, ".")
    cv.put(sign * (step * j + 1), step * j + 1, ".")


def _chain_picture(c: Chain) -> list[str]:
    cv = _Canvas()
    labels = [f"x{i}" for i in range(NODES)]
    _arm(cv, -1 if c.kind == "desc" else 1, 2, labels, 0)
    return cv.lines()


def _zeta_picture() -> list[str]:
    cv = _Canvas()
    cv.put(0, 0, "*")
    for sign, name in ((-1, "l"), (1, "r")):
        for t in range(1, 4):
            cv.put(sign * t, t, "\\" if sign < 0 else "/")
        _arm(cv, sign, 4, [f"{name}{i}" for i in range(NODES)], 1)
    return cv.lines()


def _describe(cc) -> list[str]:
    b = cc.block
    if cc.kind in ("omega", "omegastar"):
        out = [f"class: {cc.kind}"] + _chain_picture(b)
        out += [f"split x{i}|x{i + 1}: {b.split(i)}" for i in range(NODES)]
        return out
    if cc.kind == "zeta":
        out = ["class: zeta"] + _zeta_picture() + [f"root l0|r0: {b.root}"]
        out += [f"split l{i}|l{i + 1}: {b.left.split(i)}" for i in range(NODES - 1)]
        out += [f"split r{i}|r{i + 1}: {b.right.split(i)}" for i in range(NODES - 1)]
        return out
    if cc.kind == "tower":
        return ["class: tower (w*.w, not drawn)"]
    return [f"class: finite ({len(b.points)} points, not drawn)"]


def render_ascii(A: RepFamily) -> str:
    B = canonise_family(A)
    out = []
    for cc in cc_enumerate(B.blocks):
        if out:
            out.append("")
        out += _describe(cc)
    return "\n".join(out) + "\n"


def _dot_chain(lines, prefix, c: Chain, tag):
    prev = None
    for i in range(NODES):
        node, leaf = f"{prefix}n{i}", f"{prefix}x{i}"
        lines.append(f'  {node} [shape=point, xlabel="{c.split(i)}"];')
        lines.append(f'  {leaf} [shape=plaintext, label="{tag}{i}"];')
        lines.append(f"  {node} -> {leaf};")
        if prev is not None:
            lines.append(f"  {prev} -> {node};")
        prev = node
    lines.append(f'  {prefix}more [shape=plaintext, label="..."];')
    lines.append(f"  {prev} -> {prefix}more;")


def render_dot(A: RepFamily) -> str:
    B = canonise_family(A)
    lines = ["digraph splitting {", "  rankdir=BT;"]
    for k, cc in enumerate(cc_enumerate(B.blocks)):
        p = f"c{k}"
        lines.append(f"  subgraph cluster_{k} {{")
        lines.append(f'  label="{cc.kind}";')
        if cc.kind in ("omega", "omegastar"):
            _dot_chain(lines, p, cc.block, "x")
        elif cc.kind == "zeta":
            z: ZetaClass = cc.block
            lines.append(f'  {p}root [shape=point, xlabel="{z.root}"];')
            _dot_chain(lines, p + "l", z.left, "l")
            _dot_chain(lines, p + "r", z.right, "r")
            lines.append(f"  {p}root -> {p}ln0;")
            lines.append(f"  {p}root -> {p}rn0;")
        else:
            lines.append(f'  {p} [shape=box, label="{cc.kind}"];')
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render(A: RepFamily, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(A)
    if fmt == "dot":
        return render_dot(A)
    raise ValueError(f"unknown diagram format {fmt!r}")

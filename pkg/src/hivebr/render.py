"""Text renderings of tableaux, GT patterns and hives (ASCII and LaTeX)."""
from __future__ import annotations

from .errors import UnknownKind
from .gthive import GTPattern, Hive
from .tableaux import SkewTableau


def object_from_json(obj: dict):
    """Decode a tableau / GT pattern / hive from its JSON form by its keys."""
    if not isinstance(obj, dict):
        raise UnknownKind(f"expected a JSON object, got {type(obj).__name__}")
    if "rows_bottom_up" in obj:
        return Hive.from_json(obj)
    if "rows_top_down" in obj:
        return GTPattern.from_json(obj)
    if "rows" in obj:
        return SkewTableau.from_json(obj)
    raise UnknownKind(f"cannot tell the object kind from keys {sorted(obj)}")


def render(obj, fmt: str = "ascii") -> str:
    if fmt not in ("ascii", "latex"):
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(obj, SkewTableau):
        return tableau_ascii(obj) if fmt == "ascii" else tableau_latex(obj)
    if isinstance(obj, GTPattern):
        rows = [list(r) for r in obj.rows]
        return triangle_ascii(rows) if fmt == "ascii" else triangle_latex(rows)
    if isinstance(obj, Hive):
        rows = [list(r) for r in reversed(obj.rows_bottom_up)]
        return triangle_ascii(rows) if fmt == "ascii" else triangle_latex(rows)
    raise UnknownKind(f"cannot render {type(obj).__name__}")


def tableau_ascii(T: SkewTableau) -> str:
    width = max((len(str(x)) for x in T.entries()), default=1)
    lines = []
    for i, row in enumerate(T.rows):
        skip = T.inner[i] if i < len(T.inner) else 0
        cells = ["." .rjust(width)] * skip + [str(x).rjust(width) for x in row]
        lines.append(" ".join(cells))
    return "\n".join(lines)


def tableau_latex(T: SkewTableau) -> str:
    """``\\Skew(0:...|0:...)`` with inner boxes written as 0."""
    if not T.rows:
        return ""
    parts = []
    for i, row in enumerate(T.rows):
        skip = T.inner[i] if i < len(T.inner) else 0
        parts.append("0:" + ",".join(["0"] * skip + [str(x) for x in row]))
    return "\\Skew(" + "|".join(parts) + ")"


def triangle_ascii(rows: list[list[int]]) -> str:
    """Centre rows of lengths 1..N (apex first) in fixed-width slots."""
    if not rows:
        return ""
    width = max(len(str(x)) for r in rows for x in r)
    slot = width + 1 + (width + 1) % 2
    depth = max(len(r) for r in rows)
    lines = []
    for r in rows:
        indent = (depth - len(r)) * slot // 2
        body = "".join(str(x).rjust(width).ljust(slot) for x in r)
        lines.append((" " * indent + body).rstrip())
    return "\n".join(lines)


def triangle_latex(rows: list[list[int]]) -> str:
    depth = max((len(r) for r in rows), default=0)
    out = ["\\begin{tikzpicture}"]
    for level, r in enumerate(rows):
        y = depth - level - 1
        for j, x in enumerate(r):
            xpos = (depth - len(r)) / 2 + j
            out.append(f"    \\node at ({xpos:g},{y * 0.5:g}*1.732) {{${x}$}};")
    out.append("\\end{tikzpicture}")
    return "\n".join(out)

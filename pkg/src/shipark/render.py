"""Static diagrams: arc-decorated words and stacked-column functions.

A valid pair renders as its word with one arc per interval drawn above,
one line per arc.  A parking function renders as columns, where column v
stacks the letters mapped to v in ascending order from the bottom.  Both
renderers emit byte-stable output suitable for golden-file tests; the
SVG variants use integer coordinates only.
"""

from __future__ import annotations

from .model import ParkingFn, ValidPair


def _columns(letters: tuple[int, ...]) -> list[int]:
    """Start offset of each letter when letters are joined by single spaces."""
    cols = []
    at = 0
    for a in letters:
        cols.append(at)
        at += len(str(a)) + 1
    return cols


def render_pair_ascii(p: ValidPair) -> str:
    letters = p.word.letters
    cols = _columns(letters)
    lines = []
    for o, c in p.arcs:
        width = cols[c - 1] - cols[o - 1]
        line = " " * cols[o - 1] + "/" + "-" * (width - 1) + "\\"
        lines.append(line)
    lines.append(" ".join(str(a) for a in letters))
    return "\n".join(lines) + "\n"


def render_parking_ascii(f: ParkingFn) -> str:
    stacks = [sorted(f.preimage(v)) for v in range(1, f.m + 1)]
    height = max(len(s) for s in stacks)
    widths = [max([len(str(a)) for a in s], default=1) for s in stacks]
    lines = []
    for level in range(height, 0, -1):
        cells = []
        for s, w in zip(stacks, widths):
            cells.append(str(s[level - 1]).rjust(w) if len(s) >= level else " " * w)
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


_SVG_STEP = 30
_SVG_BASE = 40


def _svg_doc(width: int, height: int, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def render_pair_svg(p: ValidPair) -> str:
    letters = p.word.letters
    m = len(letters)
    width = _SVG_STEP * (m + 1)
    height = _SVG_BASE + 20
    body = []
    for j, a in enumerate(letters, start=1):
        body.append(
            f'<text x="{_SVG_STEP * j}" y="{_SVG_BASE}" text-anchor="middle" '
            f'font-family="monospace" font-size="16">{a}</text>'
        )
    for o, c in p.arcs:
        x1 = _SVG_STEP * o
        x2 = _SVG_STEP * c
        lift = 8 + 4 * (c - o)
        body.append(
            f'<path d="M {x1} {_SVG_BASE - 14} Q {(x1 + x2) // 2} {_SVG_BASE - 14 - lift} '
            f'{x2} {_SVG_BASE - 14}" stroke="red" fill="none"/>'
        )
    return _svg_doc(width, height, body)


def render_parking_svg(f: ParkingFn) -> str:
    stacks = [sorted(f.preimage(v)) for v in range(1, f.m + 1)]
    height_cells = max(len(s) for s in stacks)
    width = _SVG_STEP * (f.m + 1)
    height = _SVG_STEP * (height_cells + 1)
    body = []
    for v, stack in enumerate(stacks, start=1):
        for level, a in enumerate(stack, start=1):
            body.append(
                f'<text x="{_SVG_STEP * v}" y="{height - _SVG_STEP * level + 20}" '
                f'text-anchor="middle" font-family="monospace" font-size="16">{a}</text>'
            )
    body.append(
        f'<line x1="{_SVG_STEP // 2}" y1="{height - 8}" x2="{width - _SVG_STEP // 2}" '
        f'y2="{height - 8}" stroke="black"/>'
    )
    return _svg_doc(width, height, body)


def render(obj: ValidPair | ParkingFn, format: str = "ascii") -> str:
    """Render a pair or a parking function as "ascii" or "svg"."""
    if format not in ("ascii", "svg"):
        raise ValueError(f"unknown format {format!r}; expected 'ascii' or 'svg'")
    if isinstance(obj, ValidPair):
        return render_pair_ascii(obj) if format == "ascii" else render_pair_svg(obj)
    if isinstance(obj, ParkingFn):
        return render_parking_ascii(obj) if format == "ascii" else render_parking_svg(obj)
    raise TypeError(f"cannot render {type(obj).__name__}")

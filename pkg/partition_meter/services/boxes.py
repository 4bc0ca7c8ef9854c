"""Adjacency-box diagrams of sac(n, m)."""

from html import escape
from typing import Optional

from pydantic import Field

from shared.models.base import BaseModel

from ..schemas.composition import SacParams
from .compositions import common_prefix_length, walk


class Box:
    """Mutable run of one column while the layout is being built."""

    __slots__ = ("column", "start", "span", "value")

    def __init__(self, column: int, start: int, value: int) -> None:
        """Open a box of height one."""
        self.column = column
        self.start = start
        self.span = 1
        self.value = value


class AdjacencyBox(BaseModel):
    """A run of equal parts in one column across consecutive compositions.

    ``start`` indexes the compositions in increasing lexicographic order.
    """

    column: int = Field(ge=0)
    start: int = Field(ge=0)
    span: int = Field(ge=1)
    value: int = Field(ge=1)


class BoxLayout(BaseModel):
    """Compositions of sac(n, m) with their adjacency boxes."""

    n: int
    m: int
    rows: tuple[tuple[int, ...], ...]
    boxes: tuple[AdjacencyBox, ...]

    @property
    def count(self) -> int:
        """Number of boxes, equal to the suffix length."""
        return len(self.boxes)

    @property
    def width(self) -> int:
        """Widest composition."""
        return max(len(row) for row in self.rows)

    def owner(self) -> dict[tuple[int, int], int]:
        """Map (row, column) to the index of the box covering it."""
        cells: dict[tuple[int, int], int] = {}
        for index, box in enumerate(self.boxes):
            for row in range(box.start, box.start + box.span):
                cells[(row, box.column)] = index
        return cells


def box_layout(params: SacParams) -> BoxLayout:
    """Group parts into boxes.

    A cell joins the box above it exactly when it lies inside the common
    prefix of its composition and the previous one.
    """
    rows: list[tuple[int, ...]] = []
    finished: list[Box] = []
    open_boxes: dict[int, Box] = {}
    for index, (buffer, k, _) in enumerate(walk(params)):
        current = tuple(buffer[:k])
        prefix = common_prefix_length(rows[-1], current) if rows else 0
        for column in list(open_boxes):
            if column >= prefix:
                finished.append(open_boxes.pop(column))
        for column in range(prefix):
            open_boxes[column].span += 1
        for column in range(prefix, k):
            open_boxes[column] = Box(column, index, current[column])
        rows.append(current)
    finished.extend(open_boxes.values())
    finished.sort(key=lambda box: (box.column, box.start))
    return BoxLayout(
        n=params.n,
        m=params.m,
        rows=tuple(rows),
        boxes=tuple(
            AdjacencyBox(column=box.column, start=box.start, span=box.span, value=box.value)
            for box in finished
        ),
    )


def render_ascii(layout: BoxLayout) -> str:
    """Draw the layout with the greatest composition on top."""
    height = len(layout.rows)
    width = layout.width
    cell = max(3, len(str(layout.n)) + 2)
    owner = layout.owner()

    def at(display_row: int, column: int) -> Optional[int]:
        # Display rows count from the top; layout rows count from the least.
        if not 0 <= display_row < height or column < 0:
            return None
        return owner.get((height - 1 - display_row, column))

    def horizontal(line: int, column: int) -> bool:
        above, below = at(line - 1, column), at(line, column)
        return above != below

    def vertical(display_row: int, line: int) -> bool:
        return at(display_row, line - 1) is not None or at(display_row, line) is not None

    canvas = [[" "] * (width * (cell + 1) + 1) for _ in range(2 * height + 1)]
    for line in range(height + 1):
        for column in range(width):
            if horizontal(line, column):
                x = column * (cell + 1)
                for offset in range(1, cell + 1):
                    canvas[2 * line][x + offset] = "-"
    for display_row in range(height):
        for line in range(width + 1):
            if vertical(display_row, line):
                canvas[2 * display_row + 1][line * (cell + 1)] = "|"
        parts = layout.rows[height - 1 - display_row]
        for column, part in enumerate(parts):
            text = str(part).center(cell)
            x = column * (cell + 1) + 1
            canvas[2 * display_row + 1][x : x + cell] = list(text)
    for line in range(height + 1):
        for corner in range(width + 1):
            across = (corner > 0 and horizontal(line, corner - 1)) or (
                corner < width and horizontal(line, corner)
            )
            through = (line > 0 and vertical(line - 1, corner)) or (
                line < height and vertical(line, corner)
            )
            if across:
                canvas[2 * line][corner * (cell + 1)] = "+"
            elif through:
                canvas[2 * line][corner * (cell + 1)] = "|"
    return "\n".join("".join(row).rstrip() for row in canvas) + "\n"


class SvgCanvas:
    """Minimal SVG document builder."""

    def __init__(self, width: int, height: int) -> None:
        """Start a document of the given size."""
        self.parts = [
            '<?xml version="1.0" standalone="no"?>\n',
            f'<svg version="1.1" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}" xmlns="http://www.w3.org/2000/svg">\n',
        ]

    def rect(self, x: float, y: float, width: float, height: float) -> None:
        """Outlined rectangle."""
        self.parts.append(
            f'<rect x="{x:.1f}" y="{y:.1f}" width="{width:.1f}" height="{height:.1f}" '
            'fill="none" stroke="black" stroke-width="1.5"/>\n'
        )

    def text(self, x: float, y: float, content: str) -> None:
        """Centered label."""
        self.parts.append(
            f'<text x="{x:.1f}" y="{y:.1f}" text-anchor="middle" '
            f'font-family="monospace" font-size="12">{escape(content)}</text>\n'
        )

    def comment(self, content: str) -> None:
        """XML comment."""
        self.parts.append(f"<!-- {content} -->\n")

    def get_svg(self) -> str:
        """Finished document."""
        return "".join(self.parts) + "</svg>\n"


CELL = 24
MARGIN = 8
FOOTER = 20


def render_svg(layout: BoxLayout, footer: str) -> str:
    """Draw the layout as SVG, one rectangle per box."""
    height = len(layout.rows)
    canvas = SvgCanvas(
        width=layout.width * CELL + 2 * MARGIN,
        height=height * CELL + 2 * MARGIN + FOOTER,
    )
    canvas.comment(footer)
    for box in layout.boxes:
        top = height - box.start - box.span
        canvas.rect(
            MARGIN + box.column * CELL,
            MARGIN + top * CELL,
            CELL,
            box.span * CELL,
        )
    for index, parts in enumerate(layout.rows):
        display_row = height - 1 - index
        for column, part in enumerate(parts):
            canvas.text(
                MARGIN + column * CELL + CELL / 2,
                MARGIN + display_row * CELL + CELL * 0.65,
                str(part),
            )
    canvas.text(
        MARGIN + layout.width * CELL / 2,
        MARGIN + height * CELL + FOOTER * 0.75,
        footer,
    )
    return canvas.get_svg()

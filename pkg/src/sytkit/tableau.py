"""Standard and skew Young tableaux.

Row insertion and its inverse, jeu de taquin slides and rectification,
segment restriction, transposition and evacuation, descent sets, dual Knuth
moves, inner-tableau relabeling, and the row/column concatenations that
bound shuffle products.

A tableau is a tuple of strictly increasing rows holding 1..n.  Cells are
addressed 1-based as (row, col), rows counted from the top, columns from
the left.  Text form: rows joined by "/", entries by ",", e.g. "1,3/2,4/5".
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import lru_cache

from .permutation import (
    ParseError,
    Word,
    check_word,
    dual_knuth_move_word,
    evac_word,
)

Rows = tuple[tuple[int, ...], ...]
Shape = tuple[int, ...]
Cell = tuple[int, int]


# ---------------------------------------------------------------------------
# shapes

def check_partition(parts) -> Shape:
    p = tuple(int(x) for x in parts)
    if any(x < 1 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"partition parts must be weakly decreasing: {p}")
    return p


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[Shape, ...]:
    def gen(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(sorted(gen(n, n)))


def partitions(n: int) -> tuple[Shape, ...]:
    """All partitions of n, sorted lexicographically."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _partitions(n)


def removable_cells(shape: Shape) -> list[Cell]:
    """Cells whose removal keeps the shape a partition, top row first."""
    return [
        (r + 1, shape[r])
        for r in range(len(shape))
        if r + 1 == len(shape) or shape[r] > shape[r + 1]
    ]


def addable_cells(shape: Shape) -> list[Cell]:
    """Cells whose addition keeps the shape a partition, top row first."""
    if not shape:
        return [(1, 1)]
    out = [(1, shape[0] + 1)]
    for r in range(1, len(shape)):
        if shape[r] < shape[r - 1]:
            out.append((r + 1, shape[r] + 1))
    out.append((len(shape) + 1, 1))
    return out


def is_hook(shape) -> bool:
    """True for shapes (a, 1, 1, ..., 1), including single rows and columns."""
    p = check_partition(shape)
    return all(x == 1 for x in p[1:])


def dominance_leq(a, b) -> bool:
    """Prefix sums of a never exceed those of b; both partition the same n."""
    a = check_partition(a)
    b = check_partition(b)
    if sum(a) != sum(b):
        raise ValueError("dominance compares partitions of the same number")
    ta = tb = 0
    for r in range(max(len(a), len(b))):
        ta += a[r] if r < len(a) else 0
        tb += b[r] if r < len(b) else 0
        if ta > tb:
            return False
    return True


def conjugate(shape) -> Shape:
    p = check_partition(shape)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > c) for c in range(p[0]))


# ---------------------------------------------------------------------------
# standard tableaux

def shape_of(rows: Rows) -> Shape:
    return tuple(len(r) for r in rows)


def size_of(rows: Rows) -> int:
    return sum(len(r) for r in rows)


def check_standard(rows) -> Rows:
    t = tuple(tuple(int(x) for x in row) for row in rows)
    if not t or any(not row for row in t):
        raise ValueError("tableau must have nonempty rows")
    check_partition(shape_of(t))
    n = size_of(t)
    if sorted(x for row in t for x in row) != list(range(1, n + 1)):
        raise ValueError(f"entries must be exactly 1..{n}")
    for row in t:
        if any(a >= b for a, b in zip(row, row[1:])):
            raise ValueError(f"row not increasing: {row}")
    for r in range(len(t) - 1):
        for c in range(len(t[r + 1])):
            if t[r][c] >= t[r + 1][c]:
                raise ValueError(f"column {c + 1} not increasing")
    return t


def cell_of(rows: Rows, value: int) -> Cell:
    for r, row in enumerate(rows, 1):
        c = bisect_left(row, value)
        if c < len(row) and row[c] == value:
            return (r, c + 1)
    raise ValueError(f"{value} not in tableau")


def corners(rows: Rows) -> list[Cell]:
    """Removable cells of the tableau's shape, top row first."""
    return removable_cells(shape_of(rows))


@lru_cache(maxsize=None)
def _standard_tableaux(shape: Shape) -> tuple[Rows, ...]:
    if not shape:
        return ((),)
    n = sum(shape)
    out = []
    for r, _ in removable_cells(shape):
        smaller = list(shape)
        smaller[r - 1] -= 1
        if smaller[r - 1] == 0:
            smaller.pop()
        for t in _standard_tableaux(tuple(smaller)):
            grid = list(t)
            if r - 1 < len(grid):
                grid[r - 1] = grid[r - 1] + (n,)
            else:
                grid.append((n,))
            out.append(tuple(grid))
    return tuple(out)


def standard_tableaux(shape) -> tuple[Rows, ...]:
    """All standard fillings of the given partition shape."""
    return _standard_tableaux(check_partition(shape))


def all_standard_tableaux(n: int) -> tuple[Rows, ...]:
    if n < 1:
        raise ValueError("n must be positive")
    out: list[Rows] = []
    for shape in partitions(n):
        out.extend(standard_tableaux(shape))
    return tuple(out)


# ---------------------------------------------------------------------------
# text and JSON forms

def format_tableau(rows: Rows) -> str:
    return "/".join(",".join(str(x) for x in row) for row in rows)


def _scan_grid(text: str, allow_gaps: bool) -> tuple[tuple[int | None, ...], ...]:
    s = text.strip()
    if not s:
        raise ParseError("empty tableau literal", 0)
    rows: list[tuple[int | None, ...]] = []
    row: list[int | None] = []
    token = ""
    token_pos = 0
    for p, ch in enumerate(s + "/"):
        if ch in ",/":
            t = token.strip()
            if allow_gaps and t == ".":
                row.append(None)
            elif t.isdigit():
                row.append(int(t))
            else:
                what = "a cell entry or '.'" if allow_gaps else "an integer"
                raise ParseError(f"expected {what}, got {t!r}", token_pos)
            token = ""
            token_pos = p + 1
            if ch == "/":
                rows.append(tuple(row))
                row = []
        else:
            token += ch
    return tuple(rows)


def parse_tableau(text: str) -> Rows:
    grid = _scan_grid(text, allow_gaps=False)
    try:
        return check_standard(grid)
    except ValueError as exc:
        raise ParseError(str(exc), 0) from None


def tableau_to_json(rows: Rows) -> dict:
    return {"rows": [list(row) for row in rows]}


def tableau_from_json(obj: dict) -> Rows:
    return check_standard(tuple(tuple(row) for row in obj["rows"]))


# ---------------------------------------------------------------------------
# row insertion and its inverse

def rsk(word: Word) -> tuple[Rows, Rows]:
    """Row-insert the word; return its insertion and recording tableaux."""
    word = check_word(word)
    insert_rows: list[list[int]] = []
    record_rows: list[list[int]] = []
    for step, x in enumerate(word, 1):
        r = 0
        while True:
            if r == len(insert_rows):
                insert_rows.append([x])
                record_rows.append([step])
                break
            row = insert_rows[r]
            if x > row[-1]:
                row.append(x)
                record_rows[r].append(step)
                break
            pos = bisect_right(row, x)
            x, row[pos] = row[pos], x
            r += 1
    return tuple(map(tuple, insert_rows)), tuple(map(tuple, record_rows))


def insertion_tableau(word: Word) -> Rows:
    """Insertion tableau only; trusted input, used on hot enumeration paths."""
    insert_rows: list[list[int]] = []
    for x in word:
        r = 0
        while True:
            if r == len(insert_rows):
                insert_rows.append([x])
                break
            row = insert_rows[r]
            if x > row[-1]:
                row.append(x)
                break
            pos = bisect_right(row, x)
            x, row[pos] = row[pos], x
            r += 1
    return tuple(map(tuple, insert_rows))


def insert(rows: Rows, x: int) -> Rows:
    """Row-insert a single letter not already present."""
    grid = [list(row) for row in rows]
    r = 0
    while True:
        if r == len(grid):
            grid.append([x])
            break
        row = grid[r]
        if not row or x > row[-1]:
            row.append(x)
            break
        pos = bisect_right(row, x)
        x, row[pos] = row[pos], x
        r += 1
    return tuple(map(tuple, grid))


def reverse_insert(rows: Rows, corner: Cell) -> tuple[Rows, int]:
    """Reverse row insertion through a removable cell.

    Returns the shrunken tableau and the letter that exits at the top; row
    inserting that letter back reproduces the input.
    """
    if corner not in corners(rows):
        raise ValueError(f"{corner} is not a removable cell of {shape_of(rows)}")
    r, _ = corner
    grid = [list(row) for row in rows]
    x = grid[r - 1].pop()
    if not grid[r - 1]:
        grid.pop()
    for above in range(r - 2, -1, -1):
        row = grid[above]
        pos = bisect_left(row, x) - 1  # rightmost entry below x
        row[pos], x = x, row[pos]
    return tuple(map(tuple, grid)), x


def row_word(rows: Rows) -> Word:
    """Rows read left to right, bottom row first; inserts back to the tableau."""
    out: tuple[int, ...] = ()
    for row in reversed(rows):
        out += tuple(row)
    return out


# ---------------------------------------------------------------------------
# skew tableaux and jeu de taquin

@dataclass(frozen=True)
class SkewTableau:
    """Partial filling of the cells between two nested shapes.

    ``rows[r]`` has ``outer[r]`` slots; the first ``inner[r]`` are None (the
    cut-out region), the rest hold distinct integers that increase along
    rows and down columns.
    """

    outer: Shape
    inner: Shape
    rows: tuple[tuple[int | None, ...], ...]

    def __post_init__(self) -> None:
        check_partition(self.outer)
        if self.inner:
            if any(x < 1 for x in self.inner) or any(
                a < b for a, b in zip(self.inner, self.inner[1:])
            ):
                raise ValueError(f"inner shape must be a partition: {self.inner}")
        if len(self.inner) > len(self.outer):
            raise ValueError("inner shape has more rows than outer shape")
        inner = self._inner_padded()
        if any(m > l for m, l in zip(inner, self.outer)):
            raise ValueError("inner shape not contained in outer shape")
        if tuple(len(r) for r in self.rows) != self.outer:
            raise ValueError("row lengths disagree with the outer shape")
        entries = []
        for r, row in enumerate(self.rows):
            for c, val in enumerate(row):
                if (val is None) != (c < inner[r]):
                    raise ValueError(f"gap pattern of row {r + 1} disagrees with the inner shape")
                if val is not None:
                    entries.append(int(val))
        if len(set(entries)) != len(entries):
            raise ValueError("entries must be distinct")
        for row in self.rows:
            vals = [v for v in row if v is not None]
            if any(a >= b for a, b in zip(vals, vals[1:])):
                raise ValueError(f"row not increasing: {row}")
        for r in range(len(self.rows) - 1):
            for c in range(len(self.rows[r + 1])):
                lo = self.rows[r + 1][c]
                hi = self.rows[r][c] if c < len(self.rows[r]) else None
                if lo is not None and hi is not None and hi >= lo:
                    raise ValueError(f"column {c + 1} not increasing")

    def _inner_padded(self) -> tuple[int, ...]:
        return self.inner + (0,) * (len(self.outer) - len(self.inner))

    @classmethod
    def from_rows(cls, rows) -> "SkewTableau":
        rows = tuple(tuple(r) for r in rows)
        outer = tuple(len(r) for r in rows)
        inner = []
        for row in rows:
            g = 0
            while g < len(row) and row[g] is None:
                g += 1
            inner.append(g)
        while inner and inner[-1] == 0:
            inner.pop()
        return cls(outer, tuple(inner), rows)

    @classmethod
    def from_tableau(cls, rows: Rows) -> "SkewTableau":
        return cls.from_rows(check_standard(rows))

    def entry_count(self) -> int:
        return sum(self.outer) - sum(self.inner)


def format_skew(t: SkewTableau) -> str:
    return "/".join(
        ",".join("." if x is None else str(x) for x in row) for row in t.rows
    )


def parse_skew(text: str) -> SkewTableau:
    grid = _scan_grid(text, allow_gaps=True)
    try:
        return SkewTableau.from_rows(grid)
    except ValueError as exc:
        raise ParseError(str(exc), 0) from None


def skew_to_json(t: SkewTableau) -> dict:
    return {
        "outer": list(t.outer),
        "inner": list(t.inner),
        "rows": [list(row) for row in t.rows],
    }


def skew_from_json(obj: dict) -> SkewTableau:
    return SkewTableau.from_rows(tuple(tuple(row) for row in obj["rows"]))


def inner_corners(t: SkewTableau) -> list[Cell]:
    """Removable cells of the inner shape: valid forward-slide holes."""
    return removable_cells(t.inner) if t.inner else []


def _snapshot(grid: list[list[int | None]]) -> tuple[tuple[int | None, ...], ...]:
    return tuple(tuple(row) for row in grid)


def jdt_slide_trace(
    t: SkewTableau, hole: Cell, direction: str
) -> tuple[SkewTableau, tuple[tuple[Cell, tuple], ...]]:
    """Like :func:`jdt_slide` but also returns every intermediate state.

    The trace lists (hole position, grid) pairs, one for the starting hole
    and one after each swap; the grid keeps the pre-slide outer shape with
    None at the current hole.
    """
    grid = [list(row) for row in t.rows]
    outer = list(t.outer)
    inner = list(t._inner_padded())
    r, c = hole
    trace: list[tuple[Cell, tuple]] = []

    if direction == "forward":
        if hole not in inner_corners(t):
            raise ValueError(f"{hole} is not a removable inner cell of {t.inner}")
        start_row = r
        trace.append(((r, c), _snapshot(grid)))
        while True:
            right_val = grid[r - 1][c] if c < outer[r - 1] else None
            below_val = (
                grid[r][c - 1] if r < len(outer) and outer[r] >= c else None
            )
            if right_val is None and below_val is None:
                break
            if right_val is None or (below_val is not None and below_val < right_val):
                grid[r - 1][c - 1] = below_val
                grid[r][c - 1] = None
                r += 1
            else:
                grid[r - 1][c - 1] = right_val
                grid[r - 1][c] = None
                c += 1
            trace.append(((r, c), _snapshot(grid)))
        # the hole exits the diagram; it sits at the end of its row
        assert c == outer[r - 1]
        grid[r - 1].pop()
        outer[r - 1] -= 1
        inner[start_row - 1] -= 1
        if outer[r - 1] == 0:
            assert r == len(outer)
            grid.pop()
            outer.pop()
            inner.pop()
    elif direction == "backward":
        if hole not in addable_cells(t.outer):
            raise ValueError(f"{hole} is not an addable outer cell of {t.outer}")
        if r > len(outer):
            grid.append([None])
            outer.append(1)
            inner.append(0)
        else:
            grid[r - 1].append(None)
            outer[r - 1] += 1
        trace.append(((r, c), _snapshot(grid)))
        while True:
            above_val = (
                grid[r - 2][c - 1] if r >= 2 and len(grid[r - 2]) >= c else None
            )
            left_val = grid[r - 1][c - 2] if c >= 2 else None
            if above_val is None and left_val is None:
                break
            if left_val is None or (above_val is not None and above_val > left_val):
                grid[r - 1][c - 1] = above_val
                grid[r - 2][c - 1] = None
                r -= 1
            else:
                grid[r - 1][c - 1] = left_val
                grid[r - 1][c - 2] = None
                c -= 1
            trace.append(((r, c), _snapshot(grid)))
        # the hole joins the inner region
        assert inner[r - 1] == c - 1
        inner[r - 1] = c
    else:
        raise ValueError(f"direction must be 'forward' or 'backward', got {direction!r}")

    while inner and inner[-1] == 0:
        inner.pop()
    result = SkewTableau(tuple(outer), tuple(inner), _snapshot(grid))
    return result, tuple(trace)


def jdt_slide(t: SkewTableau, hole: Cell, direction: str) -> SkewTableau:
    """One jeu de taquin slide.

    forward: the hole starts at a removable inner cell and repeatedly swaps
    with the smaller of its right and below neighbors, shrinking both shapes.
    backward: the hole starts at an addable outer cell and swaps with the
    larger of its left and above neighbors, growing both shapes.
    """
    result, _ = jdt_slide_trace(t, hole, direction)
    return result


def rectify(t: SkewTableau) -> tuple[tuple[int, ...], ...]:
    """Slide the inner region away and return plain rows.

    Uses the topmost removable inner cell at every step; the outcome is
    independent of that choice (asserted by tests, not assumed here).
    """
    cur = t
    while cur.inner:
        cur = jdt_slide(cur, inner_corners(cur)[0], "forward")
    return tuple(tuple(x for x in row) for row in cur.rows)


# ---------------------------------------------------------------------------
# restriction, symmetries, descents

def restrict(rows: Rows, i: int, j: int) -> Rows:
    """Keep the letters in [i, j], rectify, and shift down to 1..j-i+1."""
    rows = check_standard(rows)
    n = size_of(rows)
    if not (1 <= i < j <= n):
        raise ValueError(f"bad segment [{i},{j}] for n={n}")
    skew_rows = []
    for row in rows:
        cut = sum(1 for x in row if x < i)
        kept = tuple(x for x in row if i <= x <= j)
        if cut or kept:
            skew_rows.append((None,) * cut + kept)
    rect = rectify(SkewTableau.from_rows(tuple(skew_rows)))
    return tuple(tuple(x - (i - 1) for x in row) for row in rect)


def inner_tableau(rows: Rows, k: int) -> Rows:
    """The sub-tableau on the cells holding 1..k (no slides needed: those
    cells always form a normal shape sitting at the top left)."""
    rows = check_standard(rows)
    if not (1 <= k <= size_of(rows)):
        raise ValueError(f"bad inner size {k} for n={size_of(rows)}")
    out = []
    for row in rows:
        m = bisect_right(row, k)
        if m:
            out.append(row[:m])
    return tuple(out)


def transpose(rows: Rows) -> Rows:
    rows = check_standard(rows)
    return tuple(
        tuple(row[c] for row in rows if len(row) > c) for c in range(len(rows[0]))
    )


def evacuate(rows: Rows) -> Rows:
    """Reverse-complement a reading word of the tableau and re-insert."""
    rows = check_standard(rows)
    return insertion_tableau(evac_word(row_word(rows)))


def descent_set(rows: Rows) -> frozenset[int]:
    """Letters i whose successor i+1 sits in a strictly lower row."""
    rows = check_standard(rows)
    row_of = {}
    for r, row in enumerate(rows, 1):
        for x in row:
            row_of[x] = r
    n = len(row_of)
    return frozenset(i for i in range(1, n) if row_of[i + 1] > row_of[i])


def dual_knuth_move(rows: Rows, i: int) -> Rows:
    """Act on the tableau by the dual Knuth rewrite on the triple {i, i+1, i+2}.

    Defined when exactly one of i, i+1 is a descent; exchanges two of the
    entries i, i+1, i+2 in place, preserving the shape and swapping which of
    i, i+1 is a descent.
    """
    rows = check_standard(rows)
    n = size_of(rows)
    if not (1 <= i <= n - 2):
        raise ValueError(f"triple start {i} out of range for n={n}")
    des = descent_set(rows)
    if (i in des) == (i + 1 in des):
        raise ValueError(f"exactly one of {i}, {i + 1} must be a descent")
    return insertion_tableau(dual_knuth_move_word(row_word(rows), i))


def dual_knuth_tableau_neighbors(rows: Rows) -> list[Rows]:
    """All single dual Knuth moves that apply to the tableau."""
    des = descent_set(rows)
    out = []
    for i in range(1, size_of(rows) - 1):
        if (i in des) != ((i + 1) in des):
            out.append(dual_knuth_move(rows, i))
    return out


def inner_translate(rows: Rows, sub_old: Rows, sub_new: Rows) -> Rows:
    """Relabel the cells holding 1..k from one inner tableau to a same-shape
    replacement; entries above k stay put."""
    rows = check_standard(rows)
    sub_old = check_standard(sub_old)
    sub_new = check_standard(sub_new)
    if shape_of(sub_old) != shape_of(sub_new):
        raise ValueError("replacement tableau has a different shape")
    k = size_of(sub_old)
    if k > size_of(rows):
        raise ValueError("inner tableau larger than the tableau itself")
    if inner_tableau(rows, k) != sub_old:
        raise ValueError("tableau does not restrict to the given inner tableau")
    out = []
    for r, row in enumerate(rows):
        if r < len(sub_new):
            out.append(sub_new[r] + row[len(sub_new[r]):])
        else:
            out.append(row)
    return check_standard(tuple(out))


# ---------------------------------------------------------------------------
# row/column concatenations

def shifted_rows(rows: Rows, k: int) -> Rows:
    return tuple(tuple(x + k for x in row) for row in rows)


def beside(left: Rows, right: Rows) -> Rows:
    """Append the rows of the shifted second tableau to the first's rows."""
    left = check_standard(left)
    right = shifted_rows(check_standard(right), size_of(left))
    out = []
    for r in range(max(len(left), len(right))):
        a = left[r] if r < len(left) else ()
        b = right[r] if r < len(right) else ()
        out.append(a + b)
    return check_standard(tuple(out))


def over(first: Rows, second: Rows) -> Rows:
    """Stack the shifted second tableau's columns under the first's columns."""
    return transpose(beside(transpose(first), transpose(second)))

"""Skew semistandard tableaux and the operations on them.

A tableau is stored as its inner shape plus one tuple of entries per row;
the outer shape is ``inner[i] + len(rows[i])``. Rows are indexed from 1 in
the mathematical sense (row 1 is the top row) but from 0 in Python.

Two reading words are used throughout:

* ``reverse_row_word``: rows top to bottom, each read right to left. This is
  the word used for Yamanouchi, dominance and LR tests.
* ``row_word``: its letterwise reverse (rows bottom to top, left to right).
  Schensted row insertion of this word is the rectification.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

from . import kernels
from .errors import (
    AlphabetExceeded,
    ColumnNotStrictlyIncreasing,
    InvalidContent,
    InvalidFlag,
    NotDominant,
    NotLittlewoodRichardson,
    RowNotWeaklyIncreasing,
    ShapeMismatch,
    ShapeNotContained,
    ShapeTooLong,
)
from .partitions import (
    Partition,
    Word,
    add,
    contains,
    content,
    is_partition,
    is_yamanouchi,
    normalize_partition,
    pad,
    same_content,
    subtract,
)

Flag = tuple[int, ...]


@dataclass(frozen=True)
class SkewTableau:
    inner: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        inner = tuple(self.inner)
        rows = [tuple(r) for r in self.rows]
        # canonical form: drop trailing rows that hold neither cells nor inner boxes
        while rows and not rows[-1] and (len(rows) > len(inner) or inner[len(rows) - 1] == 0):
            rows.pop()
        while inner and inner[-1] == 0:
            inner = inner[:-1]
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "rows", tuple(rows))

    @cached_property
    def outer(self) -> Partition:
        k = max(len(self.rows), len(self.inner))
        inner = pad(self.inner, k)
        rows = list(self.rows) + [()] * (k - len(self.rows))
        return normalize_partition(a + len(r) for a, r in zip(inner, rows))

    @property
    def shape(self) -> Partition:
        """Outer shape; for a straight tableau this is the shape."""
        return self.outer

    @property
    def is_straight(self) -> bool:
        return not self.inner

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """(row, col, entry), 0-based, in row-major order."""
        for i, row in enumerate(self.rows):
            off = self.inner[i] if i < len(self.inner) else 0
            for j, x in enumerate(row):
                yield i, off + j, x

    def entries(self) -> list[int]:
        return [x for r in self.rows for x in r]

    def max_entry(self) -> int:
        return max(self.entries(), default=0)

    @property
    def content(self) -> tuple[int, ...]:
        return content(self.entries())

    def to_json(self) -> dict:
        return {"inner": list(self.inner), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "SkewTableau":
        inner = normalize_partition(obj.get("inner", []))
        rows = [list(r) for r in obj["rows"]]
        rows += [[] for _ in range(len(inner) - len(rows))]
        outer = [(inner[i] if i < len(inner) else 0) + len(r) for i, r in enumerate(rows)]
        return make_skew_tableau(outer, inner, rows)

    def __repr__(self):
        if self.is_straight:
            return f"SkewTableau({[list(r) for r in self.rows]})"
        return f"SkewTableau(inner={list(self.inner)}, rows={[list(r) for r in self.rows]})"


def straight(rows: Iterable[Iterable[int]]) -> SkewTableau:
    """Validated straight tableau from its rows."""
    rows = [list(r) for r in rows]
    return make_skew_tableau([len(r) for r in rows], (), rows)


def make_skew_tableau(outer: Sequence[int], inner: Sequence[int],
                      rows: Sequence[Sequence[int]]) -> SkewTableau:
    outer = tuple(outer)
    inner = tuple(inner)
    if not is_partition(outer) or not is_partition(inner):
        raise ShapeMismatch(f"outer {outer} and inner {inner} must be partitions")
    if not contains(outer, inner):
        raise ShapeNotContained(f"{inner} is not contained in {outer}")
    k = max(len(outer), len(rows))
    if len(inner) > k:
        inner = inner[:k]
    outer_p, inner_p = pad(outer, k), pad(inner, k)
    rows = [tuple(int(x) for x in r) for r in rows] + [()] * (k - len(rows))
    for i in range(k):
        if len(rows[i]) != outer_p[i] - inner_p[i]:
            raise ShapeMismatch(f"row {i + 1} has {len(rows[i])} entries, "
                                f"expected {outer_p[i] - inner_p[i]}")
        if any(x < 1 for x in rows[i]):
            raise ValueError(f"entries must be positive integers (row {i + 1})")
        if any(a > b for a, b in zip(rows[i], rows[i][1:])):
            raise RowNotWeaklyIncreasing(f"row {i + 1}: {list(rows[i])}")
    for i in range(1, k):
        for j, x in enumerate(rows[i]):
            col = inner_p[i] + j
            jj = col - inner_p[i - 1]
            if 0 <= jj < len(rows[i - 1]) and rows[i - 1][jj] >= x:
                raise ColumnNotStrictlyIncreasing(
                    f"column {col + 1}: {rows[i - 1][jj]} above {x}")
    return SkewTableau(normalize_partition(inner), tuple(rows))


def empty_tableau() -> SkewTableau:
    return SkewTableau((), ())


def reverse_row_word(T: SkewTableau) -> Word:
    return tuple(x for r in T.rows for x in reversed(r))


def row_word(T: SkewTableau) -> Word:
    return tuple(x for r in reversed(T.rows) for x in r)


def insert_word(w: Iterable[int]) -> SkewTableau:
    """Schensted row insertion P-tableau, inserting letters left to right."""
    return SkewTableau((), tuple(tuple(r) for r in kernels.row_insert(list(w))))


def rectify(T: SkewTableau) -> SkewTableau:
    if T.is_straight:
        return T
    return insert_word(row_word(T))


def jdt_rectify(T: SkewTableau) -> SkewTableau:
    """Rectification by jeu de taquin slides into inner corners.

    Independent of Schensted insertion; used as a cross-check for ``rectify``.
    On ties (right neighbour equals lower neighbour) the lower entry moves.
    """
    grid: dict[tuple[int, int], int] = {(i, j): x for i, j, x in T.cells()}
    inner = list(T.inner)
    while inner:
        # any inner corner: the last box of a row that is longer than the next
        i = max(r for r in range(len(inner))
                if inner[r] > (inner[r + 1] if r + 1 < len(inner) else 0))
        r, c = i, inner[i] - 1
        while True:
            right = grid.get((r, c + 1))
            below = grid.get((r + 1, c))
            if right is None and below is None:
                break
            if below is not None and (right is None or below <= right):
                grid[(r, c)] = below
                del grid[(r + 1, c)]
                r += 1
            else:
                grid[(r, c)] = right
                del grid[(r, c + 1)]
                c += 1
        inner[i] -= 1
        while inner and inner[-1] == 0:
            inner.pop()
    nrows = max((i for i, _ in grid), default=-1) + 1
    rows = [[grid[(i, j)] for j in sorted(jj for ii, jj in grid if ii == i)]
            for i in range(nrows)]
    return SkewTableau((), tuple(tuple(r) for r in rows))


def superstandard(mu: Partition) -> SkewTableau:
    return SkewTableau((), tuple((i + 1,) * part for i, part in enumerate(mu)))


def is_dominant(T: SkewTableau, mu: Partition) -> bool:
    """w(T_mu) * w(T) is a Yamanouchi word."""
    return is_yamanouchi(reverse_row_word(T), start=mu)


def is_littlewood_richardson(T: SkewTableau, lam: Partition) -> bool:
    return same_content(T.content, lam) and is_yamanouchi(reverse_row_word(T))


def companion(T: SkewTableau, check_LR: bool = True) -> SkewTableau:
    """Row k lists the indices of the rows of ``T`` that contain the letter k."""
    if check_LR and not is_yamanouchi(reverse_row_word(T)):
        raise NotLittlewoodRichardson(f"{T!r} is not an LR tableau")
    lam = T.content
    out: list[list[int]] = [[] for _ in lam]
    for i, row in enumerate(T.rows):
        for x in row:
            out[x - 1].append(i + 1)
    return SkewTableau((), tuple(tuple(sorted(r)) for r in out))


def companion_inverse(R: SkewTableau, mu: Partition) -> SkewTableau:
    if not is_dominant(R, mu):
        raise NotDominant(f"{R!r} is not {list(mu)}-dominant")
    nu = add(mu, R.content)
    if not is_partition(nu):
        raise InvalidContent(f"mu + content(R) = {list(nu)} is not a partition")
    nu = normalize_partition(nu)
    rows: list[list[int]] = [[] for _ in nu]
    for k, row in enumerate(R.rows):
        for r in row:
            rows[r - 1].append(k + 1)
    return make_skew_tableau(nu, mu, [sorted(r) for r in rows])


def schutzenberger(T: SkewTableau, k: int) -> SkewTableau:
    """Evacuation over the alphabet [1, k].

    Inserts the complemented letters k+1-x of the reverse row word, i.e. the
    reversed and complemented row word.
    """
    if T.max_entry() > k:
        raise AlphabetExceeded(f"entry {T.max_entry()} exceeds alphabet size {k}")
    return insert_word(k + 1 - x for x in reverse_row_word(T))


def satisfies_sundaram(T: SkewTableau, n: int) -> bool:
    """Each odd letter 2i+1 occurs only in rows n+i and above."""
    for r, row in enumerate(T.rows, start=1):
        for x in row:
            if x % 2 == 1 and r > n + (x - 1) // 2:
                return False
    return True


def satisfies_kwon(T: SkewTableau, n: int) -> bool:
    """Entries of row i are at least 2i-1."""
    if len(T.shape) > n:
        raise ShapeTooLong(f"shape {list(T.shape)} has more than {n} rows")
    return all(not row or row[0] >= 2 * i - 1 for i, row in enumerate(T.rows, start=1))


def is_flag(flag: Sequence[int], m: int | None = None) -> bool:
    m = len(flag) if m is None else m
    return (len(flag) == m
            and all(a <= b for a, b in zip(flag, flag[1:]))
            and all(i <= f <= m for i, f in enumerate(flag, start=1)))


def make_flag(bounds: Sequence[int]) -> Flag:
    flag = tuple(int(x) for x in bounds)
    if not is_flag(flag):
        raise InvalidFlag(f"{list(flag)} is not a flag")
    return flag


def is_flag_bounded(T: SkewTableau, flag: Sequence[int]) -> bool:
    """Every entry of row k is at most flag[k-1]."""
    for k, row in enumerate(T.rows):
        if row and (k >= len(flag) or row[-1] > flag[k]):
            return False
    return True


def enumerate_lr(nu: Partition, mu: Partition, lam: Partition) -> list[SkewTableau]:
    """All LR tableaux of shape nu/mu and content lam.

    Cells are filled in reverse-row-word order (top row first, right to
    left), pruning on the Yamanouchi prefix condition.
    """
    nu, mu, lam = tuple(nu), tuple(mu), tuple(lam)
    if not contains(nu, mu):
        raise ShapeNotContained(f"{list(mu)} is not contained in {list(nu)}")
    if sum(nu) - sum(mu) != sum(lam):
        return []
    k = len(nu)
    mu_p = pad(mu, k)
    cells = [(i, c) for i in range(k) for c in range(nu[i] - 1, mu_p[i] - 1, -1)]
    return [_skew_from_grid(nu, mu_p, g) for g in _fill(cells, lam, (), None)]


def enumerate_dominant(shape: Partition, weight: Sequence[int], mu: Partition,
                       flag: Sequence[int] | None = None) -> list[SkewTableau]:
    """Straight SSYT of the given shape and content that are mu-dominant
    (and flag-bounded rowwise when a flag is given)."""
    shape = tuple(shape)
    weight = tuple(weight)
    while weight and weight[-1] == 0:
        weight = weight[:-1]
    if sum(shape) != sum(weight) or any(w < 0 for w in weight):
        return []
    if flag is not None and len(shape) > len(flag):
        return []
    cells = [(i, c) for i in range(len(shape)) for c in range(shape[i] - 1, -1, -1)]
    zero = (0,) * len(shape)
    return [_skew_from_grid(shape, zero, g) for g in _fill(cells, weight, tuple(mu), flag)]


def _fill(cells, target, start, flag):
    """Backtracking over fillings of ``cells`` (given in reverse-row-word order).

    Rows weakly increase, columns strictly increase, the total content is
    ``target`` and every prefix, preceded by a word of content ``start``, is
    Yamanouchi. Yields dicts {(row, col): entry}.
    """
    alphabet = len(target)
    counts = list(pad(start, max(len(start), alphabet) + 1))
    used = [0] * (alphabet + 1)
    grid: dict[tuple[int, int], int] = {}
    ncell = len(cells)

    def rec(t):
        if t == ncell:
            yield dict(grid)
            return
        i, c = cells[t]
        hi = grid.get((i, c + 1), alphabet)
        if flag is not None:
            hi = min(hi, flag[i])
        lo = grid[(i - 1, c)] + 1 if (i - 1, c) in grid else 1
        for x in range(lo, hi + 1):
            if used[x - 1] >= target[x - 1]:
                continue
            if x > 1 and counts[x - 1] + 1 > counts[x - 2]:
                continue
            used[x - 1] += 1
            counts[x - 1] += 1
            grid[(i, c)] = x
            yield from rec(t + 1)
            del grid[(i, c)]
            used[x - 1] -= 1
            counts[x - 1] -= 1

    yield from rec(0)


def _skew_from_grid(outer, inner_p, grid):
    rows = tuple(tuple(grid[(i, c)] for c in range(inner_p[i], outer[i]))
                 for i in range(len(outer)))
    return SkewTableau(normalize_partition(inner_p), rows)


def straight_tableaux(shape: Partition, max_entry: int) -> Iterator[SkewTableau]:
    """All straight SSYT of ``shape`` with entries in [1, max_entry]."""
    cells = [(i, c) for i in range(len(shape)) for c in range(shape[i])]
    grid: dict[tuple[int, int], int] = {}

    def rec(t):
        if t == len(cells):
            yield _skew_from_grid(shape, (0,) * len(shape), grid)
            return
        i, c = cells[t]
        lo = max(grid.get((i, c - 1), 1), grid.get((i - 1, c), 0) + 1)
        for x in range(lo, max_entry + 1):
            grid[(i, c)] = x
            yield from rec(t + 1)
        grid.pop((i, c), None)

    yield from rec(0)


def skew_tableaux(outer: Partition, inner: Partition, max_entry: int) -> Iterator[SkewTableau]:
    """All skew SSYT of shape outer/inner with entries in [1, max_entry]."""
    k = len(outer)
    inner_p = pad(inner, k)
    cells = [(i, c) for i in range(k) for c in range(inner_p[i], outer[i])]
    grid: dict[tuple[int, int], int] = {}

    def rec(t):
        if t == len(cells):
            yield _skew_from_grid(outer, inner_p, grid)
            return
        i, c = cells[t]
        lo = max(grid.get((i, c - 1), 1), grid.get((i - 1, c), 0) + 1)
        for x in range(lo, max_entry + 1):
            grid[(i, c)] = x
            yield from rec(t + 1)
        grid.pop((i, c), None)

    yield from rec(0)


def knuth_neighbours(w: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Words obtained from ``w`` by one elementary Knuth move (either direction)."""
    w = tuple(w)
    for i in range(len(w) - 2):
        a, b, c = w[i:i + 3]
        # xzy <-> zxy  (x <= y < z)
        if a <= c < b:
            yield w[:i] + (b, a, c) + w[i + 3:]
        if b <= c < a:
            yield w[:i] + (b, a, c) + w[i + 3:]
        # yxz <-> yzx  (x < y <= z)
        if b < a <= c:
            yield w[:i] + (a, c, b) + w[i + 3:]
        if c < a <= b:
            yield w[:i] + (a, c, b) + w[i + 3:]


def content_minus(nu: Partition, lam: Partition) -> tuple[int, ...]:
    return subtract(nu, lam)

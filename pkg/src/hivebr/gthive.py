"""Gelfand-Tsetlin patterns, hives and the maps between them and tableaux.

Hive coordinates
----------------
A hive of size ``m`` has ``m + 1`` rows stored bottom-up: row ``r`` has the
labels ``h(r, 0), ..., h(r, m - r)`` and the apex is ``h(m, 0)``. The left
edge is ``c = 0``, the bottom edge ``r = 0`` and the right edge
``c = m - r``. In apex-first 1-based indexing, stored ``(r, c)`` is
``h_{m+1-r, c+1}``.

Rhombus contents (obtuse-vertex labels minus acute-vertex labels)::

    NE(r, c) = h(r+1, c) + h(r, c+1) - h(r, c) - h(r+1, c+1)     c <= m-r-2
    SE(r, c) = h(r, c) + h(r+1, c) - h(r, c+1) - h(r+1, c-1)     1 <= c <= m-r-1
    V(r, c)  = h(r+1, c) + h(r+1, c+1) - h(r, c+1) - h(r+2, c)   c <= m-r-2

Boundary of ``Hive(lam, mu, nu)``: ``h(m-i, 0) = lam^p_i`` on the left,
``h(0, j) = |lam| + mu^p_j`` along the bottom and ``h(r, m-r) = nu^p_{m-r}``
on the right, where ``x^p`` is the partial-sum vector of ``x``.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from . import kernels
from .errors import AlphabetExceeded, InvalidFlag, InvalidGT, LengthExceeded
from .partitions import Partition, normalize_partition, pad, partial_sums
from .tableaux import Flag, SkewTableau, is_flag


@dataclass(frozen=True)
class GTPattern:
    """Triangular array; ``rows[i-1]`` is the GT row with ``i`` entries (apex first)."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for i, r in enumerate(rows, start=1):
            if len(r) != i:
                raise InvalidGT(f"row {i} has {len(r)} entries")
            if any(x < 0 for x in r):
                raise InvalidGT(f"row {i} has a negative entry")
        for i in range(len(rows) - 1):
            top, bot = rows[i], rows[i + 1]
            for j, x in enumerate(top):
                if not bot[j] >= x >= bot[j + 1]:
                    raise InvalidGT(f"interleaving fails at p[{i + 1},{j + 1}] = {x} "
                                    f"between {bot[j]} and {bot[j + 1]}")

    @property
    def m(self) -> int:
        return len(self.rows)

    def row(self, k: int) -> tuple[int, ...]:
        """P_k zero-padded to length m; P_0 is the zero row."""
        if k == 0:
            return (0,) * self.m
        return self.rows[k - 1] + (0,) * (self.m - k)

    def to_json(self) -> dict:
        return {"rows_top_down": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "GTPattern":
        return cls(tuple(tuple(r) for r in obj["rows_top_down"]))


@dataclass(frozen=True)
class Hive:
    m: int
    rows_bottom_up: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows_bottom_up)
        object.__setattr__(self, "rows_bottom_up", rows)
        if len(rows) != self.m + 1 or any(len(r) != self.m + 1 - i for i, r in enumerate(rows)):
            raise ValueError(f"hive rows do not form a size-{self.m} triangle")

    def __call__(self, r: int, c: int) -> int:
        return self.rows_bottom_up[r][c]

    def ne(self, r: int, c: int) -> int:
        h = self.rows_bottom_up
        return h[r + 1][c] + h[r][c + 1] - h[r][c] - h[r + 1][c + 1]

    def se(self, r: int, c: int) -> int:
        h = self.rows_bottom_up
        return h[r][c] + h[r + 1][c] - h[r][c + 1] - h[r + 1][c - 1]

    def vert(self, r: int, c: int) -> int:
        h = self.rows_bottom_up
        return h[r + 1][c] + h[r + 1][c + 1] - h[r][c + 1] - h[r + 2][c]

    def to_json(self) -> dict:
        return {"m": self.m, "rows_bottom_up": [list(r) for r in self.rows_bottom_up]}

    @classmethod
    def from_json(cls, obj: dict) -> "Hive":
        return cls(int(obj["m"]), tuple(tuple(r) for r in obj["rows_bottom_up"]))


@dataclass(frozen=True)
class HiveTriple:
    lam: Partition
    mu: Partition
    nu: Partition
    m: int

    def __post_init__(self):
        for name in ("lam", "mu", "nu"):
            p = normalize_partition(getattr(self, name))
            if len(p) > self.m:
                raise LengthExceeded(f"{name}={list(p)} has more than {self.m} parts")
            object.__setattr__(self, name, p)

    def boundary(self) -> dict[tuple[int, int], int]:
        m = self.m
        lp = partial_sums(self.lam, m)
        mp = partial_sums(self.mu, m)
        np_ = partial_sums(self.nu, m)
        b = {}
        for i in range(m + 1):
            b[(m - i, 0)] = lp[i]
        for j in range(m + 1):
            b[(0, j)] = lp[m] + mp[j]
        for r in range(m + 1):
            b[(r, m - r)] = np_[m - r]
        return b


def ne_positions(m: int):
    return [(r, c) for r in range(m - 1) for c in range(m - r - 1)]


def se_positions(m: int):
    return [(r, c) for r in range(m) for c in range(1, m - r)]


def vert_positions(m: int):
    return [(r, c) for r in range(m - 1) for c in range(m - r - 1)]


# ---------------------------------------------------------------------------
# GT patterns <-> tableaux


def gt_from_tableau(R: SkewTableau, m: int) -> GTPattern:
    if not R.is_straight:
        raise ValueError("gt_from_tableau needs a straight tableau")
    if R.max_entry() > m:
        raise AlphabetExceeded(f"entry {R.max_entry()} exceeds {m}")
    if len(R.shape) > m:
        raise LengthExceeded(f"shape {list(R.shape)} has more than {m} rows")
    rows = []
    for k in range(1, m + 1):
        shape_k = [sum(1 for x in r if x <= k) for r in R.rows]
        rows.append(tuple(pad(normalize_partition(shape_k), k)))
    return GTPattern(tuple(rows))


def tableau_from_gt(P: GTPattern) -> SkewTableau:
    """T(P): row k holds p_{t,k} - p_{t-1,k} copies of each letter t."""
    m = P.m
    out = []
    for k in range(1, m + 1):
        row: list[int] = []
        for t in range(k, m + 1):
            prev = P.rows[t - 2][k - 1] if t - 1 >= k else 0
            row.extend([t] * (P.rows[t - 1][k - 1] - prev))
        out.append(tuple(row))
    return SkewTableau((), tuple(out))


def contretableau_from_gt(P: GTPattern) -> SkewTableau:
    """C(P): the skew tableau in the rectangle k^m given by the chain k - rev(P_j)."""
    m = P.m
    k = P.rows[-1][0] if m else 0
    # rev(P_j)_i (1-based i) is P_j[m-i]
    chain = [tuple(k - x for x in reversed(P.row(j))) for j in range(m + 1)]
    inner = chain[m]
    rows = []
    for i in range(m):
        row: list[int] = []
        for t in range(1, m + 1):
            row.extend([t] * (chain[m - t][i] - chain[m - t + 1][i]))
        rows.append(tuple(row))
    return SkewTableau(normalize_partition(inner), tuple(rows))


# ---------------------------------------------------------------------------
# hives


def hive_embed(R: SkewTableau, lam: Partition, m: int) -> Hive:
    """phi: partial sums of the rows of GT(R), plus lam^p_i on the GT row with i entries."""
    if len(lam) > m:
        raise LengthExceeded(f"{list(lam)} has more than {m} parts")
    P = gt_from_tableau(R, m)
    lp = partial_sums(lam, m)
    rows = [None] * (m + 1)
    rows[m] = (lp[0],)
    for i in range(1, m + 1):
        acc = [0]
        for x in P.rows[i - 1]:
            acc.append(acc[-1] + x)
        rows[m - i] = tuple(a + lp[i] for a in acc)
    return Hive(m, tuple(rows))


@dataclass(frozen=True)
class HiveReport:
    ok: bool
    message: str = ""

    def __bool__(self):
        return self.ok


def validate_hive(h: Hive, triple: HiveTriple) -> HiveReport:
    m = h.m
    if triple.m != m:
        return HiveReport(False, f"hive size {m} but triple declares m={triple.m}")
    for (r, c), want in sorted(triple.boundary().items()):
        if h(r, c) != want:
            return HiveReport(False, f"boundary h({r},{c}) = {h(r, c)}, expected {want}")
    for r, c in ne_positions(m):
        if h.ne(r, c) < 0:
            return HiveReport(False, f"NE rhombus at ({r},{c}) has content {h.ne(r, c)}")
    for r, c in se_positions(m):
        if h.se(r, c) < 0:
            return HiveReport(False, f"SE rhombus at ({r},{c}) has content {h.se(r, c)}")
    for r, c in vert_positions(m):
        if h.vert(r, c) < 0:
            return HiveReport(False, f"vertical rhombus at ({r},{c}) has content {h.vert(r, c)}")
    return HiveReport(True)


def gt_row_diff(h: Hive) -> GTPattern:
    """P(h): GT row i is the difference sequence of stored hive row m-i."""
    m = h.m
    return GTPattern(tuple(
        tuple(h(m - i, j) - h(m - i, j - 1) for j in range(1, i + 1))
        for i in range(1, m + 1)))


def gt_ne_diff(h: Hive) -> GTPattern:
    """P-hat(h): GT row m-c differences the c-th SW-NE diagonal, apex end first."""
    m = h.m
    rows = [None] * m
    for c in range(m):
        rows[m - c - 1] = tuple(h(m - c - j, c) - h(m - c - j + 1, c)
                                for j in range(1, m - c + 1))
    return GTPattern(tuple(rows))


def hive_from_ne_pattern(P: GTPattern, nu: Partition) -> Hive:
    """Inverse of ``gt_ne_diff`` given the right edge (partial sums of ``nu``).

    Each SW-NE diagonal ``c`` starts at the right-edge label ``nu^p_c`` and
    accumulates the entries of GT row ``m - c``.
    """
    m = P.m
    np_ = partial_sums(nu, m)
    vals: dict[tuple[int, int], int] = {}
    for c in range(m + 1):
        vals[(m - c, c)] = np_[c]
        if c < m:
            for j, x in enumerate(P.rows[m - c - 1], start=1):
                vals[(m - c - j, c)] = vals[(m - c - j + 1, c)] + x
    return Hive(m, tuple(tuple(vals[(r, c)] for c in range(m - r + 1)) for r in range(m + 1)))


def sundaram_flag(n: int) -> Flag:
    return tuple(n + k // 2 for k in range(1, 2 * n + 1))


def is_flagged(h: Hive, flag: Sequence[int]) -> bool:
    """The first m - flag_k NE rhombi (from the bottom) of slanted column k are flat."""
    m = h.m
    if not is_flag(flag, m):
        raise InvalidFlag(f"{list(flag)} is not a flag of length {m}")
    for k in range(1, m + 1):
        c = k - 1
        for r in range(m - flag[k - 1]):
            if h.ne(r, c) != 0:
                return False
    return True


# ---------------------------------------------------------------------------
# enumeration


def _constraint_program(triple: HiveTriple, flag: Sequence[int] | None):
    """Compile the rhombus inequalities into the flat form ``kernels.fill_hives`` reads.

    Returns ``(values, order, cons_ptr, cons, index)`` or ``None`` when a
    constraint on boundary labels alone already fails.
    """
    m = triple.m
    index = {}
    for r in range(m + 1):
        for c in range(m - r + 1):
            index[(r, c)] = len(index)
    boundary = triple.boundary()
    values = [0] * len(index)
    for rc, x in boundary.items():
        values[index[rc]] = x
    interior = [(r, c) for r in range(1, m + 1) for c in range(1, m - r)]
    rank = {rc: -1 for rc in boundary}
    for t, rc in enumerate(interior):
        rank[rc] = t

    rhombi = []  # list of [(sign, (r, c)) x 4] meaning sum >= 0
    for r, c in ne_positions(m):
        rhombi.append([(1, (r + 1, c)), (1, (r, c + 1)), (-1, (r, c)), (-1, (r + 1, c + 1))])
    for r, c in se_positions(m):
        rhombi.append([(1, (r, c)), (1, (r + 1, c)), (-1, (r, c + 1)), (-1, (r + 1, c - 1))])
    for r, c in vert_positions(m):
        rhombi.append([(1, (r + 1, c)), (1, (r + 1, c + 1)), (-1, (r, c + 1)), (-1, (r + 2, c))])
    if flag is not None:
        if not is_flag(flag, m):
            raise InvalidFlag(f"{list(flag)} is not a flag of length {m}")
        for k in range(1, m + 1):
            c = k - 1
            for r in range(m - flag[k - 1]):
                rhombi.append([(-1, (r + 1, c)), (-1, (r, c + 1)), (1, (r, c)), (1, (r + 1, c + 1))])

    per_cell: list[list[tuple]] = [[] for _ in interior]
    for terms in rhombi:
        last = max(terms, key=lambda t: rank[t[1]])
        if rank[last[1]] < 0:
            if sum(s * values[index[rc]] for s, rc in terms) < 0:
                return None
            continue
        others = [t for t in terms if t is not last]
        row = [last[0]]
        for s, rc in others:
            row += [index[rc], s]
        per_cell[rank[last[1]]].append(tuple(row))

    order = [index[rc] for rc in interior]
    cons_ptr = [0]
    cons: list[int] = []
    for lst in per_cell:
        for row in lst:
            cons.extend(row)
        cons_ptr.append(cons_ptr[-1] + len(lst))
    return values, order, cons_ptr, cons, index


def _feasible_weights(triple: HiveTriple) -> bool:
    return sum(triple.lam) + sum(triple.mu) == sum(triple.nu)


def enumerate_hives(triple: HiveTriple, flag: Sequence[int] | None = None,
                    backend: str | None = None) -> list[Hive]:
    """All integral hives with the boundary of ``triple`` (and flat flagged rhombi).

    Interior labels are filled bottom-up, left to right; each label ranges
    over the interval cut out by the rhombi whose other vertices are known.
    The result is sorted lexicographically by rows.
    """
    if not _feasible_weights(triple):
        return []
    prog = _constraint_program(triple, flag)
    if prog is None:
        return []
    values, order, cons_ptr, cons, index = prog
    m = triple.m
    sols = kernels.fill_hives(values, order, cons_ptr, cons, False, backend=backend)
    hives = [Hive(m, tuple(tuple(v[index[(r, c)]] for c in range(m - r + 1))
                           for r in range(m + 1)))
             for v in sols]
    hives.sort(key=lambda h: h.rows_bottom_up)
    return hives


def count_hives(triple: HiveTriple, flag: Sequence[int] | None = None,
                backend: str | None = None) -> int:
    if not _feasible_weights(triple):
        return 0
    prog = _constraint_program(triple, flag)
    if prog is None:
        return 0
    values, order, cons_ptr, cons, _ = prog
    return kernels.fill_hives(values, order, cons_ptr, cons, True, backend=backend)

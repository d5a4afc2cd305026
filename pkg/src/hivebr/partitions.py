"""Partitions, words and contents.

Partitions are plain tuples of ints in canonical form (weakly decreasing, no
trailing zeros). Words are tuples of positive ints. Padding to a fixed length
always happens on demand, with an explicit length argument.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from functools import lru_cache

from .errors import LengthExceeded, NegativePart, NotWeaklyDecreasing

Partition = tuple[int, ...]
Word = tuple[int, ...]


def normalize_partition(seq: Iterable[int]) -> Partition:
    parts = [int(x) for x in seq]
    for x in parts:
        if x < 0:
            raise NegativePart(f"negative part {x} in {parts}")
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise NotWeaklyDecreasing(f"{parts} increases ({a} < {b})")
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def is_partition(seq: Sequence[int]) -> bool:
    return all(x >= 0 for x in seq) and all(a >= b for a, b in zip(seq, seq[1:]))


def pad(p: Sequence[int], m: int) -> tuple[int, ...]:
    """Zero-pad ``p`` to length ``m``; trailing zeros beyond ``m`` are dropped."""
    p = tuple(p)
    if len(p) > m:
        if any(p[m:]):
            raise LengthExceeded(f"{p} has more than {m} nonzero parts")
        return p[:m]
    return p + (0,) * (m - len(p))


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def is_even_partition(p: Partition) -> bool:
    q = list(p) + [0] * (len(p) % 2)
    return all(q[i] == q[i + 1] for i in range(0, len(q), 2))


def partial_sums(p: Partition, m: int) -> tuple[int, ...]:
    """(0, p1, p1+p2, ..., |p|) of length m+1."""
    if len(p) > m:
        raise LengthExceeded(f"length {len(p)} exceeds {m}")
    out = [0]
    for x in pad(p, m):
        out.append(out[-1] + x)
    return tuple(out)


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """Young diagram containment inner ⊆ outer."""
    if len(inner) > len(outer) and any(inner[len(outer):]):
        return False
    return all(a <= (outer[i] if i < len(outer) else 0) for i, a in enumerate(inner))


def add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Componentwise sum with zero padding (not normalized)."""
    k = max(len(a), len(b))
    return tuple(x + y for x, y in zip(pad(a, k), pad(b, k)))


def subtract(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Componentwise difference a - b with trailing zeros trimmed; may be negative."""
    k = max(len(a), len(b))
    out = [x - y for x, y in zip(pad(a, k), pad(b, k))]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def content(w: Iterable[int]) -> tuple[int, ...]:
    counts: list[int] = []
    for x in w:
        if x < 1:
            raise ValueError(f"letters must be positive, got {x}")
        if x > len(counts):
            counts.extend([0] * (x - len(counts)))
        counts[x - 1] += 1
    return tuple(counts)


def same_content(a: Sequence[int], b: Sequence[int]) -> bool:
    k = max(len(a), len(b))
    return tuple(a) + (0,) * (k - len(a)) == tuple(b) + (0,) * (k - len(b))


def is_yamanouchi(w: Iterable[int], start: Sequence[int] = ()) -> bool:
    """Every prefix of ``w`` (preceded by a word of content ``start``) has partition content."""
    counts = list(start)
    for x in w:
        if x > len(counts):
            counts.extend([0] * (x - len(counts)))
        counts[x - 1] += 1
        if x > 1 and counts[x - 1] > counts[x - 2]:
            return False
    return True


def parse_word(s: str | Sequence[int]) -> Word:
    """Digit string such as ``"21123"`` or an integer sequence."""
    if isinstance(s, str):
        return tuple(int(ch) for ch in s if not ch.isspace())
    return tuple(int(x) for x in s)


def format_word(w: Sequence[int]) -> str | list[int]:
    if all(x <= 9 for x in w):
        return "".join(str(x) for x in w)
    return list(w)


def partitions(n: int, max_length: int | None = None,
               max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in decreasing lexicographic order."""
    if max_part is None or max_part > n:
        max_part = n
    if max_length is None:
        max_length = n
    yield from _partitions_cached(n, max_length, max_part)


@lru_cache(maxsize=None)
def _partitions_cached(n: int, max_length: int, max_part: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    if max_length == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_cached(n - first, max_length - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(max_weight: int, max_length: int) -> list[Partition]:
    """All partitions of weight <= max_weight and length <= max_length, by weight."""
    return [p for w in range(max_weight + 1) for p in partitions(w, max_length)]


def subpartitions(p: Partition, max_length: int | None = None) -> Iterator[Partition]:
    """All partitions contained in ``p``, decreasing lexicographic order."""
    k = len(p) if max_length is None else min(len(p), max_length)

    def rec(i: int, bound: int) -> Iterator[tuple[int, ...]]:
        if i == k:
            yield ()
            return
        for x in range(min(bound, p[i]), -1, -1):
            if x == 0:
                yield ()
                continue
            for rest in rec(i + 1, x):
                yield (x,) + rest

    yield from rec(0, p[0] if p else 0)


def even_partitions(weight: int, max_length: int | None = None) -> list[Partition]:
    """Partitions with lambda_{2i-1} = lambda_{2i}, decreasing lexicographic order."""
    if weight % 2:
        return []
    if max_length is None:
        max_length = weight
    # an even partition is a partition of weight/2 with every part doubled
    return [tuple(x for x in half for _ in range(2))
            for half in partitions(weight // 2, max_length // 2)]

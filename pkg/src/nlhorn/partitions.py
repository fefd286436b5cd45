"""Partitions, index subsets and the combinatorial maps on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of non-negative ints with trailing zeros trimmed.

    Because zeros are trimmed on construction, ``Partition((2, 1, 0)) ==
    Partition((2, 1))`` and both hash alike.  Indexing with :meth:`part` is
    1-based and total: parts past the end are 0.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        for i, p in enumerate(parts):
            if p < 0:
                raise ValueError(f"negative part in {parts}")
            if i and p > parts[i - 1]:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The i-th part, 1-based; 0 beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        return pad(self, n)


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def pad(lam: Sequence[int], n: int) -> tuple[int, ...]:
    """Zero-pad ``lam`` to length ``n``; raises if it has more than n nonzero parts."""
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"{tuple(lam)} has more than {n} parts")
    return tuple(lam) + (0,) * (n - len(lam))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True iff the diagram of ``inner`` sits inside that of ``outer``."""
    outer, inner = Partition(outer), Partition(inner)
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def conjugate(lam: Sequence[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def box_complement(theta: Sequence[int], width: int, height: int) -> Partition:
    """Complement of ``theta`` inside the width x height rectangle, rotated 180 degrees."""
    theta = Partition(theta)
    if len(theta) > height or (theta and theta[0] > width):
        raise ValueError(f"{tuple(theta)} does not fit in a {width}x{height} box")
    padded = tuple(theta) + (0,) * (height - len(theta))
    return Partition(width - p for p in reversed(padded))


def meet(mu: Sequence[int], nu: Sequence[int]) -> Partition:
    """Entrywise minimum."""
    return Partition(min(a, b) for a, b in zip(Partition(mu), Partition(nu)))


def is_horizontal_strip(outer: Sequence[int], inner: Sequence[int]) -> bool:
    outer, inner = Partition(outer), Partition(inner)
    if not contains(outer, inner):
        return False
    return all(outer.part(i + 1) <= inner.part(i) for i in range(1, len(outer) + 1))


def is_vertical_strip(outer: Sequence[int], inner: Sequence[int]) -> bool:
    outer, inner = Partition(outer), Partition(inner)
    if not contains(outer, inner):
        return False
    return all(outer.part(i) <= inner.part(i) + 1 for i in range(1, len(outer) + 1))


def row(p: int) -> Partition:
    return Partition((p,)) if p else Partition()


def column(p: int) -> Partition:
    return Partition((1,) * p)


def scale(lam: Sequence[int], t: int) -> Partition:
    return Partition(t * x for x in lam)


def partitions_of(total: int, max_parts: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``total`` with at most ``max_parts`` parts, in reverse lex order."""
    if max_part is None:
        max_part = total

    def rec(remaining, parts_left, cap):
        if remaining == 0:
            yield ()
            return
        if parts_left == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            if first * parts_left < remaining:
                break
            for rest in rec(remaining - first, parts_left - 1, first):
                yield (first,) + rest

    for p in rec(total, max_parts, max_part):
        yield Partition(p)


def partitions_up_to(n_parts: int, max_size: int) -> Iterator[Partition]:
    """Every partition with at most ``n_parts`` parts and size <= ``max_size``.

    Ordered by size, then reverse lexicographically within a size.
    """
    for s in range(max_size + 1):
        yield from partitions_of(s, n_parts)


def partitions_inside(outer: Sequence[int], total: int | None = None) -> Iterator[Partition]:
    """Partitions contained in ``outer``, optionally restricted to one size.

    Reverse lex order.
    """
    outer = Partition(outer)
    n = len(outer)
    if total is not None and (total < 0 or total > outer.size):
        return

    # suffix capacity for pruning on the requested size
    cap = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        cap[i] = cap[i + 1] + outer[i]

    def rec(i, bound, remaining):
        if i == n:
            if remaining is None or remaining == 0:
                yield ()
            return
        hi = min(outer[i], bound)
        for v in range(hi, -1, -1):
            if remaining is not None:
                if v > remaining:
                    continue
                # remaining rows can hold at most v each
                if remaining - v > min(v * (n - i - 1), cap[i + 1]):
                    break
            rest = None if remaining is None else remaining - v
            for tail in rec(i + 1, v, rest):
                yield (v,) + tail

    for p in rec(0, outer[0] if outer else 0, total):
        yield Partition(p)


@dataclass(frozen=True, order=True)
class IndexSet:
    """A subset of ``[ambient] = {1, ..., ambient}`` stored as a sorted tuple."""

    elems: tuple[int, ...]
    ambient: int

    def __post_init__(self):
        elems = tuple(self.elems)
        object.__setattr__(self, "elems", elems)
        if any(b <= a for a, b in zip(elems, elems[1:])):
            raise ValueError(f"index set not strictly increasing: {elems}")
        if elems and (elems[0] < 1 or elems[-1] > self.ambient):
            raise ValueError(f"{elems} not inside [1, {self.ambient}]")

    @classmethod
    def of(cls, elems: Iterable[int], ambient: int | None = None) -> IndexSet:
        elems = tuple(sorted(set(int(e) for e in elems)))
        if ambient is None:
            ambient = elems[-1] if elems else 0
        return cls(elems, ambient)

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __contains__(self, i) -> bool:
        return i in self.elems

    def complement(self) -> IndexSet:
        """Complement inside ``[ambient]``."""
        s = set(self.elems)
        return IndexSet(tuple(i for i in range(1, self.ambient + 1) if i not in s), self.ambient)

    def union_interval(self, start: int, stop: int) -> IndexSet:
        """Union with the integer interval ``[start, stop]`` (empty if stop < start)."""
        extra = range(start, stop + 1)
        return IndexSet.of(tuple(self.elems) + tuple(extra), max(self.ambient, stop))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elems)) + "}"


def tau(index_set: IndexSet | Iterable[int]) -> Partition:
    """The partition ``(i_d - d, ..., i_2 - 2, i_1 - 1)`` of ``I = {i_1 < ... < i_d}``."""
    elems = sorted(index_set)
    return Partition(i - j for j, i in reversed(list(enumerate(elems, start=1))))


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1,1"``; the empty string and ``"0"`` both mean the empty partition."""
    text = text.strip().strip("()")
    if not text:
        return Partition()
    try:
        return Partition(int(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise ValueError(f"bad partition syntax {text!r}: {exc}") from None


def format_partition(lam: Sequence[int]) -> str:
    lam = Partition(lam)
    return ",".join(map(str, lam)) if lam else "0"


def parse_index_set(text: str, ambient: int | None = None) -> IndexSet:
    """Parse ``"{1,3,4}"`` (braces optional)."""
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    elif "{" in body or "}" in body:
        raise ValueError(f"bad index-set syntax {text!r}")
    try:
        elems = [int(t) for t in body.split(",") if t.strip()]
    except ValueError:
        raise ValueError(f"bad index-set syntax {text!r}") from None
    if len(set(elems)) != len(elems) or any(e < 1 for e in elems):
        raise ValueError(f"bad index-set {text!r}")
    return IndexSet.of(elems, ambient)

"""Integer partitions and the index sequences that label the Schur functions.

A partition is a weakly decreasing tuple of positive integers.  The matching
index object is a strictly increasing integer sequence (s_0, s_1, ...) that
eventually satisfies s_j = j; only the finite prefix before that point is
stored ("Maya sequence", after the Maya-diagram picture of partitions).
The two are identified through s_j = j - parts[j+1] (parts 1-indexed and
padded with zeros), under which the sequence weight sum(j - s_j) equals the
partition weight |parts|.
"""

from __future__ import annotations

from dataclasses import dataclass

Partition = "tuple[int, ...]"


def check_partition(parts) -> tuple:
    parts = tuple(parts)
    for a in parts:
        if not isinstance(a, int) or a < 1:
            raise ValueError(f"partition parts must be positive integers: {parts}")
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return parts


def parse_partition(text: str) -> tuple:
    """Parse the CLI/JSON partition syntax, e.g. "2,1,1"; "" is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    return check_partition(int(piece) for piece in text.split(","))


def partition_text(parts) -> str:
    return ",".join(str(a) for a in parts)


def partitions_of_weight(w: int) -> list:
    """All partitions of w, in lexicographic order on the part tuples."""
    if w < 0:
        raise ValueError(f"weight must be >= 0, got {w}")
    found = []

    def grow(remaining, cap, acc):
        if remaining == 0:
            found.append(tuple(acc))
            return
        for first in range(min(cap, remaining), 0, -1):
            acc.append(first)
            grow(remaining - first, first, acc)
            acc.pop()

    grow(w, w, [])
    found.sort()
    return found


@dataclass(frozen=True)
class MayaSequence:
    """A strictly increasing integer sequence with s_j = j beyond the prefix.

    The stored prefix is minimal: its last entry differs from its index, so
    each sequence has exactly one representation.  The default is the
    identity sequence (0, 1, 2, ...), written ``[]``.
    """

    prefix: tuple = ()

    def __post_init__(self):
        p = self.prefix
        if not isinstance(p, tuple):
            raise ValueError("prefix must be a tuple of integers")
        for a, b in zip(p, p[1:]):
            if b <= a:
                raise ValueError(f"prefix must be strictly increasing: {list(p)}")
        if p and p[-1] >= len(p) - 1:
            # meshing with the tail forces s_J <= J; minimality forbids s_J = J
            raise ValueError(f"prefix not minimal or not meshing with the tail: {list(p)}")

    @classmethod
    def from_prefix(cls, entries) -> "MayaSequence":
        """Build from any explicit prefix, trimming trailing fixed points s_j = j."""
        entries = list(entries)
        while entries and entries[-1] == len(entries) - 1:
            entries.pop()
        return cls(tuple(entries))

    @classmethod
    def from_partition(cls, parts) -> "MayaSequence":
        parts = check_partition(parts)
        return cls(tuple(j - parts[j] for j in range(len(parts))))

    def entry(self, j: int) -> int:
        """s_j for any j >= 0."""
        if j < 0:
            raise IndexError("sequence entries are indexed from 0")
        return self.prefix[j] if j < len(self.prefix) else j

    def to_partition(self) -> tuple:
        return tuple(j - s for j, s in enumerate(self.prefix))

    def weight(self) -> int:
        return sum(j - s for j, s in enumerate(self.prefix))

    def min_truncation(self, n: int) -> int:
        """Smallest N >= 0 with s_i = i for every i > N*n - 1."""
        if n < 1:
            raise ValueError(f"block size must be >= 1, got {n}")
        return -(-len(self.prefix) // n)

    def __str__(self) -> str:
        return "[" + ",".join(str(s) for s in self.prefix) + "]"


def parse_maya(text: str) -> MayaSequence:
    """Parse the CLI/JSON prefix syntax, e.g. "[-2,1]"; non-minimal prefixes are trimmed."""
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"prefix syntax is [s0,s1,...]: {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return MayaSequence()
    return MayaSequence.from_prefix(int(piece) for piece in inner.split(","))


def parse_index(text: str) -> MayaSequence:
    """Accept either partition syntax ("2,1") or prefix syntax ("[-2,0]")."""
    if text.strip().startswith("["):
        return parse_maya(text)
    return MayaSequence.from_partition(parse_partition(text))


def sequences_of_weight(w: int) -> list:
    """All sequences of the given weight, ordered by their partitions."""
    return [MayaSequence.from_partition(parts) for parts in partitions_of_weight(w)]

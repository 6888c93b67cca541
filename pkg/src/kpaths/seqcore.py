"""Restricted normalized color sequences and their enumeration.

A k-path graph of order n corresponds to exactly one sequence of length
n - k - 1 over the colors 1..k+1 that is

* restricted: no two consecutive entries are equal;
* normalized: starts at 1 and never jumps more than one above the running max;
* canonical: not lexicographically larger than the normalization of its own
  reversal (reading the clique path from the other end gives the reversal).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import AdjacentRepeat, InvalidOrder, OracleTooLarge, OutOfValidatedRange, TooManyColors

# Smallest n for which the closed-form counts are tabulated, per k.
VALIDATED_MIN_ORDER = {2: 6, 3: 8, 4: 10}

ORACLE_MAX_LENGTH = 14


def _check_k(k: int) -> None:
    if k < 2:
        raise InvalidOrder(f"k must be >= 2, got {k}")


def _is_valid(entries: Sequence[int], k: int) -> bool:
    top = 0
    prev = 0
    for c in entries:
        if c == prev or c < 1 or c > top + 1 or c > k + 1:
            return False
        prev = c
        if c > top:
            top = c
    return True


@dataclass(frozen=True, order=True)
class ColorSequence:
    """Restricted normalized color sequence over at most ``k + 1`` colors."""

    k: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_k(self.k)
        object.__setattr__(self, "entries", tuple(int(c) for c in self.entries))
        if not _is_valid(self.entries, self.k):
            raise ValueError(f"not a restricted normalized sequence for k={self.k}: {self.entries}")

    @classmethod
    def _trusted(cls, k: int, entries: tuple[int, ...]) -> ColorSequence:
        # hot path for the enumerator; caller guarantees validity
        obj = object.__new__(cls)
        object.__setattr__(obj, "k", k)
        object.__setattr__(obj, "entries", entries)
        return obj

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __str__(self) -> str:
        return " ".join(map(str, self.entries))

    @property
    def order(self) -> int:
        """Order n of the k-path graph this sequence encodes."""
        return len(self.entries) + self.k + 1


def _relabel(entries: Iterable[int]) -> tuple[int, ...]:
    mapping: dict[int, int] = {}
    out = []
    for c in entries:
        if c not in mapping:
            mapping[c] = len(mapping) + 1
        out.append(mapping[c])
    return tuple(out)


def normalize(entries: Sequence[int], k: int) -> ColorSequence:
    """Relabel colors by order of first appearance."""
    _check_k(k)
    entries = tuple(entries)
    for i in range(len(entries) - 1):
        if entries[i] == entries[i + 1]:
            raise AdjacentRepeat(f"entries {i} and {i + 1} are both {entries[i]}")
    if len(set(entries)) > k + 1:
        raise TooManyColors(f"{len(set(entries))} distinct colors, at most {k + 1} allowed for k={k}")
    return ColorSequence._trusted(k, _relabel(entries))


def reverse_canonical(c: ColorSequence) -> ColorSequence:
    """Sequence read from the other end of the clique path."""
    return ColorSequence._trusted(c.k, _relabel(reversed(c.entries)))


def is_canonical(c: ColorSequence) -> bool:
    return c.entries <= _relabel(reversed(c.entries))


def alternating(length: int, first: int = 1) -> list[int]:
    """``[1, 2, 1, 2, ...]`` (or starting at 2 when ``first == 2``)."""
    other = 3 - first
    return [first if i % 2 == 0 else other for i in range(length)]


class SequenceEnumerator:
    """Lexicographic stream of canonical sequences for k-path graphs of order n.

    The state is a single current sequence; :meth:`clone` snapshots it so the
    copy reproduces the identical remaining stream.
    """

    def __init__(self, k: int, n: int):
        _check_k(k)
        if n < k + 1:
            raise InvalidOrder(f"order n={n} is below k+1={k + 1}")
        self.k = k
        self.n = n
        self.length = n - k - 1
        self._current: list[int] | None = None
        self._done = False

    def clone(self) -> SequenceEnumerator:
        other = SequenceEnumerator(self.k, self.n)
        other._current = None if self._current is None else list(self._current)
        other._done = self._done
        return other

    def __iter__(self) -> SequenceEnumerator:
        return self

    def __next__(self) -> ColorSequence:
        while True:
            if self._done:
                raise StopIteration
            if self._current is None:
                self._current = alternating(self.length)
            elif not self._advance():
                self._done = True
                raise StopIteration
            entries = tuple(self._current)
            if entries <= _relabel(reversed(entries)):
                return ColorSequence._trusted(self.k, entries)

    def _advance(self) -> bool:
        """Step to the next restricted normalized sequence; False at the end."""
        p = self._current
        assert p is not None
        length = len(p)
        cap = self.k + 1
        prefix_max = [0] * (length + 1)
        for i, c in enumerate(p):
            prefix_max[i + 1] = max(prefix_max[i], c)
        for i in range(length - 1, 0, -1):
            bound = min(cap, prefix_max[i] + 1)
            v = p[i] + 1
            if v == p[i - 1]:
                v += 1
            if v <= bound:
                p[i] = v
                # smallest completion of the suffix: alternate 1/2 away from v
                prev = v
                for j in range(i + 1, length):
                    prev = 2 if prev == 1 else 1
                    p[j] = prev
                return True
        return False


def enumerate_sequences(k: int, n: int) -> SequenceEnumerator:
    """All non-isomorphic k-path graphs of order n, as canonical sequences.

    Yields in strictly increasing lexicographic order; for ``n == k + 1`` the
    single empty sequence (the complete graph) is produced.
    """
    return SequenceEnumerator(k, n)


@dataclass(frozen=True)
class CountResult:
    k: int
    n: int
    count: int


def count_closed_form(k: int, n: int) -> CountResult:
    """Number of non-isomorphic k-path graphs of order n, k in {2, 3, 4}.

    Exact integer arithmetic; only defined from the first tabulated order
    (n >= 6, 8, 10 for k = 2, 3, 4).
    """
    if k not in VALIDATED_MIN_ORDER:
        raise OutOfValidatedRange(f"no closed form for k={k}")
    if n < VALIDATED_MIN_ORDER[k]:
        raise OutOfValidatedRange(f"closed form for k={k} is validated only for n >= {VALIDATED_MIN_ORDER[k]}")
    even = n % 2 == 0
    if k == 2:
        total = 2 ** (n - 6) + (2 ** ((n - 6) // 2) if even else 2 ** ((n - 7) // 2))
        return CountResult(k, n, total)
    if k == 3:
        num = 3 ** (n - 6) + (2 * 3 ** ((n - 6) // 2) if even else 4 * 3 ** ((n - 7) // 2)) + 1
        den = 4
    else:
        num = 4 ** (n - 8) + (4 * 2 ** (n - 8) if even else 7 * 2 ** (n - 9)) + 1
        den = 3
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"closed form for k={k}, n={n} is not an integer")
    return CountResult(k, n, q)


def _oracle_relabel(seq: Sequence[int]) -> tuple[int, ...]:
    seen: list[int] = []
    for c in seq:
        if c not in seen:
            seen.append(c)
    return tuple(seen.index(c) + 1 for c in seq)


def brute_force_enumerate(k: int, n: int) -> set[ColorSequence]:
    """Exhaustive oracle for :func:`enumerate_sequences`.

    Walks every word of length n-k-1 over {1..k+1}; the last few positions are
    expanded as a numpy block so the sweep over (k+1)^L words stays tractable.
    """
    _check_k(k)
    if n < k + 1:
        raise InvalidOrder(f"order n={n} is below k+1={k + 1}")
    length = n - k - 1
    if length > ORACLE_MAX_LENGTH:
        raise OracleTooLarge(f"sequence length {length} exceeds oracle cap {ORACLE_MAX_LENGTH}")
    if length == 0:
        return {ColorSequence(k, ())}

    colors = np.arange(1, k + 2, dtype=np.int8)
    tail = min(length, 7)
    block = np.array(list(itertools.product(colors, repeat=tail)), dtype=np.int8).reshape(-1, tail)

    found: set[ColorSequence] = set()
    for head in itertools.product(range(1, k + 2), repeat=length - tail):
        words = np.concatenate([np.tile(np.array(head, dtype=np.int8), (len(block), 1)), block], axis=1)
        restricted = np.all(words[:, 1:] != words[:, :-1], axis=1)
        running = np.maximum.accumulate(words, axis=1)
        normalized = (words[:, 0] == 1) & np.all(words[:, 1:] <= running[:, :-1] + 1, axis=1)
        for row in words[restricted & normalized]:
            seq = tuple(int(c) for c in row)
            if seq <= _oracle_relabel(seq[::-1]):
                found.add(ColorSequence(k, seq))
    return found

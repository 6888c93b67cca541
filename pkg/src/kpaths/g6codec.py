"""Strict graph6 encoder/decoder (short form, n <= 62).

Layout: one header byte ``n + 63``, then the upper triangle of the adjacency
matrix in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian
into 6-bit groups, each stored as ``value + 63``; the last group is
zero-padded.
"""

from __future__ import annotations

import os
import tempfile
from typing import Iterable, Iterator

from .errors import BadLength, CharOutOfRange, MalformedHeader, NonzeroPadding, OrderTooLarge
from .graph import Graph

MAX_ORDER = 62


def body_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def encode(g: Graph) -> str:
    n = g.n
    if n < 1:
        raise OrderTooLarge("graph6 needs at least one vertex")
    if n > MAX_ORDER:
        raise OrderTooLarge(f"n={n} needs the long graph6 header (short form supports n <= {MAX_ORDER})")
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, n):
        col = rows[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode(s: str) -> Graph:
    if isinstance(s, bytes):
        s = s.decode("ascii")
    if not s:
        raise MalformedHeader("empty graph6 string")
    if s.startswith(">>graph6<<"):
        raise MalformedHeader("graph6 header lines are not accepted")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise CharOutOfRange(f"character {ch!r} at position {pos} is outside 63..126")
    head = ord(s[0]) - 63
    if head == 63:
        raise MalformedHeader("long-form graph6 headers (n > 62) are not supported")
    n = head
    if n < 1:
        raise MalformedHeader("graph6 order must be at least 1")
    body = s[1:]
    if len(body) != body_length(n):
        raise BadLength(f"n={n} needs {body_length(n)} body bytes, got {len(body)}")

    total = n * (n - 1) // 2
    pad = len(body) * 6 - total
    if pad and (ord(body[-1]) - 63) & ((1 << pad) - 1):
        raise NonzeroPadding("nonzero padding bits in final graph6 byte")

    rows = [0] * n
    bit = 0
    groups = [ord(ch) - 63 for ch in body]
    for j in range(1, n):
        for i in range(j):
            g = groups[bit // 6]
            if (g >> (5 - bit % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    return Graph(n, tuple(rows))


def read_list(path: str | os.PathLike) -> Iterator[Graph]:
    """Graphs from a list file (one graph6 string per line)."""
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.rstrip("\n")
            if not text:
                raise BadLength(f"{path}:{lineno}: blank line in graph6 list")
            yield decode(text)


def write_list(path: str | os.PathLike, strings: Iterable[str]) -> int:
    """Atomically write one graph6 string per line; returns the line count."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".g6-", suffix=".tmp")
    count = 0
    try:
        with os.fdopen(fd, "w", encoding="ascii", newline="\n") as fh:
            for s in strings:
                fh.write(s)
                fh.write("\n")
                count += 1
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return count

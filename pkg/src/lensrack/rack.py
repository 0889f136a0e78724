"""Finite racks: validation, rack rank, operator words and small-order enumeration.

Elements are 1-indexed. A table is read as ``table[i][j] = i ▷ j`` (row is the
element being acted on, column the acting element). Passing ``transposed=True``
reads the matrix the other way round, ``matrix[i][j] = j ▷ i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

MAX_ENUM_ORDER = 6

Operand = Union[int, str]
OpWord = Sequence[tuple[Operand, int]]


class RackError(ValueError):
    """Base class for invalid rack input."""


class NotSquare(RackError):
    pass


class EntryOutOfRange(RackError):
    def __init__(self, i, j, value):
        self.i, self.j, self.value = i, j, value
        super().__init__(f"entry ({i},{j}) = {value} is outside 1..n")


class ColumnNotPermutation(RackError):
    def __init__(self, j):
        self.j = j
        super().__init__(f"column {j} is not a permutation")


class SelfDistributivityFailure(RackError):
    def __init__(self, i, j, k):
        self.i, self.j, self.k = i, j, k
        super().__init__(f"(i▷j)▷k != (i▷k)▷(j▷k) at i={i}, j={j}, k={k}")


class OrderTooLarge(RackError):
    pass


class UnresolvedReference(KeyError):
    pass


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``1..size``; ``images[i - 1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @property
    def size(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(tuple(range(1, size + 1)))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.size else 1

    def is_identity(self) -> bool:
        return all(self(i) == i for i in range(1, self.size + 1))


def permutation_order(perm: Permutation) -> int:
    """Order of ``perm`` as the lcm of its cycle lengths."""
    return perm.order()


@dataclass(frozen=True)
class RackTable:
    """A validated finite rack. Build through :func:`validate_rack`."""

    table: tuple[tuple[int, ...], ...]
    inv_table: tuple[tuple[int, ...], ...] = field(repr=False)
    rank: int

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(1, self.order + 1)

    @cached_property
    def matrix(self) -> np.ndarray:
        m = np.array(self.table, dtype=np.int64)
        m.flags.writeable = False
        return m

    def op(self, i: int, j: int) -> int:
        return self.table[i - 1][j - 1]

    def inv_op(self, i: int, j: int) -> int:
        return self.inv_table[i - 1][j - 1]

    def diagonal(self) -> Permutation:
        return Permutation(tuple(self.table[i][i] for i in range(self.order)))

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.table for v in row)

    def to_text(self) -> str:
        return format_rack(self)


def _as_matrix(matrix) -> list[list[int]]:
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise NotSquare(f"matrix is not square: {[len(r) for r in rows]}")
    for r in rows:
        for v in r:
            if isinstance(v, bool) or int(v) != v:
                raise RackError(f"non-integer entry {v!r}")
    return [[int(v) for v in r] for r in rows]


def validate_rack(matrix, transposed: bool = False) -> RackTable:
    """Check a rack matrix and return the corresponding :class:`RackTable`.

    Raises the first violation found, scanning entries in row-major order
    and self-distributivity triples in ``(i, j, k)`` lexicographic order.
    """
    m = _as_matrix(matrix)
    n = len(m)
    if transposed:
        m = [list(col) for col in zip(*m)]
    for i in range(n):
        for j in range(n):
            if not 1 <= m[i][j] <= n:
                raise EntryOutOfRange(i + 1, j + 1, m[i][j])
    for j in range(n):
        if len({m[i][j] for i in range(n)}) != n:
            raise ColumnNotPermutation(j + 1)

    t = np.array(m, dtype=np.int64) - 1
    # lhs[i,j,k] = (i▷j)▷k, rhs[i,j,k] = (i▷k)▷(j▷k)
    lhs = t[t[:, :, None], np.arange(n)[None, None, :]]
    rhs = t[t[:, None, :], t[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        i, j, k = (int(v) + 1 for v in bad[0])
        raise SelfDistributivityFailure(i, j, k)

    inv = [[0] * n for _ in range(n)]
    for j in range(n):
        for i in range(n):
            inv[m[i][j] - 1][j] = i + 1
    diag = Permutation(tuple(m[i][i] for i in range(n)))
    return RackTable(
        table=tuple(tuple(r) for r in m),
        inv_table=tuple(tuple(r) for r in inv),
        rank=diag.order(),
    )


def op(T: RackTable, i: int, j: int) -> int:
    return T.op(i, j)


def inv_op(T: RackTable, i: int, j: int) -> int:
    """The unique ``z`` with ``op(T, z, j) == i``."""
    return T.inv_op(i, j)


def eval_word(T: RackTable, start: int, word: OpWord, env: Mapping[str, int] | None = None) -> int:
    """Evaluate ``start ▷^e1 y1 ▷^e2 y2 ...`` left to right.

    Operands are rack elements, or string references looked up in ``env``.
    """
    u = start
    for operand, eps in word:
        if isinstance(operand, str):
            if env is None or operand not in env:
                raise UnresolvedReference(operand)
            operand = env[operand]
        if eps == 1:
            u = T.op(u, operand)
        elif eps == -1:
            u = T.inv_op(u, operand)
        else:
            raise ValueError(f"exponent must be +1 or -1, got {eps}")
    return u


def rack_rank(T: RackTable) -> int:
    return T.rank


def is_quandle(T: RackTable) -> bool:
    return T.rank == 1


def operator_equivalent(T: RackTable, i: int, j: int) -> bool:
    return all(T.op(z, i) == T.op(z, j) for z in T.elements)


def operator_classes(T: RackTable) -> list[tuple[int, ...]]:
    """Partition of the rack into operator-equivalence classes, in order of least element."""
    by_column: dict[tuple[int, ...], list[int]] = {}
    for j in T.elements:
        col = tuple(T.op(z, j) for z in T.elements)
        by_column.setdefault(col, []).append(j)
    return sorted(tuple(c) for c in by_column.values())


# -- enumeration -----------------------------------------------------------


def _search_columns(n: int) -> Iterable[tuple[tuple[int, ...], ...]]:
    """Yield every rack on 0..n-1 as a tuple of columns (right translations).

    Self-distributivity in terms of columns is ``s_k ∘ s_j = s_{s_k(j)} ∘ s_k``;
    a pair is checked as soon as all three columns it mentions are fixed.
    """
    perms = list(permutations(range(n)))
    cols: list[tuple[int, ...] | None] = [None] * n

    def consistent(upto: int) -> bool:
        # only pairs touching the newest column `upto` need rechecking
        for j in range(upto + 1):
            for k in range(upto + 1):
                if j != upto and k != upto and cols[k][j] != upto:
                    continue
                sk, sj = cols[k], cols[j]
                target = cols[sk[j]]
                if target is None:
                    continue
                for i in range(n):
                    if sk[sj[i]] != target[sk[i]]:
                        return False
        return True

    def rec(c: int):
        if c == n:
            yield tuple(cols)  # type: ignore[arg-type]
            return
        for perm in perms:
            cols[c] = perm
            if consistent(c):
                yield from rec(c + 1)
        cols[c] = None

    yield from rec(0)


def canonical_form(table: np.ndarray) -> tuple[int, ...]:
    """Lexicographically least flattened table over all relabelings (0-indexed input)."""
    n = table.shape[0]
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    inv = np.argsort(perms, axis=1)
    # relabelled[p, a, b] = perm(table[inv(a), inv(b)])
    inner = table[inv[:, :, None], inv[:, None, :]]
    relabelled = np.take_along_axis(perms, inner.reshape(len(perms), -1), axis=1)
    order = np.lexsort(relabelled.T[::-1])
    return tuple(int(v) for v in relabelled[order[0]])


def enumerate_racks(n: int, up_to_iso: bool = False) -> list[RackTable]:
    """All racks of order ``n`` (n <= 6), optionally one canonical table per isomorphism class.

    Output is sorted by flattened table.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if n > MAX_ENUM_ORDER:
        raise OrderTooLarge(f"rack enumeration is limited to order <= {MAX_ENUM_ORDER}, got {n}")
    flats = set()
    for cols in _search_columns(n):
        t = np.array(cols, dtype=np.int64).T
        if up_to_iso:
            flats.add(canonical_form(t))
        else:
            flats.add(tuple(int(v) for v in t.ravel()))
    out = []
    for flat in sorted(flats):
        rows = [[v + 1 for v in flat[r * n:(r + 1) * n]] for r in range(n)]
        out.append(validate_rack(rows))
    return out


# -- text format -----------------------------------------------------------


def parse_rack(text: str, transposed: bool = False) -> RackTable:
    """Parse the ``rack <n>`` text format."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise RackError("empty rack file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "rack":
        raise RackError(f"line {lineno}: expected 'rack <n>'")
    try:
        n = int(parts[1])
    except ValueError:
        raise RackError(f"line {lineno}: bad order {parts[1]!r}") from None
    if n < 1:
        raise RackError(f"line {lineno}: order must be positive")
    rows = []
    for lineno, line in lines[1:]:
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise RackError(f"line {lineno}: non-integer entry") from None
    if len(rows) != n or any(len(r) != n for r in rows):
        raise NotSquare(f"expected {n} rows of {n} entries")
    return validate_rack(rows, transposed=transposed)


def format_rack(T: RackTable) -> str:
    lines = [f"rack {T.order}"]
    lines += [" ".join(str(v) for v in row) for row in T.table]
    return "\n".join(lines) + "\n"

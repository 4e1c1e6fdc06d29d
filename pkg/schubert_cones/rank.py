#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.
"""Rank matrices of Schubert cells.

The rank matrix of w is the (n+1)x(n+1) matrix with entries
``r[i, j] = #{k <= i : w(k) <= j}`` for ``0 <= i, j <= n``.
"""

import dataclasses
import functools
import typing

import daiquiri
import numpy as np
import numpy.typing as npt

from schubert_cones import exceptions
from schubert_cones import permutation
from schubert_cones import types

LOG = daiquiri.getLogger(__name__)

Entries = npt.NDArray[np.int16]


@dataclasses.dataclass(frozen=True, order=True)
class PillarEntry:
    """An entry r_ij of a rank matrix at a marked position.

    Used for both pillar and essential entries; essential values may be 0.
    """

    row: int
    col: int
    value: int

    @property
    def position(self) -> types.Cell:
        return (self.row, self.col)

    def transposed(self) -> "PillarEntry":
        return PillarEntry(self.col, self.row, self.value)

    def __str__(self) -> str:
        return "({},{})={}".format(self.row, self.col, self.value)


@dataclasses.dataclass(frozen=True, eq=False)
class RankMatrix:
    n: int
    entries: Entries

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=np.int16)
        if entries.shape != (self.n + 1, self.n + 1):
            raise exceptions.InvalidRankMatrix(
                "expected shape {}, got {}".format(
                    (self.n + 1, self.n + 1), entries.shape
                )
            )
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    def __getitem__(self, cell: types.Cell) -> int:
        return int(self.entries[cell])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RankMatrix):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash((self.n, self.entries.tobytes()))

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return {"n": self.n, "entries": self.entries.tolist()}

    @classmethod
    def from_json(cls, data: typing.Mapping[str, typing.Any]) -> "RankMatrix":
        entries = data["entries"]
        n = data.get("n", len(entries) - 1)
        if n < 1 or n > permutation.MAX_N:
            raise exceptions.IndexOutOfRange("n", n, 1, permutation.MAX_N)
        return cls(n, np.asarray(entries))


def rank_matrix(w: permutation.Permutation) -> RankMatrix:
    n = w.n
    dots = np.zeros((n + 1, n + 1), dtype=np.int16)
    dots[np.arange(1, n + 1), np.asarray(w.values)] = 1
    return RankMatrix(n, dots.cumsum(axis=0).cumsum(axis=1))


def longest_rank_matrix(n: int) -> RankMatrix:
    """Return r(w0), whose entries are max(0, i + j - n)."""
    i, j = np.indices((n + 1, n + 1))
    return RankMatrix(n, np.maximum(0, i + j - n))


def rank_matrix_is_valid(r: RankMatrix) -> typing.Optional[str]:
    """Return the first violated axiom, or None when r is a rank matrix."""
    e = r.entries.astype(np.int32)
    k = np.arange(r.n + 1)
    if e[0].any() or e[:, 0].any():
        return "first row and column must be zero"
    if not (np.array_equal(e[r.n], k) and np.array_equal(e[:, r.n], k)):
        return "last row and column must be 0..n"
    right = np.diff(e, axis=1)
    if ((right != 0) & (right != 1)).any():
        return "entries must grow by 0 or 1 along rows"
    down = np.diff(e, axis=0)
    if ((down != 0) & (down != 1)).any():
        return "entries must grow by 0 or 1 along columns"
    if (e[:-1, :-1] + e[1:, 1:] < e[1:, :-1] + e[:-1, 1:]).any():
        return "r[i,j] + r[i+1,j+1] must be >= r[i+1,j] + r[i,j+1]"
    return None


def _first_failure(r: RankMatrix, reason: str) -> exceptions.InvalidRankMatrix:
    e = r.entries.astype(np.int32)
    d = e[1:, 1:] - e[:-1, 1:] - e[1:, :-1] + e[:-1, :-1]
    bad = np.argwhere(d < 0)
    cell = None if len(bad) == 0 else (int(bad[0][0]), int(bad[0][1]))
    return exceptions.InvalidRankMatrix(reason, cell)


def permutation_from_rank_matrix(r: RankMatrix) -> permutation.Permutation:
    """Recover w from the cells where the mixed difference of r is 1."""
    reason = rank_matrix_is_valid(r)
    if reason is not None:
        raise _first_failure(r, reason)
    e = r.entries.astype(np.int32)
    d = e[1:, 1:] - e[:-1, 1:] - e[1:, :-1] + e[:-1, :-1]
    rows, cols = np.nonzero(d)
    if len(rows) != r.n or sorted(rows.tolist()) != list(range(r.n)):
        raise exceptions.InvalidRankMatrix("dots do not form a permutation")
    values = [0] * r.n
    for i, j in zip(rows.tolist(), cols.tolist()):
        values[i] = j + 1
    return permutation.Permutation(tuple(values))


def transpose(r: RankMatrix) -> RankMatrix:
    return RankMatrix(r.n, r.entries.T)


def _entry(w: permutation.Permutation, i: int, j: int) -> int:
    return sum(1 for k in range(i) if w.values[k] <= j)


@functools.lru_cache(maxsize=65536)
def pillars(w: permutation.Permutation) -> typing.Tuple[PillarEntry, ...]:
    """Pillar entries of r(w), in lexicographic order.

    (i, j) is a pillar iff w(i) <= j < w(i+1) and w^-1(j) <= i < w^-1(j+1).
    """
    winv = permutation.inverse(w)
    found = []
    for i in range(1, w.n):
        for j in range(w(i), w(i + 1)):
            if winv(j) <= i < winv(j + 1):
                found.append(PillarEntry(i, j, _entry(w, i, j)))
    return tuple(found)


def essentials(w: permutation.Permutation) -> typing.Tuple[PillarEntry, ...]:
    """Essential entries of r(w): w(i) > j >= w(i+1) and w^-1(j) > i >= w^-1(j+1)."""
    winv = permutation.inverse(w)
    found = []
    for i in range(1, w.n):
        for j in range(w(i + 1), w(i)):
            if winv(j) > i >= winv(j + 1):
                found.append(PillarEntry(i, j, _entry(w, i, j)))
    return tuple(found)


def pillar_entries(r: RankMatrix) -> typing.List[PillarEntry]:
    return list(pillars(permutation_from_rank_matrix(r)))


def essential_entries(r: RankMatrix) -> typing.List[PillarEntry]:
    return list(essentials(permutation_from_rank_matrix(r)))


def pillar_entries_from_matrix(r: RankMatrix) -> typing.List[PillarEntry]:
    """Pillar entries located by the local pattern of r.

    r_ij = r_{i-1,j} + 1 = r_{i,j-1} + 1 and r_ij = r_{i+1,j} = r_{i,j+1}.
    """
    e = r.entries.astype(np.int32)
    c = e[1:-1, 1:-1]
    mask = (
        (c == e[:-2, 1:-1] + 1)
        & (c == e[1:-1, :-2] + 1)
        & (c == e[2:, 1:-1])
        & (c == e[1:-1, 2:])
    )
    return [
        PillarEntry(int(i) + 1, int(j) + 1, int(c[i, j])) for i, j in np.argwhere(mask)
    ]


def render(r: RankMatrix) -> str:
    """Render r as a table, pillars as ``(v)`` and essential entries as ``[v]``."""
    marks: typing.Dict[types.Cell, str] = {}
    for entry in pillar_entries(r):
        marks[entry.position] = "({})".format(entry.value)
    for entry in essential_entries(r):
        marks[entry.position] = "[{}]".format(entry.value)
    cells = [
        [marks.get((i, j), " {} ".format(r[i, j])) for j in range(r.n + 1)]
        for i in range(r.n + 1)
    ]
    width = max(len(cell) for row in cells for cell in row)
    return "\n".join(
        " ".join(cell.rjust(width) for cell in row).rstrip() for row in cells
    )

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
"""Pillar sets: reconstruction, codimension, truncation and linked classes."""

import dataclasses
import typing

import daiquiri

from schubert_cones import exceptions
from schubert_cones import permutation
from schubert_cones import rank
from schubert_cones import types
from schubert_cones import unionfind

LOG = daiquiri.getLogger(__name__)

Permutation = permutation.Permutation
PillarEntry = rank.PillarEntry


@dataclasses.dataclass(frozen=True)
class PillarSet:
    """Pillar entries of a would-be rank matrix of size n, sorted row-major."""

    n: int
    pillars: typing.Tuple[PillarEntry, ...] = ()

    def __post_init__(self) -> None:
        pillars = tuple(sorted(self.pillars))
        object.__setattr__(self, "pillars", pillars)
        if not 1 <= self.n <= permutation.MAX_N:
            raise exceptions.IndexOutOfRange("n", self.n, 1, permutation.MAX_N)
        seen: typing.Set[types.Cell] = set()
        for entry in pillars:
            if entry.position in seen:
                raise exceptions.InvalidPillarSet(
                    "duplicate position {}".format(entry.position)
                )
            seen.add(entry.position)
            if not (1 <= entry.row < self.n and 1 <= entry.col < self.n):
                raise exceptions.InvalidPillarSet(
                    "{} lies outside 1..{}".format(entry, self.n - 1)
                )
            if not 1 <= entry.value <= min(entry.row, entry.col):
                raise exceptions.InvalidPillarSet(
                    "{} must have 1 <= value <= min(row, col)".format(entry)
                )
            if entry.row + entry.col - entry.value >= self.n:
                raise exceptions.InvalidPillarSet(
                    "{} must have row + col - value < {}".format(entry, self.n)
                )

    def __len__(self) -> int:
        return len(self.pillars)

    def __iter__(self) -> typing.Iterator[PillarEntry]:
        return iter(self.pillars)

    def __str__(self) -> str:
        return "; ".join(
            ["n={}".format(self.n)]
            + ["{},{}={}".format(p.row, p.col, p.value) for p in self.pillars]
        )

    def transposed(self) -> "PillarSet":
        return PillarSet(self.n, tuple(p.transposed() for p in self.pillars))

    @classmethod
    def parse(cls, text: str) -> "PillarSet":
        """Parse ``n=9; 2,2=1; 6,4=2``."""
        parts = [part.strip() for part in text.split(";") if part.strip()]
        if not parts or not parts[0].replace(" ", "").startswith("n="):
            raise exceptions.InvalidPillarSet("pillar set must start with n=<size>")
        try:
            n = int(parts[0].replace(" ", "")[2:])
            entries = []
            for part in parts[1:]:
                position, value = part.replace(" ", "").split("=")
                row, col = position.split(",")
                entries.append(PillarEntry(int(row), int(col), int(value)))
        except ValueError:
            raise exceptions.InvalidPillarSet("cannot parse {!r}".format(text))
        return cls(n, tuple(entries))

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return {
            "n": self.n,
            "pillars": [[p.row, p.col, p.value] for p in self.pillars],
        }

    @classmethod
    def from_json(cls, data: typing.Mapping[str, typing.Any]) -> "PillarSet":
        return cls(
            data["n"], tuple(PillarEntry(*map(int, p)) for p in data["pillars"])
        )


@dataclasses.dataclass(frozen=True)
class Reconstruction:
    """Result of :func:`reconstruct_steps`.

    :param increments: k_i, the number of dots placed at step i.
    :param placements: the dots placed at each step, the last one being the
                       fill of the whole grid.
    """

    permutation: Permutation
    pillar_set: PillarSet
    increments: typing.Tuple[int, ...]
    placements: typing.Tuple[typing.Tuple[types.Cell, ...], ...]


def pillar_set(w: Permutation) -> PillarSet:
    return PillarSet(w.n, rank.pillars(w))


def _place(
    dots: typing.Dict[int, int],
    used_cols: typing.Set[int],
    p: int,
    q: int,
    k: int,
    step: int,
) -> typing.List[types.Cell]:
    # free lines of the north-west region, numbered bottom to top and right to left
    rows = [row for row in range(p, 0, -1) if row not in dots]
    cols = [col for col in range(q, 0, -1) if col not in used_cols]
    if len(rows) < k or len(cols) < k:
        raise exceptions.InvalidPillarSet(
            "not enough free lines to place {} dots in rows <= {}, cols <= {}".format(
                k, p, q
            ),
            step,
        )
    placed = []
    for j in range(1, k + 1):
        cell = (rows[k - j], cols[j - 1])
        dots[cell[0]] = cell[1]
        used_cols.add(cell[1])
        placed.append(cell)
    return placed


def reconstruct_steps(ps: PillarSet) -> Reconstruction:
    """Rebuild the permutation whose pillar entries are exactly ps.

    Step i places K_i - L >= 0 dots anti-diagonally in the north-west region of
    the i-th pillar, L being the dots already there. A last step fills the
    whole grid the same way. The result is checked against ps.
    """
    dots: typing.Dict[int, int] = {}
    used_cols: typing.Set[int] = set()
    increments = []
    placements = []
    for step, pillar in enumerate(ps.pillars, start=1):
        p, q = pillar.position
        already = sum(1 for row, col in dots.items() if row <= p and col <= q)
        k = pillar.value - already
        if k < 0:
            raise exceptions.InvalidPillarSet(
                "{} has {} dots already in its north-west region".format(
                    pillar, already
                ),
                step,
            )
        placed = _place(dots, used_cols, p, q, k, step)
        for row, col in placed:
            for earlier in ps.pillars[: step - 1]:
                if row <= earlier.row and col <= earlier.col:
                    raise exceptions.InvalidPillarSet(
                        "dot ({},{}) falls in the north-west region of {}".format(
                            row, col, earlier
                        ),
                        step,
                    )
        increments.append(k)
        placements.append(tuple(placed))

    final_step = len(ps.pillars) + 1
    placements.append(
        tuple(_place(dots, used_cols, ps.n, ps.n, ps.n - len(dots), final_step))
    )
    w = Permutation(tuple(dots[row] for row in range(1, ps.n + 1)))

    found = rank.pillars(w)
    if found != ps.pillars:
        LOG.debug(
            "reconstruction verification failed",
            expected=str(ps),
            found=[str(p) for p in found],
            permutation=str(w),
        )
        raise exceptions.InvalidPillarSet(
            "{} has pillars {} instead".format(w, ", ".join(map(str, found)) or "none")
        )
    return Reconstruction(w, ps, tuple(increments), tuple(placements))


def reconstruct(ps: PillarSet) -> Permutation:
    return reconstruct_steps(ps).permutation


def codim_from_pillars(ps: PillarSet) -> int:
    """Codimension of the cell, sum of k_i (K_i + n - p_i - q_i)."""
    steps = reconstruct_steps(ps)
    return sum(
        k * (pillar.value + ps.n - pillar.row - pillar.col)
        for k, pillar in zip(steps.increments, ps.pillars)
    )


def increments_relation_holds(ps: PillarSet) -> bool:
    """Check K_i = k_i + sum of k_j over the pillars j north-west of and before i."""
    increments = reconstruct_steps(ps).increments
    for i, pillar in enumerate(ps.pillars):
        below = sum(
            increments[j]
            for j, other in enumerate(ps.pillars[:i])
            if other.row <= pillar.row and other.col <= pillar.col
        )
        if pillar.value != increments[i] + below:
            return False
    return True


def single_pillar_permutation(i: int, j: int, a: int, n: int) -> Permutation:
    """The permutation whose only pillar entry is (i, j) = a."""
    if not (1 <= a <= min(i, j) and max(i, j) <= n - 1 and i + j - a < n):
        raise exceptions.InvalidPillarSet(
            "no permutation of S_{} has the single pillar ({},{})={}".format(n, i, j, a)
        )
    values = (
        list(range(n, n - i + a, -1))
        + list(range(j, j - a, -1))
        + list(range(n - i + a, j, -1))
        + list(range(j - a, 0, -1))
    )
    return Permutation(tuple(values))


def crosses(w: Permutation) -> int:
    """Count the pairs of dots with one dot south-east of the other."""
    return sum(
        1
        for i in range(w.n)
        for j in range(i + 1, w.n)
        if w.values[i] < w.values[j]
    )


# Linked classes


def interval(entry: PillarEntry) -> typing.Tuple[int, int]:
    return (min(entry.row, entry.col), max(entry.row, entry.col))


def related(a: PillarEntry, b: PillarEntry) -> bool:
    """Whether the intervals of a and b share an interior point."""
    low_a, high_a = interval(a)
    low_b, high_b = interval(b)
    return max(low_a, low_b) < min(high_a, high_b)


def class_interval(members: typing.Iterable[PillarEntry]) -> typing.Tuple[int, int]:
    intervals = [interval(entry) for entry in members]
    return (min(low for low, _ in intervals), max(high for _, high in intervals))


def linked_classes(
    pillars: typing.Sequence[PillarEntry],
) -> typing.List[typing.Tuple[PillarEntry, ...]]:
    """Partition pillars into linked classes ordered by their intervals."""
    uf: unionfind.UnionFind[PillarEntry] = unionfind.UnionFind(pillars)
    for index, a in enumerate(pillars):
        for b in pillars[index + 1 :]:
            if related(a, b):
                uf.union(a, b)
    classes = [tuple(group) for group in uf.groups()]
    classes.sort(key=class_interval)
    return classes


def truncate(w: Permutation, t: int) -> Permutation:
    """Return the permutation whose pillars are the first t linked classes of w."""
    classes = linked_classes(rank.pillars(w))
    if not 1 <= t <= len(classes):
        raise exceptions.IndexOutOfRange("t", t, 1, len(classes))
    kept = tuple(entry for members in classes[:t] for entry in members)
    return reconstruct(PillarSet(w.n, kept))


# Strips of the diagram


@dataclasses.dataclass(frozen=True, order=True)
class Strip:
    """A height-1 horizontal or width-1 vertical strip of the diagram of w.

    A horizontal strip at ascent i covers the cells (i, j), w(i) <= j < w(i+1);
    a vertical strip at ascent j of w^-1 covers (i, j), w^-1(j) <= i < w^-1(j+1).
    """

    orientation: typing.Literal["horizontal", "vertical"]
    index: int
    start: int
    stop: int

    def cells(self) -> typing.Set[types.Cell]:
        if self.orientation == "horizontal":
            return {(self.index, j) for j in range(self.start, self.stop)}
        return {(i, self.index) for i in range(self.start, self.stop)}


def horizontal_strips(w: Permutation) -> typing.List[Strip]:
    return [
        Strip("horizontal", i, w(i), w(i + 1)) for i in range(1, w.n) if w(i) < w(i + 1)
    ]


def vertical_strips(w: Permutation) -> typing.List[Strip]:
    return [
        Strip("vertical", strip.index, strip.start, strip.stop)
        for strip in horizontal_strips(permutation.inverse(w))
    ]


def strip_intersections(w: Permutation) -> typing.List[types.Cell]:
    """Cells lying on both a horizontal and a vertical strip, sorted."""
    horizontal: typing.Set[types.Cell] = set()
    for strip in horizontal_strips(w):
        horizontal |= strip.cells()
    vertical: typing.Set[types.Cell] = set()
    for strip in vertical_strips(w):
        vertical |= strip.cells()
    return sorted(horizontal & vertical)

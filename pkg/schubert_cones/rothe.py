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
"""Rothe diagrams.

In the standard diagram every dot shades the cells east of it and south of
it. In the opposite diagram it shades the cells west of it and north of it.
The open cells whose south and east neighbours are both closed form the
frontier: essential positions in the standard flavor, pillar positions in
the opposite one.
"""

import dataclasses
import typing

from schubert_cones import exceptions
from schubert_cones import permutation
from schubert_cones import rank
from schubert_cones import types

DOT = "•"
SHADED = "#"
WHITE = "."
FRONTIER = "o"
FRONTIER_DOT = "@"


@dataclasses.dataclass(frozen=True)
class RotheDiagram:
    """A Rothe diagram; ``shaded[i - 1][j - 1]`` tells whether (i, j) is shaded.

    Dotted cells are never shaded.
    """

    n: int
    dots: typing.FrozenSet[types.Cell]
    shaded: typing.Tuple[typing.Tuple[bool, ...], ...]
    flavor: types.Flavor

    def is_open(self, cell: types.Cell) -> bool:
        """White cells, plus the dots in the opposite flavor."""
        if self.shaded[cell[0] - 1][cell[1] - 1]:
            return False
        return self.flavor == "opposite" or cell not in self.dots

    def white_cells(self) -> typing.List[types.Cell]:
        """Open cells without a dot."""
        return [
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(1, self.n + 1)
            if self.is_open((i, j)) and (i, j) not in self.dots
        ]

    def frontier(self) -> typing.List[rank.PillarEntry]:
        """Open cells whose south and east neighbours are closed, with r_ij."""
        found = []
        for i in range(1, self.n):
            for j in range(1, self.n):
                if not self.is_open((i, j)):
                    continue
                if self.is_open((i + 1, j)) or self.is_open((i, j + 1)):
                    continue
                value = sum(1 for row, col in self.dots if row <= i and col <= j)
                found.append(rank.PillarEntry(i, j, value))
        return found

    def render(self) -> str:
        frontier = {entry.position for entry in self.frontier()}
        lines = []
        for i in range(1, self.n + 1):
            chars = []
            for j in range(1, self.n + 1):
                cell = (i, j)
                if cell in frontier:
                    chars.append(FRONTIER_DOT if cell in self.dots else FRONTIER)
                elif cell in self.dots:
                    chars.append(DOT)
                elif self.shaded[i - 1][j - 1]:
                    chars.append(SHADED)
                else:
                    chars.append(WHITE)
            lines.append(" ".join(chars))
        return "\n".join(lines)


def rothe(
    w: permutation.Permutation, flavor: types.Flavor = "standard"
) -> RotheDiagram:
    if flavor not in types.FLAVORS:
        raise exceptions.InvalidInput("unknown diagram flavor {!r}".format(flavor))
    winv = permutation.inverse(w)
    rows = []
    for i in range(1, w.n + 1):
        row = []
        for j in range(1, w.n + 1):
            if w(i) == j:
                row.append(False)
            elif flavor == "standard":
                row.append(not (j < w(i) and winv(j) > i))
            else:
                row.append(j < w(i) or i < winv(j))
        rows.append(tuple(row))
    dots = frozenset((i, w(i)) for i in range(1, w.n + 1))
    return RotheDiagram(w.n, dots, tuple(rows), flavor)

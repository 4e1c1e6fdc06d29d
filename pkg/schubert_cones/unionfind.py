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
"""Disjoint-set forest with union by rank and path compression."""

import typing


class _Comparable(typing.Protocol):
    def __lt__(self, other: typing.Any) -> bool: ...

    def __hash__(self) -> int: ...


T = typing.TypeVar("T", bound=_Comparable)


class UnionFind(typing.Generic[T]):
    """Dictionary-based union-find over hashable, orderable items.

    Items never passed to :meth:`add` or :meth:`union` are not tracked.
    """

    def __init__(self, items: typing.Iterable[T] = ()) -> None:
        self._parents: typing.Dict[T, T] = {}
        self._ranks: typing.Dict[T, int] = {}
        for item in items:
            self.add(item)

    def __len__(self) -> int:
        return len(self._parents)

    def __contains__(self, item: object) -> bool:
        return item in self._parents

    def add(self, item: T) -> None:
        if item not in self._parents:
            self._parents[item] = item
            self._ranks[item] = 0

    def find(self, item: T) -> T:
        self.add(item)
        path = [item]
        root = self._parents[item]
        while root != path[-1]:
            path.append(root)
            root = self._parents[root]
        for ancestor in path:
            self._parents[ancestor] = root
        return root

    def union(self, a: T, b: T) -> bool:
        """Merge the sets of a and b; return False if they were already one."""
        root_a = self.find(a)
        root_b = self.find(b)
        if root_a == root_b:
            return False
        rank_a = self._ranks[root_a]
        rank_b = self._ranks[root_b]
        if rank_a < rank_b:
            self._parents[root_a] = root_b
        elif rank_a > rank_b:
            self._parents[root_b] = root_a
        else:
            self._parents[root_b] = root_a
            self._ranks[root_a] += 1
        return True

    def connected(self, a: T, b: T) -> bool:
        return self.find(a) == self.find(b)

    def groups(self) -> typing.List[typing.List[T]]:
        """Return every set sorted, the sets ordered by their smallest item.

        The result does not depend on the order of the unions.
        """
        by_root: typing.Dict[T, typing.List[T]] = {}
        for item in self._parents:
            by_root.setdefault(self.find(item), []).append(item)
        groups = [sorted(members) for members in by_root.values()]
        groups.sort(key=lambda members: members[0])
        return groups

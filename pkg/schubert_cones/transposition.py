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
"""Partial transpositions of pillar sets and the cone classes they generate.

Transposing whole linked classes of pillars is admissible and keeps the
tangent cone of the Schubert variety. Everything else goes through
:func:`transpose_pillars`, which only reports what happened.
"""

import concurrent.futures
import dataclasses
import enum
import functools
import itertools
import typing

import daiquiri

from schubert_cones import config
from schubert_cones import exceptions
from schubert_cones import permutation
from schubert_cones import pillars as pillars_mod
from schubert_cones import rank
from schubert_cones import types
from schubert_cones import unionfind

LOG = daiquiri.getLogger(__name__)

Permutation = permutation.Permutation
PillarEntry = rank.PillarEntry


@dataclasses.dataclass(frozen=True)
class LinkingGraph:
    """Pillars of r(w), related pairs, and the linked classes in interval order."""

    vertices: typing.Tuple[PillarEntry, ...]
    edges: typing.Tuple[typing.Tuple[PillarEntry, PillarEntry], ...]
    components: typing.Tuple[typing.Tuple[PillarEntry, ...], ...]

    def intervals(self) -> typing.List[typing.Tuple[int, int]]:
        return [pillars_mod.class_interval(c) for c in self.components]


def linking_graph(w: Permutation) -> LinkingGraph:
    vertices = rank.pillars(w)
    edges = tuple(
        (a, b)
        for a, b in itertools.combinations(vertices, 2)
        if pillars_mod.related(a, b)
    )
    return LinkingGraph(vertices, edges, tuple(pillars_mod.linked_classes(vertices)))


class OutcomeKind(enum.Enum):
    SAME_PERMUTATION_CLASS = "SamePermutationClass"
    DIFFERENT_LENGTH = "DifferentLength"
    NO_RANK_MATRIX = "NoRankMatrix"


@dataclasses.dataclass(frozen=True)
class TranspositionOutcome:
    kind: OutcomeKind
    result: typing.Optional[Permutation] = None
    reason: typing.Optional[str] = None

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return {
            "kind": self.kind.value,
            "result": None if self.result is None else str(self.result),
            "reason": self.reason,
        }


def transpose_pillars(
    w: Permutation, selected: typing.Iterable[PillarEntry]
) -> TranspositionOutcome:
    """Transpose an arbitrary subset of the pillars of w and classify the result.

    The subset does not have to be a union of linked classes.
    """
    chosen = set(selected)
    own = rank.pillars(w)
    unknown = chosen.difference(own)
    if unknown:
        raise exceptions.InvalidPillarSet(
            "{} are not pillars of {}".format(", ".join(map(str, sorted(unknown))), w)
        )
    entries = [p.transposed() if p in chosen else p for p in own]
    try:
        result = pillars_mod.reconstruct(pillars_mod.PillarSet(w.n, tuple(entries)))
    except exceptions.InvalidPillarSet as e:
        return TranspositionOutcome(OutcomeKind.NO_RANK_MATRIX, reason=e.reason)
    if permutation.length(result) != permutation.length(w):
        return TranspositionOutcome(OutcomeKind.DIFFERENT_LENGTH, result)
    return TranspositionOutcome(OutcomeKind.SAME_PERMUTATION_CLASS, result)


def partial_transpose(
    w: Permutation, classes: typing.Iterable[int]
) -> TranspositionOutcome:
    """Transpose the linked classes of w with the given 1-based indices."""
    components = pillars_mod.linked_classes(rank.pillars(w))
    selected: typing.List[PillarEntry] = []
    for index in sorted(set(classes)):
        if not 1 <= index <= len(components):
            raise exceptions.IndexOutOfRange("class", index, 1, len(components))
        selected.extend(components[index - 1])
    outcome = transpose_pillars(w, selected)
    if outcome.kind != OutcomeKind.SAME_PERMUTATION_CLASS:
        LOG.warning(
            "admissible transposition did not give a permutation of equal length",
            permutation=str(w),
            classes=sorted(set(classes)),
            outcome=outcome.kind.value,
            reason=outcome.reason,
        )
    return outcome


def _format_stage(values: typing.Sequence[typing.Optional[int]], cut: int) -> str:
    left = " ".join("." if v is None else str(v) for v in values[:cut])
    right = " ".join("." if v is None else str(v) for v in values[cut:])
    return "{} | {}".format(left, right).strip(" |")


def elementary_partial_transpose_trace(
    w: Permutation, t: int
) -> typing.Tuple[Permutation, typing.List[str]]:
    """Transpose the first t linked classes of w directly on the one-line notation.

    With c the right end of the first t classes, the dots of w in rows and
    columns <= c are transposed, those in rows and columns > c are kept and
    the remaining rows get the remaining columns in decreasing order.
    Returns the result and the four stages, the cut marked by ``|``.
    """
    components = pillars_mod.linked_classes(rank.pillars(w))
    if not 1 <= t <= len(components):
        raise exceptions.IndexOutOfRange("t", t, 1, len(components))
    cut = max(max(p.row, p.col) for c in components[:t] for p in c)
    n = w.n

    kept: typing.List[typing.Optional[int]] = [
        v if (i < cut) == (v <= cut) else None for i, v in enumerate(w.values)
    ]
    transposed: typing.List[typing.Optional[int]] = [
        v if v is not None and v > cut else None for v in kept
    ]
    for i, v in enumerate(kept[:cut], start=1):
        if v is not None:
            transposed[v - 1] = i
    used = {v for v in transposed if v is not None}
    remaining = iter(sorted(set(range(1, n + 1)) - used, reverse=True))
    filled = [v if v is not None else next(remaining) for v in transposed]

    stages = [
        _format_stage(list(w.values), cut),
        _format_stage(kept, cut),
        _format_stage(transposed, cut),
        _format_stage(filled, cut),
    ]
    return Permutation(tuple(filled)), stages


def elementary_partial_transpose(w: Permutation, t: int) -> Permutation:
    return elementary_partial_transpose_trace(w, t)[0]


def _movable_classes(w: Permutation) -> typing.List[int]:
    # diagonal classes are fixed by transposition
    components = pillars_mod.linked_classes(rank.pillars(w))
    return [
        index
        for index, members in enumerate(components, start=1)
        if any(p.row != p.col for p in members)
    ]


@functools.lru_cache(maxsize=65536)
def neighbours(w: Permutation) -> typing.Tuple[Permutation, ...]:
    """Permutations reached from w by one admissible partial transposition."""
    movable = _movable_classes(w)
    found = set()
    for size in range(1, len(movable) + 1):
        for subset in itertools.combinations(movable, size):
            outcome = partial_transpose(w, subset)
            if outcome.result is not None and outcome.kind == (
                OutcomeKind.SAME_PERMUTATION_CLASS
            ):
                found.add(outcome.result)
    found.discard(w)
    return tuple(sorted(found))


def cone_class(w: Permutation) -> typing.FrozenSet[Permutation]:
    """Closure of {w} under admissible partial transpositions."""
    seen = {w}
    todo = [w]
    while todo:
        for other in neighbours(todo.pop()):
            if other not in seen:
                seen.add(other)
                todo.append(other)
    return frozenset(seen)


@dataclasses.dataclass(frozen=True)
class Classification:
    """Partition of S_n into cone classes.

    Members of each class are sorted, the classes by (dimension, representative)
    where the representative is the smallest member.
    """

    n: int
    classes: typing.Tuple[typing.Tuple[Permutation, ...], ...]

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self, w: Permutation) -> typing.Tuple[Permutation, ...]:
        for members in self.classes:
            if w in members:
                return members
        raise exceptions.InvalidPermutation(w.values, "not in S_{}".format(self.n))

    def by_dimension(self) -> typing.List[int]:
        counts = [0] * (self.n * (self.n - 1) // 2 + 1)
        for members in self.classes:
            counts[permutation.length(members[0])] += 1
        return counts


def _sort_classes(
    groups: typing.Iterable[typing.Iterable[Permutation]],
) -> typing.Tuple[typing.Tuple[Permutation, ...], ...]:
    classes = [tuple(sorted(members)) for members in groups]
    classes.sort(key=lambda members: (permutation.length(members[0]), members[0]))
    return tuple(classes)


def _neighbour_edges(
    chunk: typing.Sequence[types.OneLine],
) -> typing.List[typing.Tuple[types.OneLine, types.OneLine]]:
    edges = []
    for values in chunk:
        w = Permutation(values)
        for other in neighbours(w):
            edges.append((values, other.values))
    return edges


def classify_all(
    n: int, limits: config.Limits = config.DEFAULT_LIMITS
) -> Classification:
    """Partition S_n into cone classes.

    The neighbour search runs on ``limits.jobs`` processes; edges are merged
    in a single union-find so the result does not depend on the schedule.
    """
    if n < 1:
        raise exceptions.IndexOutOfRange("n", n, 1, limits.max_classify_n)
    limits.check_n(n)
    everything = [w.values for w in permutation.all_permutations(n)]
    size = max(1, len(everything) // (4 * max(1, limits.jobs)))
    chunks = [everything[i : i + size] for i in range(0, len(everything), size)]

    uf: unionfind.UnionFind[types.OneLine] = unionfind.UnionFind(everything)
    if limits.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=limits.jobs) as pool:
            results = list(pool.map(_neighbour_edges, chunks))
    else:
        results = [_neighbour_edges(chunk) for chunk in chunks]
    for edges in results:
        for a, b in edges:
            uf.union(a, b)

    classification = Classification(
        n,
        _sort_classes(
            [Permutation(values) for values in group] for group in uf.groups()
        ),
    )
    LOG.info(
        "classified permutations",
        n=n,
        classes=len(classification),
        jobs=limits.jobs,
    )
    return classification


def _is_power_of_two(k: int) -> bool:
    return k > 0 and k & (k - 1) == 0


def pow2_violations(
    classes: typing.Iterable[typing.Sequence[Permutation]],
) -> typing.List[typing.Tuple[Permutation, ...]]:
    """Classes whose size is not a power of two."""
    violations = []
    for members in classes:
        if not _is_power_of_two(len(members)):
            LOG.warning(
                "cone class size is not a power of two",
                size=len(members),
                members=[str(w) for w in members],
            )
            violations.append(tuple(members))
    return violations


@dataclasses.dataclass(frozen=True)
class KnownGap:
    """A non-admissible transposition landing in another cone class of equal length."""

    source: Permutation
    target: Permutation
    transposed: typing.Tuple[PillarEntry, ...]

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return {
            "source": str(self.source),
            "target": str(self.target),
            "transposed": [str(p) for p in self.transposed],
        }


def known_gaps(perms: typing.Iterable[Permutation]) -> typing.List[KnownGap]:
    """Report equal-length permutations reached outside the cone class.

    Every subset of pillars that is not a union of linked classes is
    transposed; a gap is a result of the same length that
    :func:`cone_class` does not contain.
    """
    gaps = []
    for w in perms:
        own = rank.pillars(w)
        components = pillars_mod.linked_classes(own)
        klass = cone_class(w)
        reported: typing.Set[Permutation] = set()
        for size in range(1, len(own) + 1):
            for subset in itertools.combinations(own, size):
                chosen = set(subset)
                if all(
                    chosen.issuperset(c) or chosen.isdisjoint(c) for c in components
                ):
                    continue
                outcome = transpose_pillars(w, subset)
                if (
                    outcome.kind != OutcomeKind.SAME_PERMUTATION_CLASS
                    or outcome.result is None
                    or outcome.result in klass
                    or outcome.result in reported
                ):
                    continue
                reported.add(outcome.result)
                gap = KnownGap(w, outcome.result, tuple(subset))
                LOG.warning(
                    "non-admissible transposition keeps the length",
                    source=str(w),
                    target=str(outcome.result),
                    transposed=[str(p) for p in subset],
                )
                gaps.append(gap)
    return gaps

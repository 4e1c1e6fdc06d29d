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
"""Rank conditions evaluated on points over F_q.

Points of F_q^(n(n-1)/2) are numbered in mixed radix, little-endian, the
coordinates x_ij sorted by (i, j): point k has ``x_c = (k // q**c) % q``.
Sweeps walk contiguous index ranges in chunks and evaluate every rank
condition on a whole chunk at once.
"""

import concurrent.futures
import dataclasses
import functools
import typing

import daiquiri
import numpy as np
import numpy.typing as npt
import sympy

from schubert_cones import config
from schubert_cones import equations
from schubert_cones import exceptions
from schubert_cones import permutation
from schubert_cones import rank
from schubert_cones import types

LOG = daiquiri.getLogger(__name__)

IntArray = npt.NDArray[np.int64]
BoolArray = npt.NDArray[np.bool_]


@dataclasses.dataclass(frozen=True)
class CoordinatePoint:
    """Values of x_ij, i > j, sorted by (i, j); q is None over the rationals."""

    n: int
    values: typing.Tuple[int, ...]
    q: typing.Optional[int] = None

    def __post_init__(self) -> None:
        expected = self.n * (self.n - 1) // 2
        if len(self.values) != expected:
            raise exceptions.InvalidInput(
                "a point of n={} has {} coordinates, got {}".format(
                    self.n, expected, len(self.values)
                )
            )
        if self.q is not None:
            object.__setattr__(
                self, "values", tuple(int(v) % self.q for v in self.values)
            )

    def matrix(self) -> IntArray:
        x = np.eye(self.n, dtype=np.int64)
        x[np.tril_indices(self.n, -1)] = self.values
        return x

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return {"n": self.n, "q": self.q, "values": list(self.values)}


def check_prime(q: int) -> None:
    if not sympy.isprime(q):
        raise exceptions.InvalidInput("q = {} is not a prime".format(q))


def point_at(n: int, q: int, index: int) -> CoordinatePoint:
    count = n * (n - 1) // 2
    return CoordinatePoint(n, tuple((index // q**c) % q for c in range(count)), q)


def point_count(n: int, q: int) -> int:
    return int(q ** (n * (n - 1) // 2))


def points_block(n: int, q: int, start: int, stop: int) -> IntArray:
    """Unitriangular matrices of the points start..stop-1, shape (B, n, n)."""
    count = n * (n - 1) // 2
    index = np.arange(start, stop, dtype=np.int64)
    radix = np.int64(q) ** np.arange(count, dtype=np.int64)
    digits = (index[:, None] // radix[None, :]) % q
    block = np.broadcast_to(np.eye(n, dtype=np.int64), (len(index), n, n)).copy()
    rows, cols = np.tril_indices(n, -1)
    block[:, rows, cols] = digits
    return block


@functools.lru_cache(maxsize=None)
def _inverses(p: int) -> IntArray:
    table = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        table[x] = pow(x, p - 2, p)
    return table


def batched_rank_mod_p(matrices: IntArray, p: int) -> IntArray:
    """Ranks over F_p of a stack of matrices of shape (B, R, C)."""
    a = np.array(matrices, dtype=np.int64) % p
    batch, rows, cols = a.shape
    ranks = np.zeros(batch, dtype=np.int64)
    if rows == 0 or cols == 0:
        return ranks
    inverses = _inverses(p)
    row_index = np.arange(rows)
    for col in range(cols):
        eligible = (a[:, :, col] != 0) & (row_index[None, :] >= ranks[:, None])
        has_pivot = eligible.any(axis=1)
        if not has_pivot.any():
            continue
        b = np.nonzero(has_pivot)[0]
        pivot = np.argmax(eligible[b], axis=1)
        target = ranks[b]
        pivot_rows = a[b, pivot].copy()
        a[b, pivot] = a[b, target]
        a[b, target] = pivot_rows
        scale = inverses[a[b, target, col]]
        a[b, target] = (a[b, target] * scale[:, None]) % p
        factors = a[b, :, col].copy()
        factors[np.arange(len(b)), target] = 0
        a[b] = (a[b] - factors[:, :, None] * a[b, target][:, None, :]) % p
        ranks[b] += 1
    return ranks


def _conditions(
    w: permutation.Permutation, scope: types.Scope
) -> typing.List[typing.Tuple[int, int, int]]:
    r = rank.rank_matrix(w)
    return [(i, j, i - r[i, j]) for i, j in equations.positions(w, scope)]


def _holds_block(
    block: IntArray,
    conditions: typing.Sequence[typing.Tuple[int, int, int]],
    q: int,
    semantics: types.Semantics,
) -> BoolArray:
    ok = np.ones(len(block), dtype=bool)
    for i, j, bound in conditions:
        ranks = batched_rank_mod_p(block[:, j:, :i], q)
        if semantics == "variety":
            ok &= ranks <= bound
        else:
            ok &= ranks == bound
    return ok


def _check_semantics(semantics: str) -> None:
    if semantics not in types.SEMANTICS:
        raise exceptions.InvalidInput("unknown semantics {!r}".format(semantics))


def rank_condition_holds(
    point: CoordinatePoint,
    w: permutation.Permutation,
    scope: types.Scope = "pillar",
    semantics: types.Semantics = "variety",
) -> bool:
    """Whether the flag of point satisfies the rank conditions of w."""
    _check_semantics(semantics)
    if point.n != w.n:
        raise exceptions.InvalidInput("point and permutation sizes differ")
    conditions = _conditions(w, scope)
    if point.q is not None:
        block = point.matrix()[None]
        return bool(_holds_block(block, conditions, point.q, semantics)[0])
    x = sympy.Matrix(point.matrix().tolist())
    for i, j, bound in conditions:
        found = x[j:, :i].rank()
        if found > bound or (semantics == "cell" and found != bound):
            return False
    return True


def _ranks_of_point(point: CoordinatePoint) -> typing.Dict[types.Cell, int]:
    x = point.matrix()
    n = point.n
    result = {}
    for i in range(1, n):
        for j in range(1, n):
            if point.q is None:
                result[(i, j)] = int(sympy.Matrix(x[j:, :i].tolist()).rank())
            else:
                result[(i, j)] = int(batched_rank_mod_p(x[None, j:, :i], point.q)[0])
    return result


def rank_matrix_of_point(point: CoordinatePoint) -> rank.RankMatrix:
    """r_ij = i - rank(M_ij), the rank matrix of the flag of point."""
    n = point.n
    entries = np.zeros((n + 1, n + 1), dtype=np.int16)
    entries[n, :] = np.arange(n + 1)
    entries[:, n] = np.arange(n + 1)
    for (i, j), found in _ranks_of_point(point).items():
        entries[i, j] = i - found
    return rank.RankMatrix(n, entries)


def variety_contains(point: CoordinatePoint, w: permutation.Permutation) -> bool:
    """Whether the Schubert variety of w contains the flag of point.

    That is the case iff the rank matrix of the flag dominates r(w).
    """
    ours = rank_matrix_of_point(point).entries
    return bool(np.all(ours >= rank.rank_matrix(w).entries))


def _ranges(total: int, chunk: int) -> typing.List[typing.Tuple[int, int]]:
    return [(start, min(total, start + chunk)) for start in range(0, total, chunk)]


def _count_range(
    args: typing.Tuple[
        permutation.Permutation, int, types.Scope, types.Semantics, int, int
    ],
) -> int:
    w, q, scope, semantics, start, stop = args
    block = points_block(w.n, q, start, stop)
    return int(_holds_block(block, _conditions(w, scope), q, semantics).sum())


def _map(
    function: typing.Callable[[typing.Any], typing.Any],
    tasks: typing.Sequence[typing.Any],
    jobs: int,
) -> typing.List[typing.Any]:
    if jobs > 1 and len(tasks) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(function, tasks))
    return [function(task) for task in tasks]


def count_solutions(
    w: permutation.Permutation,
    q: int,
    scope: types.Scope = "pillar",
    semantics: types.Semantics = "variety",
    limits: config.Limits = config.DEFAULT_LIMITS,
) -> int:
    """Number of points over F_q satisfying the rank conditions of w."""
    check_prime(q)
    _check_semantics(semantics)
    equations.positions(w, scope)
    total = point_count(w.n, q)
    limits.check_points(total)
    tasks = [
        (w, q, scope, semantics, start, stop)
        for start, stop in _ranges(total, limits.chunk_size)
    ]
    count = sum(_map(_count_range, tasks, limits.jobs))
    LOG.debug(
        "counted points",
        permutation=str(w),
        q=q,
        scope=scope,
        semantics=semantics,
        count=count,
        total=total,
    )
    return count


@dataclasses.dataclass(frozen=True)
class SetComparison:
    """Outcome of comparing two solution sets point by point.

    ``first_divergence`` is the smallest point index where they differ.
    """

    w: permutation.Permutation
    q: int
    equal: bool
    points: int
    first_divergence: typing.Optional[int] = None

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return {
            "permutation": str(self.w),
            "q": self.q,
            "equal": self.equal,
            "points": self.points,
            "first_divergence": self.first_divergence,
        }


def _divergence_range(
    args: typing.Tuple[
        permutation.Permutation,
        int,
        types.Scope,
        types.Scope,
        types.Semantics,
        int,
        int,
    ],
) -> typing.Optional[int]:
    w, q, left, right, semantics, start, stop = args
    block = points_block(w.n, q, start, stop)
    a = _holds_block(block, _conditions(w, left), q, semantics)
    b = _holds_block(block, _conditions(w, right), q, semantics)
    differ = np.nonzero(a != b)[0]
    if len(differ) == 0:
        return None
    return start + int(differ[0])


def compare_solution_sets(
    w: permutation.Permutation,
    q: int,
    left: types.Scope = "pillar",
    right: types.Scope = "all",
    semantics: types.Semantics = "variety",
    limits: config.Limits = config.DEFAULT_LIMITS,
) -> SetComparison:
    check_prime(q)
    _check_semantics(semantics)
    total = point_count(w.n, q)
    limits.check_points(total)
    tasks = [
        (w, q, left, right, semantics, start, stop)
        for start, stop in _ranges(total, limits.chunk_size)
    ]
    if limits.jobs > 1:
        results = _map(_divergence_range, tasks, limits.jobs)
        found = [d for d in results if d is not None]
        first = min(found) if found else None
    else:
        first = None
        for task in tasks:
            first = _divergence_range(task)
            if first is not None:
                break
    if first is not None:
        LOG.warning(
            "solution sets differ",
            permutation=str(w),
            q=q,
            left=left,
            right=right,
            index=first,
            point=list(point_at(w.n, q, first).values),
        )
    return SetComparison(w, q, first is None, total, first)


def verify_pillar_sufficiency(
    perms: typing.Iterable[permutation.Permutation],
    q: int,
    limits: config.Limits = config.DEFAULT_LIMITS,
) -> typing.List[SetComparison]:
    """Compare the pillar-only and all-entries variety systems of each w."""
    return [compare_solution_sets(w, q, limits=limits) for w in perms]


def sample_permutations(
    n: int, count: int, seed: int = 0
) -> typing.List[permutation.Permutation]:
    """count distinct random elements of S_n, sorted."""
    rng = np.random.default_rng(seed)
    found: typing.Set[permutation.Permutation] = set()
    limit = 1
    for k in range(2, n + 1):
        limit *= k
    while len(found) < min(count, limit):
        values = tuple(int(v) + 1 for v in rng.permutation(n))
        found.add(permutation.Permutation(values))
    return sorted(found)

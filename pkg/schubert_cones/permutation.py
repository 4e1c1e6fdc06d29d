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
"""Permutations of S_n in one-line notation.

Values are 1-based: ``Permutation((2, 3, 4, 1))`` sends 1 to 2, 2 to 3, and
so on. Products compose like functions, ``multiply(u, v)(k) == u(v(k))``, so
that ``s1 s2 s3 == 2341``.
"""

import dataclasses
import functools
import itertools
import typing

import daiquiri

from schubert_cones import exceptions
from schubert_cones import types

LOG = daiquiri.getLogger(__name__)

# Rank matrices are stored as int16, see schubert_cones.rank.
MAX_N = 255


@dataclasses.dataclass(frozen=True, order=True)
class Permutation:
    """An element w of S_n, stored as the tuple w(1), ..., w(n)."""

    values: types.OneLine

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        if n < 1:
            raise exceptions.InvalidPermutation(values, "n must be at least 1")
        if n > MAX_N:
            raise exceptions.InvalidPermutation(
                values, "n must be at most {}".format(MAX_N)
            )
        if sorted(values) != list(range(1, n + 1)):
            raise exceptions.InvalidPermutation(
                values, "values must be a permutation of 1..{}".format(n)
            )

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> typing.Iterator[int]:
        return iter(self.values)

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.values)
        return ",".join(str(v) for v in self.values)

    def __repr__(self) -> str:
        return "Permutation({})".format(self)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse ``4231``, ``12,2,9,...`` or ``(12, 2, 9, ...)``."""
        stripped = text.strip().strip("()[]").replace(" ", "")
        if not stripped:
            raise exceptions.InvalidPermutation((), "empty permutation")
        try:
            if "," in stripped:
                values = tuple(int(part) for part in stripped.split(","))
            else:
                values = tuple(int(ch) for ch in stripped)
        except ValueError:
            raise exceptions.InvalidPermutation(
                (), "cannot parse {!r}".format(text)
            )
        if "," not in stripped and len(values) > 9:
            raise exceptions.InvalidPermutation(
                values, "use the comma form for n > 9"
            )
        return cls(values)

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return {"n": self.n, "values": list(self.values)}

    @classmethod
    def from_json(cls, data: typing.Mapping[str, typing.Any]) -> "Permutation":
        perm = cls(tuple(data["values"]))
        if "n" in data and data["n"] != perm.n:
            raise exceptions.InvalidPermutation(
                perm.values, "n={} does not match the values".format(data["n"])
            )
        return perm


@dataclasses.dataclass(frozen=True)
class Diagram:
    """The dots (i, w(i)) of w on the (n+1)x(n+1) grid."""

    n: int
    dots: typing.FrozenSet[types.Cell]


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def w0(n: int) -> Permutation:
    """Return the longest element (n, n-1, ..., 1)."""
    return Permutation(tuple(range(n, 0, -1)))


def elementary_transposition(i: int, n: int) -> Permutation:
    if not 1 <= i <= n - 1:
        raise exceptions.IndexOutOfRange("i", i, 1, n - 1)
    values = list(range(1, n + 1))
    values[i - 1], values[i] = values[i], values[i - 1]
    return Permutation(tuple(values))


def multiply(u: Permutation, v: Permutation) -> Permutation:
    if u.n != v.n:
        raise exceptions.InvalidInput(
            "cannot multiply permutations of S_{} and S_{}".format(u.n, v.n)
        )
    return Permutation(tuple(u(v(k)) for k in range(1, u.n + 1)))


def from_word(word: typing.Iterable[int], n: int) -> Permutation:
    """Return the product s_{a1} s_{a2} ... of elementary transpositions."""
    values = list(range(1, n + 1))
    for a in word:
        if not 1 <= a <= n - 1:
            raise exceptions.IndexOutOfRange("s index", a, 1, n - 1)
        # right multiplication by s_a swaps positions a and a+1
        values[a - 1], values[a] = values[a], values[a - 1]
    return Permutation(tuple(values))


def inverse(w: Permutation) -> Permutation:
    values = [0] * w.n
    for i, v in enumerate(w.values, start=1):
        values[v - 1] = i
    return Permutation(tuple(values))


def length(w: Permutation) -> int:
    """Return the number of inversions of w."""
    values = w.values
    return sum(
        1
        for i in range(len(values))
        for j in range(i + 1, len(values))
        if values[i] > values[j]
    )


def colength(w: Permutation) -> int:
    """Return the codimension of the Schubert cell of w, n(n-1)/2 - length."""
    return w.n * (w.n - 1) // 2 - length(w)


def diagram(w: Permutation) -> Diagram:
    return Diagram(w.n, frozenset((i, v) for i, v in enumerate(w.values, start=1)))


def all_permutations(n: int) -> typing.Iterator[Permutation]:
    """Iterate over S_n in lexicographic order of the one-line notation."""
    for values in itertools.permutations(range(1, n + 1)):
        yield Permutation(values)


@functools.lru_cache(maxsize=None)
def _coxeter_elements(n: int) -> typing.Tuple[Permutation, ...]:
    elements = set()
    for choices in itertools.product((True, False), repeat=n - 2):
        word = [1]
        # s_{i+1} commutes with every s_k, k < i, so only its side of s_i
        # matters.
        for i, s_i_first in enumerate(choices, start=1):
            if s_i_first:
                word.append(i + 1)
            else:
                word.insert(0, i + 1)
        elements.add(from_word(word, n))
    LOG.debug("generated coxeter elements", n=n, count=len(elements))
    return tuple(sorted(elements))


def coxeter_elements(n: int) -> typing.List[Permutation]:
    """Return the 2^(n-2) Coxeter elements of S_n, sorted."""
    if n < 2:
        raise exceptions.IndexOutOfRange("n", n, 2, MAX_N)
    if n == 2:
        return [Permutation((2, 1))]
    return list(_coxeter_elements(n))


def coxeter_elements_brute_force(n: int) -> typing.List[Permutation]:
    """Coxeter elements from all (n-1)! orderings of s_1, ..., s_{n-1}."""
    orders = itertools.permutations(range(1, n))
    return sorted({from_word(order, n) for order in orders})


def is_coxeter(w: Permutation) -> bool:
    if w.n < 2 or length(w) != w.n - 1:
        return False
    return w in coxeter_elements(w.n)


def poincare_polynomial(n: int) -> typing.List[int]:
    """Coefficients of prod_{k=1}^{n-1} (1 + t + ... + t^k).

    The coefficient of t^m is the number of w in S_n of length m.
    """
    coefficients = [1]
    for k in range(1, n):
        product = [0] * (len(coefficients) + k)
        for degree, c in enumerate(coefficients):
            for shift in range(k + 1):
                product[degree + shift] += c
        coefficients = product
    return coefficients


def length_distribution(n: int) -> typing.List[int]:
    counts = [0] * (n * (n - 1) // 2 + 1)
    for w in all_permutations(n):
        counts[length(w)] += 1
    return counts

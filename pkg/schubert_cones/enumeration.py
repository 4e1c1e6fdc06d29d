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
"""Schubert varieties and cone classes counted by dimension."""

import dataclasses
import math
import typing

import daiquiri

from schubert_cones import config
from schubert_cones import exceptions
from schubert_cones import permutation
from schubert_cones import transposition

LOG = daiquiri.getLogger(__name__)

# Totals of tangent cones as published for n = 4..8.
PUBLISHED_TOTALS = {4: 16, 5: 63, 6: 343, 7: 1821, 8: 13041}


@dataclasses.dataclass(frozen=True)
class DimensionTable:
    """Schubert varieties and cone classes of each dimension 0..n(n-1)/2."""

    n: int
    schubert: typing.Tuple[int, ...]
    cones: typing.Tuple[int, ...]

    @property
    def top(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def total(self) -> int:
        return sum(self.cones)

    def rows(self) -> typing.List[typing.Tuple[int, int, int]]:
        return [(m, self.schubert[m], self.cones[m]) for m in range(self.top + 1)]

    def codim(self, k: int) -> typing.Tuple[int, int]:
        """(varieties, cone classes) of codimension k."""
        m = self.top - k
        if not 0 <= m <= self.top:
            raise exceptions.IndexOutOfRange("codimension", k, 0, self.top)
        return (self.schubert[m], self.cones[m])

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return {
            "n": self.n,
            "schubert": list(self.schubert),
            "cones": list(self.cones),
            "total": self.total,
        }


def dimension_table(
    n: int,
    limits: config.Limits = config.DEFAULT_LIMITS,
    classification: typing.Optional[transposition.Classification] = None,
) -> DimensionTable:
    if n < 2:
        raise exceptions.IndexOutOfRange("n", n, 2, limits.max_classify_n)
    if classification is None:
        classification = transposition.classify_all(n, limits)
    elif classification.n != n:
        raise exceptions.InvalidInput(
            "classification is for n={}, not {}".format(classification.n, n)
        )
    table = DimensionTable(
        n,
        tuple(permutation.poincare_polynomial(n)),
        tuple(classification.by_dimension()),
    )
    if sum(table.schubert) != math.factorial(n):
        raise exceptions.VerificationMismatch("Schubert row does not sum to n!")
    return table


def totals(n: int, limits: config.Limits = config.DEFAULT_LIMITS) -> int:
    return len(transposition.classify_all(n, limits))


def codim2_count(n: int) -> int:
    """Number of tangent cones of codimension 2, n >= 4."""
    if n < 4:
        raise exceptions.IndexOutOfRange("n", n, 4, permutation.MAX_N)
    if n % 2:
        return 2 + (n - 3) * (n + 11) // 8
    return 3 + (n - 4) * (n + 14) // 8


def codim2_schubert_count(n: int) -> int:
    """Number of Schubert varieties of codimension 2, (n + 1)(n - 2) / 2."""
    return (n + 1) * (n - 2) // 2


def codim1_report(n: int) -> typing.Tuple[int, int]:
    """(n - 1 Schubert varieties of codimension 1, n // 2 tangent cones)."""
    if n < 2:
        raise exceptions.IndexOutOfRange("n", n, 2, permutation.MAX_N)
    return (n - 1, n // 2)


@dataclasses.dataclass(frozen=True)
class Finding:
    check: str
    expected: typing.Any
    found: typing.Any

    def __str__(self) -> str:
        return "{}: expected {}, found {}".format(self.check, self.expected, self.found)


def check_table(table: DimensionTable) -> typing.List[Finding]:
    """Compare an enumerated table with the closed forms and published totals.

    Mismatches are logged and returned, never raised.
    """
    findings = []
    n = table.n
    checks: typing.List[typing.Tuple[str, typing.Any, typing.Any]] = [
        ("codim 1", codim1_report(n), table.codim(1)),
    ]
    if n >= 4:
        checks.append(("codim 2 cones", codim2_count(n), table.codim(2)[1]))
        checks.append(
            ("codim 2 varieties", codim2_schubert_count(n), table.codim(2)[0])
        )
    if n in PUBLISHED_TOTALS:
        checks.append(("total", PUBLISHED_TOTALS[n], table.total))
    if list(table.schubert) != list(reversed(table.schubert)):
        checks.append(("Mahonian symmetry", "symmetric", list(table.schubert)))
    for name, expected, found in checks:
        if expected != found:
            finding = Finding(name, expected, found)
            LOG.warning("table check failed", n=n, finding=str(finding))
            findings.append(finding)
    return findings

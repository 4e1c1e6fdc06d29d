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
import unittest

import pytest

from schubert_cones import enumeration
from schubert_cones import exceptions
from schubert_cones import permutation
from schubert_cones import transposition


class TestDimensionTable(unittest.TestCase):
    def test_n4(self) -> None:
        table = enumeration.dimension_table(4)
        self.assertEqual((1, 3, 5, 6, 5, 3, 1), table.schubert)
        self.assertEqual((1, 3, 3, 3, 3, 2, 1), table.cones)
        self.assertEqual(16, table.total)
        self.assertEqual(6, table.top)
        self.assertEqual((3, 2), table.codim(1))
        self.assertEqual((5, 3), table.codim(2))
        self.assertEqual((0, 1, 1), table.rows()[0])
        self.assertEqual((6, 1, 1), table.rows()[-1])
        self.assertEqual([], enumeration.check_table(table))

    def test_n5(self) -> None:
        table = enumeration.dimension_table(5)
        self.assertEqual((1, 4, 6, 7, 9, 9, 10, 8, 6, 2, 1), table.cones)
        self.assertEqual(63, table.total)
        self.assertEqual((4, 2), table.codim(1))
        self.assertEqual((9, 6), table.codim(2))
        self.assertEqual([], enumeration.check_table(table))

    def test_given_classification(self) -> None:
        classification = transposition.classify_all(4)
        table = enumeration.dimension_table(4, classification=classification)
        self.assertEqual(16, table.total)
        self.assertRaises(
            exceptions.InvalidInput,
            enumeration.dimension_table,
            5,
            classification=classification,
        )

    def test_json(self) -> None:
        data = enumeration.dimension_table(3).to_json()
        self.assertEqual(
            {"n": 3, "schubert": [1, 2, 2, 1], "cones": [1, 2, 1, 1], "total": 5},
            data,
        )

    def test_codim_out_of_range(self) -> None:
        table = enumeration.dimension_table(3)
        self.assertRaises(exceptions.IndexOutOfRange, table.codim, 4)

    def test_findings(self) -> None:
        table = enumeration.DimensionTable(
            4, (1, 3, 5, 6, 5, 3, 1), (1, 3, 3, 3, 4, 2, 1)
        )
        findings = enumeration.check_table(table)
        self.assertEqual(["codim 2 cones", "total"], [f.check for f in findings])
        self.assertEqual("total: expected 16, found 17", str(findings[1]))


def test_closed_forms() -> None:
    assert [3, 6, 8, 11, 14] == [enumeration.codim2_count(n) for n in range(4, 9)]
    assert [5, 9, 14] == [enumeration.codim2_schubert_count(n) for n in range(4, 7)]
    assert (5, 3) == enumeration.codim1_report(6)
    with pytest.raises(exceptions.IndexOutOfRange):
        enumeration.codim2_count(3)


def test_totals() -> None:
    assert 5 == enumeration.totals(3)
    assert 16 == enumeration.totals(4)


def test_n6() -> None:
    table = enumeration.dimension_table(6)
    assert (1, 5, 10, 14, 20, 25, 31, 36, 40, 40, 34, 24, 15, 8, 3, 1) == table.cones
    assert 307 == table.total
    assert permutation.poincare_polynomial(6) == list(table.schubert)
    assert (5, 3) == table.codim(1)
    assert (14, 8) == table.codim(2)
    # the published total does not match its own row
    assert ["total"] == [f.check for f in enumeration.check_table(table)]


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_large_tables(n: int) -> None:
    table = enumeration.dimension_table(n)
    assert sum(table.cones) == table.total
    assert permutation.poincare_polynomial(n) == list(table.schubert)
    assert enumeration.codim1_report(n) == table.codim(1)
    assert (
        enumeration.codim2_schubert_count(n),
        enumeration.codim2_count(n),
    ) == table.codim(2)
    assert table.total >= enumeration.PUBLISHED_TOTALS[n]

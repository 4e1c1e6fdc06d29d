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

from schubert_cones import config
from schubert_cones import exceptions


class TestLimits(unittest.TestCase):
    def test_defaults(self) -> None:
        limits = config.Limits()
        self.assertEqual(8, limits.max_classify_n)
        self.assertEqual(1, limits.jobs)
        self.assertEqual(limits, config.Limits.from_environ({}))

    def test_from_environ(self) -> None:
        limits = config.Limits.from_environ(
            {
                "SCHUBERT_CONES_JOBS": "4",
                "SCHUBERT_CONES_BUDGET": "1000",
                "SCHUBERT_CONES_MAX_N": "6",
                "SCHUBERT_CONES_CHUNK_SIZE": "128",
                "UNRELATED": "x",
            }
        )
        self.assertEqual(config.Limits(6, 1000, 4, 128), limits)

    def test_from_environ_invalid(self) -> None:
        self.assertRaises(
            exceptions.InvalidInput,
            config.Limits.from_environ,
            {"SCHUBERT_CONES_JOBS": "many"},
        )

    def test_replace(self) -> None:
        limits = config.Limits().replace(jobs=3, point_budget=None)
        self.assertEqual(3, limits.jobs)
        self.assertEqual(config.DEFAULT_LIMITS.point_budget, limits.point_budget)

    def test_checks(self) -> None:
        limits = config.Limits(max_classify_n=5, point_budget=100)
        limits.check_n(5)
        limits.check_points(100)
        self.assertRaises(exceptions.ResourceLimit, limits.check_n, 6)
        self.assertRaises(exceptions.ResourceLimit, limits.check_points, 101)

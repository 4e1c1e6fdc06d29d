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
import itertools
import unittest

import pytest

from schubert_cones import config
from schubert_cones import exceptions
from schubert_cones import permutation
from schubert_cones import pillars
from schubert_cones import rank
from schubert_cones import transposition
from schubert_cones.permutation import Permutation
from schubert_cones.rank import PillarEntry
from schubert_cones.transposition import OutcomeKind


S12 = Permutation.parse("12,2,9,7,6,4,10,5,3,11,1,8")


def P(text: str) -> Permutation:
    return Permutation.parse(text)


def E(row: int, col: int, value: int) -> PillarEntry:
    return PillarEntry(row, col, value)


class TestLinkingGraph(unittest.TestCase):
    def test_s12(self) -> None:
        graph = transposition.linking_graph(S12)
        self.assertEqual(7, len(graph.vertices))
        self.assertEqual(5, len(graph.edges))
        self.assertEqual([(2, 2), (4, 6), (6, 11)], graph.intervals())

    def test_coxeter(self) -> None:
        for w in permutation.coxeter_elements(5):
            graph = transposition.linking_graph(w)
            self.assertEqual(3, len(graph.components))
            self.assertEqual((), graph.edges)
            self.assertEqual(
                [1, 2, 3], [members[0].value for members in graph.components]
            )


class TestPartialTranspose(unittest.TestCase):
    def test_s12(self) -> None:
        outcome = transposition.partial_transpose(S12, [3])
        self.assertEqual(OutcomeKind.SAME_PERMUTATION_CLASS, outcome.kind)
        self.assertEqual(
            Permutation((11, 2, 9, 8, 6, 4, 5, 12, 3, 7, 10, 1)), outcome.result
        )

    def test_2341(self) -> None:
        self.assertEqual(
            P("3142"), transposition.partial_transpose(P("2341"), [1]).result
        )
        self.assertEqual(
            P("4123"), transposition.partial_transpose(P("2341"), [1, 2]).result
        )

    def test_13452(self) -> None:
        self.assertEqual(
            P("13524"), transposition.partial_transpose(P("13452"), [3]).result
        )

    def test_out_of_range(self) -> None:
        self.assertRaises(
            exceptions.IndexOutOfRange, transposition.partial_transpose, S12, [4]
        )

    def test_raw_different_length(self) -> None:
        outcome = transposition.transpose_pillars(P("456321"), [E(1, 4, 1)])
        self.assertEqual(OutcomeKind.DIFFERENT_LENGTH, outcome.kind)
        self.assertEqual(P("546132"), outcome.result)
        self.assertEqual(
            {"kind": "DifferentLength", "result": "546132", "reason": None},
            outcome.to_json(),
        )

    def test_raw_no_rank_matrix(self) -> None:
        w = P("34521")
        for entry in rank.pillars(w):
            outcome = transposition.transpose_pillars(w, [entry])
            self.assertEqual(OutcomeKind.NO_RANK_MATRIX, outcome.kind)
            self.assertIsNone(outcome.result)
            self.assertTrue(outcome.reason)

    def test_raw_not_a_pillar(self) -> None:
        self.assertRaises(
            exceptions.InvalidPillarSet,
            transposition.transpose_pillars,
            P("2341"),
            [E(2, 2, 1)],
        )


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_transposing_everything_gives_the_inverse(n: int) -> None:
    for w in permutation.all_permutations(n):
        count = len(pillars.linked_classes(rank.pillars(w)))
        outcome = transposition.partial_transpose(w, range(1, count + 1))
        if count:
            assert permutation.inverse(w) == outcome.result
        assert permutation.inverse(w) in transposition.cone_class(w)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_admissible_transposition_is_involutive(n: int) -> None:
    for w in permutation.all_permutations(n):
        count = len(pillars.linked_classes(rank.pillars(w)))
        for size in range(1, count + 1):
            for subset in itertools.combinations(range(1, count + 1), size):
                outcome = transposition.partial_transpose(w, subset)
                assert OutcomeKind.SAME_PERMUTATION_CLASS == outcome.kind
                assert outcome.result is not None
                back = transposition.partial_transpose(outcome.result, subset)
                assert w == back.result


class TestElementary(unittest.TestCase):
    def test_trace(self) -> None:
        result, stages = transposition.elementary_partial_transpose_trace(
            P("2341"), 1
        )
        self.assertEqual(P("3142"), result)
        self.assertEqual(
            ["2 3 | 4 1", "2 . | 4 .", ". 1 | 4 .", "3 1 | 4 2"], stages
        )

    def test_s12(self) -> None:
        for t in (1, 2, 3):
            expected = transposition.partial_transpose(S12, range(1, t + 1)).result
            self.assertEqual(
                expected, transposition.elementary_partial_transpose(S12, t)
            )

    def test_out_of_range(self) -> None:
        self.assertRaises(
            exceptions.IndexOutOfRange,
            transposition.elementary_partial_transpose,
            P("2341"),
            3,
        )


def _check_elementary(n: int) -> None:
    for w in permutation.all_permutations(n):
        count = len(pillars.linked_classes(rank.pillars(w)))
        for t in range(1, count + 1):
            expected = transposition.partial_transpose(w, range(1, t + 1)).result
            assert expected == transposition.elementary_partial_transpose(w, t)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_elementary_matches_partial_transpose(n: int) -> None:
    _check_elementary(n)


@pytest.mark.slow
def test_elementary_matches_partial_transpose_n6() -> None:
    _check_elementary(6)


class TestConeClass(unittest.TestCase):
    def test_coxeter(self) -> None:
        self.assertEqual(
            frozenset(permutation.coxeter_elements(4)),
            transposition.cone_class(P("2341")),
        )
        for n in range(3, 7):
            elements = permutation.coxeter_elements(n)
            self.assertEqual(
                frozenset(elements), transposition.cone_class(elements[0])
            )

    def test_singletons(self) -> None:
        self.assertEqual(
            frozenset([P("4231")]), transposition.cone_class(P("4231"))
        )
        self.assertEqual(
            frozenset([P("4321")]), transposition.cone_class(P("4321"))
        )

    def test_contains(self) -> None:
        self.assertIn(P("13524"), transposition.cone_class(P("13452")))

    def test_known_gap(self) -> None:
        self.assertNotIn(P("6753421"), transposition.cone_class(P("6745321")))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_cone_classes_keep_the_length(n: int) -> None:
    for w in permutation.all_permutations(n):
        klass = transposition.cone_class(w)
        assert {permutation.length(w)} == {permutation.length(v) for v in klass}
        assert klass == transposition.cone_class(max(klass))
        inverses = frozenset(permutation.inverse(v) for v in klass)
        assert inverses == transposition.cone_class(permutation.inverse(w))


class TestClassifyAll(unittest.TestCase):
    def test_n3(self) -> None:
        classification = transposition.classify_all(3)
        self.assertEqual(5, len(classification))
        self.assertEqual([1, 2, 1, 1], classification.by_dimension())

    def test_n4(self) -> None:
        classification = transposition.classify_all(4)
        self.assertEqual(16, len(classification))
        self.assertEqual([1, 3, 3, 3, 3, 2, 1], classification.by_dimension())
        self.assertEqual(
            tuple(permutation.coxeter_elements(4)),
            classification.class_of(P("3142")),
        )
        self.assertEqual((P("1234"),), classification.classes[0])

    def test_n5(self) -> None:
        classification = transposition.classify_all(5)
        self.assertEqual(63, len(classification))
        self.assertEqual(
            [1, 4, 6, 7, 9, 9, 10, 8, 6, 2, 1], classification.by_dimension()
        )

    def test_jobs(self) -> None:
        self.assertEqual(
            transposition.classify_all(4),
            transposition.classify_all(4, config.Limits(jobs=2)),
        )

    def test_limit(self) -> None:
        self.assertRaises(exceptions.ResourceLimit, transposition.classify_all, 9)
        self.assertRaises(
            exceptions.ResourceLimit,
            transposition.classify_all,
            5,
            config.Limits(max_classify_n=4),
        )

    def test_class_of_unknown(self) -> None:
        classification = transposition.classify_all(3)
        self.assertRaises(
            exceptions.InvalidPermutation, classification.class_of, P("2341")
        )


def test_pow2_violations() -> None:
    a, b, c = P("123"), P("132"), P("213")
    assert [(a, b, c)] == transposition.pow2_violations([(a,), (a, b), (a, b, c)])


def test_known_gaps() -> None:
    gaps = transposition.known_gaps([P("6745321")])
    assert P("6753421") in [gap.target for gap in gaps]
    for gap in gaps:
        assert P("6745321") == gap.source
        assert permutation.length(gap.source) == permutation.length(gap.target)
        assert gap.target not in transposition.cone_class(gap.source)
        assert gap.to_json()["source"] == "6745321"


def test_no_known_gaps_for_coxeter() -> None:
    assert [] == transposition.known_gaps(permutation.coxeter_elements(4))

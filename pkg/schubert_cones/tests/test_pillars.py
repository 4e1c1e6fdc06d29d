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

from schubert_cones import exceptions
from schubert_cones import finite_field
from schubert_cones import permutation
from schubert_cones import pillars
from schubert_cones import rank
from schubert_cones.permutation import Permutation
from schubert_cones.pillars import PillarSet
from schubert_cones.rank import PillarEntry


S12 = Permutation.parse("12,2,9,7,6,4,10,5,3,11,1,8")


def P(text: str) -> Permutation:
    return Permutation.parse(text)


def E(row: int, col: int, value: int) -> PillarEntry:
    return PillarEntry(row, col, value)


class TestPillarSet(unittest.TestCase):
    def test_parse(self) -> None:
        ps = PillarSet.parse("n=9; 6,4=2; 2,2=1")
        self.assertEqual(9, ps.n)
        self.assertEqual((E(2, 2, 1), E(6, 4, 2)), ps.pillars)
        self.assertEqual("n=9; 2,2=1; 6,4=2", str(ps))
        self.assertEqual(ps, PillarSet.parse(str(ps)))

    def test_parse_errors(self) -> None:
        self.assertRaises(exceptions.InvalidPillarSet, PillarSet.parse, "2,2=1")
        self.assertRaises(exceptions.InvalidPillarSet, PillarSet.parse, "n=4; 2;2")
        self.assertRaises(exceptions.InvalidPillarSet, PillarSet.parse, "n=x")

    def test_validation(self) -> None:
        self.assertRaises(exceptions.InvalidPillarSet, PillarSet, 4, (E(4, 1, 1),))
        self.assertRaises(exceptions.InvalidPillarSet, PillarSet, 4, (E(2, 2, 3),))
        self.assertRaises(exceptions.InvalidPillarSet, PillarSet, 4, (E(2, 2, 0),))
        self.assertRaises(exceptions.InvalidPillarSet, PillarSet, 4, (E(3, 3, 1),))
        self.assertRaises(
            exceptions.InvalidPillarSet, PillarSet, 4, (E(1, 2, 1), E(1, 2, 1))
        )
        self.assertRaises(exceptions.IndexOutOfRange, PillarSet, 0)

    def test_json(self) -> None:
        ps = pillars.pillar_set(S12)
        self.assertEqual(ps, PillarSet.from_json(ps.to_json()))

    def test_transposed(self) -> None:
        ps = PillarSet(4, (E(1, 2, 1), E(2, 3, 2)))
        self.assertEqual((E(2, 1, 1), E(3, 2, 2)), ps.transposed().pillars)


class TestReconstruct(unittest.TestCase):
    def test_examples(self) -> None:
        self.assertEqual(
            P("2341"), pillars.reconstruct(PillarSet(4, (E(1, 2, 1), E(2, 3, 2))))
        )
        self.assertEqual(P("4321"), pillars.reconstruct(PillarSet(4)))
        w = P("853471692")
        self.assertEqual(w, pillars.reconstruct(pillars.pillar_set(w)))
        self.assertEqual(S12, pillars.reconstruct(pillars.pillar_set(S12)))

    def test_steps(self) -> None:
        steps = pillars.reconstruct_steps(PillarSet(4, (E(1, 2, 1), E(2, 3, 2))))
        self.assertEqual((1, 1), steps.increments)
        self.assertEqual(((1, 2),), steps.placements[0])
        self.assertEqual(((2, 3),), steps.placements[1])
        self.assertEqual(((3, 4), (4, 1)), steps.placements[2])

    def test_rejections(self) -> None:
        for text in ("n=5; 1,3=1; 4,2=2", "n=5; 2,4=2; 3,1=1"):
            self.assertRaises(
                exceptions.InvalidPillarSet,
                pillars.reconstruct,
                PillarSet.parse(text),
            )

    def test_pillar_without_new_dots(self) -> None:
        # (3,3)=2 is reached by the dots of (1,3)=1 and (3,1)=1
        ps = PillarSet(5, (E(1, 3, 1), E(3, 1, 1), E(3, 3, 2)))
        steps = pillars.reconstruct_steps(ps)
        self.assertEqual(P("35142"), steps.permutation)
        self.assertEqual((1, 1, 0), steps.increments)
        self.assertEqual((), steps.placements[2])
        self.assertEqual(4, pillars.codim_from_pillars(ps))

    def test_too_many_dots_already(self) -> None:
        ps = PillarSet(5, (E(1, 2, 1), E(2, 1, 1), E(2, 2, 1)))
        with self.assertRaises(exceptions.InvalidPillarSet) as ctx:
            pillars.reconstruct(ps)
        self.assertEqual(3, ctx.exception.step)

    def test_pillar_rejected_by_final_check(self) -> None:
        # (2,2)=1 needs no new dot but 1432 only keeps (1,1)=1
        with self.assertRaises(exceptions.InvalidPillarSet) as ctx:
            pillars.reconstruct(PillarSet(4, (E(1, 1, 1), E(2, 2, 1))))
        self.assertIsNone(ctx.exception.step)
        self.assertIn("1432", str(ctx.exception))

    def test_single_pillar(self) -> None:
        self.assertEqual(P("4231"), pillars.single_pillar_permutation(2, 2, 1, 4))
        self.assertRaises(
            exceptions.InvalidPillarSet, pillars.single_pillar_permutation, 3, 3, 1, 4
        )


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_reconstruct_round_trip(n: int) -> None:
    for w in permutation.all_permutations(n):
        assert w == pillars.reconstruct(pillars.pillar_set(w))


@pytest.mark.slow
def test_reconstruct_round_trip_n7() -> None:
    for w in permutation.all_permutations(7):
        assert w == pillars.reconstruct(pillars.pillar_set(w))


@pytest.mark.slow
def test_reconstruct_round_trip_n8_sample() -> None:
    for w in finite_field.sample_permutations(8, 5000, seed=8):
        assert w == pillars.reconstruct(pillars.pillar_set(w))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_single_pillar_permutations(n: int) -> None:
    for i in range(1, n):
        for j in range(1, n):
            for a in range(1, min(i, j) + 1):
                if i + j - a >= n:
                    continue
                w = pillars.single_pillar_permutation(i, j, a, n)
                assert (E(i, j, a),) == rank.pillars(w)
                assert w == pillars.reconstruct(PillarSet(n, (E(i, j, a),)))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_codimension_from_pillars(n: int) -> None:
    for w in permutation.all_permutations(n):
        ps = pillars.pillar_set(w)
        assert permutation.colength(w) == pillars.codim_from_pillars(ps)
        assert pillars.increments_relation_holds(ps)


@pytest.mark.slow
def test_codimension_from_pillars_n7() -> None:
    for w in permutation.all_permutations(7):
        ps = pillars.pillar_set(w)
        assert permutation.colength(w) == pillars.codim_from_pillars(ps)
        assert pillars.increments_relation_holds(ps)


def test_codimension_examples() -> None:
    assert 0 == pillars.codim_from_pillars(PillarSet(4))
    assert 1 == pillars.codim_from_pillars(pillars.pillar_set(P("4231")))
    assert 3 == pillars.codim_from_pillars(pillars.pillar_set(P("2341")))


class TestLinkedClasses(unittest.TestCase):
    def test_related(self) -> None:
        self.assertTrue(pillars.related(E(6, 7, 4), E(6, 9, 5)))
        self.assertFalse(pillars.related(E(6, 4, 2), E(6, 7, 4)))
        self.assertFalse(pillars.related(E(2, 2, 1), E(1, 3, 1)))
        self.assertEqual((4, 6), pillars.interval(E(6, 4, 2)))

    def test_s12(self) -> None:
        classes = pillars.linked_classes(rank.pillars(S12))
        self.assertEqual(
            [
                (E(2, 2, 1),),
                (E(6, 4, 2),),
                (E(6, 7, 4), E(6, 9, 5), E(9, 7, 6), E(9, 10, 8), E(11, 7, 7)),
            ],
            classes,
        )
        self.assertEqual((6, 11), pillars.class_interval(classes[2]))

    def test_single_class(self) -> None:
        self.assertEqual(1, len(pillars.linked_classes(rank.pillars(P("6745321")))))
        self.assertEqual(2, len(pillars.linked_classes(rank.pillars(P("2341")))))

    def test_truncate(self) -> None:
        self.assertEqual(
            Permutation((12, 2, 11, 10, 9, 8, 7, 6, 5, 4, 3, 1)),
            pillars.truncate(S12, 1),
        )
        self.assertEqual(
            Permutation((12, 2, 11, 10, 9, 4, 8, 7, 6, 5, 3, 1)),
            pillars.truncate(S12, 2),
        )
        self.assertEqual(S12, pillars.truncate(S12, 3))
        self.assertRaises(exceptions.IndexOutOfRange, pillars.truncate, S12, 4)
        self.assertRaises(exceptions.IndexOutOfRange, pillars.truncate, S12, 0)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_strips(n: int) -> None:
    for w in permutation.all_permutations(n):
        assert [p.position for p in rank.pillars(w)] == pillars.strip_intersections(w)
        horizontal = pillars.horizontal_strips(w)
        vertical = pillars.vertical_strips(w)
        for strip in horizontal:
            assert any(strip.cells() & other.cells() for other in vertical)
        for strip in vertical:
            assert any(strip.cells() & other.cells() for other in horizontal)


def test_crosses() -> None:
    for w in permutation.all_permutations(5):
        assert permutation.colength(w) == pillars.crosses(w)
    assert 0 == pillars.crosses(permutation.w0(4))

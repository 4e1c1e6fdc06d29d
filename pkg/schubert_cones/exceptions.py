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
"""Exceptions."""

import typing


class SchubertConesError(Exception):
    """Base class of every error raised by schubert_cones."""

    exit_code: int = 1


class InvalidInput(SchubertConesError):
    """The caller handed us data that does not describe a valid object."""

    exit_code = 2


class InvalidPermutation(InvalidInput, ValueError):
    def __init__(self, values: typing.Sequence[int], reason: str) -> None:
        self.values = tuple(values)
        self.reason = reason
        super(InvalidPermutation, self).__init__(
            "Invalid permutation {}: {}".format(list(self.values), reason)
        )


class InvalidRankMatrix(InvalidInput, ValueError):
    def __init__(
        self, reason: str, cell: typing.Optional[typing.Tuple[int, int]] = None
    ) -> None:
        self.reason = reason
        self.cell = cell
        where = "" if cell is None else " at {}".format(cell)
        super(InvalidRankMatrix, self).__init__(
            "Invalid rank matrix{}: {}".format(where, reason)
        )


class InvalidPillarSet(InvalidInput, ValueError):
    """Raised when a set of entries is not the pillar set of any permutation.

    :param reason: Human readable reason.
    :param step: The reconstruction step that failed, 1-based. ``None`` when
                 the failure was detected by the final verification.
    """

    def __init__(self, reason: str, step: typing.Optional[int] = None) -> None:
        self.reason = reason
        self.step = step
        where = "" if step is None else " (step {})".format(step)
        super(InvalidPillarSet, self).__init__(
            "Invalid pillar set{}: {}".format(where, reason)
        )


class IndexOutOfRange(InvalidInput, IndexError):
    def __init__(self, name: str, value: int, low: int, high: int) -> None:
        self.name = name
        self.value = value
        self.low = low
        self.high = high
        super(IndexOutOfRange, self).__init__(
            "{} = {} is outside {}..{}".format(name, value, low, high)
        )


class ResourceLimit(SchubertConesError):
    exit_code = 3

    def __init__(self, what: str, requested: int, limit: int) -> None:
        self.what = what
        self.requested = requested
        self.limit = limit
        super(ResourceLimit, self).__init__(
            "{} of {} exceeds the configured limit {}".format(what, requested, limit)
        )


class VerificationMismatch(SchubertConesError):
    """A cross-check between two independent computations disagreed."""

    exit_code = 4

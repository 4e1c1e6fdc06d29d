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
"""Runtime limits."""

import dataclasses
import os
import typing

from schubert_cones import exceptions

ENV_PREFIX = "SCHUBERT_CONES_"


@dataclasses.dataclass(frozen=True)
class Limits:
    """Limits applied to the expensive operations.

    :param max_classify_n: Largest n accepted by the S_n enumerations.
    :param point_budget: Largest number of F_q points a sweep may visit.
    :param jobs: Number of worker processes for enumerations and sweeps.
    :param chunk_size: Number of points evaluated per vectorized batch.
    """

    max_classify_n: int = 8
    point_budget: int = 4 * 10**8
    jobs: int = 1
    chunk_size: int = 65536

    def check_n(self, n: int) -> None:
        if n > self.max_classify_n:
            raise exceptions.ResourceLimit("n", n, self.max_classify_n)

    def check_points(self, points: int) -> None:
        if points > self.point_budget:
            raise exceptions.ResourceLimit("point count", points, self.point_budget)

    def replace(self, **kwargs: typing.Any) -> "Limits":
        """Return a copy with the non-None keyword arguments applied."""
        changes = {k: v for k, v in kwargs.items() if v is not None}
        return dataclasses.replace(self, **changes)

    @classmethod
    def from_environ(
        cls, environ: typing.Optional[typing.Mapping[str, str]] = None
    ) -> "Limits":
        """Build limits from ``SCHUBERT_CONES_*`` environment variables."""
        if environ is None:
            environ = os.environ
        fields = {
            "JOBS": "jobs",
            "BUDGET": "point_budget",
            "MAX_N": "max_classify_n",
            "CHUNK_SIZE": "chunk_size",
        }
        values: typing.Dict[str, int] = {}
        for suffix, field in fields.items():
            raw = environ.get(ENV_PREFIX + suffix)
            if raw is None:
                continue
            try:
                values[field] = int(raw)
            except ValueError:
                raise exceptions.InvalidInput(
                    "{}{} must be an integer, got {!r}".format(ENV_PREFIX, suffix, raw)
                )
        return cls(**values)


DEFAULT_LIMITS = Limits()

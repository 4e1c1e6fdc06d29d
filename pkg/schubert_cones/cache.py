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
"""On-disk cache of cone classifications."""

import dataclasses
import hashlib
import json
import os
import typing

import daiquiri

from schubert_cones import exceptions
from schubert_cones import permutation
from schubert_cones import transposition

LOG = daiquiri.getLogger(__name__)

SCHEMA_VERSION = 1


def _canonical(payload: typing.Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


@dataclasses.dataclass(frozen=True)
class RunCache:
    """A classification of S_n as stored on disk.

    Each class is stored as its member list, the first member being the
    representative. The checksum covers the classes only.
    """

    n: int
    classes: typing.Tuple[typing.Tuple[permutation.Permutation, ...], ...]
    schema: int = SCHEMA_VERSION

    @classmethod
    def from_classification(
        cls, classification: transposition.Classification
    ) -> "RunCache":
        return cls(classification.n, classification.classes)

    def classification(self) -> transposition.Classification:
        return transposition.Classification(self.n, self.classes)

    def _classes_json(self) -> typing.List[typing.List[typing.List[int]]]:
        return [[list(w.values) for w in members] for members in self.classes]

    def checksum(self) -> str:
        return hashlib.sha256(_canonical(self._classes_json()).encode()).hexdigest()

    def dumps(self) -> str:
        return _canonical(
            {
                "schema": self.schema,
                "n": self.n,
                "representatives": [
                    list(members[0].values) for members in self.classes
                ],
                "classes": self._classes_json(),
                "checksum": self.checksum(),
            }
        )

    @classmethod
    def loads(cls, text: str) -> "RunCache":
        try:
            data = json.loads(text)
            schema = data["schema"]
            if schema != SCHEMA_VERSION:
                raise exceptions.InvalidInput(
                    "cache schema {} is not supported, expected {}".format(
                        schema, SCHEMA_VERSION
                    )
                )
            classes = tuple(
                tuple(permutation.Permutation(tuple(values)) for values in members)
                for members in data["classes"]
            )
            cache = cls(int(data["n"]), classes, schema)
        except (ValueError, KeyError, TypeError) as e:
            raise exceptions.InvalidInput("unreadable cache: {}".format(e))
        if cache.checksum() != data.get("checksum"):
            raise exceptions.VerificationMismatch("cache checksum does not match")
        return cache

    def save(self, path: str) -> None:
        directory = os.path.dirname(os.path.abspath(path))
        os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.dumps())
        LOG.info("wrote cache", path=path, n=self.n, classes=len(self.classes))

    @classmethod
    def load(cls, path: str) -> "RunCache":
        with open(path, encoding="utf-8") as f:
            cache = cls.loads(f.read())
        LOG.info("loaded cache", path=path, n=cache.n, classes=len(cache.classes))
        return cache


def classify_cached(
    n: int,
    path: typing.Optional[str],
    classify: typing.Callable[[int], transposition.Classification],
) -> transposition.Classification:
    """Load the classification of S_n from path, or compute and store it."""
    if path is not None and os.path.exists(path):
        cache = RunCache.load(path)
        if cache.n == n:
            return cache.classification()
        LOG.warning(
            "cache is for another n, recomputing", path=path, cached=cache.n, n=n
        )
    classification = classify(n)
    if path is not None:
        RunCache.from_classification(classification).save(path)
    return classification

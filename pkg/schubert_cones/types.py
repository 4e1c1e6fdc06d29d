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
import typing

# (row, column), 1-based unless stated otherwise
Cell = typing.Tuple[int, int]

OneLine = typing.Tuple[int, ...]

Scope = typing.Literal["pillar", "all"]
Semantics = typing.Literal["cell", "variety"]
Flavor = typing.Literal["standard", "opposite"]

SCOPES: typing.Tuple[Scope, ...] = ("pillar", "all")
SEMANTICS: typing.Tuple[Semantics, ...] = ("cell", "variety")
FLAVORS: typing.Tuple[Flavor, ...] = ("standard", "opposite")

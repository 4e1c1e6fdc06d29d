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
"""Rank matrices, pillar entries and tangent cones of Schubert varieties."""

from schubert_cones.exceptions import InvalidInput  # noqa: F401
from schubert_cones.exceptions import InvalidPermutation  # noqa: F401
from schubert_cones.exceptions import InvalidPillarSet  # noqa: F401
from schubert_cones.exceptions import InvalidRankMatrix  # noqa: F401
from schubert_cones.exceptions import ResourceLimit  # noqa: F401
from schubert_cones.exceptions import SchubertConesError  # noqa: F401
from schubert_cones.exceptions import VerificationMismatch  # noqa: F401
from schubert_cones.permutation import Permutation  # noqa: F401
from schubert_cones.pillars import PillarSet  # noqa: F401
from schubert_cones.pillars import reconstruct  # noqa: F401
from schubert_cones.rank import PillarEntry  # noqa: F401
from schubert_cones.rank import RankMatrix  # noqa: F401
from schubert_cones.rank import rank_matrix  # noqa: F401
from schubert_cones.transposition import cone_class  # noqa: F401
from schubert_cones.transposition import partial_transpose  # noqa: F401

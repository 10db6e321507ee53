# Copyright 2026 The Wittkit Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact kernel for simple generalized Witt algebras.

All values cross the boundary as canonical JSON strings; see the project
README for the document formats.
"""

try:
    from ._wittkit import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # pragma: no cover - build-tree layout
    from _wittkit import *  # noqa: F401,F403

__all__ = [
    "kronecker_algebra",
    "countable_algebra",
    "is_simple",
    "bracket",
    "act",
    "check_triple",
    "apply_aut",
    "compose",
    "invert",
    "build_distinguished",
    "stabilizer",
    "shift_map",
    "shift_witness",
    "verify_local",
    "verify_2local",
    "recover_local",
    "recover_2local",
    "selftest",
]

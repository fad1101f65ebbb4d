# Copyright 2026 The alarmgame Authors.
#
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

"""Patrolling with alarm signals: placements, covering routes and oracles.

Instances and results are plain dictionaries with the same layout as the
JSON files read and written by the command-line tool.
"""

import json

from . import _alarmgame
from ._alarmgame import AlarmGameError

__all__ = [
    "AlarmGameError",
    "generate",
    "validate",
    "mincover",
    "routes",
    "sro",
    "resolve",
]

__version__ = _alarmgame.__version__


def _text(instance):
    return instance if isinstance(instance, str) else json.dumps(instance)


def generate(n_targets=20, seed=0, mean_degree=3.0, deadline=0):
    """Random connected instance; deadline 0 picks the size schedule."""
    return json.loads(_alarmgame.generate(n_targets, seed, mean_degree, deadline))


def validate(instance):
    """Parses an instance and returns its normalized form."""
    return json.loads(_alarmgame.validate(_text(instance)))


def mincover(instance, method="auto", budget_s=60.0):
    return json.loads(_alarmgame.mincover(_text(instance), method, budget_s))


def routes(instance, start, signal, exact_limit=20, beam_width=100000):
    return json.loads(
        _alarmgame.routes(_text(instance), start, signal, exact_limit, beam_width)
    )


def sro(instance, placement, oracle="pc", fc_mode="exact", pc_restarts=0,
        seed=0, resources_per_position=1):
    """Evaluates one covering placement (a list of vertex ids)."""
    return json.loads(
        _alarmgame.sro(_text(instance), list(placement), oracle, fc_mode,
                       pc_restarts, seed, resources_per_position)
    )


def resolve(instance, oracles=("fc", "pc", "nc"), budget_s=60.0, seed=0,
            max_placements=0, workers=1, method="auto"):
    return json.loads(
        _alarmgame.resolve(_text(instance), list(oracles), budget_s, seed,
                           max_placements, workers, method)
    )

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

import pytest

import alarmgame


@pytest.fixture(scope="module")
def instance():
    return alarmgame.generate(n_targets=8, seed=3)


def line_instance():
    # v0 - v1 - v2 with targets at both ends.
    return {
        "vertices": ["v0", "v1", "v2"],
        "edges": [["v0", "v1"], ["v1", "v2"]],
        "targets": [
            {"id": "v0", "value": 0.5, "deadline": 1},
            {"id": "v2", "value": 0.8, "deadline": 1},
        ],
        "signals": [{"id": "s", "probs": {"v0": 1.0, "v2": 1.0}}],
    }


def test_generate_is_deterministic(instance):
    assert alarmgame.generate(n_targets=8, seed=3) == instance
    assert len(instance["targets"]) == 8


def test_validate_round_trip(instance):
    assert alarmgame.validate(instance) == instance


def test_mincover_on_line():
    result = alarmgame.mincover(line_instance(), method="exact")
    assert result["optimal"]
    assert result["placement"] == ["v1"]
    assert result["size"] == 1


def test_routes_from_centre():
    result = alarmgame.routes(line_instance(), start="v1", signal="s")
    assert result["complete"]
    visited = sorted(tuple(v["target"] for v in r["visits"]) for r in result["routes"])
    assert visited == [("v0",), ("v2",)]


def test_sro_orders_schemes(instance):
    placement = alarmgame.mincover(instance)["placement"]
    values = {
        o: alarmgame.sro(instance, placement, oracle=o)["value"]
        for o in ("fc", "pc", "nc")
    }
    assert values["fc"] >= values["pc"] - 1e-6
    assert values["pc"] >= values["nc"] - 1e-6


def test_resolve_reports_incumbent(instance):
    report = alarmgame.resolve(instance, budget_s=30.0, max_placements=3)
    assert 1 <= report["placements_evaluated"] <= 3
    assert "fc" in report["best"]


def test_errors_are_value_errors():
    bad = line_instance()
    bad["edges"].append(["v0", "v9"])
    with pytest.raises(ValueError):
        alarmgame.validate(bad)
    with pytest.raises(alarmgame.AlarmGameError):
        alarmgame.mincover(bad)

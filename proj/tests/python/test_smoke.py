# Copyright 2026 The cnldp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the python bindings. The heavy statistical checks live in
the C++ suites; these only prove the module imports and round-trips sanely."""

import math

import pytest

import cnldp


def test_version():
    assert cnldp.__version__


def test_generate_and_summary():
    g = cnldp.generate_synthetic(50, 60, 0.1, 3)
    assert g.layer_size(cnldp.Layer.UPPER) == 50
    assert g.layer_size(cnldp.Layer.LOWER) == 60
    assert '"n1":50' in g.summary_json()
    again = cnldp.generate_synthetic(50, 60, 0.1, 3)
    assert again.edge_count() == g.edge_count()


def test_edge_list_round_trip(tmp_path):
    path = str(tmp_path / "tiny.tsv")
    with open(path, "w") as f:
        f.write("1 1\n1 2\n2 1\n2 2\n")
    g = cnldp.load_edge_list(path)
    assert g.layer_size(cnldp.Layer.UPPER) == 2
    assert g.edge_count() == 4
    q = cnldp.QueryPair(
        cnldp.VertexRef(cnldp.Layer.UPPER, 0), cnldp.VertexRef(cnldp.Layer.UPPER, 1)
    )
    assert cnldp.exact_common_neighbors(g, q) == 2
    out = str(tmp_path / "copy.tsv")
    cnldp.write_edge_list(g, out)
    assert cnldp.load_edge_list(out).edge_count() == 4


def test_estimators_run_and_replay():
    g = cnldp.generate_synthetic(40, 40, 0.2, 11)
    q = cnldp.sample_query_pairs(g, cnldp.Layer.UPPER, 1, seed=2)[0]
    for fn in (
        cnldp.naive_estimate,
        cnldp.oner_estimate,
        cnldp.single_source_estimate,
        cnldp.double_source_estimate,
        cnldp.central_estimate,
    ):
        a = fn(g, q, 2.0, cnldp.RandomSource(99))
        b = fn(g, q, 2.0, cnldp.RandomSource(99))
        assert a.value == b.value
        assert math.isfinite(a.value)
        assert abs(a.ledger.total() - 2.0) < 1e-9


def test_ds_plan_spends_whole_budget():
    g = cnldp.generate_synthetic(40, 40, 0.2, 11)
    q = cnldp.sample_query_pairs(g, cnldp.Layer.UPPER, 1, seed=2)[0]
    r = cnldp.double_source_estimate(g, q, 2.0, cnldp.RandomSource(5))
    assert r.rounds == 3
    assert r.plan is not None
    assert abs(r.plan.total() - 2.0) < 1e-9
    assert abs(r.plan.eps0 - 0.1) < 1e-12
    assert 0.0 <= r.plan.alpha <= 1.0


def test_central_mean_near_truth():
    g = cnldp.generate_synthetic(40, 40, 0.2, 11)
    q = cnldp.sample_query_pairs(g, cnldp.Layer.UPPER, 1, seed=2)[0]
    c2 = cnldp.exact_common_neighbors(g, q)
    base = cnldp.RandomSource(123)
    trials = 2000
    mean = (
        sum(cnldp.central_estimate(g, q, 2.0, base.for_trial(t)).value for t in range(trials))
        / trials
    )
    # variance 2/eps^2 = 0.5, so four standard errors is about 0.063
    assert abs(mean - c2) < 0.1


def test_budget_helpers():
    assert cnldp.optimal_alpha(2.0, 6.0) == pytest.approx(0.75)
    plan = cnldp.optimize_plan(5.0, 10.0, 2.0, 0.1)
    assert plan.total() == pytest.approx(2.0)
    loss = cnldp.ds_loss(5.0, 10.0, plan.eps1, plan.eps2, plan.alpha)
    assert loss <= cnldp.ss_loss(5.0, plan.eps1, plan.eps2) * (1 + 1e-12)
    b = cnldp.chebyshev_bound(4.0, 2.0)
    assert b.radius == pytest.approx(4.0)
    assert b.probability_bound == pytest.approx(0.25)


def test_comm_expectations():
    assert cnldp.expected_comm_bytes(cnldp.Algorithm.CENTRAL, 4, 4, 100, 100, 2.0) == 0.0
    naive = cnldp.expected_comm_bytes(cnldp.Algorithm.NAIVE, 4, 4, 100, 100, 2.0)
    oner = cnldp.expected_comm_bytes(cnldp.Algorithm.ONER, 4, 4, 100, 100, 2.0)
    assert naive == oner
    with pytest.raises(ValueError):
        cnldp.expected_comm_bytes(cnldp.Algorithm.SS, 4, 4, 100, 100, 2.0)
    assert cnldp.round_count(cnldp.Algorithm.DS) == 3


def test_exceptions_map_to_python():
    with pytest.raises(ValueError):
        cnldp.flip_probability(-1.0)
    with pytest.raises(ValueError):
        cnldp.load_edge_list("/nonexistent/graph.tsv")
    complete = cnldp.generate_synthetic(4, 4, 1.0, 1)
    with pytest.raises(RuntimeError):
        cnldp.sample_query_pairs(complete, cnldp.Layer.UPPER, 5, kappa=1000.0, seed=1)

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

"""Common-neighbor estimation over bipartite graphs under edge-local privacy."""

from ._cnldp import (
    Algorithm,
    BipartiteGraph,
    BudgetPlan,
    DeviationBound,
    EstimateReport,
    GraphParseError,
    InfeasibleSamplingError,
    Layer,
    LedgerEntry,
    NoisyNeighborSet,
    PrivacyLedger,
    QueryPair,
    RandomSource,
    RngStream,
    Transcript,
    ValidationError,
    VertexRef,
    central_estimate,
    central_loss,
    chebyshev_bound,
    double_source_estimate,
    ds_loss,
    exact_common_neighbors,
    expected_comm_bytes,
    flip_probability,
    generate_synthetic,
    laplace_sample,
    load_edge_list,
    naive_estimate,
    naive_expected_value,
    naive_l2,
    oner_estimate,
    oner_loss,
    optimal_alpha,
    optimize_plan,
    phi,
    phi_variance,
    randomized_response,
    round_count,
    sample_query_pairs,
    single_source_estimate,
    ss_loss,
    stream_slot,
    write_edge_list,
)

__all__ = [
    "Algorithm",
    "BipartiteGraph",
    "BudgetPlan",
    "DeviationBound",
    "EstimateReport",
    "GraphParseError",
    "InfeasibleSamplingError",
    "Layer",
    "LedgerEntry",
    "NoisyNeighborSet",
    "PrivacyLedger",
    "QueryPair",
    "RandomSource",
    "RngStream",
    "Transcript",
    "ValidationError",
    "VertexRef",
    "central_estimate",
    "central_loss",
    "chebyshev_bound",
    "double_source_estimate",
    "ds_loss",
    "exact_common_neighbors",
    "expected_comm_bytes",
    "flip_probability",
    "generate_synthetic",
    "laplace_sample",
    "load_edge_list",
    "naive_estimate",
    "naive_expected_value",
    "naive_l2",
    "oner_estimate",
    "oner_loss",
    "optimal_alpha",
    "optimize_plan",
    "phi",
    "phi_variance",
    "randomized_response",
    "round_count",
    "sample_query_pairs",
    "single_source_estimate",
    "ss_loss",
    "stream_slot",
    "write_edge_list",
]

__version__ = "0.1.0"

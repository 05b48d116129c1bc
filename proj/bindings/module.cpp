// Copyright 2026 The cnldp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cnldp/bench.hpp"
#include "cnldp/budget.hpp"
#include "cnldp/estimators.hpp"
#include "cnldp/graph.hpp"
#include "cnldp/mechanisms.hpp"
#include "cnldp/protocol.hpp"

namespace py = pybind11;
using namespace cnldp;

namespace {

void bind_graph(py::module_& m) {
  py::enum_<Layer>(m, "Layer")
      .value("UPPER", Layer::Upper)
      .value("LOWER", Layer::Lower);

  py::class_<VertexRef>(m, "VertexRef")
      .def(py::init<Layer, std::uint32_t>(), py::arg("layer"), py::arg("index"))
      .def_readwrite("layer", &VertexRef::layer)
      .def_readwrite("index", &VertexRef::index)
      .def("__repr__", [](const VertexRef& v) {
        return std::string("VertexRef(") + layer_name(v.layer) + ", " +
               std::to_string(v.index) + ")";
      });

  py::class_<QueryPair>(m, "QueryPair")
      .def(py::init<VertexRef, VertexRef>(), py::arg("u"), py::arg("w"))
      .def_readwrite("u", &QueryPair::u)
      .def_readwrite("w", &QueryPair::w);

  py::class_<BipartiteGraph>(m, "BipartiteGraph")
      .def("layer_size", &BipartiteGraph::layer_size)
      .def("edge_count", &BipartiteGraph::edge_count)
      .def("neighbors", &BipartiteGraph::neighbors, py::return_value_policy::copy)
      .def("degree", &BipartiteGraph::degree)
      .def("max_degree", &BipartiteGraph::max_degree)
      .def("external_id", &BipartiteGraph::external_id)
      .def("internal_index", &BipartiteGraph::internal_index)
      .def("summary_json", &BipartiteGraph::summary_json);

  m.def("load_edge_list", &load_edge_list, py::arg("path"));
  m.def("write_edge_list", &write_edge_list, py::arg("graph"), py::arg("path"));
  m.def("generate_synthetic", &generate_synthetic, py::arg("n_upper"), py::arg("n_lower"),
        py::arg("density"), py::arg("seed"));
  m.def("exact_common_neighbors", &exact_common_neighbors, py::arg("graph"), py::arg("pair"));
  m.def(
      "sample_query_pairs",
      [](const BipartiteGraph& g, Layer layer, std::size_t count, py::object kappa,
         std::uint64_t seed) {
        std::optional<double> k;
        if (!kappa.is_none()) k = kappa.cast<double>();
        return sample_query_pairs(g, layer, count, k, seed);
      },
      py::arg("graph"), py::arg("layer"), py::arg("count"), py::arg("kappa") = py::none(),
      py::arg("seed") = 1);
}

void bind_mechanisms(py::module_& m) {
  py::class_<RngStream>(m, "RngStream")
      .def("next_unit", &RngStream::next_unit)
      .def("bernoulli", &RngStream::bernoulli)
      .def("laplace", &RngStream::laplace);

  py::class_<RandomSource>(m, "RandomSource")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("master_seed"), py::arg("trial") = 0)
      .def("for_trial", &RandomSource::for_trial)
      .def("stream", &RandomSource::stream, py::arg("vertex_slot"), py::arg("round"));

  py::class_<NoisyNeighborSet>(m, "NoisyNeighborSet")
      .def_readonly("source", &NoisyNeighborSet::source)
      .def_readonly("epsilon", &NoisyNeighborSet::epsilon)
      .def_readonly("flip_prob", &NoisyNeighborSet::flip_prob)
      .def_readonly("members", &NoisyNeighborSet::members)
      .def("contains", &NoisyNeighborSet::contains);

  m.def("flip_probability", &flip_probability, py::arg("eps"));
  m.def("phi", &phi, py::arg("bit"), py::arg("p"));
  m.def("phi_variance", &phi_variance, py::arg("p"));
  m.def("laplace_sample", &laplace_sample, py::arg("scale"), py::arg("stream"));
  m.def("randomized_response", &randomized_response, py::arg("graph"), py::arg("vertex"),
        py::arg("eps"), py::arg("stream"));
  m.def("stream_slot", &stream_slot, py::arg("layer"), py::arg("index"));
}

void bind_budget(py::module_& m) {
  py::class_<BudgetPlan>(m, "BudgetPlan")
      .def(py::init<double, double, double, double>(), py::arg("eps0"), py::arg("eps1"),
           py::arg("eps2"), py::arg("alpha"))
      .def_readwrite("eps0", &BudgetPlan::eps0)
      .def_readwrite("eps1", &BudgetPlan::eps1)
      .def_readwrite("eps2", &BudgetPlan::eps2)
      .def_readwrite("alpha", &BudgetPlan::alpha)
      .def("total", &BudgetPlan::total);

  m.def("ss_loss", &ss_loss, py::arg("d"), py::arg("eps1"), py::arg("eps2"));
  m.def("ds_loss", &ds_loss, py::arg("d_u"), py::arg("d_w"), py::arg("eps1"), py::arg("eps2"),
        py::arg("alpha"));
  m.def("optimal_alpha", &optimal_alpha, py::arg("var_u"), py::arg("var_w"));
  m.def("optimize_plan", &optimize_plan, py::arg("d_u"), py::arg("d_w"), py::arg("eps"),
        py::arg("eps0"));
  m.def("oner_loss", &oner_loss, py::arg("d_u"), py::arg("d_w"), py::arg("n1"), py::arg("eps"));
  m.def("naive_expected_value", &naive_expected_value, py::arg("c2"), py::arg("d_u"),
        py::arg("d_w"), py::arg("n1"), py::arg("eps"));
  m.def("naive_l2", &naive_l2, py::arg("c2"), py::arg("d_u"), py::arg("d_w"), py::arg("n1"),
        py::arg("eps"));
  m.def("central_loss", &central_loss, py::arg("eps"));
}

void bind_estimators(py::module_& m) {
  py::enum_<Algorithm>(m, "Algorithm")
      .value("NAIVE", Algorithm::Naive)
      .value("ONER", Algorithm::OneR)
      .value("SS", Algorithm::SingleSource)
      .value("DS", Algorithm::DoubleSource)
      .value("CENTRAL", Algorithm::Central);

  py::class_<LedgerEntry>(m, "LedgerEntry")
      .def_readonly("round", &LedgerEntry::round)
      .def_readonly("epsilon", &LedgerEntry::epsilon);

  py::class_<PrivacyLedger>(m, "PrivacyLedger")
      .def("total", &PrivacyLedger::total)
      .def("entries", &PrivacyLedger::entries, py::return_value_policy::copy);

  py::class_<EstimateReport>(m, "EstimateReport")
      .def_readonly("algorithm", &EstimateReport::algorithm)
      .def_readonly("value", &EstimateReport::value)
      .def_readonly("ledger", &EstimateReport::ledger)
      .def_readonly("comm_bytes", &EstimateReport::comm_bytes)
      .def_readonly("rounds", &EstimateReport::rounds)
      .def_readonly("plan", &EstimateReport::plan)
      .def_readonly("plan_fallback", &EstimateReport::plan_fallback);

  py::class_<DeviationBound>(m, "DeviationBound")
      .def_readonly("radius", &DeviationBound::radius)
      .def_readonly("probability_bound", &DeviationBound::probability_bound);

  m.def("chebyshev_bound", &chebyshev_bound, py::arg("variance"), py::arg("k"));
  m.def("naive_estimate", &naive_estimate, py::arg("graph"), py::arg("pair"), py::arg("eps"),
        py::arg("rng"), py::arg("transcript") = nullptr);
  m.def("oner_estimate", &oner_estimate, py::arg("graph"), py::arg("pair"), py::arg("eps"),
        py::arg("rng"), py::arg("transcript") = nullptr);
  m.def("single_source_estimate", &single_source_estimate, py::arg("graph"), py::arg("pair"),
        py::arg("eps"), py::arg("rng"), py::arg("eps1_fraction") = 0.5,
        py::arg("transcript") = nullptr);
  m.def(
      "double_source_estimate",
      [](const BipartiteGraph& g, const QueryPair& q, double eps, const RandomSource& rng,
         Transcript* transcript) { return double_source_estimate(g, q, eps, rng, nullptr, transcript); },
      py::arg("graph"), py::arg("pair"), py::arg("eps"), py::arg("rng"),
      py::arg("transcript") = nullptr);
  m.def("central_estimate", &central_estimate, py::arg("graph"), py::arg("pair"), py::arg("eps"),
        py::arg("rng"), py::arg("transcript") = nullptr);
}

void bind_protocol(py::module_& m) {
  py::class_<Transcript>(m, "Transcript")
      .def(py::init<>())
      .def("total_bytes", &Transcript::total_bytes)
      .def("to_json_lines", &Transcript::to_json_lines);

  m.def(
      "expected_comm_bytes",
      [](Algorithm algo, double d_u, double d_w, double n1, double n2, double eps,
         py::object plan) {
        std::optional<BudgetPlan> p;
        if (!plan.is_none()) p = plan.cast<BudgetPlan>();
        return expected_comm_bytes(algo, d_u, d_w, n1, n2, eps, p);
      },
      py::arg("algo"), py::arg("d_u"), py::arg("d_w"), py::arg("n1"), py::arg("n2"),
      py::arg("eps"), py::arg("plan") = py::none());
  m.def("round_count", &round_count, py::arg("algo"));
}

}  // namespace

PYBIND11_MODULE(_cnldp, m) {
  m.doc() = "common-neighbor estimation over bipartite graphs under edge-local privacy";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "GraphParseError", PyExc_ValueError);
  py::register_exception<InfeasibleSamplingError>(m, "InfeasibleSamplingError",
                                                  PyExc_RuntimeError);

  bind_graph(m);
  bind_mechanisms(m);
  bind_budget(m);
  bind_estimators(m);
  bind_protocol(m);
}

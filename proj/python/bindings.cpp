#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "sinkloc/brute_force.hpp"
#include "sinkloc/cost.hpp"
#include "sinkloc/feasibility.hpp"
#include "sinkloc/generator.hpp"
#include "sinkloc/instance.hpp"
#include "sinkloc/instance_io.hpp"
#include "sinkloc/optimizer.hpp"

namespace py = pybind11;
using namespace sinkloc;

namespace {

using EdgeTuple = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>;
using BlockTuple = std::pair<VertexId, std::vector<VertexId>>;

struct Solution {
  Cost cost = 0;
  std::vector<VertexId> sinks;
  std::vector<BlockTuple> blocks;
  std::uint64_t oracle_calls = 0;
};

std::unique_ptr<CostFunction> oracle_from(const std::string& name) {
  if (name == "kcenter") return make_cost_function(CostKind::Eccentricity);
  return make_cost_function(parse_cost_kind(name));
}

SolverKind solver_from(const std::string& name) {
  if (name == "iterative") return SolverKind::Iterative;
  if (name == "fast") return SolverKind::Fast;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

Instance make_instance(std::int64_t n, const std::vector<EdgeTuple>& edges, const std::vector<std::int64_t>& weights,
                       std::int64_t k) {
  std::vector<RawEdge> raw;
  for (const auto& [u, v, tau, cap] : edges) raw.push_back({u, v, tau, cap});
  return Instance::build(n, raw, weights, k);
}

VertexSet to_set(const Instance& inst, const std::vector<VertexId>& members) {
  VertexSet set(inst.size());
  for (VertexId v : members) {
    if (v < 0 || static_cast<std::size_t>(v) >= inst.size()) throw py::index_error("vertex out of range");
    set.insert(v);
  }
  return set;
}

std::vector<BlockTuple> to_tuples(const std::vector<Block>& blocks) {
  std::vector<BlockTuple> out;
  for (const Block& b : blocks) out.emplace_back(b.sink, b.vertices.members());
  return out;
}

Solution from_configuration(const Configuration& c, Cost cost, std::uint64_t calls) {
  return {cost, c.sinks(), to_tuples(c.blocks()), calls};
}

}  // namespace

PYBIND11_MODULE(_sinkloc, m) {
  m.doc() = "Minmax k-sink location and evacuation on trees";

  py::register_exception<InstanceError>(m, "InstanceError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<OptimizationError>(m, "OptimizationError", PyExc_RuntimeError);
  py::register_exception<TooLarge>(m, "TooLarge", PyExc_ValueError);

  py::class_<Instance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("n"), py::arg("edges"), py::arg("weights"), py::arg("k") = 1,
           "Tree from (u, v, tau, cap) edges and per-vertex weights.")
      .def_static("from_text", [](const std::string& text) { return parse_instance(text); }, py::arg("text"))
      .def("to_text", &serialize_instance)
      .def("with_k", &Instance::with_k, py::arg("k"))
      .def_property_readonly("n", &Instance::size)
      .def_property_readonly("k", &Instance::k)
      .def_property_readonly("weights", &Instance::weights)
      .def_property_readonly("total_weight", &Instance::total_weight)
      .def_property_readonly("edges",
                             [](const Instance& inst) {
                               std::vector<std::tuple<VertexId, VertexId, std::uint64_t, std::uint64_t>> out;
                               for (const Edge& e : inst.edges()) out.emplace_back(e.u, e.v, e.tau, e.cap);
                               return out;
                             })
      .def("__repr__", [](const Instance& inst) {
        return "Instance(n=" + std::to_string(inst.size()) + ", k=" + std::to_string(inst.k()) + ")";
      });

  py::class_<Solution>(m, "Solution")
      .def_readonly("cost", &Solution::cost)
      .def_readonly("sinks", &Solution::sinks)
      .def_readonly("blocks", &Solution::blocks)
      .def_readonly("oracle_calls", &Solution::oracle_calls)
      .def("__repr__", [](const Solution& s) {
        return "Solution(cost=" + format_cost(s.cost) + ", sinks=" + std::to_string(s.sinks.size()) + ")";
      });

  m.def(
      "cost",
      [](const Instance& inst, const std::vector<VertexId>& U, VertexId v, const std::string& oracle) {
        return oracle_from(oracle)->evaluate(inst, to_set(inst, U), v);
      },
      py::arg("instance"), py::arg("vertices"), py::arg("sink"), py::arg("oracle") = "evac",
      "f(U, v); the maximum integer stands for an infinite cost.");

  m.def(
      "check",
      [](const Instance& inst, Cost threshold, const std::string& oracle, const std::string& algo) -> py::object {
        const auto fn = oracle_from(oracle);
        Oracle counted(inst, *fn);
        const FeasibilityResult r = solver_from(algo) == SolverKind::Iterative
                                        ? bounded_cost_iterative(inst, counted, threshold)
                                        : bounded_cost_fast(inst, counted, threshold);
        if (!r.feasible()) return py::none();
        return py::cast(from_configuration(*r.configuration, r.configuration->cost(inst, *fn), counted.stats().calls));
      },
      py::arg("instance"), py::arg("threshold"), py::arg("oracle") = "evac", py::arg("algo") = "fast",
      "Feasible configuration within the threshold, or None.");

  m.def(
      "solve",
      [](const Instance& inst, const std::string& oracle, const std::string& algo) {
        const auto fn = oracle_from(oracle);
        const OptimizationResult r = solve_parametric(inst, *fn, solver_from(algo));
        return from_configuration(r.configuration, r.cost, r.interfered.total().calls + r.probe_calls.calls);
      },
      py::arg("instance"), py::arg("oracle") = "evac", py::arg("algo") = "fast",
      "Optimal cost with at most k sinks.");

  m.def(
      "partition",
      [](const Instance& inst, const std::vector<VertexId>& sinks, const std::string& oracle) {
        const auto fn = oracle_from(oracle);
        const FixedSinksResult r = partition_fixed_sinks(inst, *fn, to_set(inst, sinks));
        std::vector<VertexId> sink_list;
        for (const Block& b : r.blocks) sink_list.push_back(b.sink);
        return Solution{r.cost, sink_list, to_tuples(r.blocks), r.calls.calls};
      },
      py::arg("instance"), py::arg("sinks"), py::arg("oracle") = "evac", "Optimal partition for given sinks.");

  m.def(
      "brute_force",
      [](const Instance& inst, const std::string& oracle) {
        const BruteForceOptimum r = brute_force_optimal(inst, *oracle_from(oracle), inst.k());
        return std::make_pair(r.cost, r.sinks);
      },
      py::arg("instance"), py::arg("oracle") = "evac", "Exhaustive optimum (cost, sinks) for small trees.");

  m.def(
      "generate",
      [](std::int64_t n, std::uint64_t seed, const std::string& shape, std::int64_t max_tau, std::int64_t max_cap,
         std::int64_t max_w, std::int64_t k) {
        GeneratorOptions o;
        o.n = n;
        o.k = k;
        o.seed = seed;
        o.max_tau = max_tau;
        o.max_cap = max_cap;
        o.max_weight = max_w;
        o.shape = parse_tree_shape(shape);
        return generate_instance(o);
      },
      py::arg("n"), py::arg("seed") = 0, py::arg("shape") = "random", py::arg("max_tau") = 1, py::arg("max_cap") = 1,
      py::arg("max_w") = 1, py::arg("k") = 1);
}

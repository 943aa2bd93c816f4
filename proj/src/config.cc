// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/config.h"

#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <utility>

#include "qwalk/error.h"
#include "qwalk/generators.h"

namespace qwalk {

namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

const json& Require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    Fail(where, std::string("missing \"") + key + "\"");
  }
  return obj.at(key);
}

std::uint64_t AsUnsigned(const json& v, const std::string& where) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  // Allows 1e6-style literals for counts.
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d >= 0 && d == std::floor(d) && d < 1.8e19) {
      return static_cast<std::uint64_t>(d);
    }
  }
  Fail(where, "expected a non-negative integer, got " + v.dump());
}

double AsDouble(const json& v, const std::string& where) {
  if (!v.is_number()) Fail(where, "expected a number, got " + v.dump());
  return v.get<double>();
}

std::vector<std::size_t> AsSizeList(const json& v, const std::string& where) {
  if (!v.is_array()) Fail(where, "expected an array");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(AsUnsigned(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::string Lower(std::string s) {
  for (char& ch : s) {
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  }
  return s;
}

Complex ComplexFromJson(const json& v, const std::string& where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  Fail(where, "expected a real or [re, im], got " + v.dump());
}

Validation ValidationFrom(const json& spec) {
  if (spec.is_object() && spec.contains("validate") &&
      spec.at("validate").is_boolean() && !spec.at("validate").get<bool>()) {
    return Validation::kSkip;
  }
  return Validation::kUnitary;
}

template <typename Op, typename Build>
Schedule<Op> ScheduleFromJson(const json& spec, const char* item_key,
                              const std::string& where, Build build) {
  if (!(spec.is_object() && spec.contains("schedule"))) return build(spec);
  const json& entries = spec.at("schedule");
  if (!entries.is_array() || entries.empty()) {
    Fail(where, "\"schedule\" must be a non-empty array");
  }
  std::optional<Schedule<Op>> schedule;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string at = where + ".schedule[" + std::to_string(i) + "]";
    const std::size_t from = AsUnsigned(Require(entries[i], "from", at), at);
    Op op = build(Require(entries[i], item_key, at));
    if (!schedule) {
      if (from != 0) Fail(at, "the first schedule entry must start at 0");
      schedule.emplace(std::move(op));
    } else {
      schedule->Then(from, std::move(op));
    }
  }
  return std::move(*schedule);
}

// Reads "coins"/"shifts" (per walker) or the shared "coin"/"shift".
template <typename Op, typename Build>
std::vector<Schedule<Op>> OperatorSchedules(const json& config,
                                            const char* shared,
                                            const char* per_walker,
                                            const char* item_key,
                                            const json& fallback,
                                            std::size_t num_walkers,
                                            Build build) {
  std::vector<Schedule<Op>> out;
  if (config.contains(per_walker)) {
    const json& list = config.at(per_walker);
    if (!list.is_array() || list.size() != num_walkers) {
      Fail(per_walker, "needs one entry per walker");
    }
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string at = std::string(per_walker) + "[" +
                             std::to_string(k) + "]";
      out.push_back(ScheduleFromJson<Op>(list[k], item_key, at, build));
    }
    return out;
  }
  const json& spec = config.contains(shared) ? config.at(shared) : fallback;
  out.push_back(ScheduleFromJson<Op>(spec, item_key, shared, build));
  return out;
}

WaveFunction SingleWalkerState(const GraphPtr& g, const json& spec,
                               const std::string& where) {
  WaveFunction psi(g);
  auto add = [&](const json& item, const std::string& at) {
    const auto v = AsUnsigned(Require(item, "vertex", at), at + ".vertex");
    const auto c = AsUnsigned(Require(item, "port", at), at + ".port");
    if (v >= g->num_vertices() || c >= g->degree(static_cast<Vertex>(v))) {
      Fail(at, "no basis state (" + std::to_string(v) + ", " +
                   std::to_string(c) + ")");
    }
    const double re = item.contains("re") ? AsDouble(item.at("re"), at) : 1.0;
    const double im = item.contains("im") ? AsDouble(item.at("im"), at) : 0.0;
    psi[g->index(static_cast<Vertex>(v), static_cast<Port>(c))] +=
        Complex(re, im);
  };
  if (spec.is_object() && spec.value("uniform", false)) {
    const double a = 1.0 / std::sqrt(static_cast<double>(psi.size()));
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = a;
  } else if (spec.is_object()) {
    add(spec, where);
  } else if (spec.is_array()) {
    for (std::size_t i = 0; i < spec.size(); ++i) {
      add(spec[i], where + "[" + std::to_string(i) + "]");
    }
  } else {
    Fail(where, "expected an object or an array of components");
  }
  return psi;
}

WaveFunction JointState(const GraphPtr& g, std::size_t k, const json& spec,
                        const std::string& where) {
  if (!spec.is_array()) Fail(where, "expected an array of joint components");
  WaveFunction psi(g, k);
  const std::size_t d = g->dimension();
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const auto vertices = AsSizeList(Require(spec[i], "vertices", at), at);
    const auto ports = AsSizeList(Require(spec[i], "ports", at), at);
    if (vertices.size() != k || ports.size() != k) {
      Fail(at, "needs " + std::to_string(k) + " vertices and ports");
    }
    std::size_t index = 0;
    for (std::size_t w = 0; w < k; ++w) {
      if (vertices[w] >= g->num_vertices() ||
          ports[w] >= g->degree(static_cast<Vertex>(vertices[w]))) {
        Fail(at, "port out of range for walker " + std::to_string(w));
      }
      index = index * d + g->index(static_cast<Vertex>(vertices[w]),
                                   static_cast<Port>(ports[w]));
    }
    const double re = spec[i].contains("re") ? AsDouble(spec[i].at("re"), at) : 1.0;
    const double im = spec[i].contains("im") ? AsDouble(spec[i].at("im"), at) : 0.0;
    psi[index] += Complex(re, im);
  }
  return psi;
}

}  // namespace

json ParseJson(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Recover line and column from the byte offset.
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte, text.size() + 1);
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ConfigError(std::string(source) + ":" + std::to_string(line) + ":" +
                      std::to_string(column) + ": malformed JSON: " + e.what());
  }
}

json LoadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return ParseJson(text.str(), path);
}

CMatrix MatrixFromJson(const json& rows) {
  if (!rows.is_array() || rows.empty()) Fail("matrix", "expected rows");
  const std::size_t n = rows.size();
  CMatrix m(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (!rows[j].is_array() || rows[j].size() != n) {
      Fail("matrix", "row " + std::to_string(j) + " must have " +
                         std::to_string(n) + " entries");
    }
    for (std::size_t k = 0; k < n; ++k) {
      m(j, k) = ComplexFromJson(rows[j][k], "matrix");
    }
  }
  return m;
}

GraphPtr GraphFromJson(const json& spec) {
  if (!spec.is_object()) Fail("graph", "expected an object");
  PortGraph g = [&] {
    if (spec.contains("generator")) {
      const std::string gen = Lower(spec.at("generator").get<std::string>());
      if (gen == "cycle") {
        return Cycle(AsUnsigned(Require(spec, "n", "graph"), "graph.n"));
      }
      if (gen == "torus") {
        const auto dims = AsSizeList(Require(spec, "dims", "graph"), "graph.dims");
        return Torus(std::span<const std::size_t>(dims));
      }
      if (gen == "complete") {
        return Complete(AsUnsigned(Require(spec, "n", "graph"), "graph.n"));
      }
      if (gen == "random_regular") {
        return RandomRegular(
            AsUnsigned(Require(spec, "n", "graph"), "graph.n"),
            AsUnsigned(Require(spec, "degree", "graph"), "graph.degree"),
            AsUnsigned(Require(spec, "seed", "graph"), "graph.seed"));
      }
      Fail("graph.generator", "unknown generator \"" + gen + "\"");
    }
    if (spec.contains("neighbors")) {
      std::vector<std::vector<Vertex>> lists;
      for (const auto& row : spec.at("neighbors")) {
        std::vector<Vertex> list;
        for (auto v : AsSizeList(row, "graph.neighbors")) {
          list.push_back(static_cast<Vertex>(v));
        }
        lists.push_back(std::move(list));
      }
      return PortGraph::FromNeighborLists(std::move(lists));
    }
    const auto n = AsUnsigned(Require(spec, "n", "graph"), "graph.n");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : Require(spec, "edges", "graph")) {
      const auto uv = AsSizeList(e, "graph.edges");
      if (uv.size() != 2) Fail("graph.edges", "each edge needs two vertices");
      edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
    }
    return PortGraph::FromEdges(n, edges);
  }();
  if (spec.contains("port_order")) {
    const std::string order = Lower(spec.at("port_order").get<std::string>());
    if (order == "matching") {
      g = OrderPortsForMovingShift(g);
    } else if (order != "given" && order != "sorted") {
      Fail("graph.port_order", "unknown ordering \"" + order + "\"");
    }
  }
  return std::make_shared<const PortGraph>(std::move(g));
}

CoinOperator CoinFromJson(const PortGraph& g, const json& spec) {
  if (spec.is_string()) {
    const std::string name = Lower(spec.get<std::string>());
    if (name == "hadamard") return CoinOperator::Hadamard(g);
    if (name == "grover") return CoinOperator::Grover(g);
    if (name == "identity") return CoinOperator::Identity(g);
    Fail("coin", "unknown coin \"" + name + "\"");
  }
  if (!spec.is_object()) Fail("coin", "expected a name or an object");
  if (spec.contains("random")) {
    return CoinOperator::Random(g, AsUnsigned(spec.at("random"), "coin.random"));
  }
  if (spec.contains("matrix")) {
    return CoinOperator::Uniform(g, MatrixFromJson(spec.at("matrix")),
                                 ValidationFrom(spec));
  }
  if (spec.contains("blocks")) {
    std::vector<CMatrix> blocks;
    for (const auto& b : spec.at("blocks")) blocks.push_back(MatrixFromJson(b));
    return CoinOperator::Explicit(g, std::move(blocks), ValidationFrom(spec));
  }
  if (spec.contains("name")) return CoinFromJson(g, spec.at("name"));
  Fail("coin", "expected \"random\", \"matrix\", \"blocks\" or \"schedule\"");
}

ShiftOperator ShiftFromJson(const PortGraph& g, const json& spec) {
  if (spec.is_string()) {
    const std::string name = Lower(spec.get<std::string>());
    if (name == "moving") return ShiftOperator::Moving(g);
    if (name == "flip_flop" || name == "flip-flop" || name == "default_sigma") {
      return ShiftOperator::FlipFlop(g);
    }
    if (name == "identity") return ShiftOperator::Identity(g);
    Fail("shift", "unknown shift \"" + name + "\"");
  }
  if (spec.is_object() && spec.contains("landing")) {
    std::vector<std::vector<Port>> landing;
    for (const auto& row : spec.at("landing")) {
      std::vector<Port> ports;
      for (auto c : AsSizeList(row, "shift.landing")) {
        ports.push_back(static_cast<Port>(c));
      }
      landing.push_back(std::move(ports));
    }
    return ShiftOperator::Explicit(g, landing);
  }
  if (spec.is_object() && spec.contains("name")) {
    return ShiftFromJson(g, spec.at("name"));
  }
  Fail("shift", "expected a name, {\"landing\": ...} or a schedule");
}

InteractionOperator InteractionFromJson(const json& spec) {
  if (spec.is_string()) {
    if (Lower(spec.get<std::string>()) == "identity") {
      return InteractionOperator::Identity();
    }
    Fail("interaction", "unknown interaction " + spec.dump());
  }
  if (spec.is_object() && spec.contains("coincidence_phase")) {
    return InteractionOperator::CoincidencePhase(
        AsDouble(spec.at("coincidence_phase"), "interaction.coincidence_phase"));
  }
  Fail("interaction", "expected \"identity\" or {\"coincidence_phase\": phi}");
}

RunConfig ParseRunConfig(const json& config) {
  if (!config.is_object()) Fail("config", "top level must be an object");
  RunConfig run;
  try {
    run.resolved = config;
    run.graph = GraphFromJson(Require(config, "graph", "config"));
    const PortGraph& g = *run.graph;
    run.num_walkers = config.contains("walkers")
                          ? AsUnsigned(config.at("walkers"), "walkers")
                          : 1;
    if (run.num_walkers == 0) Fail("walkers", "must be at least 1");
    run.steps = config.contains("steps") ? AsUnsigned(config.at("steps"), "steps") : 0;
    run.seed = config.contains("seed") ? AsUnsigned(config.at("seed"), "seed") : 0;

    auto coins = OperatorSchedules<CoinOperator>(
        config, "coin", "coins", "coin", json("hadamard"), run.num_walkers,
        [&](const json& s) { return CoinFromJson(g, s); });
    auto shifts = OperatorSchedules<ShiftOperator>(
        config, "shift", "shifts", "shift", json("moving"), run.num_walkers,
        [&](const json& s) { return ShiftFromJson(g, s); });
    const json interaction =
        config.contains("interaction") ? config.at("interaction") : json("identity");
    run.ops.emplace(std::move(coins), std::move(shifts),
                    ScheduleFromJson<InteractionOperator>(
                        interaction, "interaction", "interaction",
                        [](const json& s) { return InteractionFromJson(s); }));
    run.ops->CheckCompatible(g, run.num_walkers);

    const json& initial = Require(config, "initial", "config");
    if (run.num_walkers == 1) {
      run.initial.emplace(SingleWalkerState(run.graph, initial, "initial"));
    } else if (initial.is_object() && initial.contains("walkers")) {
      const json& each = initial.at("walkers");
      if (!each.is_array() || each.size() != run.num_walkers) {
        Fail("initial.walkers", "needs one state per walker");
      }
      std::vector<WaveFunction> parts;
      for (std::size_t k = 0; k < each.size(); ++k) {
        const std::string at = "initial.walkers[" + std::to_string(k) + "]";
        WaveFunction part = SingleWalkerState(run.graph, each[k], at);
        if (part.SquaredNorm() == 0.0) Fail(at, "state is zero");
        part.Normalize();
        parts.push_back(std::move(part));
      }
      run.initial.emplace(WaveFunction::Product(parts));
    } else {
      run.initial.emplace(
          JointState(run.graph, run.num_walkers, initial, "initial"));
    }
    const double norm = run.initial->SquaredNorm();
    if (norm == 0.0) Fail("initial", "state is zero");
    if (std::abs(norm - 1.0) > kInitialNormTolerance) {
      run.warnings.push_back("initial state had squared norm " +
                             std::to_string(norm) + "; renormalised");
    }
    run.initial->Normalize();

    if (config.contains("thresholds")) {
      const json& th = config.at("thresholds");
      if (th.contains("zero")) {
        run.equivalence.zero_threshold = AsDouble(th.at("zero"), "thresholds.zero");
      }
      if (th.contains("column_tolerance")) {
        run.equivalence.column_tolerance =
            AsDouble(th.at("column_tolerance"), "thresholds.column_tolerance");
      }
    }
    if (config.contains("strict")) run.equivalence.strict = config.at("strict").get<bool>();
    if (config.contains("materialize_all")) {
      run.equivalence.materialize_all = config.at("materialize_all").get<bool>();
    }

    if (config.contains("sampling")) {
      const json& s = config.at("sampling");
      SamplingConfig& out = run.sampling;
      if (s.contains("ensemble_size")) {
        out.ensemble_size = AsUnsigned(s.at("ensemble_size"), "sampling.ensemble_size");
      }
      if (s.contains("length")) out.length = AsUnsigned(s.at("length"), "sampling.length");
      if (s.contains("ensemble_sizes")) {
        out.ensemble_sizes = AsSizeList(s.at("ensemble_sizes"), "sampling.ensemble_sizes");
      }
      if (s.contains("times")) out.times = AsSizeList(s.at("times"), "sampling.times");
      if (s.contains("threads")) {
        out.options.threads = AsUnsigned(s.at("threads"), "sampling.threads");
      }
      if (s.contains("sampler")) {
        const std::string name = Lower(s.at("sampler").get<std::string>());
        if (name == "alias") {
          out.options.sampler = TransitionSampler::kAlias;
        } else if (name == "linear") {
          out.options.sampler = TransitionSampler::kLinearScan;
        } else {
          Fail("sampling.sampler", "expected \"linear\" or \"alias\"");
        }
      }
    }
    if (config.contains("rejection")) {
      const json& r = config.at("rejection");
      if (r.contains("length")) {
        run.rejection.length = AsUnsigned(r.at("length"), "rejection.length");
      }
      if (r.contains("attempts")) {
        run.rejection.attempts = AsUnsigned(r.at("attempts"), "rejection.attempts");
      }
      if (r.contains("max_attempts")) {
        run.rejection.max_attempts =
            AsUnsigned(r.at("max_attempts"), "rejection.max_attempts");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return run;
}

}  // namespace qwalk

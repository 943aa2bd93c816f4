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

#include "qwalk/io.h"

#include <bit>
#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string_view>

#include "qwalk/error.h"

namespace qwalk {

namespace {

constexpr char kBinaryMagic[8] = {'Q', 'W', 'P', 'M', 'A', 'T', '0', '1'};

static_assert(std::endian::native == std::endian::little,
              "binary matrix format assumes a little-endian host");

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::size_t ParseSize(std::string_view text) {
  std::size_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("not an unsigned integer: \"" + std::string(text) + "\"");
  }
  return value;
}

// Reads data rows after checking the header; calls `row` with the fields.
template <typename Row>
void ForEachRow(std::istream& in, std::string_view header, std::size_t width,
                Row row) {
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw ValidationError("expected CSV header \"" + std::string(header) + "\"");
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = SplitFields(line);
    if (fields.size() != width) {
      throw ValidationError("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(width) + " fields");
    }
    row(fields);
  }
}

template <typename T>
void PutRaw(std::ostream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T GetRaw(std::istream& in) {
  T value;
  if (!in.read(reinterpret_cast<char*>(&value), sizeof(T))) {
    throw ValidationError("truncated binary matrix file");
  }
  return value;
}

}  // namespace

std::string FormatDouble(double x) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

double ParseDouble(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("not a number: \"" + std::string(text) + "\"");
  }
  return value;
}

std::string StateLabel(std::size_t state, std::size_t num_vertices,
                       std::size_t num_walkers) {
  if (num_walkers == 1) return std::to_string(state);
  std::vector<std::size_t> digits(num_walkers);
  for (std::size_t k = num_walkers; k-- > 0;) {
    digits[k] = state % num_vertices;
    state /= num_vertices;
  }
  std::string label;
  for (std::size_t k = 0; k < num_walkers; ++k) {
    if (k > 0) label += '|';
    label += std::to_string(digits[k]);
  }
  return label;
}

std::size_t ParseStateLabel(std::string_view label, std::size_t num_vertices,
                            std::size_t num_walkers) {
  std::size_t state = 0;
  std::size_t parts = 0;
  std::size_t start = 0;
  for (;;) {
    const std::size_t bar = label.find('|', start);
    const std::size_t v = ParseSize(label.substr(start, bar - start));
    if (v >= num_vertices) {
      throw IndexError("vertex " + std::to_string(v) + " out of range in \"" +
                       std::string(label) + "\"");
    }
    state = state * num_vertices + v;
    ++parts;
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  if (parts != num_walkers) {
    throw ValidationError("state \"" + std::string(label) + "\" does not have " +
                          std::to_string(num_walkers) + " components");
  }
  return state;
}

void WriteRhoCsv(std::ostream& out, std::span<const std::vector<double>> rho,
                 std::size_t num_vertices, std::size_t num_walkers) {
  out << "t,v,rho\n";
  for (std::size_t t = 0; t < rho.size(); ++t) {
    for (std::size_t v = 0; v < rho[t].size(); ++v) {
      out << t << ',' << StateLabel(v, num_vertices, num_walkers) << ','
          << FormatDouble(rho[t][v]) << '\n';
    }
  }
}

std::vector<std::vector<double>> ReadRhoCsv(std::istream& in,
                                            std::size_t num_vertices,
                                            std::size_t num_walkers) {
  std::size_t states = 1;
  for (std::size_t k = 0; k < num_walkers; ++k) states *= num_vertices;
  std::vector<std::vector<double>> rho;
  ForEachRow(in, "t,v,rho", 3, [&](const auto& f) {
    const std::size_t t = ParseSize(f[0]);
    if (t >= rho.size()) rho.resize(t + 1, std::vector<double>(states, 0.0));
    rho[t][ParseStateLabel(f[1], num_vertices, num_walkers)] = ParseDouble(f[2]);
  });
  return rho;
}

nlohmann::json RhoJson(std::span<const std::vector<double>> rho) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rho) out.push_back(r);
  return out;
}

void WriteMatricesCsv(std::ostream& out, std::span<const TransitionMatrix> ps,
                      std::size_t num_vertices, std::size_t num_walkers) {
  out << "t,u,v,p\n";
  for (const TransitionMatrix& p : ps) {
    for (std::size_t k = 0; k < p.num_columns(); ++k) {
      const std::string u = StateLabel(p.sources()[k], num_vertices, num_walkers);
      const TransitionColumn& col = p.column_at(k);
      for (std::size_t j = 0; j < col.targets.size(); ++j) {
        out << p.time() << ',' << u << ','
            << StateLabel(col.targets[j], num_vertices, num_walkers) << ','
            << FormatDouble(col.probs[j]) << '\n';
      }
    }
  }
}

std::vector<TransitionMatrix> ReadMatricesCsv(std::istream& in,
                                              std::size_t num_vertices,
                                              std::size_t num_walkers) {
  std::size_t states = 1;
  for (std::size_t k = 0; k < num_walkers; ++k) states *= num_vertices;
  std::vector<TransitionMatrix> out;
  std::size_t source = 0;
  TransitionColumn column;
  bool open = false;
  auto flush = [&] {
    if (open) out.back().AddColumn(source, std::move(column));
    column = {};
    open = false;
  };
  ForEachRow(in, "t,u,v,p", 4, [&](const auto& f) {
    const std::size_t t = ParseSize(f[0]);
    const std::size_t u = ParseStateLabel(f[1], num_vertices, num_walkers);
    if (out.empty() || t != out.back().time()) {
      flush();
      if (t != out.size()) {
        throw ValidationError("matrix rows must be grouped by increasing t");
      }
      out.emplace_back(t, states);
    } else if (open && u != source) {
      flush();
    }
    source = u;
    open = true;
    column.targets.push_back(ParseStateLabel(f[2], num_vertices, num_walkers));
    column.probs.push_back(ParseDouble(f[3]));
  });
  flush();
  return out;
}

void WriteMatricesBinary(std::ostream& out, std::span<const TransitionMatrix> ps) {
  out.write(kBinaryMagic, sizeof(kBinaryMagic));
  PutRaw<std::uint64_t>(out, ps.size());
  for (const TransitionMatrix& p : ps) {
    PutRaw<std::uint64_t>(out, p.time());
    PutRaw<std::uint64_t>(out, p.num_states());
    PutRaw<std::uint64_t>(out, p.num_columns());
    for (std::size_t k = 0; k < p.num_columns(); ++k) {
      const TransitionColumn& col = p.column_at(k);
      PutRaw<std::uint64_t>(out, p.sources()[k]);
      PutRaw<std::uint64_t>(out, col.targets.size());
      for (std::size_t v : col.targets) PutRaw<std::uint64_t>(out, v);
      for (double x : col.probs) PutRaw<double>(out, x);
    }
  }
}

std::vector<TransitionMatrix> ReadMatricesBinary(std::istream& in) {
  char magic[sizeof(kBinaryMagic)];
  if (!in.read(magic, sizeof(magic)) ||
      std::string_view(magic, sizeof(magic)) !=
          std::string_view(kBinaryMagic, sizeof(kBinaryMagic))) {
    throw ValidationError("not a binary transition-matrix file");
  }
  const auto count = GetRaw<std::uint64_t>(in);
  std::vector<TransitionMatrix> out;
  for (std::uint64_t m = 0; m < count; ++m) {
    const auto t = GetRaw<std::uint64_t>(in);
    const auto states = GetRaw<std::uint64_t>(in);
    const auto columns = GetRaw<std::uint64_t>(in);
    TransitionMatrix p(t, states);
    for (std::uint64_t k = 0; k < columns; ++k) {
      const auto source = GetRaw<std::uint64_t>(in);
      const auto size = GetRaw<std::uint64_t>(in);
      if (size > states) throw ValidationError("corrupt binary matrix column");
      TransitionColumn col;
      col.targets.resize(size);
      col.probs.resize(size);
      for (auto& v : col.targets) v = GetRaw<std::uint64_t>(in);
      for (auto& x : col.probs) x = GetRaw<double>(in);
      p.AddColumn(source, std::move(col));
    }
    out.push_back(std::move(p));
  }
  return out;
}

void WriteTrajectoriesCsv(std::ostream& out, const TrajectoryEnsemble& ensemble,
                          std::size_t num_vertices, std::size_t num_walkers) {
  out << "traj_id,t,vertex\n";
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    const auto& states = ensemble.paths[i].states;
    for (std::size_t t = 0; t < states.size(); ++t) {
      out << i << ',' << t << ','
          << StateLabel(states[t], num_vertices, num_walkers) << '\n';
    }
  }
}

void WriteUnfoldedCsv(std::ostream& out, const PortGraph& torus,
                      const TrajectoryEnsemble& ensemble) {
  const std::size_t dims = torus.torus_dims().size();
  out << "traj_id,t";
  for (std::size_t k = 0; k < dims; ++k) out << ",x" << k;
  out << '\n';
  auto rows = [&](const std::string& id,
                  const std::vector<std::vector<double>>& coords) {
    for (std::size_t t = 0; t < coords.size(); ++t) {
      out << id << ',' << t;
      for (double x : coords[t]) out << ',' << FormatDouble(x);
      out << '\n';
    }
  };
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    rows(std::to_string(i), UnfoldTorusPath(torus, ensemble.paths[i]));
  }
  rows("mean", MeanUnfoldedPath(torus, ensemble));
}

void WriteConvergenceCsv(std::ostream& out, std::span<const ConvergenceRow> rows) {
  out << "M,t,tvd\n";
  for (const ConvergenceRow& r : rows) {
    out << r.ensemble_size << ',' << r.t << ',' << FormatDouble(r.tvd) << '\n';
  }
}

nlohmann::json ToJson(const TheoremReport& report) {
  return {{"steps", report.steps},
          {"max_entry_violation", report.max_entry_violation},
          {"max_column_sum_deviation", report.max_column_sum_deviation},
          {"max_propagation_residual", report.max_propagation_residual},
          {"off_edge_entries", report.off_edge_entries},
          {"holds", report.Holds()}};
}

nlohmann::json ToJson(const RejectionReport& report) {
  nlohmann::json out = {{"requested_attempts", report.requested_attempts},
                        {"attempts", report.attempts},
                        {"accepted", report.accepted},
                        {"acceptance_rate", report.acceptance_rate},
                        {"none_accepted", report.none_accepted},
                        {"marginals", report.marginals},
                        {"tvd", report.tvd},
                        {"max_tvd", report.max_tvd},
                        {"path_count", report.path_count},
                        {"sequence_count", report.sequence_count}};
  out["torus_path_estimate"] = report.torus_path_estimate
                                   ? nlohmann::json(*report.torus_path_estimate)
                                   : nlohmann::json(nullptr);
  return out;
}

}  // namespace qwalk

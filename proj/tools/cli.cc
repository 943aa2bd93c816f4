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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qwalk/config.h"
#include "qwalk/equivalence.h"
#include "qwalk/error.h"
#include "qwalk/evolution.h"
#include "qwalk/grover_torus.h"
#include "qwalk/io.h"
#include "qwalk/matrix.h"
#include "qwalk/rejection.h"
#include "qwalk/rng.h"
#include "qwalk/trajectory.h"

namespace qwalk::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kOutDirEnv = "QWALK_OUT_DIR";
constexpr const char* kDefaultOutDir = "qwalk_out";
constexpr const char* kManifestName = "manifest.json";
constexpr const char* kMatricesCsv = "transition_matrices.csv";
constexpr const char* kMatricesBin = "transition_matrices.bin";
constexpr const char* kRhoCsv = "rho.csv";
// Normalisation drift beyond this during plain evolution is reported as a
// numerical failure.
constexpr double kNormDriftTolerance = 1e-8;
// Tolerance of the verification report, matching the theorem checks.
constexpr double kReportTolerance = 1e-10;

struct Options {
  std::string config_path;
  std::vector<std::string> sets;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> steps;
  std::string out_dir;
  std::string format = "csv";
  std::optional<std::size_t> count;
  std::optional<std::size_t> length;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> times;
  std::optional<std::uint64_t> attempts;
  std::optional<std::string> sampler;
  std::optional<std::size_t> threads;
  std::string matrices_dir;
  bool binary = false;
  bool emit_matrices = false;
};

// Output directory plus the manifest that describes every file in it.
class Artifacts {
 public:
  Artifacts(std::string dir, std::string command)
      : dir_(std::move(dir)), command_(std::move(command)) {
    fs::create_directories(dir_);
  }

  void Write(const std::string& name, const std::function<void(std::ostream&)>& body,
             bool binary = false) {
    std::ofstream out(fs::path(dir_) / name,
                      binary ? std::ios::out | std::ios::binary : std::ios::out);
    if (!out) throw Error("cannot write " + (fs::path(dir_) / name).string());
    body(out);
    if (!out) throw Error("write failed for " + name);
    outputs_.push_back(name);
  }

  void WriteJson(const std::string& name, const json& value) {
    Write(name, [&](std::ostream& out) { out << value.dump(2) << '\n'; });
  }

  void Finish(json manifest) {
    manifest["command"] = command_;
    manifest["outputs"] = outputs_;
    std::ofstream out(fs::path(dir_) / kManifestName);
    out << manifest.dump(2) << '\n';
  }

  const std::string& dir() const { return dir_; }

 private:
  std::string dir_;
  std::string command_;
  std::vector<std::string> outputs_;
};

std::string Hex(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string OutDir(const Options& opt) {
  if (!opt.out_dir.empty()) return opt.out_dir;
  if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env) return env;
  return kDefaultOutDir;
}

// "a.b.c=VALUE" sets config["a"]["b"]["c"]; VALUE is JSON when it parses as
// such and a string otherwise.
void ApplySet(json& config, const std::string& assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("--set expects key.path=value, got \"" + assignment + "\"");
  }
  const std::string path = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;
  json* node = &config;
  std::size_t start = 0;
  for (;;) {
    const std::size_t dot = path.find('.', start);
    const std::string key = path.substr(start, dot - start);
    if (!node->is_object() && !node->is_null()) {
      throw ConfigError("--set " + path + ": \"" + key + "\" is not inside an object");
    }
    node = &(*node)[key];
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  *node = std::move(value);
}

json LoadConfig(const Options& opt) {
  if (opt.config_path.empty()) throw ConfigError("--config is required");
  json config = LoadJsonFile(opt.config_path);
  if (!config.is_object()) throw ConfigError(opt.config_path + ": top level must be an object");
  for (const auto& s : opt.sets) ApplySet(config, s);
  if (opt.steps) config["steps"] = *opt.steps;
  if (opt.seed) config["seed"] = *opt.seed;
  if (opt.count) config["sampling"]["ensemble_size"] = *opt.count;
  if (opt.length) {
    config["sampling"]["length"] = *opt.length;
    config["rejection"]["length"] = *opt.length;
  }
  if (!opt.sizes.empty()) config["sampling"]["ensemble_sizes"] = opt.sizes;
  if (!opt.times.empty()) config["sampling"]["times"] = opt.times;
  if (opt.attempts) config["rejection"]["attempts"] = *opt.attempts;
  if (opt.sampler) config["sampling"]["sampler"] = *opt.sampler;
  if (opt.threads) config["sampling"]["threads"] = *opt.threads;
  return config;
}

RunConfig Prepare(const Options& opt, std::ostream& err) {
  RunConfig run = ParseRunConfig(LoadConfig(opt));
  for (const auto& w : run.warnings) err << "warning: " << w << '\n';
  return run;
}

json Manifest(const RunConfig& run) {
  return {{"tool", "qwalk"},
          {"tool_version", kToolVersion},
          {"config", run.resolved},
          {"graph_fingerprint", Hex(run.graph->Fingerprint())},
          {"num_vertices", run.graph->num_vertices()},
          {"walkers", run.num_walkers},
          {"steps", run.steps},
          {"seed", run.seed},
          {"rng", std::string(kRngAlgorithm)},
          {"thresholds",
           {{"zero", run.equivalence.zero_threshold},
            {"column_tolerance", run.equivalence.column_tolerance},
            {"strict", run.equivalence.strict}}},
          {"warnings", run.warnings}};
}

void CheckFormat(const Options& opt) {
  if (opt.format != "csv" && opt.format != "json") {
    throw ConfigError("--format must be csv or json");
  }
}

void WriteRho(Artifacts& art, const Options& opt,
              const std::vector<std::vector<double>>& rho, const RunConfig& run) {
  if (opt.format == "json") {
    art.WriteJson("rho.json", RhoJson(rho));
  } else {
    art.Write(kRhoCsv, [&](std::ostream& o) {
      WriteRhoCsv(o, rho, run.graph->num_vertices(), run.num_walkers);
    });
  }
}

int CmdEvolve(const Options& opt, std::ostream& out, std::ostream& err) {
  CheckFormat(opt);
  RunConfig run = Prepare(opt, err);
  const auto rho = EvolveDistributions(*run.initial, *run.ops, run.steps);
  double drift = 0.0;
  for (const auto& r : rho) {
    double s = 0.0;
    for (double x : r) s += x;
    drift = std::max(drift, std::abs(s - 1.0));
  }
  Artifacts art(OutDir(opt), "evolve");
  WriteRho(art, opt, rho, run);
  json manifest = Manifest(run);
  manifest["max_norm_drift"] = drift;
  art.Finish(manifest);
  out << "evolve: " << rho.size() << " distributions over "
      << rho.front().size() << " states written to " << art.dir() << '\n';
  if (drift > kNormDriftTolerance) {
    err << "error: total probability drifted by " << drift << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

void PrintReport(std::ostream& out, const TheoremReport& r) {
  out << "steps                      " << r.steps << '\n'
      << "max entry violation        " << r.max_entry_violation << '\n'
      << "max column-sum deviation   " << r.max_column_sum_deviation << '\n'
      << "max propagation residual   " << r.max_propagation_residual << '\n'
      << "off-edge entries           " << r.off_edge_entries << '\n'
      << "verdict                    " << (r.Holds(kReportTolerance) ? "PASS" : "FAIL")
      << '\n';
}

int CmdEquivalence(const Options& opt, std::ostream& out, std::ostream& err) {
  CheckFormat(opt);
  RunConfig run = Prepare(opt, err);
  const TransitionMatrixSeq seq =
      BuildSequence(*run.ops, *run.initial, run.steps, run.equivalence);
  const TheoremReport report = VerifyTheoremProperties(seq);
  Artifacts art(OutDir(opt), "equivalence");
  const std::size_t n = run.graph->num_vertices();
  if (opt.binary) {
    art.Write(kMatricesBin,
              [&](std::ostream& o) { WriteMatricesBinary(o, seq.matrices); }, true);
  } else {
    art.Write(kMatricesCsv, [&](std::ostream& o) {
      WriteMatricesCsv(o, seq.matrices, n, run.num_walkers);
    });
  }
  art.Write(kRhoCsv,
            [&](std::ostream& o) { WriteRhoCsv(o, seq.rho, n, run.num_walkers); });
  art.WriteJson("report.json", ToJson(report));
  art.Finish(Manifest(run));
  PrintReport(out, report);
  return report.Holds(kReportTolerance) ? kExitOk : kExitNumerical;
}

// Rebuilds a sequence from a directory written by `equivalence`.
TransitionMatrixSeq LoadSequence(const std::string& dir, RunConfig& run,
                                 std::ostream& err) {
  const json manifest = LoadJsonFile((fs::path(dir) / kManifestName).string());
  if (!manifest.contains("config")) {
    throw ConfigError(dir + ": manifest has no config");
  }
  run = ParseRunConfig(manifest.at("config"));
  for (const auto& w : run.warnings) err << "warning: " << w << '\n';
  if (Hex(run.graph->Fingerprint()) != manifest.value("graph_fingerprint", "")) {
    throw ConfigError(dir + ": graph fingerprint does not match the manifest");
  }
  TransitionMatrixSeq seq;
  seq.graph = run.graph;
  seq.num_walkers = run.num_walkers;
  const std::size_t n = run.graph->num_vertices();
  if (fs::exists(fs::path(dir) / kMatricesBin)) {
    std::ifstream in(fs::path(dir) / kMatricesBin, std::ios::binary);
    seq.matrices = ReadMatricesBinary(in);
  } else {
    std::ifstream in(fs::path(dir) / kMatricesCsv);
    if (!in) throw ConfigError(dir + ": no transition matrices found");
    seq.matrices = ReadMatricesCsv(in, n, run.num_walkers);
  }
  std::ifstream rho_in(fs::path(dir) / kRhoCsv);
  if (!rho_in) throw ConfigError(dir + ": missing " + kRhoCsv);
  seq.rho = ReadRhoCsv(rho_in, n, run.num_walkers);
  if (seq.rho.size() != seq.matrices.size() + 1) {
    throw ConfigError(dir + ": rho and matrix sequence lengths disagree");
  }
  return seq;
}

// Either a persisted directory (--matrices) or a fresh build from --config.
TransitionMatrixSeq ObtainSequence(const Options& opt, RunConfig& run,
                                   std::ostream& err) {
  if (!opt.matrices_dir.empty()) {
    TransitionMatrixSeq seq = LoadSequence(opt.matrices_dir, run, err);
    // Sampling controls still come from the command line.
    if (opt.seed) run.seed = *opt.seed;
    if (opt.count) run.sampling.ensemble_size = *opt.count;
    if (opt.length) run.sampling.length = *opt.length;
    if (!opt.sizes.empty()) run.sampling.ensemble_sizes = opt.sizes;
    if (!opt.times.empty()) run.sampling.times = opt.times;
    if (opt.threads) run.sampling.options.threads = *opt.threads;
    if (opt.sampler) {
      run.sampling.options.sampler = *opt.sampler == "alias"
                                         ? TransitionSampler::kAlias
                                         : TransitionSampler::kLinearScan;
    }
    return seq;
  }
  run = Prepare(opt, err);
  return BuildSequence(*run.ops, *run.initial, run.steps, run.equivalence);
}

int CmdSample(const Options& opt, std::ostream& out, std::ostream& err) {
  CheckFormat(opt);
  RunConfig run;
  const TransitionMatrixSeq seq = ObtainSequence(opt, run, err);
  SamplingOptions sopt = run.sampling.options;
  if (run.sampling.length) sopt.length = *run.sampling.length;
  const TrajectoryEnsemble ens =
      SampleEnsemble(seq, run.sampling.ensemble_size, run.seed, sopt);
  const std::size_t off_edge = CountNonEdgeSteps(seq, ens);
  Artifacts art(OutDir(opt), "sample");
  const std::size_t n = run.graph->num_vertices();
  if (opt.format == "json") {
    json paths = json::array();
    for (const auto& p : ens.paths) paths.push_back(p.states);
    art.WriteJson("trajectories.json", {{"seeds", ens.seeds}, {"paths", paths}});
  } else {
    art.Write("trajectories.csv", [&](std::ostream& o) {
      WriteTrajectoriesCsv(o, ens, n, run.num_walkers);
    });
  }
  if (!run.graph->torus_dims().empty() && run.num_walkers == 1) {
    art.Write("trajectories_unfolded.csv",
              [&](std::ostream& o) { WriteUnfoldedCsv(o, *run.graph, ens); });
  }
  json manifest = Manifest(run);
  manifest["ensemble_size"] = ens.size();
  manifest["length"] = ens.length();
  manifest["source"] = opt.matrices_dir.empty() ? "config" : "persisted matrices";
  art.Finish(manifest);
  out << "sample: " << ens.size() << " trajectories of " << ens.length()
      << " steps, " << off_edge << " non-edge steps\n";
  if (off_edge != 0) {
    err << "error: sampled trajectories left the graph\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int CmdTvd(const Options& opt, std::ostream& out, std::ostream& err) {
  CheckFormat(opt);
  RunConfig run;
  const TransitionMatrixSeq seq = ObtainSequence(opt, run, err);
  const std::size_t last = *std::max_element(run.sampling.times.begin(),
                                             run.sampling.times.end());
  if (last > seq.horizon()) {
    throw ConfigError("time " + std::to_string(last) + " is beyond the horizon " +
                      std::to_string(seq.horizon()));
  }
  SamplingOptions sopt = run.sampling.options;
  sopt.length = last;
  const auto rows = ConvergenceReport(seq, run.sampling.ensemble_sizes,
                                      run.sampling.times, run.seed, sopt);
  Artifacts art(OutDir(opt), "tvd");
  if (opt.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({{"M", r.ensemble_size}, {"t", r.t}, {"tvd", r.tvd}});
    art.WriteJson("convergence.json", arr);
  } else {
    art.Write("convergence.csv", [&](std::ostream& o) { WriteConvergenceCsv(o, rows); });
  }
  art.Finish(Manifest(run));
  out << "M,t,tvd\n";
  for (const auto& r : rows) {
    out << r.ensemble_size << ',' << r.t << ',' << FormatDouble(r.tvd) << '\n';
  }
  return kExitOk;
}

int CmdRejection(const Options& opt, std::ostream& out, std::ostream& err) {
  CheckFormat(opt);
  RunConfig run = Prepare(opt, err);
  if (run.num_walkers != 1) {
    throw ConfigError("rejection sampling is defined for one walker");
  }
  const std::size_t length = run.rejection.length;
  if (length == 0) throw ConfigError("rejection.length must be at least 1");
  const auto rho = EvolveDistributions(*run.initial, *run.ops, length - 1);
  const RejectionReport report =
      RejectionSample(rho, *run.graph, length, run.rejection.attempts, run.seed,
                      run.rejection.max_attempts);
  Artifacts art(OutDir(opt), "rejection");
  art.WriteJson("rejection.json", ToJson(report));
  if (opt.format == "csv" && !report.none_accepted) {
    art.Write("rejection_marginals.csv", [&](std::ostream& o) {
      o << "t,v,accepted,rho\n";
      for (std::size_t t = 0; t < length; ++t) {
        for (std::size_t v = 0; v < rho[t].size(); ++v) {
          o << t << ',' << v << ',' << FormatDouble(report.marginals[t][v]) << ','
            << FormatDouble(rho[t][v]) << '\n';
        }
      }
    });
  }
  json manifest = Manifest(run);
  manifest["rejection"] = {{"length", length},
                           {"attempts", run.rejection.attempts},
                           {"max_attempts", run.rejection.max_attempts}};
  art.Finish(manifest);
  out << "rejection: " << report.accepted << " of " << report.attempts
      << " accepted (rate " << report.acceptance_rate << "), max TVD "
      << report.max_tvd << ", paths " << report.path_count << " of "
      << report.sequence_count << " sequences\n";
  if (report.attempts < report.requested_attempts) {
    err << "warning: attempts capped at " << report.attempts << '\n';
  }
  return kExitOk;
}

int CmdTorusDp(const Options& opt, std::ostream& out, std::ostream& err) {
  CheckFormat(opt);
  RunConfig run = Prepare(opt, err);
  const json& cfg = run.resolved;
  auto named = [&](const char* key, const char* want, const char* fallback) {
    const json v = cfg.contains(key) ? cfg.at(key) : json(fallback);
    return v.is_string() && v.get<std::string>() == want;
  };
  if (run.num_walkers != 1 || !named("coin", "grover", "hadamard") ||
      !named("shift", "moving", "moving")) {
    throw ApplicabilityError(
        "torus-dp needs one walker, coin \"grover\" and shift \"moving\"");
  }
  const auto states = GroverTorusDp(*run.graph, *run.initial, run.steps);
  std::vector<std::vector<double>> rho;
  for (const auto& s : states) rho.push_back(s.VertexDistribution());
  Artifacts art(OutDir(opt), "torus-dp");
  WriteRho(art, opt, rho, run);
  if (opt.emit_matrices) {
    std::vector<TransitionMatrix> ps;
    for (std::size_t t = 0; t + 1 < states.size(); ++t) {
      ps.push_back(GroverTorusMatrix(*run.graph, states[t], states[t + 1],
                                     run.equivalence));
    }
    art.Write(kMatricesCsv, [&](std::ostream& o) {
      WriteMatricesCsv(o, ps, run.graph->num_vertices(), 1);
    });
  }
  art.Finish(Manifest(run));
  out << "torus-dp: " << rho.size() << " distributions written to " << art.dir()
      << '\n';
  return kExitOk;
}

// Checks every coin block, then the theorem properties of the sequence.
int CmdVerify(const Options& opt, std::ostream& out, std::ostream& err) {
  RunConfig run;
  if (!opt.matrices_dir.empty()) {
    const TransitionMatrixSeq seq = LoadSequence(opt.matrices_dir, run, err);
    const TheoremReport report = VerifyTheoremProperties(seq);
    PrintReport(out, report);
    return report.Holds(kReportTolerance) ? kExitOk : kExitNumerical;
  }
  run = Prepare(opt, err);
  bool unitary = true;
  for (const auto& schedule : run.ops->coins) {
    for (const auto& [from, coin] : schedule.entries()) {
      for (Vertex v = 0; v < coin.num_vertices(); ++v) {
        const UnitarityCheck check = CheckUnitarity(coin.block(v));
        if (!check.unitary) {
          out << "coin " << coin.name() << " from t=" << from << ", vertex " << v
              << ": " << check.violated_condition << '\n';
          unitary = false;
          break;
        }
      }
    }
  }
  out << "coin unitarity             " << (unitary ? "PASS" : "FAIL") << '\n';
  EquivalenceOptions eq = run.equivalence;
  eq.strict = false;
  const TheoremReport report =
      VerifyTheoremProperties(BuildSequence(*run.ops, *run.initial, run.steps, eq));
  PrintReport(out, report);
  return unitary && report.Holds(kReportTolerance) ? kExitOk : kExitNumerical;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum walk trajectories through equivalent random walks", "qwalk"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Options opt;

  auto common = [&](CLI::App* sub, bool config_required) {
    auto* c = sub->add_option("--config", opt.config_path, "JSON run configuration");
    if (config_required) c->required();
    sub->add_option("--set", opt.sets, "Override a config entry: key.path=value");
    sub->add_option("--seed", opt.seed, "Master seed");
    sub->add_option("--steps", opt.steps, "Horizon T");
    sub->add_option("--out-dir", opt.out_dir,
                    std::string("Output directory (default $") + kOutDirEnv +
                        " or " + kDefaultOutDir + ")");
    sub->add_option("--format", opt.format, "csv or json");
  };

  auto* evolve = app.add_subcommand("evolve", "Vertex distributions rho(0..T)");
  common(evolve, true);
  auto* equivalence = app.add_subcommand(
      "equivalence", "Transition matrices P(0..T-1) and their verification");
  common(equivalence, true);
  equivalence->add_flag("--binary", opt.binary, "Write matrices in binary form");
  auto* sample = app.add_subcommand("sample", "Sample a trajectory ensemble");
  common(sample, false);
  sample->add_option("--count,-M", opt.count, "Ensemble size");
  sample->add_option("--length,-L", opt.length, "Trajectory length");
  sample->add_option("--matrices", opt.matrices_dir,
                     "Directory written by `equivalence`");
  sample->add_option("--sampler", opt.sampler, "linear or alias");
  sample->add_option("--threads", opt.threads, "Sampling threads");
  auto* tvd = app.add_subcommand("tvd", "TVD of empirical vs exact distributions");
  common(tvd, false);
  tvd->add_option("--sizes", opt.sizes, "Ensemble sizes")->delimiter(',');
  tvd->add_option("--times", opt.times, "Time instants")->delimiter(',');
  tvd->add_option("--matrices", opt.matrices_dir, "Directory written by `equivalence`");
  tvd->add_option("--sampler", opt.sampler, "linear or alias");
  tvd->add_option("--threads", opt.threads, "Sampling threads");
  auto* rejection = app.add_subcommand("rejection", "Rejection-sampling baseline");
  common(rejection, true);
  rejection->add_option("--length,-L", opt.length, "Sequence length");
  rejection->add_option("--attempts", opt.attempts, "Number of attempts");
  auto* torus_dp = app.add_subcommand("torus-dp", "Grover torus recursion");
  common(torus_dp, true);
  torus_dp->add_flag("--emit-matrices", opt.emit_matrices,
                     "Also write P(t) built from the recursion");
  auto* verify = app.add_subcommand("verify", "Check unitarity and theorem properties");
  common(verify, false);
  verify->add_option("--matrices", opt.matrices_dir, "Directory written by `equivalence`");

  for (auto* sub : {sample, tvd}) {
    sub->callback([&, sub] {
      if (opt.config_path.empty() && opt.matrices_dir.empty()) {
        throw CLI::ValidationError(sub->get_name(), "needs --config or --matrices");
      }
    });
  }
  verify->callback([&] {
    if (opt.config_path.empty() && opt.matrices_dir.empty()) {
      throw CLI::ValidationError("verify", "needs --config or --matrices");
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*evolve) return CmdEvolve(opt, out, err);
    if (*equivalence) return CmdEquivalence(opt, out, err);
    if (*sample) return CmdSample(opt, out, err);
    if (*tvd) return CmdTvd(opt, out, err);
    if (*rejection) return CmdRejection(opt, out, err);
    if (*torus_dp) return CmdTorusDp(opt, out, err);
    if (*verify) return CmdVerify(opt, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitConfig;
}

}  // namespace qwalk::cli

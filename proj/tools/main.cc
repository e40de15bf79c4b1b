// Copyright 2026 The privsampler Authors
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

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "privsampler/distribution.h"
#include "privsampler/errors.h"
#include "privsampler/f_divergence.h"
#include "privsampler/harness.h"
#include "privsampler/io_util.h"
#include "privsampler/kernel.h"
#include "privsampler/mechanism.h"
#include "privsampler/mollifier.h"
#include "privsampler/random_stream.h"
#include "privsampler/sampler.h"
#include "privsampler/serialization.h"

namespace privsampler {
namespace {

// Exit codes: 0 success, 1 verification failure, 2 input validation error,
// 3 I/O error.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitIoError = 3;

int ExitCodeFor(const Error& e) {
  return e.code() == ErrorCode::kIoError ? kExitIoError : kExitBadInput;
}

std::string Num12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// A --prior/--p argument is either a path to a file with one value per
// line, or an inline comma-separated vector.
std::vector<double> ParseVectorArg(const std::string& arg) {
  std::vector<double> values;
  std::vector<std::string> tokens;
  if (std::filesystem::exists(arg) &&
      std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    if (!in) throw Error(ErrorCode::kIoError, "cannot open " + arg);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) tokens.push_back(line);
    }
  } else {
    std::string token;
    std::istringstream in(arg);
    while (std::getline(in, token, ',')) tokens.push_back(token);
  }
  for (const std::string& token : tokens) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cannot parse '" + token + "' as a number");
    }
  }
  return values;
}

void CheckEpsilonFlag(double epsilon) {
  if (std::isnan(epsilon) || std::isinf(epsilon)) {
    throw Error(ErrorCode::kNonFiniteEpsilon, "epsilon must be finite");
  }
  if (epsilon < 0.0) {
    throw Error(ErrorCode::kNegativeEpsilon, "epsilon must be nonnegative");
  }
}

// Payload goes to --output (atomic) or stdout; summaries go to stderr.
void EmitPayload(const std::string& output, const std::string& payload) {
  if (output.empty()) {
    std::cout << payload;
  } else {
    WriteFileAtomic(output, payload);
  }
}

struct CommonFlags {
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
};

void AddCommonFlags(CLI::App* cmd, CommonFlags* flags,
                    const std::string& default_format = "json") {
  flags->format = default_format;
  cmd->add_option("--output", flags->output, "Write the payload to a file");
  cmd->add_option("--format", flags->format, "Payload format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--seed", flags->seed, "Random seed (64-bit)");
  cmd->add_option("--tolerance", flags->tolerance, "Verification tolerance");
}

ReportFormat FormatOf(const CommonFlags& flags) {
  return flags.format == "csv" ? ReportFormat::kCsv : ReportFormat::kJson;
}

std::string KernelCsv(const Kernel& k) {
  std::ostringstream out;
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (std::size_t j = 0; j < k.size(); ++j) {
      out << (j ? "," : "") << FormatDouble(k(i, j));
    }
    out << '\n';
  }
  return out.str();
}

int RunBuild(const std::string& prior_arg, double epsilon,
             const CommonFlags& flags) {
  CheckEpsilonFlag(epsilon);
  const Distribution prior(ParseVectorArg(prior_arg),
                           /*require_positive=*/true);
  const MechanismBundle bundle = BuildOptimal(prior, epsilon);
  const double utility_tv =
      OptimalUtility(prior.MinEntry(), epsilon, FDivergence::TotalVariation());
  const double utility_kl = OptimalUtility(prior.MinEntry(), epsilon,
                                           FDivergence::KullbackLeibler());

  std::string payload;
  if (FormatOf(flags) == ReportFormat::kJson) {
    nlohmann::json doc = nlohmann::json::parse(BundleToJson(bundle));
    doc["optimalUtilityTV"] = utility_tv;
    doc["optimalUtilityKL"] = utility_kl;
    payload = doc.dump(2) + "\n";
  } else {
    payload = KernelCsv(bundle.kernel);
  }
  EmitPayload(flags.output, payload);
  std::cerr << "n=" << prior.size() << " epsilon=" << Num12(epsilon)
            << " optimalUtilityTV=" << Num12(utility_tv)
            << " optimalUtilityKL=" << Num12(utility_kl) << '\n';
  return kExitOk;
}

int RunVerify(const std::string& kernel_path, const std::string& prior_arg,
              std::optional<double> epsilon_arg, const CommonFlags& flags) {
  const MechanismBundle bundle = BundleFromJson(ReadFile(kernel_path));
  const Distribution prior =
      prior_arg.empty()
          ? bundle.prior
          : Distribution(ParseVectorArg(prior_arg), /*require_positive=*/true);
  const double epsilon = epsilon_arg.value_or(bundle.epsilon);
  CheckEpsilonFlag(epsilon);

  const LdpReport ldp = VerifyLdp(bundle.kernel, epsilon, flags.tolerance);
  InvarianceReport invariance{0.0, true};
  bool dimensions_ok = prior.size() == bundle.kernel.size();
  if (dimensions_ok) {
    invariance = VerifyInvariance(bundle.kernel, prior, flags.tolerance);
  }
  const bool pass = ldp.pass && invariance.pass && dimensions_ok;

  std::string payload;
  if (FormatOf(flags) == ReportFormat::kJson) {
    nlohmann::json doc{{"maxLogRatio", ldp.max_log_ratio},
                       {"ldpPass", ldp.pass},
                       {"maxAbsDeviation", invariance.max_abs_deviation},
                       {"invariancePass", invariance.pass},
                       {"pass", pass}};
    payload = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "check,value,pass\n";
    out << "ldp," << FormatDouble(ldp.max_log_ratio) << ','
        << (ldp.pass ? "true" : "false") << '\n';
    out << "invariance," << FormatDouble(invariance.max_abs_deviation) << ','
        << (invariance.pass ? "true" : "false") << '\n';
    payload = out.str();
  }
  EmitPayload(flags.output, payload);
  std::cerr << (pass ? "pass" : "fail")
            << " maxLogRatio=" << Num12(ldp.max_log_ratio)
            << " maxAbsDeviation=" << Num12(invariance.max_abs_deviation)
            << '\n';
  return pass ? kExitOk : kExitVerifyFailed;
}

int RunProject(const std::string& p_arg, const std::string& prior_arg,
               double epsilon, const std::string& divergence,
               const CommonFlags& flags) {
  CheckEpsilonFlag(epsilon);
  const Distribution p(ParseVectorArg(p_arg));
  const Distribution prior(ParseVectorArg(prior_arg),
                           /*require_positive=*/true);
  const ProjectionResult result = divergence == "kl"
                                      ? ProjectKl(p, prior, epsilon)
                                      : ProjectTv(p, prior, epsilon);

  std::string payload;
  if (FormatOf(flags) == ReportFormat::kJson) {
    payload = ProjectionResultToJson(result);
  } else {
    std::ostringstream out;
    out << "field,index,value\n";
    for (std::size_t i = 0; i < result.projected.size(); ++i) {
      out << "projected," << i << ',' << FormatDouble(result.projected[i])
          << '\n';
    }
    if (result.normalizer.has_value()) {
      out << "normalizer,," << FormatDouble(*result.normalizer) << '\n';
    }
    out << "achievedDivergence,," << FormatDouble(result.achieved_divergence)
        << '\n';
    out << "iterations,," << result.iterations << '\n';
    payload = out.str();
  }
  EmitPayload(flags.output, payload);
  std::cerr << "achievedDivergence=" << Num12(result.achieved_divergence)
            << " iterations=" << result.iterations << '\n';
  return kExitOk;
}

int RunSample(const std::string& p_arg, const std::string& bundle_path,
              const std::string& prior_arg, std::optional<double> epsilon_arg,
              const std::string& method, std::int64_t count,
              const CommonFlags& flags) {
  if (count < 1) {
    throw Error(ErrorCode::kInvalidArgument, "--count must be >= 1");
  }
  const Distribution p(ParseVectorArg(p_arg));

  Distribution law = p;  // replaced below
  if (!bundle_path.empty()) {
    const MechanismBundle bundle = BundleFromJson(ReadFile(bundle_path));
    law = ApplyKernel(p, bundle.kernel);
  } else {
    if (prior_arg.empty() || !epsilon_arg.has_value()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "--prior and --epsilon are required without --bundle");
    }
    CheckEpsilonFlag(*epsilon_arg);
    const Distribution prior(ParseVectorArg(prior_arg),
                             /*require_positive=*/true);
    if (method == "optimal") {
      law = ApplyKernel(p, BuildOptimal(prior, *epsilon_arg).kernel);
    } else if (method == "mollifier-kl") {
      law = ProjectKl(p, prior, *epsilon_arg).projected;
    } else {
      law = ProjectTv(p, prior, *epsilon_arg).projected;
    }
  }

  RandomStream rng(flags.seed);
  std::vector<std::size_t> indices(static_cast<std::size_t>(count));
  for (auto& index : indices) index = SampleIndex(law, rng);

  std::string payload;
  if (FormatOf(flags) == ReportFormat::kJson) {
    payload = nlohmann::json{{"indices", indices}}.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "index\n";
    for (std::size_t index : indices) out << index << '\n';
    payload = out.str();
  }
  EmitPayload(flags.output, payload);
  return kExitOk;
}

int RunBenchSynthetic(std::size_t n, double epsilon, int runs, int grid,
                      const CommonFlags& flags) {
  CheckEpsilonFlag(epsilon);
  if (grid < 2) {
    throw Error(ErrorCode::kInvalidArgument, "--grid must be >= 2");
  }
  std::vector<double> p1_grid(grid);
  const double lo = 1.0 / static_cast<double>(n);
  for (int i = 0; i < grid; ++i) {
    p1_grid[i] = lo + (1.0 - lo) * i / (grid - 1);
  }
  p1_grid.back() = 1.0;  // land the endpoint exactly on the point mass
  RandomStream rng(flags.seed);
  const SweepReport report = SyntheticSweep(n, epsilon, runs, p1_grid, rng);
  EmitPayload(flags.output, FormatOf(flags) == ReportFormat::kJson
                                ? SweepReportToJson(report)
                                : SweepReportToCsv(report));
  return kExitOk;
}

int RunBenchDataset(const std::string& input, double epsilon,
                    std::uint64_t min_events, std::size_t top_k,
                    std::size_t min_group_size, const std::string& methods_arg,
                    const CommonFlags& flags) {
  CheckEpsilonFlag(epsilon);
  std::vector<Method> methods;
  std::string token;
  std::istringstream in(methods_arg);
  while (std::getline(in, token, ',')) methods.push_back(MethodFromName(token));
  if (methods.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "--methods must not be empty");
  }

  const std::vector<GroupDataset> groups = IngestCounts(
      input, IngestFilters{min_events, top_k, min_group_size});
  const std::vector<BenchReport> reports =
      DatasetBenchmark(groups, epsilon, methods);

  if (flags.output.empty()) {
    // Reuse the file writers through a temp file to keep one code path.
    const std::string tmp =
        (std::filesystem::temp_directory_path() / "privsampler_report").string();
    WriteReports(reports, tmp, FormatOf(flags));
    std::cout << ReadFile(tmp);
    std::filesystem::remove(tmp);
  } else {
    WriteReports(reports, flags.output, FormatOf(flags));
  }
  for (const BenchReport& report : reports) {
    std::cerr << report.group_id << ' ' << MethodName(report.method)
              << " users=" << report.runs
              << " maxTV=" << Num12(report.max_tv)
              << " meanTV=" << Num12(report.mean_tv)
              << " meanKL=" << Num12(report.mean_kl) << '\n';
  }
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Minimax-optimal locally private sampling with a public prior"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand(
      "build", "Construct the optimal mechanism for a prior");
  std::string build_prior;
  double build_epsilon = 0.0;
  CommonFlags build_flags;
  build->add_option("--prior", build_prior, "Public prior (inline or file)")
      ->required();
  build->add_option("--epsilon", build_epsilon, "Privacy budget in nats")
      ->required();
  AddCommonFlags(build, &build_flags);

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Check a mechanism file for LDP and prior invariance");
  std::string verify_kernel, verify_prior;
  std::optional<double> verify_epsilon;
  CommonFlags verify_flags;
  verify->add_option("--kernel", verify_kernel, "Mechanism JSON file")
      ->required();
  verify->add_option("--prior", verify_prior,
                     "Prior override (defaults to the file's prior)");
  verify->add_option("--epsilon", verify_epsilon,
                     "Epsilon override (defaults to the file's epsilon)");
  AddCommonFlags(verify, &verify_flags);

  // project
  auto* project = app.add_subcommand(
      "project", "Project a distribution onto the relative mollifier");
  std::string project_p, project_prior, project_divergence;
  double project_epsilon = 0.0;
  CommonFlags project_flags;
  project->add_option("--p", project_p, "Distribution to project")->required();
  project->add_option("--prior", project_prior, "Public prior")->required();
  project->add_option("--epsilon", project_epsilon, "Privacy budget in nats")
      ->required();
  project->add_option("--divergence", project_divergence, "kl or tv")
      ->required()
      ->check(CLI::IsMember({"kl", "tv"}));
  AddCommonFlags(project, &project_flags);

  // sample
  auto* sample = app.add_subcommand("sample", "Draw private samples");
  std::string sample_p, sample_bundle, sample_prior;
  std::optional<double> sample_epsilon;
  std::string sample_method = "optimal";
  std::int64_t sample_count = 1;
  CommonFlags sample_flags;
  sample->add_option("--p", sample_p, "User distribution")->required();
  sample->add_option("--bundle", sample_bundle, "Mechanism JSON file");
  sample->add_option("--prior", sample_prior, "Public prior");
  sample->add_option("--epsilon", sample_epsilon, "Privacy budget in nats");
  sample->add_option("--method", sample_method,
                     "optimal, mollifier-kl, or mollifier-tv")
      ->check(CLI::IsMember({"optimal", "mollifier-kl", "mollifier-tv"}));
  sample->add_option("--count", sample_count, "Number of samples");
  AddCommonFlags(sample, &sample_flags);

  // bench-synthetic
  auto* bench_syn = app.add_subcommand(
      "bench-synthetic", "Sweep concentration of the user distribution");
  std::size_t syn_n = 100;
  double syn_epsilon = 8.0;
  int syn_runs = 10;
  int syn_grid = 20;
  CommonFlags syn_flags;
  bench_syn->add_option("--n", syn_n, "Support size");
  bench_syn->add_option("--epsilon", syn_epsilon, "Privacy budget in nats");
  bench_syn->add_option("--runs", syn_runs, "Independent prior draws");
  bench_syn->add_option("--grid", syn_grid, "Grid points from 1/n to 1");
  AddCommonFlags(bench_syn, &syn_flags, "csv");

  // bench-dataset
  auto* bench_data = app.add_subcommand(
      "bench-dataset", "Benchmark methods on an ingested dataset");
  std::string data_input;
  double data_epsilon = 8.0;
  std::uint64_t data_min_events = 20;
  std::size_t data_top_k = 100;
  std::size_t data_min_group = 1000;
  std::string data_methods = "optimal,mollifier-kl,mollifier-tv";
  CommonFlags data_flags;
  bench_data->add_option("--input", data_input, "Ingestion CSV")->required();
  bench_data->add_option("--epsilon", data_epsilon, "Privacy budget in nats");
  bench_data->add_option("--min-events", data_min_events,
                         "Minimum events per user");
  bench_data->add_option("--top-k", data_top_k, "Categories kept per group");
  bench_data->add_option("--min-group-size", data_min_group,
                         "Minimum users per group");
  bench_data->add_option("--methods", data_methods,
                         "Comma-separated method list");
  AddCommonFlags(bench_data, &data_flags, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (build->parsed()) {
      return RunBuild(build_prior, build_epsilon, build_flags);
    }
    if (verify->parsed()) {
      return RunVerify(verify_kernel, verify_prior, verify_epsilon,
                       verify_flags);
    }
    if (project->parsed()) {
      return RunProject(project_p, project_prior, project_epsilon,
                        project_divergence, project_flags);
    }
    if (sample->parsed()) {
      return RunSample(sample_p, sample_bundle, sample_prior, sample_epsilon,
                       sample_method, sample_count, sample_flags);
    }
    if (bench_syn->parsed()) {
      return RunBenchSynthetic(syn_n, syn_epsilon, syn_runs, syn_grid,
                               syn_flags);
    }
    if (bench_data->parsed()) {
      return RunBenchDataset(data_input, data_epsilon, data_min_events,
                             data_top_k, data_min_group, data_methods,
                             data_flags);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitCodeFor(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace
}  // namespace privsampler

int main(int argc, char** argv) { return privsampler::Main(argc, argv); }

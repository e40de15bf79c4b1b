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

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "privsampler/errors.h"
#include "privsampler/harness.h"
#include "privsampler/io_util.h"

namespace privsampler {

namespace {

using nlohmann::json;

constexpr char kAggregateUser[] = "__aggregate__";

std::string ReportsToCsv(const std::vector<BenchReport>& reports) {
  std::ostringstream out;
  out << "group_id,method,epsilon,user_id,tv,kl\n";
  for (const BenchReport& report : reports) {
    for (const UserDistance& user : report.per_user) {
      out << report.group_id << ',' << MethodName(report.method) << ','
          << FormatDouble(report.epsilon) << ',' << user.user_id << ','
          << FormatDouble(user.tv) << ',' << FormatDouble(user.kl) << '\n';
    }
    out << report.group_id << ',' << MethodName(report.method) << ','
        << FormatDouble(report.epsilon) << ',' << kAggregateUser << ','
        << FormatDouble(report.max_tv) << ',' << FormatDouble(report.mean_kl)
        << '\n';
  }
  return out.str();
}

json ReportToJson(const BenchReport& report) {
  json per_user = json::array();
  for (const UserDistance& user : report.per_user) {
    per_user.push_back(
        {{"userId", user.user_id}, {"tv", user.tv}, {"kl", user.kl}});
  }
  return json{{"groupId", report.group_id},
              {"method", MethodName(report.method)},
              {"epsilon", report.epsilon},
              {"perUser", std::move(per_user)},
              {"maxTV", report.max_tv},
              {"meanTV", report.mean_tv},
              {"meanKL", report.mean_kl},
              {"stderrTV", report.stderr_tv},
              {"stderrKL", report.stderr_kl},
              {"runs", report.runs}};
}

std::string ReportsToJsonText(const std::vector<BenchReport>& reports) {
  json out = json::array();
  for (const BenchReport& report : reports) out.push_back(ReportToJson(report));
  return out.dump(2) + "\n";
}

std::vector<BenchReport> ReportsFromJsonText(const std::string& text) {
  json parsed = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded() || !parsed.is_array()) {
    throw Error(ErrorCode::kInvalidArgument, "report JSON must be an array");
  }
  std::vector<BenchReport> reports;
  try {
    for (const json& item : parsed) {
      BenchReport report;
      report.group_id = item.at("groupId").get<std::string>();
      report.method = MethodFromName(item.at("method").get<std::string>());
      report.epsilon = item.at("epsilon").get<double>();
      for (const json& user : item.at("perUser")) {
        report.per_user.push_back(UserDistance{
            user.at("userId").get<std::string>(), user.at("tv").get<double>(),
            user.at("kl").get<double>()});
      }
      report.max_tv = item.at("maxTV").get<double>();
      report.mean_tv = item.at("meanTV").get<double>();
      report.mean_kl = item.at("meanKL").get<double>();
      report.stderr_tv = item.at("stderrTV").get<double>();
      report.stderr_kl = item.at("stderrKL").get<double>();
      report.runs = item.at("runs").get<int>();
      reports.push_back(std::move(report));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("report JSON: ") + e.what());
  }
  return reports;
}

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

double ParseDouble(const std::string& text, std::size_t line_number) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kMalformedRow,
                "line " + std::to_string(line_number) +
                    ": expected a number, got '" + text + "'");
  }
}

std::vector<BenchReport> ReportsFromCsvText(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_number = 0;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::kMalformedRow, "empty report CSV");
  }
  ++line_number;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "group_id,method,epsilon,user_id,tv,kl") {
    throw Error(ErrorCode::kMalformedRow, "unexpected report CSV header");
  }

  std::vector<BenchReport> reports;
  BenchReport current;
  bool open = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = SplitCsv(line);
    if (fields.size() != 6) {
      throw Error(ErrorCode::kMalformedRow,
                  "line " + std::to_string(line_number) +
                      ": expected 6 fields");
    }
    if (!open) {
      current = BenchReport{};
      current.group_id = fields[0];
      current.method = MethodFromName(fields[1]);
      current.epsilon = ParseDouble(fields[2], line_number);
      open = true;
    }
    if (fields[3] == kAggregateUser) {
      // Aggregates are a pure function of the per-user rows; recomputing
      // them reproduces the written values exactly.
      RecomputeAggregates(current);
      reports.push_back(std::move(current));
      current = BenchReport{};
      open = false;
    } else {
      current.per_user.push_back(UserDistance{
          fields[3], ParseDouble(fields[4], line_number),
          ParseDouble(fields[5], line_number)});
    }
  }
  if (open) {
    throw Error(ErrorCode::kMalformedRow,
                "report CSV ended without an aggregate row");
  }
  return reports;
}

}  // namespace

void WriteReports(const std::vector<BenchReport>& reports,
                  const std::string& path, ReportFormat format) {
  WriteFileAtomic(path, format == ReportFormat::kJson
                            ? ReportsToJsonText(reports)
                            : ReportsToCsv(reports));
}

std::vector<BenchReport> ReadReports(const std::string& path,
                                     ReportFormat format) {
  const std::string text = ReadFile(path);
  return format == ReportFormat::kJson ? ReportsFromJsonText(text)
                                       : ReportsFromCsvText(text);
}

std::string SweepReportToCsv(const SweepReport& report) {
  std::ostringstream out;
  out << "p1,method,tv_mean,tv_stderr,kl_mean,kl_stderr\n";
  const auto row = [&](double p1, const char* method, const SweepStats& s) {
    out << FormatDouble(p1) << ',' << method << ',' << FormatDouble(s.tv_mean)
        << ',' << FormatDouble(s.tv_stderr) << ',' << FormatDouble(s.kl_mean)
        << ',' << FormatDouble(s.kl_stderr) << '\n';
  };
  for (const SweepPoint& point : report.points) {
    row(point.p1, "optimal", point.optimal);
    row(point.p1, "mollifier-kl", point.mollifier_kl);
    row(point.p1, "mollifier-tv", point.mollifier_tv);
  }
  return out.str();
}

std::string SweepReportToJson(const SweepReport& report) {
  const auto stats = [](const SweepStats& s) {
    return json{{"tvMean", s.tv_mean},
                {"tvStderr", s.tv_stderr},
                {"klMean", s.kl_mean},
                {"klStderr", s.kl_stderr}};
  };
  json points = json::array();
  for (const SweepPoint& point : report.points) {
    points.push_back(json{{"p1", point.p1},
                          {"optimal", stats(point.optimal)},
                          {"mollifierKL", stats(point.mollifier_kl)},
                          {"mollifierTV", stats(point.mollifier_tv)}});
  }
  json out{{"n", report.n},
           {"epsilon", report.epsilon},
           {"runs", report.runs},
           {"points", std::move(points)}};
  return out.dump(2) + "\n";
}

void WriteSweepReport(const SweepReport& report, const std::string& path,
                      ReportFormat format) {
  WriteFileAtomic(path, format == ReportFormat::kJson
                            ? SweepReportToJson(report)
                            : SweepReportToCsv(report));
}

}  // namespace privsampler

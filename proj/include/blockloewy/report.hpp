#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "blockloewy/catalog.hpp"
#include "blockloewy/loewy_lab.hpp"

namespace blockloewy {

inline constexpr const char* kToolVersion = "0.1.0";

struct BlockRow {
  std::size_t index = 0;
  int defect = 0;
  std::uint64_t defect_order = 1;
  bool defect_cyclic = true;
  std::uint32_t zd_m = 0;
  std::uint32_t zd_r = 0;
  std::size_t e = 1;
  std::size_t k = 1;
  std::optional<std::size_t> l;
  std::string l_source;
  std::size_t loewy_length = 1;
  std::vector<std::size_t> codims;
  std::size_t loewy_length_fixed = 1;
  std::size_t lambda = 1;
  std::size_t root_count = 1;

  bool operator==(const BlockRow&) const = default;
};

struct InstanceResult {
  std::string spec;
  std::string name;
  std::uint64_t order = 0;
  std::uint32_t p = 0;
  std::uint32_t s = 1;
  std::size_t classes = 0;
  std::size_t p_regular_classes = 0;
  std::vector<BlockRow> blocks;
  std::vector<VerificationReport> checks;

  bool operator==(const InstanceResult&) const = default;
};

struct ReportConfig {
  std::string command;
  std::string group;
  std::uint32_t p = 0;
  std::uint64_t max_order = 0;
  std::size_t full_algebra_cap = kDefaultFullAlgebraCap;
  bool large = false;

  bool operator==(const ReportConfig&) const = default;
};

struct Report {
  std::string tool_version = kToolVersion;
  ReportConfig config;
  std::vector<InstanceResult> instances;

  bool operator==(const Report&) const = default;
};

InstanceResult summarize(const Instance& in, std::vector<VerificationReport> checks);
InstanceResult analyze_and_check(const std::string& spec, std::uint32_t p, const LabOptions& opts = {},
                                 std::size_t max_order = kDefaultMaxOrder);

struct SuiteTask {
  std::string spec;
  std::uint32_t p = 0;
};
std::vector<SuiteTask> suite_tasks(const std::vector<CatalogEntry>& entries);
/// Runs the tasks on up to jobs threads; results keep task order.
std::vector<InstanceResult> run_suite(const std::vector<SuiteTask>& tasks, const LabOptions& opts, unsigned jobs);

struct Tally {
  std::size_t pass = 0, fail = 0, skipped = 0, report_only_fail = 0;
};
Tally tally(const Report& r);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
nlohmann::json catalog_json(const std::vector<CatalogEntry>& entries);

std::string to_csv(const Report& r);
std::string to_text(const Report& r);
std::string catalog_text(const std::vector<CatalogEntry>& entries);
std::string catalog_csv(const std::vector<CatalogEntry>& entries);

}  // namespace blockloewy

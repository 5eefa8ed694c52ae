#pragma once

#include "godeaux/canring.hpp"
#include "godeaux/datasets.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace godeaux {

enum class CheckStatus { pass, fail, skipped, undecided };

std::string to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

/// Result of one CLI command: a structured document, a text rendering and
/// the list of checks that decide the exit status.
struct CommandOutput {
  nlohmann::json doc;
  std::vector<std::string> lines;
  std::vector<Check> checks;

  /// 0 all checks pass or skipped, 1 some check failed, 3 otherwise undecided.
  int exit_code() const;
  /// Canonical serialization: sorted keys, two-space indent, trailing newline.
  std::string structured() const;
  std::string text() const;
};

CommandOutput run_canring(const CanonicalRing& cr, int max_degree);

enum class VerifyTarget { tricanonical, base_locus, fourcanonical, paper_generators };

struct VerifyOptions {
  VerifyTarget target = VerifyTarget::paper_generators;
  int max_degree = 12;
  std::vector<int> base_locus_degrees{2, 3, 5};
  std::optional<int> degree_bound;
  int fourcanonical_max = 7;
};

CommandOutput run_verify(const CanonicalRing& cr, const VerifyOptions& opts);
CommandOutput run_topology(const TopologyModel& model);
CommandOutput run_defcalc(const DefcalcData& data);

/// Serialized pieces shared by the commands.
nlohmann::json base_locus_json(const BaseLocusReport& r, const WeightedRing& ring);
nlohmann::json tricanonical_json(const TricanonicalReport& r);

}  // namespace godeaux

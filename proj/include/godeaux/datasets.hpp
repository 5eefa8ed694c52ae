#pragma once

#include "godeaux/defcalc.hpp"
#include "godeaux/topology.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace godeaux {

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TopologyModel {
  ChainComplexZ dbar;
  ChainComplexZ d;
  ChainComplexZ xbar;
  ChainMapZ pi;
  ChainMapZ iota;
  std::vector<MayerVietorisDegree> mayer_vietoris;
  GroupPresentation presentation;
  std::size_t tietze_budget = 1000;

  std::optional<std::vector<std::string>> expected_homology;
  std::optional<std::string> expected_abelianization;
  std::optional<bool> expected_pi1_trivial;

  /// The chain model of X: the homotopy pushout of D <- Dbar -> Xbar.
  ChainComplexZ model() const { return homotopy_pushout(dbar, d, xbar, pi, iota); }
};

TopologyModel parse_topology(std::string_view json_text);
const std::string& default_topology_text();

struct DefcalcData {
  std::vector<GluedCurveConfig> configs;
  std::vector<std::pair<long, long>> section_bound_inputs;
  std::optional<long> kuranishi_dimension;

  std::optional<std::map<std::string, std::vector<long>>> expected_degrees;
  std::optional<std::vector<long>> expected_bounds;
};

DefcalcData parse_defcalc(std::string_view json_text);
const std::string& default_defcalc_text();

/// Reads a whole file; throws DataError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace godeaux

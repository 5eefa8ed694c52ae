#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace godeaux {

/// One branch of the normalization over a double-locus component.
struct Branch {
  std::string name;
  long degree = 0;  ///< degree of the pulled-back boundary divisor on this branch
};

struct DoubleCurveComponent {
  std::string name;
  /// The branch and its tau-partner.
  std::vector<Branch> branches;
  /// Preimages R_i of the nodes lying over this component.
  long node_preimages = 0;
  long arithmetic_genus = 0;
  bool self_glued = false;
};

struct GluedCurveConfig {
  std::string name;
  std::vector<DoubleCurveComponent> components;

  /// Throws std::invalid_argument.
  void validate() const;
};

struct T1Degree {
  std::string component;
  long degree = 0;
};

/// Degree of nu^* T^1 on each component: sum of the two branch degrees
/// minus the number of node preimages.
std::vector<T1Degree> t1_degrees(const GluedCurveConfig& config);

/// Bound on h^0 of a line bundle of the given degree on an irreducible
/// curve: 0 in negative degree, 1 in degree 1 on a curve of positive
/// arithmetic genus, d + 1 otherwise.
long section_bound(long degree, long arithmetic_genus);

GluedCurveConfig disjoint_union(const GluedCurveConfig& a, const GluedCurveConfig& b);

}  // namespace godeaux

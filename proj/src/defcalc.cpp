#include "godeaux/defcalc.hpp"

namespace godeaux {

void GluedCurveConfig::validate() const {
  for (const DoubleCurveComponent& c : components) {
    if (c.branches.size() != 2)
      throw std::invalid_argument("component '" + c.name + "' must have exactly two branches");
    if (c.node_preimages < 0) throw std::invalid_argument("component '" + c.name + "' has a negative node count");
    if (c.arithmetic_genus < 0) throw std::invalid_argument("component '" + c.name + "' has a negative genus");
  }
}

std::vector<T1Degree> t1_degrees(const GluedCurveConfig& config) {
  config.validate();
  std::vector<T1Degree> out;
  for (const DoubleCurveComponent& c : config.components)
    out.push_back({c.name, c.branches[0].degree + c.branches[1].degree - c.node_preimages});
  return out;
}

long section_bound(long degree, long arithmetic_genus) {
  if (degree < 0) return 0;
  if (degree == 1 && arithmetic_genus >= 1) return 1;
  return degree + 1;
}

GluedCurveConfig disjoint_union(const GluedCurveConfig& a, const GluedCurveConfig& b) {
  GluedCurveConfig out{a.name + "+" + b.name, a.components};
  out.components.insert(out.components.end(), b.components.begin(), b.components.end());
  return out;
}

}  // namespace godeaux

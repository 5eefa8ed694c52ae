#pragma once

#include "godeaux/numberfield.hpp"
#include "godeaux/poly.hpp"
#include "godeaux/residue.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace godeaux {

class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SurfaceInvariants {
  int K2 = 1;
  int chi = 1;
  int pg = 0;
  int q = 0;

  /// Riemann-Roch plurigenera: P_0 = 1, P_1 = p_g, P_m = chi + m(m-1)/2 K^2.
  long plurigenus(int m) const;
};

struct Expectations {
  std::optional<SurfaceInvariants> surface;
  std::optional<std::vector<int>> generator_degrees;
  std::optional<std::map<int, int>> relation_degrees;
  std::optional<int> codimension;
  std::map<int, std::string> base_locus;
  std::optional<int> fourcanonical_degree;
};

/// Everything that defines one surface: the hypersurface, residue data, the
/// generator list to verify, and optional reference data.
struct Instance {
  RingPtr ring;
  Poly modulus;
  std::vector<CurveElement> residue_images;
  CurveElement tau_u;
  CurveElement tau_v;
  std::vector<Poly> generators;

  RingPtr tricanonical_ring;
  std::optional<Poly> tricanonical_form;

  int base_locus_bound = 30;
  std::optional<QuadraticField> witness_field;
  std::map<int, std::vector<std::vector<QuadraticField::Element>>> witnesses;

  Expectations expected;
};

/// Parses the JSON instance document. Throws InstanceError or ParseError.
Instance parse_instance(std::string_view json_text);
Instance load_instance(const std::string& path);

/// The shipped instance (data/godeaux.json, compiled in).
const std::string& default_instance_text();
Instance default_instance();

}  // namespace godeaux

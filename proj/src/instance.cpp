#include "godeaux/instance.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace godeaux {

using nlohmann::json;

long SurfaceInvariants::plurigenus(int m) const {
  if (m < 0) throw std::invalid_argument("negative degree");
  if (m == 0) return 1;
  if (m == 1) return pg;
  return chi + static_cast<long>(m) * (m - 1) / 2 * K2;
}

namespace {

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw InstanceError(std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::string text(const json& j, const std::string& what) {
  if (!j.is_string()) throw InstanceError(what + " must be a string");
  return j.get<std::string>();
}

CurveElementText text_pair(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw InstanceError(what + " must be a pair of strings");
  return {text(j[0], what), text(j[1], what)};
}

}  // namespace

Instance parse_instance(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InstanceError(std::string("malformed instance document: ") + e.what());
  }
  try {
    Instance inst{.ring = nullptr, .modulus = Poly(nullptr), .residue_images = {}, .tau_u = {}, .tau_v = {},
                  .generators = {}, .tricanonical_ring = nullptr, .tricanonical_form = std::nullopt,
                  .base_locus_bound = 30, .witness_field = std::nullopt, .witnesses = {}, .expected = {}};

    const json& ring = field(doc, "ring");
    inst.ring = make_ring(field(ring, "vars").get<std::vector<std::string>>(), field(ring, "weights").get<std::vector<int>>());
    inst.modulus = parse_poly(text(field(doc, "modulus"), "modulus"), inst.ring);
    if (inst.modulus.is_zero() || !inst.modulus.is_homogeneous() || *inst.modulus.degree() == 0)
      throw InstanceError("modulus must be homogeneous of positive degree");

    const json& images = field(doc, "residue_images");
    for (std::size_t i = 0; i < inst.ring->size(); ++i) {
      const std::string& v = inst.ring->name(i);
      inst.residue_images.push_back(
          parse_curve_element(text_pair(field(images, v.c_str()), "residue image of " + v), inst.ring->weight(i)));
    }

    const json& tau = field(doc, "tau_generators");
    if (!tau.is_array() || tau.size() != 2) throw InstanceError("tau_generators must list two elements");
    inst.tau_u = parse_curve_element(text_pair(tau[0], "tau generator"), 1);
    inst.tau_v = parse_curve_element(text_pair(tau[1], "tau generator"), 1);

    if (doc.contains("generators")) {
      for (const json& g : doc.at("generators")) inst.generators.push_back(parse_poly(text(g, "generator"), inst.ring));
    }

    if (doc.contains("tricanonical")) {
      const json& tri = doc.at("tricanonical");
      auto names = field(tri, "variables").get<std::vector<std::string>>();
      inst.tricanonical_ring = make_ring(names, std::vector<int>(names.size(), 1));
      if (tri.contains("form")) inst.tricanonical_form = parse_poly(text(tri.at("form"), "tricanonical form"), inst.tricanonical_ring);
    }

    if (doc.contains("base_locus")) {
      const json& bl = doc.at("base_locus");
      inst.base_locus_bound = bl.value("degree_bound", 30);
      if (bl.contains("witness_field")) {
        const json& wf = bl.at("witness_field");
        inst.witness_field.emplace(text(field(wf, "variable"), "witness field variable"),
                                   text(field(wf, "minpoly"), "witness field minpoly"));
      }
      if (bl.contains("witnesses")) {
        if (!inst.witness_field) throw InstanceError("witnesses require a witness_field");
        for (const auto& [key, points] : bl.at("witnesses").items()) {
          auto& list = inst.witnesses[std::stoi(key)];
          for (const json& pt : points) {
            if (!pt.is_array() || pt.size() != inst.ring->size()) throw InstanceError("witness point has the wrong length");
            std::vector<QuadraticField::Element> coords;
            for (const json& c : pt) coords.push_back(inst.witness_field->parse(text(c, "witness coordinate")));
            list.push_back(std::move(coords));
          }
        }
      }
    }

    if (doc.contains("expected")) {
      const json& ex = doc.at("expected");
      if (ex.contains("surface")) {
        const json& s = ex.at("surface");
        inst.expected.surface = SurfaceInvariants{s.at("K2").get<int>(), s.at("chi").get<int>(), s.at("pg").get<int>(),
                                                  s.at("q").get<int>()};
      }
      if (ex.contains("generator_degrees")) inst.expected.generator_degrees = ex.at("generator_degrees").get<std::vector<int>>();
      if (ex.contains("relation_degrees")) {
        std::map<int, int> rel;
        for (const auto& [k, v] : ex.at("relation_degrees").items()) rel[std::stoi(k)] = v.get<int>();
        inst.expected.relation_degrees = rel;
      }
      if (ex.contains("codimension")) inst.expected.codimension = ex.at("codimension").get<int>();
      if (ex.contains("base_locus")) {
        for (const auto& [k, v] : ex.at("base_locus").items()) inst.expected.base_locus[std::stoi(k)] = v.get<std::string>();
      }
      if (ex.contains("fourcanonical_degree")) inst.expected.fourcanonical_degree = ex.at("fourcanonical_degree").get<int>();
    }
    return inst;
  } catch (const json::exception& e) {
    throw InstanceError(std::string("invalid instance document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InstanceError(std::string("invalid instance document: ") + e.what());
  }
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("cannot open instance file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

Instance default_instance() { return parse_instance(default_instance_text()); }

}  // namespace godeaux

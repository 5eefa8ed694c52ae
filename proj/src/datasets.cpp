#include "godeaux/datasets.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace godeaux {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("malformed document: ") + e.what());
  }
}

struct CellComplex {
  std::vector<std::vector<std::string>> cells;
  ChainComplexZ complex;

  std::pair<std::size_t, std::size_t> locate(const std::string& name) const {
    for (std::size_t k = 0; k < cells.size(); ++k)
      for (std::size_t i = 0; i < cells[k].size(); ++i)
        if (cells[k][i] == name) return {k, i};
    throw DataError("unknown cell '" + name + "'");
  }
};

CellComplex read_complex(const json& j, const std::string& name) {
  CellComplex out;
  out.cells = j.at("cells").get<std::vector<std::vector<std::string>>>();
  if (out.cells.empty()) throw DataError("complex " + name + " has no cells");
  std::vector<std::size_t> ranks;
  for (const auto& level : out.cells) ranks.push_back(level.size());
  std::vector<MatrixZ> bounds;
  for (std::size_t k = 1; k < ranks.size(); ++k) bounds.emplace_back(ranks[k - 1], ranks[k]);
  if (j.contains("boundary")) {
    for (const auto& [cell, faces] : j.at("boundary").items()) {
      const auto [k, i] = out.locate(cell);
      for (const auto& [face, coeff] : faces.items()) {
        const auto [kf, f] = out.locate(face);
        if (k == 0 || kf + 1 != k) throw DataError("boundary of '" + cell + "' lists '" + face + "' of the wrong degree");
        bounds[k - 1](f, i) = coeff.get<long>();
      }
    }
  }
  try {
    out.complex = ChainComplexZ(std::move(ranks), std::move(bounds));
  } catch (const std::invalid_argument& e) {
    throw DataError("complex " + name + ": " + e.what());
  }
  return out;
}

ChainMapZ read_map(const json& j, const CellComplex& source, const CellComplex& target) {
  ChainMapZ f;
  for (std::size_t k = 0; k < source.cells.size(); ++k)
    f.components.emplace_back(k < target.cells.size() ? target.cells[k].size() : 0, source.cells[k].size());
  for (const auto& [cell, images] : j.items()) {
    const auto [k, i] = source.locate(cell);
    for (const auto& [image, coeff] : images.items()) {
      const auto [kt, t] = target.locate(image);
      if (kt != k) throw DataError("map sends '" + cell + "' to '" + image + "' of another degree");
      f.components[k](t, i) = coeff.get<long>();
    }
  }
  return f;
}

AbelianGroup read_group(const json& j) {
  AbelianGroup g;
  g.rank = j.value("rank", std::size_t{0});
  if (j.contains("torsion"))
    for (const json& t : j.at("torsion")) g.torsion.emplace_back(t.get<long>());
  return g;
}

}  // namespace

TopologyModel parse_topology(std::string_view json_text) {
  const json doc = parse_json(json_text);
  try {
    TopologyModel m;
    const json& cx = doc.at("complexes");
    const CellComplex dbar = read_complex(cx.at("Dbar"), "Dbar");
    const CellComplex d = read_complex(cx.at("D"), "D");
    const CellComplex xbar = read_complex(cx.at("Xbar"), "Xbar");
    m.dbar = dbar.complex;
    m.d = d.complex;
    m.xbar = xbar.complex;
    m.pi = read_map(doc.at("maps").at("pi"), dbar, d);
    m.iota = read_map(doc.at("maps").at("iota"), dbar, xbar);

    if (doc.contains("mayer_vietoris")) {
      for (const json& deg : doc.at("mayer_vietoris")) {
        MayerVietorisDegree mv;
        mv.intersection = read_group(deg.at("intersection"));
        mv.first = read_group(deg.at("first"));
        mv.second = read_group(deg.at("second"));
        const std::size_t rows = mv.first.rank + mv.first.torsion.size() + mv.second.rank + mv.second.torsion.size();
        const std::size_t cols = mv.intersection.rank + mv.intersection.torsion.size();
        const json& phi = deg.at("phi");
        if (phi.size() != rows) throw DataError("Mayer-Vietoris map has the wrong number of rows");
        mv.phi = MatrixZ(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
          if (phi[i].size() != cols) throw DataError("Mayer-Vietoris map has the wrong number of columns");
          for (std::size_t j = 0; j < cols; ++j) mv.phi(i, j) = phi[i][j].get<long>();
        }
        m.mayer_vietoris.push_back(std::move(mv));
      }
    }

    const json& pres = doc.at("presentation");
    m.presentation.generators = pres.at("generators").get<std::vector<std::string>>();
    for (const json& r : pres.at("relators"))
      m.presentation.relators.push_back(parse_word(r.get<std::string>(), m.presentation.generators));
    m.tietze_budget = doc.value("tietze_budget", std::size_t{1000});

    if (doc.contains("expected")) {
      const json& ex = doc.at("expected");
      if (ex.contains("homology")) m.expected_homology = ex.at("homology").get<std::vector<std::string>>();
      if (ex.contains("abelianization")) m.expected_abelianization = ex.at("abelianization").get<std::string>();
      if (ex.contains("pi1_trivial")) m.expected_pi1_trivial = ex.at("pi1_trivial").get<bool>();
    }
    return m;
  } catch (const json::exception& e) {
    throw DataError(std::string("invalid topology document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("invalid topology document: ") + e.what());
  }
}

DefcalcData parse_defcalc(std::string_view json_text) {
  const json doc = parse_json(json_text);
  try {
    DefcalcData data;
    for (const json& c : doc.at("configs")) {
      GluedCurveConfig config;
      config.name = c.at("name").get<std::string>();
      for (const json& comp : c.at("components")) {
        DoubleCurveComponent dc;
        dc.name = comp.at("name").get<std::string>();
        dc.node_preimages = comp.at("node_preimages").get<long>();
        dc.arithmetic_genus = comp.value("arithmetic_genus", 0L);
        dc.self_glued = comp.value("self_glued", false);
        for (const json& b : comp.at("branches")) dc.branches.push_back({b.value("name", ""), b.at("degree").get<long>()});
        config.components.push_back(std::move(dc));
      }
      config.validate();
      data.configs.push_back(std::move(config));
    }
    if (doc.contains("section_bounds"))
      for (const json& s : doc.at("section_bounds"))
        data.section_bound_inputs.emplace_back(s.at("degree").get<long>(), s.at("arithmetic_genus").get<long>());
    if (doc.contains("constants") && doc.at("constants").contains("kuranishi_dimension"))
      data.kuranishi_dimension = doc.at("constants").at("kuranishi_dimension").get<long>();
    if (doc.contains("expected")) {
      const json& ex = doc.at("expected");
      if (ex.contains("t1_degrees")) data.expected_degrees = ex.at("t1_degrees").get<std::map<std::string, std::vector<long>>>();
      if (ex.contains("section_bounds")) data.expected_bounds = ex.at("section_bounds").get<std::vector<long>>();
    }
    return data;
  } catch (const json::exception& e) {
    throw DataError(std::string("invalid defcalc document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("invalid defcalc document: ") + e.what());
  }
}

}  // namespace godeaux

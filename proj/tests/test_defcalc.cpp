#include "godeaux/datasets.hpp"
#include "godeaux/defcalc.hpp"

#include <doctest.h>

using namespace godeaux;

namespace {

GluedCurveConfig config(const std::string& name) {
  for (const auto& c : parse_defcalc(default_defcalc_text()).configs)
    if (c.name == name) return c;
  throw std::logic_error("no config " + name);
}

std::vector<long> degrees(const GluedCurveConfig& c) {
  std::vector<long> out;
  for (const auto& d : t1_degrees(c)) out.push_back(d.degree);
  return out;
}

}  // namespace

TEST_SUITE("defcalc") {

TEST_CASE("degrees of the shipped configurations") {
  CHECK(degrees(config("X")) == std::vector<long>{1});
  CHECK(degrees(config("Y_D0")) == std::vector<long>{-5});
  CHECK(degrees(config("Y_A")) == std::vector<long>{2});
  CHECK(parse_defcalc(default_defcalc_text()).kuranishi_dimension == 8);
}

TEST_CASE("section bounds") {
  CHECK(section_bound(1, 2) == 1);
  CHECK(section_bound(-5, 0) == 0);
  CHECK(section_bound(-1, 7) == 0);
  CHECK(section_bound(0, 0) == 1);
  CHECK(section_bound(1, 0) == 2);
  CHECK(section_bound(4, 3) == 5);
}

TEST_CASE("disjoint unions concatenate degrees") {
  const auto u = disjoint_union(config("X"), config("Y_A"));
  CHECK(degrees(u) == std::vector<long>{1, 2});
  const auto v = disjoint_union(config("Y_D0"), disjoint_union(config("X"), config("Y_A")));
  CHECK(degrees(v) == std::vector<long>{-5, 1, 2});
}

TEST_CASE("swapping the two branches does not change the degree") {
  for (const char* name : {"X", "Y_D0", "Y_A"}) {
    GluedCurveConfig c = config(name);
    const auto before = degrees(c);
    for (auto& comp : c.components) std::swap(comp.branches[0], comp.branches[1]);
    CHECK(degrees(c) == before);
  }
}

TEST_CASE("invalid configurations") {
  GluedCurveConfig c = config("X");
  c.components[0].branches.pop_back();
  CHECK_THROWS_AS(t1_degrees(c), std::invalid_argument);
  c = config("X");
  c.components[0].node_preimages = -1;
  CHECK_THROWS_AS(t1_degrees(c), std::invalid_argument);
  CHECK_THROWS_AS(parse_defcalc("[1, 2]"), DataError);
}

}

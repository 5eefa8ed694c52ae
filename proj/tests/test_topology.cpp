#include "godeaux/datasets.hpp"
#include "godeaux/topology.hpp"
#include "tietze_replay.hpp"

#include <doctest.h>

#include <random>

using namespace godeaux;

namespace {

AbelianGroup free_group(std::size_t r) { return {r, {}}; }
AbelianGroup cyclic(long n) { return {0, {Integer(n)}}; }

std::vector<AbelianGroup> groups(std::initializer_list<AbelianGroup> gs) { return gs; }

GroupPresentation presentation(std::vector<std::string> gens, const std::vector<std::string>& rels) {
  GroupPresentation g{std::move(gens), {}};
  for (const auto& r : rels) g.relators.push_back(parse_word(r, g.generators));
  return g;
}

}  // namespace

TEST_SUITE("topology") {

TEST_CASE("cokernels") {
  CHECK(cokernel(MatrixZ::from_rows({{2, 0}, {0, 3}})) == cyclic(6));
  CHECK(cokernel(MatrixZ(2, 0)) == free_group(2));
  CHECK(cokernel(MatrixZ::from_rows({{1}, {2}})).to_string() == "Z");
  CHECK(cokernel(MatrixZ::from_rows({{2}, {4}})).to_string() == "Z + Z/2");
  CHECK(cokernel(MatrixZ::from_rows({{2, 0}, {0, 4}, {0, 0}})).to_string() == "Z + Z/2 + Z/4");
}

TEST_CASE("homology of small complexes") {
  CHECK(homology(ChainComplexZ({1}, {})) == groups({free_group(1)}));
  const ChainComplexZ sphere({1, 0, 1}, {MatrixZ(1, 0), MatrixZ(0, 1)});
  CHECK(homology(sphere) == groups({free_group(1), free_group(0), free_group(1)}));
  const ChainComplexZ torus({1, 2, 1}, {MatrixZ(1, 2), MatrixZ(2, 1)});
  CHECK(homology(torus) == groups({free_group(1), free_group(2), free_group(1)}));
  const ChainComplexZ rp2({1, 1, 1}, {MatrixZ(1, 1), MatrixZ::from_rows({{2}})});
  CHECK(homology(rp2) == groups({free_group(1), cyclic(2), free_group(0)}));
  CHECK(rp2.euler_characteristic() == 1);
}

TEST_CASE("inconsistent complexes are rejected") {
  CHECK_THROWS_AS(ChainComplexZ({1, 1}, {MatrixZ(2, 1)}), std::invalid_argument);
  // segment then a 2-cell whose boundary is not a cycle
  CHECK_THROWS_AS(ChainComplexZ({2, 1, 1}, {MatrixZ::from_rows({{-1}, {1}}), MatrixZ::from_rows({{1}})}),
                  std::invalid_argument);
}

TEST_CASE("elementary expansions do not change homology") {
  const ChainComplexZ rp2({1, 1, 1}, {MatrixZ(1, 1), MatrixZ::from_rows({{2}})});
  for (std::size_t k = 0; k < 3; ++k) {
    const ChainComplexZ e = elementary_expansion(rp2, k);
    auto h = homology(e);
    h.resize(3);
    CHECK(h == homology(rp2));
    CHECK(e.euler_characteristic() == rp2.euler_characteristic());
  }
}

TEST_CASE("suspension of a circle as a homotopy pushout") {
  const ChainComplexZ circle({1, 1}, {MatrixZ(1, 1)});
  const ChainComplexZ point({1}, {});
  const ChainMapZ collapse{{MatrixZ::from_rows({{1}}), MatrixZ(0, 1)}};
  check_chain_map(circle, point, collapse);
  const ChainComplexZ s2 = homotopy_pushout(circle, point, point, collapse, collapse);
  CHECK(homology(s2) == groups({free_group(1), free_group(0), free_group(1)}));
  CHECK(s2.euler_characteristic() == 2);
}

TEST_CASE("non chain maps are rejected") {
  const ChainComplexZ circle({1, 1}, {MatrixZ(1, 1)});
  const ChainComplexZ segment({2, 1}, {MatrixZ::from_rows({{-1}, {1}})});
  const ChainMapZ bad{{MatrixZ::from_rows({{1}, {0}}), MatrixZ::from_rows({{1}})}};
  CHECK_THROWS_AS(check_chain_map(circle, segment, bad), std::invalid_argument);
}

TEST_CASE("mayer-vietoris for the two-sphere") {
  // Two discs meeting in a circle.
  std::vector<MayerVietorisDegree> mv{
      {free_group(1), free_group(1), free_group(1), MatrixZ::from_rows({{1}, {-1}})},
      {free_group(1), free_group(0), free_group(0), MatrixZ(0, 1)},
      {free_group(0), free_group(0), free_group(0), MatrixZ(0, 0)},
  };
  const auto h = mayer_vietoris_solve(mv);
  REQUIRE(h.size() == 3);
  CHECK(*h[0].group == free_group(1));
  CHECK(*h[1].group == free_group(0));
  CHECK(*h[2].group == free_group(1));
}

TEST_CASE("mayer-vietoris with all groups zero") {
  std::vector<MayerVietorisDegree> mv(3, {free_group(0), free_group(0), free_group(0), MatrixZ(0, 0)});
  for (const auto& r : mayer_vietoris_solve(mv)) {
    REQUIRE_FALSE(r.ambiguous());
    CHECK(r.group->is_trivial());
  }
}

TEST_CASE("mayer-vietoris flags a possibly nonsplit extension") {
  std::vector<MayerVietorisDegree> mv{
      {cyclic(2), free_group(0), free_group(0), MatrixZ(0, 1)},
      {free_group(0), cyclic(2), free_group(0), MatrixZ(1, 0)},
  };
  const auto h = mayer_vietoris_solve(mv);
  CHECK_FALSE(h[0].ambiguous());
  CHECK(h[1].ambiguous());
  CHECK(h[1].cokernel_part == cyclic(2));
  CHECK(h[1].kernel_part == cyclic(2));

  mv[1].first = cyclic(3);
  CHECK_FALSE(mayer_vietoris_solve(mv)[1].ambiguous());
  CHECK(*mayer_vietoris_solve(mv)[1].group == cyclic(6));
}

TEST_CASE("mayer-vietoris rejects maps that ignore torsion") {
  std::vector<MayerVietorisDegree> mv{{cyclic(2), free_group(1), free_group(0), MatrixZ::from_rows({{1}})}};
  CHECK_THROWS_AS(mayer_vietoris_solve(mv), std::invalid_argument);
}

TEST_CASE("words") {
  const std::vector<std::string> g{"alpha", "beta"};
  CHECK(parse_word("beta alpha^-1 beta", g) == Word{2, -1, 2});
  CHECK(parse_word("b*a^-1*b", {"a", "b"}) == Word{2, -1, 2});
  CHECK(parse_word("1", g).empty());
  CHECK(parse_word("alpha alpha^-1", g).empty());
  CHECK(format_word(Word{1, 1, -2}, g) == "alpha^2 beta^-1");
  CHECK(parse_word(format_word(Word{1, 1, -2, 1}, g), g) == Word{1, 1, -2, 1});
  CHECK(cyclic_reduce(Word{-2, 1, 2}) == Word{1});
  CHECK(free_reduce(Word{1, 2, -2, -1, 2}) == Word{2});
  CHECK_THROWS_AS(parse_word("gamma", g), std::invalid_argument);
}

TEST_CASE("abelianization equals H1 of the presentation complex") {
  CHECK(abelianization(presentation({"a"}, {"a^2"})) == cyclic(2));
  CHECK(abelianization(presentation({"a", "b"}, {"a b a^-1 b^-1"})) == free_group(2));
  CHECK(abelianization(presentation({"alpha", "beta"}, {"beta alpha^-1 beta", "alpha^-1 beta alpha"})).is_trivial());

  std::mt19937 rng(21);
  std::uniform_int_distribution<int> letter(-3, 3), len(1, 7), count(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    GroupPresentation g{{"a", "b", "c"}, {}};
    for (int r = count(rng); r > 0; --r) {
      Word w;
      for (int i = len(rng); i > 0; --i)
        if (int x = letter(rng); x != 0) w.push_back(x);
      g.relators.push_back(w);
    }
    const auto h = homology(presentation_complex(g));
    CHECK(h.at(1) == abelianization(g));
  }
}

TEST_CASE("tietze certificates") {
  const auto empty = tietze_trivialize(GroupPresentation{});
  REQUIRE(empty.certificate.has_value());
  CHECK(empty.certificate->steps.empty());

  const auto z3 = tietze_trivialize(presentation({"a"}, {"a^3"}));
  CHECK_FALSE(z3.certificate.has_value());

  const auto free2 = tietze_trivialize(presentation({"a", "b"}, {}));
  CHECK_FALSE(free2.certificate.has_value());

  for (const auto& g : {presentation({"alpha", "beta"}, {"beta alpha^-1 beta", "alpha^-1 beta alpha"}),
                        presentation({"a", "b"}, {"a b a^-1 b^-2", "b a b^-1 a^-2"}),
                        presentation({"a", "b", "c"}, {"a b^-1", "b c^-1", "c"}), presentation({"a"}, {"a^-1"})}) {
    const auto r = tietze_trivialize(g, 1000);
    REQUIRE(r.certificate.has_value());
    CHECK(r.steps_used == r.certificate->steps.size());
    CHECK(godeaux::testing::replay(*r.certificate));
  }
}

TEST_CASE("a budget of zero gives up") {
  const auto r = tietze_trivialize(presentation({"a"}, {"a"}), 0);
  CHECK_FALSE(r.certificate.has_value());
}

TEST_CASE("shipped model") {
  const TopologyModel m = parse_topology(default_topology_text());
  const ChainComplexZ x = m.model();
  std::vector<std::string> h;
  for (const auto& g : homology(x)) h.push_back(g.to_string());
  CHECK(h == std::vector<std::string>{"Z", "0", "Z^9", "Z", "Z"});
  CHECK(x.euler_characteristic() == 10);

  const auto mv = mayer_vietoris_solve(m.mayer_vietoris);
  REQUIRE(mv.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    REQUIRE_FALSE(mv[i].ambiguous());
    CHECK(mv[i].group->to_string() == h[i]);
  }

  CHECK(abelianization(m.presentation).is_trivial());
  const auto t = tietze_trivialize(m.presentation, m.tietze_budget);
  REQUIRE(t.certificate.has_value());
  CHECK(godeaux::testing::replay(*t.certificate));
}

TEST_CASE("corrupt topology data") {
  CHECK_THROWS_AS(parse_topology("{"), DataError);
  CHECK_THROWS_AS(parse_topology("{}"), DataError);
}

}

#include "godeaux/instance.hpp"
#include "godeaux/residue.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace godeaux;
using namespace godeaux::testing;

namespace {

Rational eval_form(const BinaryForm& f, const Rational& a, const Rational& b) {
  Rational total = 0;
  for (int k = 0; k <= f.degree; ++k) {
    Rational term = f.coeffs[k];
    for (int i = 0; i < f.degree - k; ++i) term *= a;
    for (int i = 0; i < k; ++i) term *= b;
    total += term;
  }
  return total;
}

// Direct numeric evaluation of p under the two coordinate substitutions.
std::pair<Rational, Rational> eval_residue(const Poly& p, const Rational& a1, const Rational& b1, const Rational& a2,
                                           const Rational& b2) {
  const std::vector<Rational> first{Rational(0), b1 - a1, -a1 * b1, -a1 * a1 * b1};
  const std::vector<Rational> second{b2 - a2, Rational(0), -a2 * b2, a2 * a2 * b2};
  Rational v1 = 0, v2 = 0;
  for (const auto& t : p.terms()) {
    Rational w1 = t.coeff, w2 = t.coeff;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::uint32_t e = 0; e < t.mono[i]; ++e) w1 *= first[i], w2 *= second[i];
    v1 += w1;
    v2 += w2;
  }
  return {v1, v2};
}

ResidueMap shipped_residue() {
  const Instance inst = default_instance();
  return ResidueMap(inst.ring, inst.residue_images);
}

}  // namespace

TEST_SUITE("residue") {

TEST_CASE("residue of f vanishes") {
  const ResidueMap r = shipped_residue();
  const Poly f = parse_poly(godeaux_sextic(), r.ambient());
  CHECK(r(f).is_zero());
  CHECK(r(f).degree == 6);
  CHECK(r(parse_poly("x1*x2", r.ambient())).is_zero());
  CHECK(r(Poly::constant(r.ambient(), 1)) == CurveElement::one());
}

TEST_CASE("residue agrees with direct evaluation at rational points") {
  const ResidueMap r = shipped_residue();
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> pick(-7, 7);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly p = random_homogeneous(r.ambient(), trial % 10, rng);
    const CurveElement e = r(p, trial % 10);
    const Rational a1(pick(rng)), b1(pick(rng)), a2(pick(rng));
    Rational b2(pick(rng), 3);
    b2.canonicalize();
    const auto [v1, v2] = eval_residue(p, a1, b1, a2, b2);
    CHECK(eval_form(e.first, a1, b1) == v1);
    CHECK(eval_form(e.second, a2, b2) == v2);
  }
}

TEST_CASE("residue is a ring homomorphism") {
  const ResidueMap r = shipped_residue();
  std::mt19937 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int da = trial % 6, db = 1 + trial % 5;
    const Poly a = random_homogeneous(r.ambient(), da, rng);
    const Poly b = random_homogeneous(r.ambient(), db, rng);
    const Poly c = random_homogeneous(r.ambient(), da, rng);
    CHECK(r(a * b, da + db) == r(a, da) * r(b, db));
    CHECK(r(a + c, da) == r(a, da) + r(c, da));
  }
}

TEST_CASE("residue rejects inhomogeneous input") {
  const ResidueMap r = shipped_residue();
  CHECK_THROWS_AS(r(parse_poly("x1 + y", r.ambient())), std::invalid_argument);
}

TEST_CASE("tau basis is independent") {
  const Instance inst = default_instance();
  const TauSubring tau(inst.tau_u, inst.tau_v);
  for (int d = 0; d <= 20; ++d) {
    std::vector<VectorQ> rows;
    for (const auto& e : tau.basis(d)) rows.push_back(e.coordinates());
    CHECK(rows.size() == static_cast<std::size_t>(d + 1));
    CHECK(rank(columns_to_matrix(rows, 2 * (d + 1))) == static_cast<std::size_t>(d + 1));
  }
}

TEST_CASE("tau membership") {
  const Instance inst = default_instance();
  const TauSubring tau(inst.tau_u, inst.tau_v);
  const ResidueMap r(inst.ring, inst.residue_images);

  const CurveElement e = parse_curve_element({"b1^2 - a1*b1 + a1^2", "b2^2 - a2*b2 + a2^2"}, 2);
  const auto c = tau.coefficients(e);
  REQUIRE(c.has_value());
  // basis(2) is u^0 v^2, u v, u^2
  CHECK(*c == VectorQ{Rational(1), Rational(-1), Rational(1)});

  CHECK(tau.coefficients(CurveElement::zero(3)) == VectorQ(4, Rational(0)));
  CHECK_FALSE(tau.contains(r(parse_poly("x1", inst.ring))));
  CHECK(tau.contains(r(parse_poly("x1^2 + x2^2 - y", inst.ring))));
  for (const auto& g : inst.generators) {
    CAPTURE(format_poly(g));
    CHECK(tau.contains(r(g)));
  }
}

}

#include "support.hpp"

#include <doctest.h>

using namespace godeaux;
using namespace godeaux::testing;

TEST_SUITE("poly") {

TEST_CASE("weighted degree and the monomial order") {
  const auto s = weighted_ring();
  const Poly f = parse_poly(godeaux_sextic(), s);
  CHECK(f.is_homogeneous());
  CHECK(f.degree() == 6);
  CHECK(format_monomial(f.leading_term().mono, *s) == "z^2");

  const Monomial x1x1({2, 0, 0, 0}), x1x2({1, 1, 0, 0}), x2x2({0, 2, 0, 0}), y({0, 0, 1, 0});
  CHECK(monomial_order(x1x1, x1x2, *s) == std::strong_ordering::greater);
  CHECK(monomial_order(x1x2, x2x2, *s) == std::strong_ordering::greater);
  CHECK(monomial_order(y, x1x1, *s) == std::strong_ordering::greater);
  CHECK(weighted_degree(Monomial({1, 2, 3, 4}), *s) == 21);
}

TEST_CASE("monomial counts follow the Hilbert series of the weighted ring") {
  const auto s = weighted_ring();
  const auto expected = series({1, 1, 2, 3}, 30);
  for (int d = 0; d <= 30; ++d) {
    const auto basis = monomial_basis(*s, d);
    CHECK(static_cast<long>(basis.size()) == expected[d]);
    for (std::size_t i = 0; i + 1 < basis.size(); ++i)
      CHECK(monomial_order(basis[i], basis[i + 1], *s) == std::strong_ordering::greater);
  }
}

TEST_CASE("ring axioms on random homogeneous polynomials") {
  const auto s = weighted_ring();
  std::mt19937 rng(1);
  for (int trial = 0; trial < 25; ++trial) {
    const Poly a = random_homogeneous(s, 1 + trial % 4, rng);
    const Poly b = random_homogeneous(s, 2 + trial % 3, rng);
    const Poly c = random_homogeneous(s, 1 + trial % 4, rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + c) - c == a);
    CHECK((a - a).is_zero());
    CHECK(a.pow(3) == a * a * a);
    CHECK((a * b).is_homogeneous());
  }
}

TEST_CASE("division reassembles the dividend") {
  const auto s = weighted_ring();
  const Poly f = parse_poly(godeaux_sextic(), s);
  const Poly g = parse_poly("x1*y - x2^3 + 2*x1^3", s);
  std::mt19937 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Poly p = random_homogeneous(s, 6 + trial % 7, rng);
    const DivisionResult r = divide(p, {f, g});
    CHECK(r.quotients[0] * f + r.quotients[1] * g + r.remainder == p);
    for (const auto& t : r.remainder.terms()) {
      CHECK_FALSE(f.leading_term().mono.divides(t.mono));
      CHECK_FALSE(g.leading_term().mono.divides(t.mono));
    }
  }
}

TEST_CASE("format and parse are inverse") {
  const auto s = weighted_ring();
  std::mt19937 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    Poly p = random_homogeneous(s, trial % 9, rng);
    Rational c(trial % 4 + 1, 3);
    c.canonicalize();
    p = p.scaled(c);
    CHECK(parse_poly(format_poly(p), s) == p);
  }
  CHECK(format_poly(parse_poly("3/6*x1^2*y - z*x1 + 0*y", s)) == "-x1*z + 1/2*x1^2*y");
  CHECK(format_poly(Poly(s)) == "0");
  CHECK(parse_poly("-(x1 - x2)^2", s) == parse_poly("-x1^2 + 2*x1*x2 - x2^2", s));
}

TEST_CASE("parse errors") {
  const auto s = weighted_ring();
  for (const char* bad : {"x1 +", "x3", "x1^-1", "2x1", "(x1", "x1 ** 2", "1/0", ""}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_poly(bad, s), ParseError);
  }
}

}

#include "godeaux/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace godeaux {

WeightedRing::WeightedRing(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size()) throw std::invalid_argument("ring needs one weight per variable");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (weights_[i] < 1) throw std::invalid_argument("variable weights must be positive");
    const std::string& n = names_[i];
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])) ||
        !std::all_of(n.begin(), n.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; })) {
      throw std::invalid_argument("invalid variable name '" + n + "'");
    }
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
  scan_.resize(names_.size());
  std::iota(scan_.begin(), scan_.end(), std::size_t{0});
  std::stable_sort(scan_.begin(), scan_.end(), [this](std::size_t a, std::size_t b) {
    if (weights_[a] != weights_[b]) return weights_[a] < weights_[b];
    return a > b;
  });
}

std::optional<std::size_t> WeightedRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights) {
  return std::make_shared<const WeightedRing>(std::move(names), std::move(weights));
}

// ---------------------------------------------------------------------------

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial q(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (other.exps_[i] > exps_[i]) throw std::invalid_argument("monomial quotient is not a monomial");
    q.exps_[i] = exps_[i] - other.exps_[i];
  }
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial c(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) c.exps_[i] = a.exps_[i] + b.exps_[i];
  return c;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::uint32_t e : m.exponents()) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int weighted_degree(const Monomial& m, const WeightedRing& ring) {
  if (m.size() != ring.size()) throw std::invalid_argument("monomial does not belong to this ring");
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<int>(m[i]) * ring.weight(i);
  return d;
}

std::strong_ordering monomial_order(const Monomial& a, const Monomial& b, const WeightedRing& ring) {
  const int da = weighted_degree(a, ring);
  const int db = weighted_degree(b, ring);
  if (da != db) return da <=> db;
  for (std::size_t v : ring.scan_order()) {
    if (a[v] != b[v]) return b[v] <=> a[v];
  }
  return std::strong_ordering::equal;
}

namespace {

void enumerate(const WeightedRing& ring, std::size_t var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == ring.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const int w = ring.weight(var);
  for (int e = 0; e * w <= remaining; ++e) {
    cur[var] = static_cast<std::uint32_t>(e);
    enumerate(ring, var + 1, remaining - e * w, cur, out);
  }
  cur[var] = 0;
}

struct OrderDesc {
  const WeightedRing* ring;
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_order(a, b, *ring) > 0; }
};

}  // namespace

std::vector<Monomial> monomial_basis(const WeightedRing& ring, int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  std::vector<Monomial> out;
  Monomial cur(ring.size());
  enumerate(ring, 0, d, cur, out);
  std::sort(out.begin(), out.end(), OrderDesc{&ring});
  return out;
}

// ---------------------------------------------------------------------------

Poly Poly::constant(RingPtr ring, const Rational& c) {
  const std::size_t n = ring->size();
  return monomial(std::move(ring), Monomial(n), c);
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  const std::size_t n = ring->size();
  if (index >= n) throw std::out_of_range("variable index out of range");
  return monomial(std::move(ring), Monomial::unit(n, index));
}

Poly Poly::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), *idx);
}

Poly Poly::monomial(RingPtr ring, Monomial m, const Rational& c) {
  if (m.size() != ring->size()) throw std::invalid_argument("monomial does not belong to this ring");
  Poly p(std::move(ring));
  if (sgn(c) != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const WeightedRing& r = *ring;
  for (const Term& t : terms)
    if (t.mono.size() != r.size()) throw std::invalid_argument("monomial does not belong to this ring");
  std::sort(terms.begin(), terms.end(),
            [&r](const Term& a, const Term& b) { return monomial_order(a.mono, b.mono, r) > 0; });
  Poly p(std::move(ring));
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.front();
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = weighted_degree(terms_.front().mono, *ring_);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return weighted_degree(t.mono, *ring_) == d; });
}

std::optional<int> Poly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return weighted_degree(terms_.front().mono, *ring_);
}

Rational Poly::coefficient(const Monomial& m) const {
  for (const Term& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

namespace {

void require_same_ring(const Poly& a, const Poly& b) {
  if (a.ring() != b.ring() && !(*a.ring() == *b.ring())) {
    throw std::invalid_argument("polynomials belong to different rings");
  }
}

}  // namespace

Poly Poly::operator-() const {
  Poly p = *this;
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  const WeightedRing& r = *a.ring_;
  Poly out(a.ring_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size()) {
      out.terms_.push_back(a.terms_[i++]);
      continue;
    }
    if (i == a.terms_.size()) {
      out.terms_.push_back(b.terms_[j++]);
      continue;
    }
    const auto c = monomial_order(a.terms_[i].mono, b.terms_[j].mono, r);
    if (c > 0) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      Rational s = a.terms_[i].coeff + b.terms_[j].coeff;
      if (sgn(s) != 0) out.terms_.push_back({a.terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) terms.push_back({m, std::move(c)});
  return Poly::from_terms(a.ring_, std::move(terms));
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return Poly(ring_);
  Poly p = *this;
  for (Term& t : p.terms_) t.coeff *= c;
  return p;
}

Poly Poly::times_term(const Monomial& m, const Rational& c) const {
  if (sgn(c) == 0) return Poly(ring_);
  Poly p(ring_);
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order of the terms.
  for (const Term& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!(*a.ring_ == *b.ring_)) return false;
  return a.terms_ == b.terms_;
}

Poly scale(const Rational& c, const Poly& p) { return p.scaled(c); }

// ---------------------------------------------------------------------------

DivisionResult divide(const Poly& p, const std::vector<Poly>& divisors) {
  const RingPtr& ring = p.ring();
  for (const Poly& d : divisors) {
    if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    require_same_ring(p, d);
  }
  const WeightedRing& r = *ring;
  auto desc = [&r](const Monomial& a, const Monomial& b) { return monomial_order(a, b, r) > 0; };
  std::map<Monomial, Rational, decltype(desc)> work(desc);
  for (const Term& t : p.terms()) work.emplace(t.mono, t.coeff);

  std::vector<std::vector<Term>> quotient_terms(divisors.size());
  std::vector<Term> remainder_terms;

  while (!work.empty()) {
    auto lead = work.begin();
    const Monomial m = lead->first;
    const Rational c = lead->second;
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Term& lt = divisors[i].leading_term();
      if (!lt.mono.divides(m)) continue;
      const Monomial q = m.quotient(lt.mono);
      const Rational qc = c / lt.coeff;
      quotient_terms[i].push_back({q, qc});
      for (const Term& t : divisors[i].terms()) {
        Monomial prod = t.mono * q;
        auto [it, inserted] = work.try_emplace(std::move(prod), 0);
        it->second -= qc * t.coeff;
        if (sgn(it->second) == 0) work.erase(it);
      }
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder_terms.push_back({m, c});
      work.erase(lead);
    }
  }

  DivisionResult out{{}, Poly::from_terms(ring, std::move(remainder_terms))};
  for (auto& q : quotient_terms) out.quotients.push_back(Poly::from_terms(ring, std::move(q)));
  return out;
}

Poly substitute(const Poly& p, const std::vector<Poly>& images, const RingPtr& target) {
  if (images.size() != p.ring()->size()) throw std::invalid_argument("need one image per variable");
  // Cache powers per variable.
  std::vector<std::vector<Poly>> powers(images.size());
  Poly result(target);
  for (const Term& t : p.terms()) {
    Poly term = Poly::constant(target, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v) {
      const std::uint32_t e = t.mono[v];
      if (e == 0) continue;
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(Poly::constant(target, 1));
      while (pw.size() <= e) pw.push_back(pw.back() * images[v]);
      term = term * pw[e];
    }
    result += term;
  }
  return result;
}

}  // namespace godeaux

#include "godeaux/topology.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace godeaux {

namespace {

std::size_t snf_rank(const std::vector<Integer>& inv) {
  return static_cast<std::size_t>(std::count_if(inv.begin(), inv.end(), [](const Integer& d) { return sgn(d) != 0; }));
}

MatrixZ hconcat(const MatrixZ& a, const MatrixZ& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("row count mismatch");
  MatrixZ out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

std::size_t generator_count(const AbelianGroup& g) { return g.rank + g.torsion.size(); }

// Columns t_j e_{rank + j}: the relations of the group on its generators.
MatrixZ relation_matrix(const AbelianGroup& g) {
  MatrixZ r(generator_count(g), g.torsion.size());
  for (std::size_t j = 0; j < g.torsion.size(); ++j) r(g.rank + j, j) = g.torsion[j];
  return r;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Integer> all = a.torsion;
  all.insert(all.end(), b.torsion.begin(), b.torsion.end());
  MatrixZ d(all.size(), all.size());
  for (std::size_t i = 0; i < all.size(); ++i) d(i, i) = all[i];
  AbelianGroup out = cokernel(d);
  out.rank += a.rank + b.rank;
  return out;
}

}  // namespace

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (rank == 1) parts.push_back("Z");
  if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  for (const Integer& t : torsion) parts.push_back("Z/" + format_integer(t));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

AbelianGroup cokernel(const MatrixZ& relations) {
  AbelianGroup g;
  const std::vector<Integer> inv = smith_invariants(relations);
  g.rank = relations.rows() - snf_rank(inv);
  for (const Integer& d : inv)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

// ---------------------------------------------------------------------------

ChainComplexZ::ChainComplexZ(std::vector<std::size_t> ranks, std::vector<MatrixZ> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  if (ranks_.empty()) ranks_.push_back(0);
  if (boundaries_.size() != ranks_.size() - 1) throw std::invalid_argument("need one boundary matrix per degree >= 1");
  for (std::size_t i = 1; i < ranks_.size(); ++i) {
    const MatrixZ& d = boundaries_[i - 1];
    if (d.rows() != ranks_[i - 1] || d.cols() != ranks_[i])
      throw std::invalid_argument("boundary " + std::to_string(i) + " has the wrong shape");
  }
  for (std::size_t i = 2; i < ranks_.size(); ++i) {
    if (!(boundaries_[i - 2] * boundaries_[i - 1]).is_zero())
      throw std::invalid_argument("boundary " + std::to_string(i - 1) + " after boundary " + std::to_string(i) +
                                  " is nonzero");
  }
}

MatrixZ ChainComplexZ::boundary(std::size_t i) const {
  if (i >= 1 && i < ranks_.size()) return boundaries_[i - 1];
  return MatrixZ(rank(i == 0 ? static_cast<std::size_t>(-1) : i - 1), rank(i));
}

long ChainComplexZ::euler_characteristic() const {
  long chi = 0;
  for (std::size_t i = 0; i < ranks_.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(ranks_[i]);
  return chi;
}

std::vector<AbelianGroup> homology(const ChainComplexZ& c) {
  const std::size_t n = c.top();
  std::vector<std::vector<Integer>> inv(n + 2);
  for (std::size_t i = 1; i <= n; ++i) inv[i] = smith_invariants(c.boundary(i));
  std::vector<AbelianGroup> out;
  for (std::size_t i = 0; i <= n; ++i) {
    AbelianGroup h;
    h.rank = c.rank(i) - snf_rank(inv[i]) - snf_rank(inv[i + 1]);
    for (const Integer& d : inv[i + 1])
      if (d > 1) h.torsion.push_back(d);
    out.push_back(std::move(h));
  }
  return out;
}

MatrixZ ChainMapZ::component(std::size_t i, std::size_t rows, std::size_t cols) const {
  if (i < components.size()) {
    const MatrixZ& m = components[i];
    if (m.rows() != rows || m.cols() != cols)
      throw std::invalid_argument("chain map component " + std::to_string(i) + " has the wrong shape");
    return m;
  }
  return MatrixZ(rows, cols);
}

void check_chain_map(const ChainComplexZ& a, const ChainComplexZ& b, const ChainMapZ& f) {
  const std::size_t n = std::max(a.top(), b.top());
  for (std::size_t i = 1; i <= n; ++i) {
    const MatrixZ fi = f.component(i, b.rank(i), a.rank(i));
    const MatrixZ fprev = f.component(i - 1, b.rank(i - 1), a.rank(i - 1));
    if (!(b.boundary(i) * fi == fprev * a.boundary(i)))
      throw std::invalid_argument("map does not commute with the boundary in degree " + std::to_string(i));
  }
}

ChainComplexZ homotopy_pushout(const ChainComplexZ& a, const ChainComplexZ& b, const ChainComplexZ& c,
                               const ChainMapZ& f, const ChainMapZ& g) {
  check_chain_map(a, b, f);
  check_chain_map(a, c, g);
  const std::size_t top = std::max({b.top(), c.top(), a.top() + 1});
  std::vector<std::size_t> ranks;
  for (std::size_t n = 0; n <= top; ++n) ranks.push_back(b.rank(n) + c.rank(n) + (n ? a.rank(n - 1) : 0));
  std::vector<MatrixZ> bounds;
  for (std::size_t n = 1; n <= top; ++n) {
    MatrixZ d(ranks[n - 1], ranks[n]);
    const std::size_t rb = b.rank(n), rc = c.rank(n), ra = a.rank(n - 1);
    const std::size_t sb = b.rank(n - 1), sc = c.rank(n - 1);
    const MatrixZ db = b.boundary(n), dc = c.boundary(n);
    const MatrixZ fa = f.component(n - 1, sb, ra), ga = g.component(n - 1, sc, ra);
    for (std::size_t i = 0; i < sb; ++i)
      for (std::size_t j = 0; j < rb; ++j) d(i, j) = db(i, j);
    for (std::size_t i = 0; i < sc; ++i)
      for (std::size_t j = 0; j < rc; ++j) d(sb + i, rb + j) = dc(i, j);
    for (std::size_t j = 0; j < ra; ++j) {
      for (std::size_t i = 0; i < sb; ++i) d(i, rb + rc + j) = fa(i, j);
      for (std::size_t i = 0; i < sc; ++i) d(sb + i, rb + rc + j) = -ga(i, j);
    }
    if (n >= 2) {
      const MatrixZ da = a.boundary(n - 1);
      for (std::size_t i = 0; i < a.rank(n - 2); ++i)
        for (std::size_t j = 0; j < ra; ++j) d(sb + sc + i, rb + rc + j) = -da(i, j);
    }
    bounds.push_back(std::move(d));
  }
  return ChainComplexZ(std::move(ranks), std::move(bounds));
}

ChainComplexZ elementary_expansion(const ChainComplexZ& c, std::size_t k) {
  std::vector<std::size_t> ranks = c.ranks();
  while (ranks.size() < k + 2) ranks.push_back(0);
  std::vector<std::size_t> grown = ranks;
  ++grown[k];
  ++grown[k + 1];
  std::vector<MatrixZ> bounds;
  for (std::size_t i = 1; i < grown.size(); ++i) {
    MatrixZ d(grown[i - 1], grown[i]);
    const MatrixZ old = c.boundary(i);
    for (std::size_t r = 0; r < old.rows(); ++r)
      for (std::size_t s = 0; s < old.cols(); ++s) d(r, s) = old(r, s);
    // The new cells sit last in their degrees.
    if (i == k + 1) d(grown[k] - 1, grown[k + 1] - 1) = 1;
    bounds.push_back(std::move(d));
  }
  return ChainComplexZ(std::move(grown), std::move(bounds));
}

// ---------------------------------------------------------------------------

namespace {

MatrixZ block_diagonal(const MatrixZ& a, const MatrixZ& b) {
  MatrixZ out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

// Integer solution of k * y = x for k of full column rank.
std::vector<Integer> solve_lattice(const SmithForm& s, std::size_t cols, const std::vector<Integer>& x) {
  std::vector<Integer> ux(s.u.rows());
  for (std::size_t i = 0; i < s.u.rows(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) ux[i] += s.u(i, j) * x[j];
  std::vector<Integer> z(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    if (!mpz_divisible_p(ux[j].get_mpz_t(), s.d(j, j).get_mpz_t()))
      throw std::invalid_argument("relation is not in the kernel lattice");
    mpz_divexact(z[j].get_mpz_t(), ux[j].get_mpz_t(), s.d(j, j).get_mpz_t());
  }
  for (std::size_t i = cols; i < ux.size(); ++i)
    if (sgn(ux[i]) != 0) throw std::invalid_argument("relation is not in the kernel lattice");
  std::vector<Integer> y(cols);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < cols; ++j) y[i] += s.v(i, j) * z[j];
  return y;
}

struct DegreeParts {
  AbelianGroup cokernel;
  AbelianGroup kernel;
};

DegreeParts solve_degree(const MayerVietorisDegree& deg, std::size_t index) {
  const std::string where = " in degree " + std::to_string(index);
  const std::size_t ka = generator_count(deg.intersection);
  const std::size_t kb = generator_count(deg.first) + generator_count(deg.second);
  if (deg.phi.rows() != kb || deg.phi.cols() != ka) throw std::invalid_argument("map has the wrong shape" + where);

  const MatrixZ ra = relation_matrix(deg.intersection);
  const MatrixZ rb = block_diagonal(relation_matrix(deg.first), relation_matrix(deg.second));

  // Torsion relations of the source must map into the target's relations.
  std::vector<Integer> modulus(kb);  // 0 for free coordinates
  for (std::size_t j = 0; j < deg.first.torsion.size(); ++j) modulus[deg.first.rank + j] = deg.first.torsion[j];
  const std::size_t off = generator_count(deg.first);
  for (std::size_t j = 0; j < deg.second.torsion.size(); ++j) modulus[off + deg.second.rank + j] = deg.second.torsion[j];
  const MatrixZ image = deg.phi * ra;
  for (std::size_t j = 0; j < image.cols(); ++j)
    for (std::size_t i = 0; i < kb; ++i) {
      const bool ok = sgn(modulus[i]) == 0 ? sgn(image(i, j)) == 0
                                           : mpz_divisible_p(image(i, j).get_mpz_t(), modulus[i].get_mpz_t()) != 0;
      if (!ok) throw std::invalid_argument("map is not well defined on torsion" + where);
    }

  DegreeParts out;
  const MatrixZ m = hconcat(deg.phi, rb);
  out.cokernel = cokernel(m);

  // ker phi = {x : phi x in im rb} / im ra.
  const SmithForm s = smith_normal_form(m);
  std::size_t r = 0;
  while (r < std::min(m.rows(), m.cols()) && sgn(s.d(r, r)) != 0) ++r;
  const std::size_t dim = m.cols() - r;
  MatrixZ lattice(ka, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < ka; ++i) lattice(i, j) = s.v(i, r + j);
  if (dim == 0) return out;
  const SmithForm ls = smith_normal_form(lattice);
  MatrixZ rel(dim, ra.cols());
  for (std::size_t j = 0; j < ra.cols(); ++j) {
    std::vector<Integer> x(ka);
    for (std::size_t i = 0; i < ka; ++i) x[i] = ra(i, j);
    const std::vector<Integer> y = solve_lattice(ls, dim, x);
    for (std::size_t i = 0; i < dim; ++i) rel(i, j) = y[i];
  }
  out.kernel = cokernel(rel);
  return out;
}

bool ext_may_vanish(const AbelianGroup& kernel, const AbelianGroup& coker) {
  // Ext(Z/n, C) = C/nC.
  for (const Integer& n : kernel.torsion) {
    if (coker.rank > 0) return false;
    for (const Integer& c : coker.torsion) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), c.get_mpz_t());
      if (g > 1) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<MayerVietorisResult> mayer_vietoris_solve(const std::vector<MayerVietorisDegree>& degrees) {
  std::vector<DegreeParts> parts;
  for (std::size_t i = 0; i < degrees.size(); ++i) parts.push_back(solve_degree(degrees[i], i));
  std::vector<MayerVietorisResult> out;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    MayerVietorisResult r;
    r.cokernel_part = parts[i].cokernel;
    if (i > 0) r.kernel_part = parts[i - 1].kernel;
    if (ext_may_vanish(r.kernel_part, r.cokernel_part)) r.group = direct_sum(r.cokernel_part, r.kernel_part);
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Presentations

void GroupPresentation::validate() const {
  const int n = static_cast<int>(generators.size());
  for (const Word& w : relators)
    for (int x : w)
      if (x == 0 || x > n || x < -n) throw std::invalid_argument("relator letter out of range");
}

Word parse_word(const std::string& text, const std::vector<std::string>& generators) {
  Word out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
  };
  skip();
  if (text.substr(i) == "1") return out;
  while (i < text.size()) {
    const std::size_t start = i;
    if (!std::isalpha(static_cast<unsigned char>(text[i]))) throw std::invalid_argument("bad word '" + text + "'");
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    const std::string name = text.substr(start, i - start);
    auto it = std::find(generators.begin(), generators.end(), name);
    if (it == generators.end()) throw std::invalid_argument("unknown generator '" + name + "'");
    const int letter = static_cast<int>(it - generators.begin()) + 1;
    long power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const std::size_t ps = i;
      if (i < text.size() && text[i] == '-') ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == ps || text.substr(ps, i - ps) == "-") throw std::invalid_argument("bad exponent in '" + text + "'");
      power = std::stol(text.substr(ps, i - ps));
    }
    for (long k = 0; k < std::labs(power); ++k) out.push_back(power < 0 ? -letter : letter);
    skip();
  }
  return free_reduce(out);
}

std::string format_word(const Word& w, const std::vector<std::string>& generators) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long run = static_cast<long>(j - i);
    if (!out.empty()) out += ' ';
    out += generators.at(static_cast<std::size_t>(std::abs(w[i])) - 1);
    const long power = w[i] < 0 ? -run : run;
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t a = 0, b = r.size();
  while (b - a >= 2 && r[a] == -r[b - 1]) {
    ++a;
    --b;
  }
  return Word(r.begin() + static_cast<long>(a), r.begin() + static_cast<long>(b));
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

namespace {

MatrixZ exponent_sums(const GroupPresentation& g) {
  MatrixZ m(g.generators.size(), g.relators.size());
  for (std::size_t j = 0; j < g.relators.size(); ++j)
    for (int x : g.relators[j]) m(static_cast<std::size_t>(std::abs(x)) - 1, j) += x > 0 ? 1 : -1;
  return m;
}

}  // namespace

AbelianGroup abelianization(const GroupPresentation& g) {
  g.validate();
  return cokernel(exponent_sums(g));
}

ChainComplexZ presentation_complex(const GroupPresentation& g) {
  g.validate();
  return ChainComplexZ({1, g.generators.size(), g.relators.size()},
                       {MatrixZ(1, g.generators.size()), exponent_sums(g)});
}

// ---------------------------------------------------------------------------
// Tietze search

std::string TietzeStep::to_string(const std::vector<std::string>& generators) const {
  std::ostringstream os;
  switch (kind) {
    case Kind::cyclic_reduce:
      os << "cyclic_reduce r" << relator;
      break;
    case Kind::delete_empty:
      os << "delete_empty r" << relator;
      break;
    case Kind::eliminate:
      os << "eliminate " << generators.at(generator) << " using r" << relator;
      break;
    case Kind::multiply:
      os << "multiply r" << relator << " by " << (invert ? "inverse of " : "") << "r" << source << " rotated "
         << rotation;
      break;
  }
  return os.str();
}

namespace {

struct SearchState {
  std::vector<bool> active;
  std::vector<Word> relators;

  bool trivial() const {
    return relators.empty() && std::none_of(active.begin(), active.end(), [](bool a) { return a; });
  }
};

std::size_t occurrences(const Word& w, std::size_t gen) {
  const int letter = static_cast<int>(gen) + 1;
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [&](int x) { return std::abs(x) == letter; }));
}

Word substitute_generator(const Word& w, int letter, const Word& value) {
  Word out;
  const Word inv = inverse(value);
  for (int x : w) {
    if (x == letter)
      out.insert(out.end(), value.begin(), value.end());
    else if (x == -letter)
      out.insert(out.end(), inv.begin(), inv.end());
    else
      out.push_back(x);
  }
  return free_reduce(out);
}

void eliminate(SearchState& s, std::size_t gen, std::size_t rel) {
  const int letter = static_cast<int>(gen) + 1;
  const Word& r = s.relators[rel];
  const auto pos = static_cast<std::size_t>(
      std::find_if(r.begin(), r.end(), [&](int x) { return std::abs(x) == letter; }) - r.begin());
  const Word u(r.begin(), r.begin() + static_cast<long>(pos));
  const Word v(r.begin() + static_cast<long>(pos) + 1, r.end());
  Word value;
  if (r[pos] > 0) {
    value = inverse(u);
    const Word vi = inverse(v);
    value.insert(value.end(), vi.begin(), vi.end());
  } else {
    value = v;
    value.insert(value.end(), u.begin(), u.end());
  }
  value = free_reduce(value);
  s.relators.erase(s.relators.begin() + static_cast<long>(rel));
  for (Word& w : s.relators) w = substitute_generator(w, letter, value);
  s.active[gen] = false;
}

Word multiplied(const Word& target, const Word& source, std::size_t rotation, bool invert) {
  Word rot(source.begin() + static_cast<long>(rotation), source.end());
  rot.insert(rot.end(), source.begin(), source.begin() + static_cast<long>(rotation));
  if (invert) rot = inverse(rot);
  Word out = target;
  out.insert(out.end(), rot.begin(), rot.end());
  return free_reduce(out);
}

}  // namespace

TietzeResult tietze_trivialize(const GroupPresentation& g, std::size_t budget) {
  g.validate();
  TietzeResult result;
  TietzeCertificate cert;
  cert.start = g;
  SearchState s{std::vector<bool>(g.generators.size(), true), g.relators};

  auto record = [&](TietzeStep step) {
    cert.steps.push_back(step);
    ++result.steps_used;
  };

  while (!s.trivial()) {
    if (result.steps_used >= budget) return result;

    bool moved = false;
    for (std::size_t i = 0; i < s.relators.size() && !moved; ++i) {
      Word c = cyclic_reduce(s.relators[i]);
      if (c != s.relators[i]) {
        s.relators[i] = std::move(c);
        record({TietzeStep::Kind::cyclic_reduce, i});
        moved = true;
      }
    }
    if (moved) continue;

    for (std::size_t i = 0; i < s.relators.size() && !moved; ++i) {
      if (s.relators[i].empty()) {
        s.relators.erase(s.relators.begin() + static_cast<long>(i));
        record({TietzeStep::Kind::delete_empty, i});
        moved = true;
      }
    }
    if (moved) continue;

    // Shortest relator in which some generator occurs exactly once.
    std::optional<std::pair<std::size_t, std::size_t>> pick;
    for (std::size_t i = 0; i < s.relators.size(); ++i)
      for (std::size_t gen = 0; gen < s.active.size(); ++gen) {
        if (!s.active[gen] || occurrences(s.relators[i], gen) != 1) continue;
        if (!pick || s.relators[i].size() < s.relators[pick->first].size()) pick = {{i, gen}};
      }
    if (pick) {
      eliminate(s, pick->second, pick->first);
      TietzeStep step{TietzeStep::Kind::eliminate, pick->first};
      step.generator = pick->second;
      record(step);
      continue;
    }

    // Otherwise the multiplication that shortens a relator the most.
    std::optional<TietzeStep> best;
    std::size_t best_len = 0;
    for (std::size_t t = 0; t < s.relators.size(); ++t)
      for (std::size_t src = 0; src < s.relators.size(); ++src) {
        if (t == src) continue;
        for (std::size_t rot = 0; rot < s.relators[src].size(); ++rot)
          for (bool inv : {false, true}) {
            const std::size_t len = cyclic_reduce(multiplied(s.relators[t], s.relators[src], rot, inv)).size();
            if (len < s.relators[t].size() && (!best || len < best_len)) {
              best = TietzeStep{TietzeStep::Kind::multiply, t, 0, src, rot, inv};
              best_len = len;
            }
          }
      }
    if (!best) return result;
    s.relators[best->relator] = multiplied(s.relators[best->relator], s.relators[best->source], best->rotation,
                                           best->invert);
    record(*best);
  }
  result.certificate = std::move(cert);
  return result;
}

}  // namespace godeaux

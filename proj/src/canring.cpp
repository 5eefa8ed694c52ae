#include "godeaux/canring.hpp"

#include "godeaux/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace godeaux {

namespace {

using MonomialIndex = std::unordered_map<Monomial, std::size_t, MonomialHash>;

MonomialIndex index_of(const std::vector<Monomial>& monos) {
  MonomialIndex idx;
  idx.reserve(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], i);
  return idx;
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(1 / p.leading_term().coeff);
}

Poly poly_from_sparse(const RingPtr& ring, const std::vector<Monomial>& monos, const SparseVectorQ& v) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& [i, c] : v) terms.push_back({monos.at(i), c});
  return Poly::from_terms(ring, std::move(terms));
}

RingPtr generator_ring(const std::string& prefix, const std::vector<int>& weights) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < weights.size(); ++i) names.push_back(prefix + std::to_string(i + 1));
  return make_ring(std::move(names), weights);
}

// Kernel of the evaluation map from one degree of a source ring into S/f.
std::vector<SparseVectorQ> evaluation_kernel(const GradedCoordinates& target, const std::vector<Poly>& values) {
  MatrixQ a(target.dimension(), values.size());
  for (std::size_t j = 0; j < values.size(); ++j)
    for (const auto& [i, c] : target.sparse_coordinates(values[j])) a(i, j) = c;
  std::vector<SparseVectorQ> out;
  for (const VectorQ& v : kernel_basis(a)) out.push_back(to_sparse(v));
  return out;
}

}  // namespace

std::string to_string(BaseLocusVerdict v) {
  switch (v) {
    case BaseLocusVerdict::empty:
      return "EMPTY";
    case BaseLocusVerdict::nonempty:
      return "NONEMPTY";
    case BaseLocusVerdict::undecided:
      break;
  }
  return "UNDECIDED";
}

bool PaperGeneratorCheck::ok() const {
  for (const Entry& e : entries) {
    if (!e.homogeneous || !e.member) return false;
    if (e.expected_degree && e.degree != e.expected_degree) return false;
  }
  return ungenerated_degrees.empty();
}

bool TricanonicalReport::ok() const {
  if (kernel_dimensions.size() != 9) return false;
  for (std::size_t k = 0; k + 1 < kernel_dimensions.size(); ++k)
    if (kernel_dimensions[k] != 0) return false;
  return kernel_dimensions.back() == 1 && form && assignment && reference_vanishes;
}

std::optional<Rational> proportionality(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero() || p.term_count() != q.term_count()) return std::nullopt;
  const Rational c = p.leading_term().coeff / q.leading_term().coeff;
  if (p == q.scaled(c)) return c;
  return std::nullopt;
}

std::vector<std::vector<Poly>> evaluate_monomials(const QuotientRing& q, const RingPtr& source,
                                                  const std::vector<Poly>& images, int max_degree, unsigned jobs) {
  if (images.size() != source->size()) throw std::invalid_argument("one image per source variable required");
  std::vector<std::vector<Poly>> values;
  std::vector<MonomialIndex> indices;
  for (int k = 0; k <= max_degree; ++k) {
    const std::vector<Monomial> monos = monomial_basis(*source, k);
    std::vector<Poly> out(monos.size(), Poly(q.ambient()));
    parallel_for(monos.size(), jobs, [&](std::size_t j) {
      const Monomial& mono = monos[j];
      if (k == 0) {
        out[j] = Poly::constant(q.ambient(), 1);
        return;
      }
      std::size_t var = 0;
      while (mono[var] == 0) ++var;
      const Monomial rest = mono.quotient(Monomial::unit(mono.size(), var));
      const int prev = k - source->weight(var);
      out[j] = q.multiply(images[var], values[prev][indices[prev].at(rest)]);
    });
    values.push_back(std::move(out));
    indices.push_back(index_of(monos));
  }
  return values;
}

// ---------------------------------------------------------------------------

CanonicalRing::CanonicalRing(Instance instance, unsigned jobs)
    : instance_(std::move(instance)),
      quotient_(instance_.ring, instance_.modulus),
      residue_(instance_.ring, instance_.residue_images),
      tau_(instance_.tau_u, instance_.tau_v),
      jobs_(std::max(1U, jobs)) {}

const GradedCoordinates& CanonicalRing::coordinates(int d) const {
  std::lock_guard lock(cache_mutex_);
  auto& slot = coords_[d];
  if (!slot) slot = std::make_unique<GradedCoordinates>(quotient_, d);
  return *slot;
}

bool CanonicalRing::in_canonical_ring(const Poly& p) const {
  if (!p.is_homogeneous()) return false;
  const Poly nf = quotient_.normal_form(p);
  const int d = p.degree().value_or(0);
  return tau_.contains(residue_(nf, d));
}

const GradedPieceBasis& CanonicalRing::descend_space(int m) const {
  if (m < 0) throw std::invalid_argument("negative degree");
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = descend_.find(m); it != descend_.end()) return *it->second;
  }
  const GradedCoordinates& coords = coordinates(m);
  auto piece = std::make_unique<GradedPieceBasis>();
  piece->degree = m;
  piece->monomials = coords.basis();

  RowSpace target(2 * static_cast<std::size_t>(m + 1));
  for (const CurveElement& e : tau_.basis(m)) target.insert(to_sparse(e.coordinates()));
  MatrixQ a(target.length(), coords.dimension());
  for (std::size_t j = 0; j < coords.dimension(); ++j) {
    const SparseVectorQ r = target.reduce(to_sparse(residue_.of_monomial(coords.basis()[j]).coordinates()));
    for (const auto& [i, c] : r) a(i, j) = c;
  }
  piece->vectors = kernel_basis(a);

  std::lock_guard lock(cache_mutex_);
  auto [it, inserted] = descend_.emplace(m, std::move(piece));
  return *it->second;
}

std::vector<Poly> CanonicalRing::descend_polys(int m) const {
  const GradedPieceBasis& piece = descend_space(m);
  const GradedCoordinates& coords = coordinates(m);
  std::vector<Poly> out;
  for (const VectorQ& v : piece.vectors) out.push_back(coords.to_poly(v));
  return out;
}

namespace {

// Span of g * R(X)_{m - deg g} over generators of degree <= m - 2.
RowSpace product_span(const CanonicalRing& cr, const std::vector<Poly>& gens, const std::vector<int>& degrees, int m) {
  const GradedCoordinates& coords = cr.coordinates(m);
  std::vector<std::pair<std::size_t, Poly>> pairs;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (degrees[i] > m - 2) continue;
    for (Poly& b : cr.descend_polys(m - degrees[i])) pairs.emplace_back(i, std::move(b));
  }
  std::vector<SparseVectorQ> vecs(pairs.size());
  parallel_for(pairs.size(), cr.jobs(), [&](std::size_t j) {
    vecs[j] = coords.sparse_coordinates(cr.quotient().multiply(gens[pairs[j].first], pairs[j].second));
  });
  RowSpace span(coords.dimension());
  for (const SparseVectorQ& v : vecs) span.insert(v);
  return span;
}

}  // namespace

MinimalGenerators CanonicalRing::minimal_generators(int max_degree) const {
  MinimalGenerators out;
  out.set.source = GeneratorSet::Source::computed_complement;
  for (int m = 2; m <= max_degree; ++m) {
    const GradedPieceBasis& piece = descend_space(m);
    const GradedCoordinates& coords = coordinates(m);
    RowSpace span = product_span(*this, out.set.generators, out.set.degrees, m);
    out.product_codimension[m] = piece.dimension() - span.rank();
    for (const VectorQ& v : piece.vectors) {
      SparseVectorQ r = span.reduce(to_sparse(v));
      if (r.empty()) continue;
      span.insert(r);
      out.set.generators.push_back(monic(coords.to_poly(r)));
      out.set.degrees.push_back(m);
    }
  }
  return out;
}

GeneratorSet CanonicalRing::paper_generators() const {
  GeneratorSet set;
  set.source = GeneratorSet::Source::paper_list;
  for (const Poly& g : instance_.generators) {
    if (g.is_zero() || !g.is_homogeneous()) throw std::invalid_argument("generator " + format_poly(g) + " is not homogeneous");
    set.generators.push_back(quotient_.normal_form(g));
    set.degrees.push_back(*g.degree());
  }
  return set;
}

PaperGeneratorCheck CanonicalRing::verify_paper_generators(int max_degree) const {
  PaperGeneratorCheck check;
  check.max_degree = max_degree;
  std::vector<Poly> members;
  std::vector<int> member_degrees;
  for (std::size_t i = 0; i < instance_.generators.size(); ++i) {
    const Poly& g = instance_.generators[i];
    PaperGeneratorCheck::Entry e;
    e.text = format_poly(g);
    e.homogeneous = !g.is_zero() && g.is_homogeneous();
    if (!g.is_zero()) e.degree = *g.degree();
    const auto& expected = instance_.expected.generator_degrees;
    if (expected && i < expected->size()) e.expected_degree = (*expected)[i];
    e.member = e.homogeneous && in_canonical_ring(g);
    if (e.member) {
      members.push_back(quotient_.normal_form(g));
      member_degrees.push_back(*e.degree);
    }
    check.entries.push_back(std::move(e));
  }
  for (int m = 2; m <= max_degree; ++m) {
    RowSpace span = product_span(*this, members, member_degrees, m);
    const std::size_t lower = span.rank();
    for (std::size_t i = 0; i < members.size(); ++i)
      if (member_degrees[i] == m) span.insert(coordinates(m).sparse_coordinates(members[i]));
    if (span.rank() > lower) check.new_in_degree[m] = span.rank() - lower;
    if (span.rank() != descend_space(m).dimension()) check.ungenerated_degrees.push_back(m);
  }
  return check;
}

RelationSet CanonicalRing::relations(const GeneratorSet& g, int max_degree) const {
  RelationSet out;
  out.ring = generator_ring("T", g.degrees);
  out.max_degree = max_degree;
  const auto values = evaluate_monomials(quotient_, out.ring, g.generators, max_degree, jobs_);

  const std::size_t degrees = static_cast<std::size_t>(max_degree) + 1;
  std::vector<std::vector<Monomial>> monos(degrees);
  std::vector<MonomialIndex> index(degrees);
  for (std::size_t m = 0; m < degrees; ++m) {
    monos[m] = monomial_basis(*out.ring, static_cast<int>(m));
    index[m] = index_of(monos[m]);
  }
  std::vector<std::vector<SparseVectorQ>> kernel(degrees);
  parallel_for(degrees, jobs_, [&](std::size_t m) {
    kernel[m] = evaluation_kernel(coordinates(static_cast<int>(m)), values[m]);
  });

  std::vector<std::vector<SparseVectorQ>> minimal(degrees);
  parallel_for(degrees, jobs_, [&](std::size_t m) {
    RowSpace lower(monos[m].size());
    for (std::size_t i = 0; i < out.ring->size(); ++i) {
      const auto w = static_cast<std::size_t>(out.ring->weight(i));
      if (w > m) continue;
      const Monomial var = Monomial::unit(out.ring->size(), i);
      for (const SparseVectorQ& k : kernel[m - w]) {
        SparseVectorQ shifted;
        for (const auto& [j, c] : k) shifted.emplace_back(index[m].at(monos[m - w][j] * var), c);
        std::sort(shifted.begin(), shifted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        lower.insert(shifted);
      }
    }
    for (const SparseVectorQ& k : kernel[m]) {
      SparseVectorQ r = lower.reduce(k);
      if (r.empty()) continue;
      lower.insert(r);
      minimal[m].push_back(std::move(r));
    }
  });

  for (std::size_t m = 0; m < degrees; ++m) {
    out.kernel_dimension[static_cast<int>(m)] = kernel[m].size();
    if (!minimal[m].empty()) out.counts[static_cast<int>(m)] = minimal[m].size();
    for (const SparseVectorQ& r : minimal[m]) out.relations.push_back(monic(poly_from_sparse(out.ring, monos[m], r)));
  }
  return out;
}

std::vector<HilbertRow> CanonicalRing::hilbert_consistency(const RelationSet& rels, const SurfaceInvariants& inv) const {
  const std::size_t degrees = static_cast<std::size_t>(rels.max_degree) + 1;
  const WeightedRing& tring = *rels.ring;
  std::vector<std::vector<Monomial>> monos(degrees);
  std::vector<MonomialIndex> index(degrees);
  for (std::size_t m = 0; m < degrees; ++m) {
    monos[m] = monomial_basis(tring, static_cast<int>(m));
    index[m] = index_of(monos[m]);
  }
  auto coords = [&](const Poly& p, std::size_t m) {
    SparseVectorQ v;
    for (const Term& t : p.terms()) v.emplace_back(index[m].at(t.mono), t.coeff);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  };

  // Degree slices of the ideal generated by the relations alone.
  std::vector<RowSpace> ideal;
  std::vector<HilbertRow> rows;
  for (std::size_t m = 0; m < degrees; ++m) {
    RowSpace slice(monos[m].size());
    for (const Poly& r : rels.relations)
      if (r.degree() == static_cast<int>(m)) slice.insert(coords(r, m));
    for (std::size_t i = 0; i < tring.size(); ++i) {
      const auto w = static_cast<std::size_t>(tring.weight(i));
      if (w > m) continue;
      const Monomial var = Monomial::unit(tring.size(), i);
      for (const SparseVectorQ& b : ideal[m - w].basis()) {
        SparseVectorQ shifted;
        for (const auto& [j, c] : b) shifted.emplace_back(index[m].at(monos[m - w][j] * var), c);
        std::sort(shifted.begin(), shifted.end(), [](const auto& a, const auto& b2) { return a.first < b2.first; });
        slice.insert(shifted);
      }
    }
    HilbertRow row;
    row.m = static_cast<int>(m);
    row.descend = static_cast<long>(descend_space(row.m).dimension());
    row.riemann_roch = inv.plurigenus(row.m);
    row.presentation = static_cast<long>(monos[m].size() - slice.rank());
    rows.push_back(row);
    ideal.push_back(std::move(slice));
  }
  return rows;
}

// ---------------------------------------------------------------------------

BaseLocusReport CanonicalRing::base_locus(int m) const { return base_locus(m, instance_.base_locus_bound); }

BaseLocusReport CanonicalRing::base_locus(int m, int degree_bound) const {
  if (m < 2) throw std::invalid_argument("base locus requires m >= 2");
  BaseLocusReport report;
  report.m = m;
  report.degree_bound = degree_bound;
  const std::vector<Poly> gens = descend_polys(m);
  report.generator_count = gens.size();

  const WeightedRing& ring = *quotient_.ambient();
  const std::size_t nvars = ring.size();
  std::vector<bool> found(nvars, false);
  std::map<int, RowSpace> slices;
  for (int d = m; d <= degree_bound; ++d) {
    const GradedCoordinates& coords = coordinates(d);
    RowSpace slice(coords.dimension());
    if (d == m)
      for (const Poly& g : gens) slice.insert(coords.sparse_coordinates(g));
    std::vector<std::pair<std::size_t, Poly>> lifts;
    for (std::size_t v = 0; v < nvars; ++v) {
      auto it = slices.find(d - ring.weight(v));
      if (it == slices.end()) continue;
      const GradedCoordinates& lower = coordinates(d - ring.weight(v));
      for (const SparseVectorQ& b : it->second.basis()) lifts.emplace_back(v, lower.to_poly(b));
    }
    std::vector<SparseVectorQ> vecs(lifts.size());
    parallel_for(lifts.size(), jobs_, [&](std::size_t j) {
      const Poly var = Poly::variable(quotient_.ambient(), lifts[j].first);
      vecs[j] = coords.sparse_coordinates(quotient_.multiply(var, lifts[j].second));
    });
    for (const SparseVectorQ& v : vecs) {
      if (slice.full()) break;
      slice.insert(v);
    }
    report.codimension.emplace_back(d, slice.length() - slice.rank());

    for (std::size_t v = 0; v < nvars; ++v) {
      if (found[v] || d % ring.weight(v) != 0) continue;
      const auto e = static_cast<unsigned>(d / ring.weight(v));
      const Poly power = quotient_.normal_form(Poly::variable(quotient_.ambient(), v).pow(e));
      if (slice.contains(coords.sparse_coordinates(power))) {
        found[v] = true;
        report.powers.push_back({v, e, d});
      }
    }
    slices.emplace(d, std::move(slice));
    slices.erase(d - 4);
    if (std::all_of(found.begin(), found.end(), [](bool b) { return b; })) {
      report.verdict = BaseLocusVerdict::empty;
      return report;
    }
  }

  auto wit = instance_.witnesses.find(m);
  if (instance_.witness_field && wit != instance_.witnesses.end() && !wit->second.empty()) {
    const QuadraticField& field = *instance_.witness_field;
    bool all = true;
    for (const auto& point : wit->second) {
      bool nonzero = std::any_of(point.begin(), point.end(), [](const auto& x) { return !x.is_zero(); });
      bool vanish = nonzero && field.evaluate(quotient_.modulus(), point).is_zero();
      for (const Poly& g : gens) vanish = vanish && field.evaluate(g, point).is_zero();
      all = all && vanish;
      ++report.witnesses_checked;
    }
    report.witnesses_vanish = all;
    if (all) report.verdict = BaseLocusVerdict::nonempty;
  }
  return report;
}

bool replay_power_certificate(const QuotientRing& q, const std::vector<Poly>& generators, const PowerCertificate& cert) {
  const RingPtr& ring = q.ambient();
  if (cert.variable >= ring->size() || cert.exponent == 0) return false;
  if (static_cast<int>(cert.exponent) * ring->weight(cert.variable) != cert.degree) return false;
  const GradedCoordinates coords(q, cert.degree);
  std::vector<VectorQ> columns;
  for (const Poly& g : generators) {
    const int rest = cert.degree - *g.degree();
    if (rest < 0) continue;
    for (const Monomial& mono : monomial_basis(*ring, rest))
      columns.push_back(coords.coordinates(q.normal_form(g.times_term(mono, 1))));
  }
  const Poly power = q.normal_form(Poly::variable(ring, cert.variable).pow(cert.exponent));
  return membership(coords.coordinates(power), columns).has_value();
}

// ---------------------------------------------------------------------------

TricanonicalReport CanonicalRing::tricanonical_form() const {
  TricanonicalReport report;
  std::vector<Poly> cubics;
  for (const Poly& g : instance_.generators)
    if (!g.is_zero() && g.is_homogeneous() && g.degree() == 3) cubics.push_back(quotient_.normal_form(g));
  if (cubics.size() != 4) throw std::invalid_argument("the instance must list exactly four degree-3 generators");

  const RingPtr zring = instance_.tricanonical_ring ? instance_.tricanonical_ring
                                                    : make_ring({"z0", "z1", "z2", "z3"}, {1, 1, 1, 1});
  if (zring->size() != 4) throw std::invalid_argument("the tricanonical ring needs four variables");
  constexpr int top = 9;
  const auto values = evaluate_monomials(quotient_, zring, cubics, top, jobs_);

  std::vector<std::vector<SparseVectorQ>> kernels(top + 1);
  parallel_for(top, jobs_, [&](std::size_t j) {
    const int k = static_cast<int>(j) + 1;
    kernels[k] = evaluation_kernel(coordinates(3 * k), values[k]);
  });
  for (int k = 1; k <= top; ++k) report.kernel_dimensions.push_back(kernels[k].size());
  if (kernels[top].size() == 1) report.form = monic(poly_from_sparse(zring, monomial_basis(*zring, top), kernels[top][0]));

  std::array<int, 4> sigma{0, 1, 2, 3};
  if (report.form && instance_.tricanonical_form) {
    const Poly& reference = *instance_.tricanonical_form;
    do {
      std::vector<Poly> images(4, Poly(zring));
      for (int j = 0; j < 4; ++j) images[sigma[j]] = Poly::variable(zring, j);
      const Poly permuted = substitute(*report.form, images, zring);
      if (auto c = proportionality(reference, permuted)) {
        report.assignment = sigma;
        report.scale = *c;
        break;
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  if (instance_.tricanonical_form) {
    const std::array<int, 4> a = report.assignment.value_or(std::array<int, 4>{0, 1, 2, 3});
    std::vector<Poly> images;
    for (int j = 0; j < 4; ++j) images.push_back(cubics[a[j]]);
    report.reference_vanishes =
        quotient_.normal_form(substitute(*instance_.tricanonical_form, images, quotient_.ambient())).is_zero();
  }
  return report;
}

FourCanonicalReport CanonicalRing::fourcanonical_degree(int d_max) const {
  FourCanonicalReport report;
  const std::vector<Poly> quartics = descend_polys(4);
  const RingPtr qring = generator_ring("q", std::vector<int>(quartics.size(), 1));
  const auto values = evaluate_monomials(quotient_, qring, quartics, d_max, jobs_);
  report.h.resize(static_cast<std::size_t>(d_max) + 1);
  parallel_for(report.h.size(), jobs_, [&](std::size_t d) {
    const GradedCoordinates& coords = coordinates(4 * static_cast<int>(d));
    RowSpace span(coords.dimension());
    for (const Poly& p : values[d]) {
      if (span.full()) break;
      span.insert(coords.sparse_coordinates(p));
    }
    report.h[d] = span.rank();
  });
  for (int d = 3; d <= d_max; ++d) {
    const auto h = [&](int i) { return static_cast<long>(report.h[i]); };
    report.second_differences[d] = h(d) - 2 * h(d - 1) + h(d - 2);
  }
  return report;
}

}  // namespace godeaux

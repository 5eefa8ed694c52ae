#pragma once

#include "godeaux/instance.hpp"
#include "godeaux/linalg.hpp"
#include "godeaux/quotient.hpp"
#include "godeaux/residue.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace godeaux {

/// Basis of a graded piece of R(X) as coordinate vectors over
/// degree_basis(degree) of S/f.
struct GradedPieceBasis {
  int degree = 0;
  std::vector<Monomial> monomials;
  std::vector<VectorQ> vectors;

  std::size_t dimension() const { return vectors.size(); }
};

struct GeneratorSet {
  enum class Source { computed_complement, paper_list };

  Source source = Source::computed_complement;
  std::vector<Poly> generators;
  std::vector<int> degrees;
};

struct MinimalGenerators {
  GeneratorSet set;
  /// dim R(X)_m minus the dimension of the span of products of lower
  /// generators, for m = 2..max_degree.
  std::map<int, std::size_t> product_codimension;
};

struct PaperGeneratorCheck {
  struct Entry {
    std::string text;
    std::optional<int> degree;
    std::optional<int> expected_degree;
    bool homogeneous = false;
    bool member = false;
  };
  std::vector<Entry> entries;
  int max_degree = 0;
  /// Degrees m where the listed polynomials fail to span R(X)_m.
  std::vector<int> ungenerated_degrees;
  /// Number of listed generators of degree m independent modulo products of
  /// lower-degree ones.
  std::map<int, std::size_t> new_in_degree;

  bool ok() const;
};

/// Minimal relations among generators T_1..T_n (weights = generator degrees).
struct RelationSet {
  RingPtr ring;
  std::vector<Poly> relations;
  int max_degree = 0;
  std::map<int, std::size_t> kernel_dimension;
  std::map<int, std::size_t> counts;

  std::size_t total() const { return relations.size(); }
};

struct HilbertRow {
  int m = 0;
  long descend = 0;
  long riemann_roch = 0;
  long presentation = 0;

  bool agree() const { return descend == riemann_roch && descend == presentation; }
};

enum class BaseLocusVerdict { empty, nonempty, undecided };

std::string to_string(BaseLocusVerdict v);

struct PowerCertificate {
  std::size_t variable = 0;
  unsigned exponent = 0;
  int degree = 0;
};

struct BaseLocusReport {
  int m = 0;
  BaseLocusVerdict verdict = BaseLocusVerdict::undecided;
  int degree_bound = 0;
  std::size_t generator_count = 0;
  /// Codimension of the ideal inside (S/f)_d for d = m..degree reached.
  std::vector<std::pair<int, std::size_t>> codimension;
  std::vector<PowerCertificate> powers;
  std::size_t witnesses_checked = 0;
  bool witnesses_vanish = false;
};

struct TricanonicalReport {
  /// Kernel dimension of Sym^k(z0..z3) -> (S/f)_{3k} for k = 1..9.
  std::vector<std::size_t> kernel_dimensions;
  std::optional<Poly> form;
  /// assignment[i] = index of the degree-3 generator that z_i maps to.
  std::optional<std::array<int, 4>> assignment;
  std::optional<Rational> scale;
  bool reference_vanishes = false;

  bool ok() const;
};

struct FourCanonicalReport {
  std::vector<std::size_t> h;
  std::map<int, long> second_differences;
};

/// The canonical ring R(X) as the subring of S/f cut out by the residue
/// condition, with every computation of its presentation.
class CanonicalRing {
 public:
  explicit CanonicalRing(Instance instance, unsigned jobs = 1);

  const Instance& instance() const { return instance_; }
  const QuotientRing& quotient() const { return quotient_; }
  const ResidueMap& residue() const { return residue_; }
  const TauSubring& tau() const { return tau_; }
  unsigned jobs() const { return jobs_; }

  const GradedCoordinates& coordinates(int d) const;

  bool in_canonical_ring(const Poly& p) const;

  /// Cached; thread-safe.
  const GradedPieceBasis& descend_space(int m) const;
  std::vector<Poly> descend_polys(int m) const;

  MinimalGenerators minimal_generators(int max_degree) const;
  PaperGeneratorCheck verify_paper_generators(int max_degree) const;
  GeneratorSet paper_generators() const;

  RelationSet relations(const GeneratorSet& g, int max_degree) const;
  std::vector<HilbertRow> hilbert_consistency(const RelationSet& rels, const SurfaceInvariants& inv) const;

  BaseLocusReport base_locus(int m) const;
  BaseLocusReport base_locus(int m, int degree_bound) const;

  TricanonicalReport tricanonical_form() const;
  FourCanonicalReport fourcanonical_degree(int d_max) const;

 private:
  Instance instance_;
  QuotientRing quotient_;
  ResidueMap residue_;
  TauSubring tau_;
  unsigned jobs_;

  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::unique_ptr<GradedCoordinates>> coords_;
  mutable std::map<int, std::unique_ptr<GradedPieceBasis>> descend_;
};

/// Normal forms of all monomials of degree <= max_degree of `source` under
/// the substitution variable_i -> images[i] in the quotient ring, grouped by
/// degree in monomial_basis order.
std::vector<std::vector<Poly>> evaluate_monomials(const QuotientRing& q, const RingPtr& source,
                                                  const std::vector<Poly>& images, int max_degree, unsigned jobs);

/// Checks a pure-power certificate by direct span computation: NF(x^e) lies
/// in the span of NF(mono * g) for generators g of the degree-m piece.
bool replay_power_certificate(const QuotientRing& q, const std::vector<Poly>& generators,
                              const PowerCertificate& cert);

/// True when p = c * q for some nonzero rational c; returns c.
std::optional<Rational> proportionality(const Poly& p, const Poly& q);

}  // namespace godeaux

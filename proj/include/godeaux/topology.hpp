#pragma once

#include "godeaux/linalg.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace godeaux {

/// Z^rank plus cyclic torsion factors t_1 | t_2 | ..., each t_i > 1.
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Group presented by the given relation matrix: Z^rows / (column span).
AbelianGroup cokernel(const MatrixZ& relations);

/// Free chain complex C_0 .. C_n; boundary(i) : C_i -> C_{i-1} for i >= 1
/// is a rank(i-1) x rank(i) matrix.
class ChainComplexZ {
 public:
  ChainComplexZ() : ranks_{0} {}
  /// Throws std::invalid_argument on shape mismatches or when some
  /// composite boundary is nonzero.
  ChainComplexZ(std::vector<std::size_t> ranks, std::vector<MatrixZ> boundaries);

  std::size_t top() const { return ranks_.size() - 1; }
  std::size_t rank(std::size_t i) const { return i < ranks_.size() ? ranks_[i] : 0; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  /// Zero matrix of the right shape outside 1..top.
  MatrixZ boundary(std::size_t i) const;
  long euler_characteristic() const;

 private:
  std::vector<std::size_t> ranks_;
  std::vector<MatrixZ> boundaries_;  // boundaries_[i - 1] = d_i
};

std::vector<AbelianGroup> homology(const ChainComplexZ& c);

/// Chain map f : A -> B; component(i) is rank_B(i) x rank_A(i).
struct ChainMapZ {
  std::vector<MatrixZ> components;

  MatrixZ component(std::size_t i, std::size_t rows, std::size_t cols) const;
};

/// Throws std::invalid_argument when f does not commute with boundaries.
void check_chain_map(const ChainComplexZ& a, const ChainComplexZ& b, const ChainMapZ& f);

/// Double mapping cylinder of B <- A -> C:
/// C_n = B_n + C_n + A_{n-1}, d(b, c, a) = (d b + f a, d c - g a, -d a).
ChainComplexZ homotopy_pushout(const ChainComplexZ& a, const ChainComplexZ& b, const ChainComplexZ& c,
                               const ChainMapZ& f, const ChainMapZ& g);

/// Elementary expansion: adds cells e in degree k and e' in degree k+1
/// with d e' = e (and d e = 0); homology is unchanged.
ChainComplexZ elementary_expansion(const ChainComplexZ& c, std::size_t k);

/// One degree of a Mayer-Vietoris sequence
///   H_i(A) --phi--> H_i(B1) + H_i(B2) --> H_i(X) --> H_{i-1}(A) --> ...
/// Groups are listed by generators: free generators first, then one per
/// torsion factor. phi acts on these generators.
struct MayerVietorisDegree {
  AbelianGroup intersection;
  AbelianGroup first;
  AbelianGroup second;
  MatrixZ phi;  // (gens(first) + gens(second)) x gens(intersection)
};

struct MayerVietorisResult {
  std::optional<AbelianGroup> group;  ///< absent when ambiguous
  AbelianGroup cokernel_part;
  AbelianGroup kernel_part;

  bool ambiguous() const { return !group.has_value(); }
};

/// H_i(X) from 0 -> coker phi_i -> H_i(X) -> ker phi_{i-1} -> 0 for each
/// listed degree. The extension is marked ambiguous when Ext(ker, coker)
/// can be nonzero. Throws std::invalid_argument on inconsistent data.
std::vector<MayerVietorisResult> mayer_vietoris_solve(const std::vector<MayerVietorisDegree>& degrees);

/// Words are lists of nonzero integers: +k is generator k-1, -k its inverse.
using Word = std::vector<int>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// Throws std::invalid_argument for out-of-range letters.
  void validate() const;
};

/// Words like "beta alpha^-1 beta" or "b*a^-1*b"; "1" is the empty word.
Word parse_word(const std::string& text, const std::vector<std::string>& generators);
std::string format_word(const Word& w, const std::vector<std::string>& generators);

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);

AbelianGroup abelianization(const GroupPresentation& g);

/// One 0-cell, a 1-cell per generator, a 2-cell per relator.
ChainComplexZ presentation_complex(const GroupPresentation& g);

struct TietzeStep {
  enum class Kind { cyclic_reduce, delete_empty, eliminate, multiply };

  Kind kind = Kind::cyclic_reduce;
  std::size_t relator = 0;    ///< the relator acted on (target for multiply)
  std::size_t generator = 0;  ///< eliminate: generator index
  std::size_t source = 0;     ///< multiply: relator multiplied in
  std::size_t rotation = 0;   ///< multiply: cyclic shift of the source
  bool invert = false;        ///< multiply: use the inverse of the source

  std::string to_string(const std::vector<std::string>& generators) const;
};

/// Relators are addressed by their current position; eliminated generators
/// keep their index and simply stop occurring.
struct TietzeCertificate {
  GroupPresentation start;
  std::vector<TietzeStep> steps;
};

struct TietzeResult {
  std::optional<TietzeCertificate> certificate;  ///< absent means UNKNOWN
  std::size_t steps_used = 0;
};

/// Bounded greedy search for a sequence of Tietze transformations ending in
/// the presentation with no generators and no relators.
TietzeResult tietze_trivialize(const GroupPresentation& g, std::size_t budget = 1000);

}  // namespace godeaux

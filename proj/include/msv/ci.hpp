#ifndef MSV_CI_HPP
#define MSV_CI_HPP

// Complete-intersection classification of matrix Schubert varieties.
//
// X_w is a complete intersection iff for every (p,q) in D_{>0}(w) the r×r
// block w_{(p,q)} (rows p-r..p-1, cols q-r..q-1, r = r_{p,q}(w)) is a
// permutation matrix whose own matrix Schubert variety is a complete
// intersection. In that case I_w is generated by
//   { x[p,q] : (p,q) in D_{=0}(w) } and
//   { det of the (r+1)×(r+1) block ending at (p,q) : (p,q) in D_{>0}(w) }.
//
// minimal_generator_count() is an independent oracle: it computes
// dim_K I_w / m I_w by linear algebra, degree by degree.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "msv/perm.hpp"
#include "msv/poly.hpp"

namespace msv {

struct CIReport;

struct CertificateNode {
  Cell cell;
  int rank = 0;
  bool is_permutation = false;
  /// Classification of the block; present iff is_permutation.
  std::shared_ptr<const CIReport> child;
};

struct CIWitness {
  Cell cell;
  /// "block-not-permutation" or "block-not-ci".
  std::string reason;
  /// Some diagram cell also lies within r steps north or west of the cell.
  bool lemma51 = false;
};

struct CIReport {
  Permutation w = Permutation::identity(1);
  bool verdict = false;
  int codim = 0;
  std::optional<int> mu;
  std::vector<CertificateNode> certificate;
  std::optional<std::vector<poly::Polynomial>> generators;
  std::optional<CIWitness> witness;
};

/// Classifies w; partial permutations are first extended to S_{l+m}.
CIReport is_complete_intersection(const PartialPermutation& w);

/// The generating set above. Throws DomainError when w is not CI.
std::vector<poly::Polynomial> ci_generators(const Permutation& w);

struct Lemma51Violation {
  Cell cell;      // (p,q) in D_{>0}(w)
  int offset;     // i, 1 <= i <= r_{p,q}(w)
  Cell neighbor;  // (p-i,q) or (p,q-i), found in D(w)
};

struct Lemma51Result {
  /// No violations at all.
  bool ok = true;
  std::vector<Lemma51Violation> violations;
  /// The weaker consequence D_{>0}(w) = E_{>0}(w).
  bool essential_ok = true;
  /// Cells of D_{>0}(w) outside E(w), row-major.
  std::vector<Cell> non_essential;
};

/// Necessary condition: no diagram cell within r steps north or west of a
/// cell of D_{>0}(w). Also records the weaker D_{>0}(w) = E_{>0}(w).
Lemma51Result lemma51_check(const Permutation& w);

enum class CoefficientField { Rational, Prime };

struct RankOptions {
  CoefficientField field = CoefficientField::Rational;
  std::uint32_t prime = 32003;
};

/// μ(I_w) = Σ_d dim (I_w)_d − dim (m I_w)_d, by exact linear algebra.
int minimal_generator_count(const Permutation& w, RankOptions opts = {});

/// Per-degree contributions; index d holds μ_d.
std::vector<int> minimal_generator_profile(const Permutation& w,
                                           RankOptions opts = {});

/// Modulus from MSVKIT_PRIME if set and prime, else 32003.
std::uint32_t default_prime();

}  // namespace msv

#endif  // MSV_CI_HPP

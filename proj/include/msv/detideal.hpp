#ifndef MSV_DETIDEAL_HPP
#define MSV_DETIDEAL_HPP

// Schubert determinantal ideals I_w, their antidiagonal initial ideals J_w,
// and the monomial-ideal utilities used by the localization checks.

#include <string>
#include <vector>

#include "msv/groebner.hpp"
#include "msv/perm.hpp"
#include "msv/poly.hpp"

namespace msv {

using poly::Monomial;
using poly::Polynomial;
using poly::Ring;

/// A monomial ideal kept as its minimal generating set, sorted ascending.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(Ring ring) : ring_(ring) {}
  MonomialIdeal(Ring ring, std::vector<Monomial> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_squarefree() const;

  bool contains(const Monomial& m) const;
  /// Every term of f lies in the ideal.
  bool contains_all_terms(const Polynomial& f) const;

  /// The ideal generated by this one and `m`.
  MonomialIdeal with(const Monomial& m) const;

  /// (J : m).
  MonomialIdeal quotient(const Monomial& m) const;

  std::vector<std::string> rendered() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_ == b.ring_ && a.gens_ == b.gens_;
  }

 private:
  Ring ring_;
  std::vector<Monomial> gens_;
};

/// Which cells contribute minors.
enum class GeneratorCells { Essential, Diagram };

struct FultonMinor {
  Cell cell;  // (p,q) whose upper-left block the minor lives in
  std::vector<int> rows;
  std::vector<int> cols;
  Polynomial poly;
};

struct SchubertIdeal {
  PartialPermutation source;
  Ring ring;
  std::vector<RankedCell> cells;  // essential (or diagram) cells used
  std::vector<FultonMinor> minors;

  std::vector<Polynomial> generators() const;
  poly::IdealPresentation presentation() const;

  /// Degree-one minors together with the larger minors not lying in the
  /// ideal they span. Generates the same ideal as generators().
  std::vector<FultonMinor> pruned_minors() const;
  std::vector<Polynomial> pruned_generators() const;
};

/// All (r+1)-minors of X_[p,q] for the essential cells (or all diagram
/// cells) of w, in canonical order: cells row-major, then row subset, then
/// column subset, lexicographically.
SchubertIdeal fulton_generators(
    const PartialPermutation& w,
    GeneratorCells which = GeneratorCells::Essential);

/// Σ over essential cells of C(p, r+1)·C(q, r+1).
long long fulton_generator_count(const PartialPermutation& w);

/// Minimalized monomial ideal of the antidiagonals of the Fulton minors.
MonomialIdeal antidiagonal_ideal(const PartialPermutation& w);

/// Leading monomials of a Groebner basis, minimalized.
MonomialIdeal leading_ideal(const Ring& ring,
                            const std::vector<Polynomial>& basis);

struct GroebnerCheck {
  bool match = false;
  MonomialIdeal gb_leading;
  MonomialIdeal antidiagonal;
  std::vector<Polynomial> basis;
};

/// Compares the leading-monomial ideal of the reduced Groebner basis of I_w
/// with the antidiagonal ideal J_w.
GroebnerCheck verify_groebner(const PartialPermutation& w);
GroebnerCheck verify_groebner(const PartialPermutation& w,
                              const std::vector<Polynomial>& generators);

/// Height of a squarefree monomial ideal: the minimum number of variables
/// meeting the support of every generator. Exact branch and bound.
int monomial_codim(const MonomialIdeal& ideal);

/// Every term of f is divisible by one of `gens`.
bool monomial_quotient_membership(const Polynomial& f,
                                  const std::vector<Monomial>& gens);

/// c (a variable slot) is a nonzerodivisor modulo the squarefree ideal J.
bool is_nonzerodivisor_on_monomial_quotient(int slot,
                                            const MonomialIdeal& ideal);

/// Ring of the smallest square grid holding w (and its extension).
Ring ring_for(const PartialPermutation& w);

}  // namespace msv

#endif  // MSV_DETIDEAL_HPP

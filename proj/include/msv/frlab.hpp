#ifndef MSV_FRLAB_HPP
#define MSV_FRLAB_HPP

// Symbolic checks around the distinguished variable c = x[i0, w(i0)]:
// membership of minors in <c> + J_w, the initial ideal of <c> + I_w, the
// nonzerodivisor property of c modulo J_w, and the identity between I_w and
// the ideal I' obtained from w' (w with row i0 and column w(i0) deleted)
// after inverting c.

#include <optional>
#include <string>
#include <vector>

#include "msv/detideal.hpp"
#include "msv/groebner.hpp"
#include "msv/perm.hpp"

namespace msv::frlab {

/// (i0, w(i0)) for the smallest i0 such that some cell of E_{>0}(w) lies
/// strictly southeast of it; nullopt iff E_{>0}(w) is empty.
std::optional<Cell> find_c(const Permutation& w);

/// Every cell of the window p ≤ p0, q ≤ q0 other than c lies in D(w),
/// every diagram cell in rows ≤ p0 has rank 0, and c is the only 1 of w
/// inside the window.
bool verify_D0_window(const Permutation& w, Cell c);

struct Lemma1Result {
  bool ok = true;
  std::size_t minors_checked = 0;
  /// Rendered minors "[rows|cols]" that failed membership.
  std::vector<std::string> counterexamples;
};

/// Every minor of the full generic matrix whose antidiagonal is divisible
/// by c lies in <c> + J_w. Throws DomainError if c does not exist.
Lemma1Result verify_lemma1(const Permutation& w);

struct Lemma2Result {
  bool ok = false;
  /// <c> + J_w ⊆ in(<c> + I_w), checked on its own.
  bool contains_expected = false;
  MonomialIdeal initial;
  MonomialIdeal expected;
};

/// in(<c> + I_w) = <c> + J_w, via a reduced Groebner basis.
Lemma2Result verify_lemma2(const Permutation& w);

/// c is a nonzerodivisor on K[X]/J_w, by the divisibility criterion and
/// by (J_w : c) = J_w. Both must agree.
bool verify_lemma3_nzd(const Permutation& w);

struct LocalizationSetup {
  Permutation w = Permutation::identity(1);
  Cell c;
  Deletion deletion;
  std::vector<Cell> gamma;
  /// I_{w'} generators in primed original labels, e.g. "x'[2,4]", "[34|12]'".
  std::vector<std::string> primed_names;
  /// Substituted I_{w'} generators with denominators cleared by powers of c
  /// and any overall power of c removed.
  std::vector<Polynomial> cleared_generators;
  /// x[p,q] for (p,q) in Γ with p < p0 or q < q0.
  std::vector<Polynomial> gamma_generators;

  std::vector<Polynomial> iprime_generators() const;
};

LocalizationSetup build_localization(const Permutation& w);

/// c^deg(f) · f', where f' replaces every x[p,q] off row p0 and column q0
/// by x[p,q] - c^{-1} x[p,q0] x[p0,q]. f must be homogeneous.
Polynomial primed_cleared(const Polynomial& f, Cell c);

struct LocalizationCheck {
  bool ok = false;
  bool iprime_in_i = false;
  bool i_in_iprime = false;
  /// 1 is not in (I_w : c^inf).
  bool saturation_proper = false;
  std::vector<Polynomial> saturation_basis;
  std::vector<Polynomial> saturation_basis_prime;
};

/// I_w and I' agree after inverting c (mutual containment of saturations).
LocalizationCheck verify_I_equals_Iprime(const Permutation& w);

struct VerificationReport {
  Permutation w = Permutation::identity(1);
  std::optional<Cell> c;
  bool skipped = true;
  bool d0_window = false;
  bool lemma1 = false;
  bool lemma2 = false;
  bool lemma3_nzd = false;
  bool i_eq_iprime = false;

  bool all_ok() const {
    return skipped ||
           (d0_window && lemma1 && lemma2 && lemma3_nzd && i_eq_iprime);
  }
};

struct VerifyOptions {
  bool localization = true;
};

VerificationReport verify_all(const Permutation& w, VerifyOptions opts = {});

/// The fixed S_5 sample for the localization identity: every non-regular w
/// with Coxeter length ≤ 6, plus 35142.
std::vector<Permutation> localization_sample_s5();

/// "[12|34]" style label for a minor.
std::string minor_label(const std::vector<int>& rows,
                        const std::vector<int>& cols);

}  // namespace msv::frlab

#endif  // MSV_FRLAB_HPP

#ifndef MSV_GROEBNER_HPP
#define MSV_GROEBNER_HPP

// Division, Buchberger's algorithm and saturation over exact rationals.

#include <cstdint>
#include <span>
#include <vector>

#include "msv/poly.hpp"

namespace msv::poly {

/// Full multivariate division remainder. Among the divisors whose leading
/// monomial divides the current term, the one with the smallest leading
/// monomial is used (ties: earliest in `divisors`).
Polynomial normal_form(const Polynomial& f,
                       std::span<const Polynomial> divisors,
                       TermOrder ord = TermOrder::AntidiagonalLex);

/// Reduced Groebner basis: monic, inter-reduced, sorted by increasing
/// leading monomial. The unit ideal yields {1}; the zero ideal yields {}.
std::vector<Polynomial> buchberger(const IdealPresentation& ideal,
                                   TermOrder ord = TermOrder::AntidiagonalLex);

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

std::vector<Polynomial> buchberger(const IdealPresentation& ideal,
                                   TermOrder ord, BuchbergerStats* stats);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Every S-polynomial of the basis reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> basis,
                       TermOrder ord = TermOrder::AntidiagonalLex);

/// Monic, and no term of any element is divisible by another element's
/// leading monomial.
bool is_reduced(std::span<const Polynomial> basis);

/// f lies in the ideal with Groebner basis `basis`.
bool in_ideal(const Polynomial& f, std::span<const Polynomial> basis);

/// Both ideals (given by Groebner bases) contain each other's generators.
bool same_ideal(std::span<const Polynomial> basis_a,
                std::span<const Polynomial> basis_b);

/// (I : c^inf), via a Groebner basis of I + <1 - t c> under the elimination
/// order, keeping the t-free elements. The result is a reduced Groebner
/// basis of the saturation.
IdealPresentation saturate(const IdealPresentation& ideal,
                           const Polynomial& c);

/// Opt-in self check of every basis returned by buchberger(): S-pair
/// reduction and auto-reduction. Counters are process-wide.
struct GroebnerAudit {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
};

void set_groebner_audit(bool enabled);
GroebnerAudit groebner_audit();
void reset_groebner_audit();

}  // namespace msv::poly

#endif  // MSV_GROEBNER_HPP

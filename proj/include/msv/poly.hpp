#ifndef MSV_POLY_HPP
#define MSV_POLY_HPP

// Exact sparse polynomials over the generic matrix of variables x[i,j],
// with one optional auxiliary variable t used for saturation.
//
// Variable layout. Every ring reserves slot 0 for t; x[i,j] lives in slot
// 1 + (i-1)*cols + (cols-j). Slots are ranked by precedence: a smaller
// slot is a larger variable. Comparing exponent vectors lexicographically
// slot by slot therefore gives
//   * the antidiagonal lex order on t-free monomials
//     (x[i,j] > x[i',j'] iff i < i', or i = i' and j > j'), and
//   * the elimination order (t exponents first, then antidiagonal lex)
//     on monomials involving t.
// The two orders agree wherever both apply, so one comparison serves both.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "msv/perm.hpp"

namespace msv::poly {

using Rational = mpq_class;

inline constexpr int kMaxVars = 64;

/// Coordinate ring of an l×m grid (plus the auxiliary slot).
class Ring {
 public:
  Ring(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int num_vars() const { return 1 + rows_ * cols_; }

  static constexpr int aux_slot() { return 0; }
  int slot(int i, int j) const;
  /// Inverse of slot() for grid slots.
  Cell cell_of(int slot) const;

  std::string var_name(int slot) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  int rows_;
  int cols_;
};

enum class TermOrder {
  AntidiagonalLex,
  Elimination,  // auxiliary variable first, then antidiagonal lex
};

class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  static Monomial variable(int slot, int power = 1);

  int exponent(int slot) const { return exps_[slot]; }
  void set_exponent(int slot, int e);

  int degree() const { return degree_; }
  std::uint64_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }
  bool is_squarefree() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires `divisor` to divide *this.
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const {
    return (support_ & other.support_) == 0;
  }

  /// The variables occurring in the monomial, by slot.
  std::vector<int> variables() const;

  std::string to_string(const Ring& ring) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  /// Monomial order comparison (see file comment).
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b) {
    const int c = std::memcmp(a.exps_.data(), b.exps_.data(), kMaxVars);
    return c <=> 0;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVars> exps_;
  std::uint64_t support_ = 0;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

std::strong_ordering compare(const Monomial& a, const Monomial& b,
                             TermOrder ord = TermOrder::AntidiagonalLex);

struct Term {
  Rational coef;
  Monomial mono;
};

class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(ring) {}

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, int i, int j);
  static Polynomial aux(Ring ring);
  static Polynomial monomial(Ring ring, const Monomial& m,
                             const Rational& c = 1);
  /// Builds from unsorted terms; combines duplicates and drops zeros.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  /// Parses the canonical rendering ("x[1,3]*x[2,4] - 1/2*x[1,4]^2 + t").
  static Polynomial parse(Ring ring, std::string_view text);

  const Ring& ring() const { return ring_; }
  /// Terms in strictly descending monomial order.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  std::size_t size() const { return terms_.size(); }

  /// Order-maximal term. Throws DomainError on zero.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coefficient() const { return leading_term().coef; }

  int degree() const;
  bool is_homogeneous() const;
  /// True iff the auxiliary variable does not occur.
  bool is_aux_free() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;
  Polynomial times(const Monomial& m, const Rational& c = 1) const;
  /// *this -= c*m*g, in place.
  void subtract_multiple(const Rational& c, const Monomial& m,
                         const Polynomial& g);

  Polynomial monic() const;
  /// Largest monomial dividing every term.
  Monomial monomial_content() const;
  /// Exact division by a monomial dividing every term.
  Polynomial divided_by(const Monomial& m) const;

  /// Substitutes images[slot] for each variable occurring in the
  /// polynomial (slots without an image are left alone).
  Polynomial substitute(
      const std::vector<std::optional<Polynomial>>& images) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void add_scaled(const Polynomial& other, const Rational& c,
                  const Monomial& m);

  Ring ring_;
  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
  return os << f.to_string();
}

Term leading_term(const Polynomial& f,
                  TermOrder ord = TermOrder::AntidiagonalLex);

/// The minor [rows | cols] of the generic matrix, expanded exactly.
/// Index lists are 1-based and strictly increasing.
Polynomial minor(const Ring& ring, std::span<const int> rows,
                 std::span<const int> cols);

/// Product of the antidiagonal entries of [rows | cols].
Monomial antidiagonal(const Ring& ring, std::span<const int> rows,
                      std::span<const int> cols);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);

struct IdealPresentation {
  Ring ring;
  std::vector<Polynomial> generators;
};

}  // namespace msv::poly

#endif  // MSV_POLY_HPP

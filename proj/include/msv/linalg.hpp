#ifndef MSV_LINALG_HPP
#define MSV_LINALG_HPP

// Incremental row echelon forms for rank computations over Q (fraction-free
// integer elimination) and over Z/p.

#include <gmpxx.h>

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace msv::linalg {

/// Sparse integer row: (column, value) sorted by column, no zero values.
using IntRow = std::vector<std::pair<std::uint32_t, mpz_class>>;

/// Echelon basis over Q. insert() reports whether the row was independent
/// of everything inserted so far.
class RationalEchelon {
 public:
  bool insert(IntRow row);
  std::size_t rank() const { return rows_.size(); }

 private:
  std::unordered_map<std::uint32_t, std::size_t> pivot_;
  std::vector<IntRow> rows_;
};

/// Echelon basis over Z/p, p < 2^31 prime.
class ModularEchelon {
 public:
  explicit ModularEchelon(std::uint32_t prime);
  bool insert(const IntRow& row);
  std::size_t rank() const { return rows_.size(); }
  std::uint32_t prime() const { return p_; }

 private:
  using Row = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
  std::uint32_t p_;
  std::unordered_map<std::uint32_t, std::size_t> pivot_;
  std::vector<Row> rows_;  // each normalized to leading coefficient 1
};

/// Rank of a list of rows, by either route.
std::size_t rank_rational(const std::vector<IntRow>& rows);
std::size_t rank_modular(const std::vector<IntRow>& rows, std::uint32_t p);

bool is_prime(std::uint32_t n);

}  // namespace msv::linalg

#endif  // MSV_LINALG_HPP

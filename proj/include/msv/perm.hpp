#ifndef MSV_PERM_HPP
#define MSV_PERM_HPP

// Combinatorics of partial permutations: rank function, diagram, essential
// set, Coxeter length, extension to a full permutation and the block
// extractions used by the localization and complete-intersection code.
//
// All indices are 1-based, matching the (p,q) grid conventions used
// throughout the toolkit.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace msv {

/// Raised when an operation is called outside its domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Cell {
  int p = 0;
  int q = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& c);

/// A cell of the diagram together with the rank r_{p,q}(w) at it.
struct RankedCell {
  Cell cell;
  int rank = 0;

  friend constexpr auto operator<=>(const RankedCell&,
                                    const RankedCell&) = default;
};

class PartialPermutation {
 public:
  /// An l×m partial permutation with no entries.
  PartialPermutation(int rows, int cols);

  /// `assignment[i-1]` is the column of the 1 in row i, if any.
  PartialPermutation(int rows, int cols,
                     std::vector<std::optional<int>> assignment);

  /// A full permutation from one-line notation (values 1..n).
  static PartialPermutation from_one_line(const std::vector<int>& values);

  /// Parses a dense 0/1 matrix.
  static PartialPermutation from_matrix(
      const std::vector<std::vector<int>>& entries);

  static PartialPermutation identity(int n);
  static PartialPermutation longest(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  /// w(i), or nullopt when row i is empty.
  std::optional<int> at(int row) const;
  /// w^{-1}(j), or nullopt when column j is empty.
  std::optional<int> row_of(int col) const;

  bool entry(int row, int col) const { return at(row) == col; }
  bool is_permutation() const;

  /// One-line notation. Throws if not a full permutation.
  std::vector<int> one_line() const;

  friend bool operator==(const PartialPermutation&,
                         const PartialPermutation&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<std::optional<int>> row_to_col_;
  std::vector<std::optional<int>> col_to_row_;
};

using Permutation = PartialPermutation;

struct Diagram {
  std::set<Cell> cells;
  std::map<Cell, int> ranks;

  std::size_t size() const { return cells.size(); }
  bool contains(const Cell& c) const { return cells.count(c) != 0; }
  int rank(const Cell& c) const { return ranks.at(c); }

  /// D_{=0}(w) in row-major order.
  std::vector<Cell> rank_zero() const;
  /// D_{>0}(w) in row-major order.
  std::vector<Cell> rank_positive() const;
};

/// r_{p,q}(w): number of 1s in the upper-left p×q submatrix.
int rank_at(const PartialPermutation& w, Cell c);

Diagram diagram(const PartialPermutation& w);

/// Southeast-maximal cells of D(w) with their ranks, row-major.
std::vector<RankedCell> essential_set(const PartialPermutation& w);

/// Inversion count. Throws DomainError for partial input.
int coxeter_length(const PartialPermutation& w);

/// The permutation w̃ in S_{l+m} sharing the diagram and essential set of w.
Permutation extend_to_permutation(const PartialPermutation& w);

/// Result of deleting a row and a column through a 1 of w.
struct Deletion {
  Permutation reduced;
  /// original_row[i-1] is the row of w that became row i of `reduced`.
  std::vector<int> original_row;
  std::vector<int> original_col;

  Cell to_original(Cell c) const {
    return {original_row.at(c.p - 1), original_col.at(c.q - 1)};
  }
};

/// Deletes row p0 and column q0 (requires w(p0) = q0) and relabels.
Deletion delete_row_col(const Permutation& w, int p0, int q0);

/// The r×r block w_{(p,q)} on rows p-r..p-1 and columns q-r..q-1, r = r_{p,q}(w).
struct Block {
  int size = 0;
  Cell top_left;
  /// Dense 0/1 entries, row-major, size×size.
  std::vector<std::vector<int>> entries;
  bool is_permutation = false;

  /// The block as an element of S_size. Requires is_permutation.
  Permutation as_permutation() const;
};

Block submatrix_w(const Permutation& w, Cell c);

/// Parses "35142" (n ≤ 9) or separator-delimited integers ("10 2 1 ...").
/// Throws DomainError naming the offending position.
Permutation parse_permutation(std::string_view text);

/// Parses l lines of m space-separated 0/1 entries.
PartialPermutation parse_partial_permutation(std::string_view text);

/// Canonical one-line rendering: digits when n ≤ 9, else space-separated.
std::string to_string(const Permutation& w);

/// All permutations of S_n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

/// All l×m partial permutations.
std::vector<PartialPermutation> all_partial_permutations(int rows, int cols);

}  // namespace msv

#endif  // MSV_PERM_HPP

#include "msv/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace msv {

std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")";
}

PartialPermutation::PartialPermutation(int rows, int cols)
    : PartialPermutation(rows, cols,
                         std::vector<std::optional<int>>(
                             static_cast<std::size_t>(std::max(rows, 0)))) {}

PartialPermutation::PartialPermutation(
    int rows, int cols, std::vector<std::optional<int>> assignment)
    : rows_(rows), cols_(cols), row_to_col_(std::move(assignment)) {
  if (rows < 1 || cols < 1) {
    throw DomainError("partial permutation needs positive dimensions");
  }
  if (static_cast<int>(row_to_col_.size()) != rows) {
    throw DomainError("assignment length does not match row count");
  }
  col_to_row_.assign(static_cast<std::size_t>(cols), std::nullopt);
  for (int i = 1; i <= rows; ++i) {
    const auto& j = row_to_col_[i - 1];
    if (!j) continue;
    if (*j < 1 || *j > cols) {
      throw DomainError("row " + std::to_string(i) + " maps outside [1," +
                        std::to_string(cols) + "]");
    }
    if (col_to_row_[*j - 1]) {
      throw DomainError("column " + std::to_string(*j) +
                        " is used twice");
    }
    col_to_row_[*j - 1] = i;
  }
}

PartialPermutation PartialPermutation::from_one_line(
    const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  if (n == 0) throw DomainError("empty permutation");
  std::vector<std::optional<int>> a(values.begin(), values.end());
  return PartialPermutation(n, n, std::move(a));
}

PartialPermutation PartialPermutation::from_matrix(
    const std::vector<std::vector<int>>& entries) {
  if (entries.empty() || entries.front().empty()) {
    throw DomainError("empty matrix");
  }
  const int rows = static_cast<int>(entries.size());
  const int cols = static_cast<int>(entries.front().size());
  std::vector<std::optional<int>> a(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(entries[i].size()) != cols) {
      throw DomainError("ragged matrix at row " + std::to_string(i + 1));
    }
    for (int j = 0; j < cols; ++j) {
      const int v = entries[i][j];
      if (v == 0) continue;
      if (v != 1) {
        throw DomainError("entry (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ") is not 0/1");
      }
      if (a[i]) {
        throw DomainError("row " + std::to_string(i + 1) +
                          " has more than one 1");
      }
      a[i] = j + 1;
    }
  }
  return PartialPermutation(rows, cols, std::move(a));
}

PartialPermutation PartialPermutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return from_one_line(v);
}

PartialPermutation PartialPermutation::longest(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return from_one_line(v);
}

std::optional<int> PartialPermutation::at(int row) const {
  if (row < 1 || row > rows_) throw DomainError("row out of range");
  return row_to_col_[row - 1];
}

std::optional<int> PartialPermutation::row_of(int col) const {
  if (col < 1 || col > cols_) throw DomainError("column out of range");
  return col_to_row_[col - 1];
}

bool PartialPermutation::is_permutation() const {
  return rows_ == cols_ &&
         std::all_of(row_to_col_.begin(), row_to_col_.end(),
                     [](const auto& j) { return j.has_value(); });
}

std::vector<int> PartialPermutation::one_line() const {
  if (!is_permutation()) throw DomainError("not a full permutation");
  std::vector<int> v;
  v.reserve(row_to_col_.size());
  for (const auto& j : row_to_col_) v.push_back(*j);
  return v;
}

std::vector<Cell> Diagram::rank_zero() const {
  std::vector<Cell> out;
  for (const auto& c : cells)
    if (ranks.at(c) == 0) out.push_back(c);
  return out;
}

std::vector<Cell> Diagram::rank_positive() const {
  std::vector<Cell> out;
  for (const auto& c : cells)
    if (ranks.at(c) > 0) out.push_back(c);
  return out;
}

int rank_at(const PartialPermutation& w, Cell c) {
  if (c.p < 1 || c.p > w.rows() || c.q < 1 || c.q > w.cols()) {
    throw DomainError("cell " + to_string(c) + " outside the " +
                      std::to_string(w.rows()) + "x" +
                      std::to_string(w.cols()) + " grid");
  }
  int r = 0;
  for (int i = 1; i <= c.p; ++i) {
    const auto j = w.at(i);
    if (j && *j <= c.q) ++r;
  }
  return r;
}

Diagram diagram(const PartialPermutation& w) {
  Diagram d;
  for (int i = 1; i <= w.rows(); ++i) {
    const auto wi = w.at(i);
    for (int j = 1; j <= w.cols(); ++j) {
      const auto wj = w.row_of(j);
      if ((!wi || *wi > j) && (!wj || *wj > i)) {
        d.cells.insert({i, j});
        d.ranks[{i, j}] = rank_at(w, {i, j});
      }
    }
  }
  return d;
}

std::vector<RankedCell> essential_set(const PartialPermutation& w) {
  const Diagram d = diagram(w);
  std::vector<RankedCell> out;
  for (const auto& c : d.cells) {
    if (!d.contains({c.p + 1, c.q}) && !d.contains({c.p, c.q + 1})) {
      out.push_back({c, d.rank(c)});
    }
  }
  return out;
}

int coxeter_length(const PartialPermutation& w) {
  if (!w.is_permutation()) {
    throw DomainError("Coxeter length needs a full permutation");
  }
  const auto v = w.one_line();
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++inv;
  return inv;
}

Permutation extend_to_permutation(const PartialPermutation& w) {
  const int l = w.rows();
  const int m = w.cols();
  const int n = l + m;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(n));
  auto smallest_unused_from = [&](int lo) {
    for (int v = lo; v <= n; ++v)
      if (!used[v]) return v;
    throw DomainError("extension ran out of values");
  };
  for (int i = 1; i <= n; ++i) {
    int v;
    if (i > l) {
      v = smallest_unused_from(1);
    } else if (const auto j = w.at(i)) {
      v = *j;
    } else {
      v = smallest_unused_from(m + 1);
    }
    used[v] = true;
    values.push_back(v);
  }
  return Permutation::from_one_line(values);
}

Deletion delete_row_col(const Permutation& w, int p0, int q0) {
  if (!w.is_permutation()) throw DomainError("deletion needs a permutation");
  if (w.at(p0) != q0) {
    throw DomainError("w(" + std::to_string(p0) + ") != " +
                      std::to_string(q0));
  }
  const int n = w.rows();
  if (n < 2) throw DomainError("cannot delete from S_1");
  Deletion out{Permutation::identity(n - 1), {}, {}};
  for (int i = 1; i <= n; ++i)
    if (i != p0) out.original_row.push_back(i);
  for (int j = 1; j <= n; ++j)
    if (j != q0) out.original_col.push_back(j);
  std::vector<int> values;
  for (int i : out.original_row) {
    const int j = *w.at(i);
    values.push_back(j < q0 ? j : j - 1);
  }
  out.reduced = Permutation::from_one_line(values);
  return out;
}

Permutation Block::as_permutation() const {
  if (!is_permutation) throw DomainError("block is not a permutation matrix");
  return Permutation::from_matrix(entries);
}

Block submatrix_w(const Permutation& w, Cell c) {
  const int r = rank_at(w, c);
  if (r == 0) throw DomainError("rank is zero at " + to_string(c));
  if (c.p - r < 1 || c.q - r < 1) {
    throw DomainError("block at " + to_string(c) + " leaves the grid");
  }
  Block b;
  b.size = r;
  b.top_left = {c.p - r, c.q - r};
  b.entries.assign(static_cast<std::size_t>(r),
                   std::vector<int>(static_cast<std::size_t>(r), 0));
  int ones = 0;
  for (int i = 0; i < r; ++i) {
    const auto j = w.at(b.top_left.p + i);
    if (j && *j >= b.top_left.q && *j < c.q) {
      b.entries[i][*j - b.top_left.q] = 1;
      ++ones;
    }
  }
  b.is_permutation = ones == r;
  return b;
}

namespace {

[[noreturn]] void parse_fail(const std::string& what, std::size_t pos) {
  throw DomainError(what + " at position " + std::to_string(pos + 1));
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::vector<std::size_t> positions;
  const bool has_sep =
      text.find_first_of(" ,\t") != std::string_view::npos;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ' ' || ch == ',' || ch == '\t' || ch == '\n' || ch == '\r') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      parse_fail(std::string("unexpected character '") + ch + "'", i);
    }
    if (!has_sep) {
      values.push_back(ch - '0');
      positions.push_back(i);
      ++i;
      continue;
    }
    const std::size_t start = i;
    int v = 0;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 100000) parse_fail("value too large", start);
      ++i;
    }
    values.push_back(v);
    positions.push_back(start);
  }
  if (values.empty()) throw DomainError("empty permutation");
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t k = 0; k < values.size(); ++k) {
    const int v = values[k];
    if (v < 1 || v > n) {
      parse_fail("value " + std::to_string(v) + " outside [1," +
                     std::to_string(n) + "]",
                 positions[k]);
    }
    if (seen[v]) parse_fail("repeated value " + std::to_string(v),
                            positions[k]);
    seen[v] = true;
  }
  return Permutation::from_one_line(values);
}

PartialPermutation parse_partial_permutation(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      if (tok != "0" && tok != "1") {
        throw DomainError("row " + std::to_string(rows.size() + 1) +
                          ": entry '" + tok + "' is not 0/1");
      }
      row.push_back(tok == "1" ? 1 : 0);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return PartialPermutation::from_matrix(rows);
}

std::string to_string(const Permutation& w) {
  const auto v = w.one_line();
  std::string out;
  const bool digits = v.size() <= 9;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!digits && i > 0) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<PartialPermutation> all_partial_permutations(int rows, int cols) {
  std::vector<PartialPermutation> out;
  std::vector<std::optional<int>> a(static_cast<std::size_t>(rows));
  std::vector<bool> used(static_cast<std::size_t>(cols) + 1, false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == rows) {
      out.emplace_back(rows, cols, a);
      return;
    }
    a[i] = std::nullopt;
    self(self, i + 1);
    for (int j = 1; j <= cols; ++j) {
      if (used[j]) continue;
      used[j] = true;
      a[i] = j;
      self(self, i + 1);
      used[j] = false;
    }
    a[i] = std::nullopt;
  };
  rec(rec, 0);
  return out;
}

}  // namespace msv

#ifndef MSV_TESTS_ORACLES_HPP
#define MSV_TESTS_ORACLES_HPP

// Brute-force reference computations used only by the tests. They work
// straight from the definitions and share no code with the library beyond
// the PartialPermutation accessors.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "msv/perm.hpp"

namespace oracle {

inline int rank(const msv::PartialPermutation& w, int p, int q) {
  int r = 0;
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j)
      if (w.entry(i, j)) ++r;
  return r;
}

// (p,q) with no 1 weakly west in row p and no 1 weakly north in column q.
inline std::set<msv::Cell> diagram(const msv::PartialPermutation& w) {
  std::set<msv::Cell> out;
  for (int p = 1; p <= w.rows(); ++p) {
    for (int q = 1; q <= w.cols(); ++q) {
      bool hit = false;
      for (int j = 1; j <= q; ++j) hit = hit || w.entry(p, j);
      for (int i = 1; i <= p; ++i) hit = hit || w.entry(i, q);
      if (!hit) out.insert({p, q});
    }
  }
  return out;
}

inline std::set<msv::Cell> essential(const msv::PartialPermutation& w) {
  const auto d = oracle::diagram(w);
  std::set<msv::Cell> out;
  for (const auto& c : d)
    if (!d.count({c.p + 1, c.q}) && !d.count({c.p, c.q + 1})) out.insert(c);
  return out;
}

inline int inversions(const std::vector<int>& v) {
  int n = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++n;
  return n;
}

inline int sign(const std::vector<int>& v) {
  return inversions(v) % 2 == 0 ? 1 : -1;
}

inline msv::Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return msv::Permutation::from_one_line(v);
}

}  // namespace oracle

#endif  // MSV_TESTS_ORACLES_HPP

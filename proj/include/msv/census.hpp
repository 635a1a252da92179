#ifndef MSV_CENSUS_HPP
#define MSV_CENSUS_HPP

// Exhaustive sweeps over S_n. census_serial() is the reference; the OpenMP
// kernel census_parallel() must return identical rows in identical order.

#include <optional>
#include <vector>

#include "msv/ci.hpp"
#include "msv/perm.hpp"

namespace msv {

enum class CensusFilter { All, CI, NonCI };

struct CensusOptions {
  int n = 4;
  CensusFilter filter = CensusFilter::All;
  bool with_mu = true;
  bool with_groebner = false;
  /// 0 means the OpenMP default.
  int threads = 0;
  RankOptions rank;
};

struct CensusRow {
  Permutation w = Permutation::identity(1);
  int length = 0;
  int codim = 0;
  bool verdict = false;
  std::optional<int> mu;
  std::optional<bool> gb_match;

  /// Classifier agrees with the Nakayama oracle (true when mu is absent).
  bool oracle_agrees() const { return !mu || (*mu == codim) == verdict; }

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

CensusRow census_row(const Permutation& w, const CensusOptions& opts);

std::vector<CensusRow> census_serial(const CensusOptions& opts);
std::vector<CensusRow> census_parallel(const CensusOptions& opts);

/// Number of worker threads census_parallel() would use.
int census_threads(const CensusOptions& opts);

}  // namespace msv

#endif  // MSV_CENSUS_HPP

#include "msv/census.hpp"

#include <omp.h>

#include "msv/detideal.hpp"

namespace msv {

namespace {

bool keep(const CensusRow& r, CensusFilter f) {
  switch (f) {
    case CensusFilter::All:
      return true;
    case CensusFilter::CI:
      return r.verdict;
    case CensusFilter::NonCI:
      return !r.verdict;
  }
  return true;
}

std::vector<CensusRow> filtered(std::vector<CensusRow> rows, CensusFilter f) {
  std::vector<CensusRow> out;
  for (auto& r : rows)
    if (keep(r, f)) out.push_back(std::move(r));
  return out;
}

}  // namespace

CensusRow census_row(const Permutation& w, const CensusOptions& opts) {
  CensusRow r;
  r.w = w;
  r.length = coxeter_length(w);
  const CIReport ci = is_complete_intersection(w);
  r.codim = ci.codim;
  r.verdict = ci.verdict;
  if (opts.with_mu) r.mu = minimal_generator_count(w, opts.rank);
  if (opts.with_groebner) r.gb_match = verify_groebner(w).match;
  return r;
}

std::vector<CensusRow> census_serial(const CensusOptions& opts) {
  const auto perms = all_permutations(opts.n);
  std::vector<CensusRow> rows;
  rows.reserve(perms.size());
  for (const auto& w : perms) rows.push_back(census_row(w, opts));
  return filtered(std::move(rows), opts.filter);
}

int census_threads(const CensusOptions& opts) {
  return opts.threads > 0 ? opts.threads : omp_get_max_threads();
}

std::vector<CensusRow> census_parallel(const CensusOptions& opts) {
  const auto perms = all_permutations(opts.n);
  const long count = static_cast<long>(perms.size());
  std::vector<CensusRow> rows(perms.size());
#pragma omp parallel for schedule(dynamic) num_threads(census_threads(opts))
  for (long k = 0; k < count; ++k) {
    rows[k] = census_row(perms[k], opts);
  }
  return filtered(std::move(rows), opts.filter);
}

}  // namespace msv

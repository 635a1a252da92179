#include <gtest/gtest.h>

#include "msv/census.hpp"
#include "msv/report.hpp"

using namespace msv;

TEST(Census, ParallelMatchesSerial) {
  for (int n = 1; n <= 5; ++n) {
    for (int threads : {1, 2, 4}) {
      CensusOptions opts;
      opts.n = n;
      opts.threads = threads;
      EXPECT_EQ(census_parallel(opts), census_serial(opts)) << n << " " << threads;
    }
  }
}

TEST(Census, FiltersPartitionAndKeepOrder) {
  CensusOptions opts;
  opts.n = 5;
  opts.with_groebner = true;
  const auto all = census_parallel(opts);
  ASSERT_EQ(all.size(), 120u);
  for (std::size_t k = 1; k < all.size(); ++k)
    EXPECT_LT(all[k - 1].w.one_line(), all[k].w.one_line());
  opts.filter = CensusFilter::CI;
  const auto ci = census_parallel(opts);
  opts.filter = CensusFilter::NonCI;
  const auto non = census_parallel(opts);
  EXPECT_EQ(ci.size() + non.size(), all.size());
  for (const auto& r : all) {
    EXPECT_TRUE(r.oracle_agrees()) << to_string(r.w);
    EXPECT_EQ(r.codim, r.length);
    EXPECT_TRUE(r.gb_match.value());
  }
  for (const auto& r : ci) EXPECT_TRUE(r.verdict);
  for (const auto& r : non) EXPECT_FALSE(r.verdict);
}

TEST(Census, PrimeFieldSweepMatchesRational) {
  CensusOptions q;
  q.n = 4;
  CensusOptions p = q;
  p.rank = {CoefficientField::Prime, 32003};
  EXPECT_EQ(census_serial(p), census_serial(q));
}

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "msv/report.hpp"

using namespace msv;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(MSV_GOLDEN_DIR) + "/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// The grid with '.' blanked, so only '1' and '*' are compared.
std::string ones_and_stars(std::string grid) {
  for (char& ch : grid)
    if (ch == '.') ch = ' ';
  return grid;
}

}  // namespace

TEST(Report, FiguresMatchGoldenFiles) {
  for (const std::string w : {"35142", "361452", "352614", "462153"}) {
    const std::string text = report::render_diagram(parse_permutation(w));
    EXPECT_EQ(ones_and_stars(text), ones_and_stars(golden(w + ".txt"))) << w;
  }
}

TEST(Report, DotsMarkRankZeroCells) {
  for (const auto& w : all_permutations(5)) {
    const Diagram d = diagram(w);
    for (int p = 1; p <= 5; ++p)
      for (int q = 1; q <= 5; ++q) {
        const char ch = report::diagram_char(w, d, {p, q});
        if (w.entry(p, q)) {
          EXPECT_EQ(ch, '1');
        } else if (!d.contains({p, q})) {
          EXPECT_EQ(ch, ' ');
        } else {
          EXPECT_EQ(ch, d.rank({p, q}) == 0 ? '.' : '*');
        }
      }
  }
}

TEST(Report, IdentityGridHasOnlyOnes) {
  const std::string text = report::render_diagram(Permutation::identity(4));
  EXPECT_EQ(std::count(text.begin(), text.end(), '1'), 4);
  EXPECT_EQ(text.find('*'), std::string::npos);
  EXPECT_EQ(text.find('.'), std::string::npos);
}

TEST(Report, CIJsonShape) {
  const auto j = report::to_json(is_complete_intersection(parse_permutation("462153")));
  EXPECT_EQ(j["w"], "462153");
  EXPECT_EQ(j["verdict"], true);
  EXPECT_EQ(j["generators"].size(), 9u);
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_EQ(j["certificate"][1]["child"]["w"], "21");
  const auto k = report::to_json(is_complete_intersection(parse_permutation("352614")));
  EXPECT_TRUE(k["generators"].is_null());
  EXPECT_EQ(k["witness"]["cell"], report::json::array({4, 4}));
}

TEST(Report, PartialPermutationLabel) {
  const PartialPermutation w(2, 3, {2, std::nullopt});
  EXPECT_EQ(report::label(w), "010;000");
}

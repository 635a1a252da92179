#include <gtest/gtest.h>

#include <random>

#include "msv/groebner.hpp"

using namespace msv;
using namespace msv::poly;

namespace {

Polynomial P(const Ring& r, const char* s) { return Polynomial::parse(r, s); }

Polynomial random_poly(const Ring& ring, std::mt19937& rng, int terms,
                       int max_deg) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> row(1, ring.rows());
  std::uniform_int_distribution<int> col(1, ring.cols());
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    const int d = deg(rng);
    for (int e = 0; e < d; ++e) m = m * Monomial::variable(ring.slot(row(rng), col(rng)));
    out.push_back({Rational(coef(rng)), m});
  }
  return Polynomial::from_terms(ring, out);
}

}  // namespace

TEST(Groebner, NormalFormDivision) {
  const Ring r(1, 2);  // x[1,2] > x[1,1]
  const auto f = P(r, "x[1,2]^2*x[1,1] + x[1,1]");
  const std::vector<Polynomial> divs{P(r, "x[1,2]*x[1,1] - 1")};
  // x12^2 x11 -> x12, remainder x12 + x11.
  EXPECT_EQ(normal_form(f, divs), P(r, "x[1,2] + x[1,1]"));
}

TEST(Groebner, HandComputedBasis) {
  // Twisted cubic in lex y > z ... use 1×3: a = x[1,3] > b = x[1,2] > c = x[1,1].
  const Ring r(1, 3);
  const auto basis = buchberger(
      {r, {P(r, "x[1,3]^2 - x[1,2]"), P(r, "x[1,3]*x[1,2] - x[1,1]")}});
  // a^2 - b, ab - c  =>  S = b*(a^2-b) - a*(ab - c) = ac - b^2 (lead ac).
  // Then a(ac - b^2) vs ... reduced lex basis:
  //   {b^3 - c^2, ac - b^2, ab - c, a^2 - b}.
  const std::vector<Polynomial> expected{
      P(r, "x[1,2]^3 - x[1,1]^2"), P(r, "x[1,3]*x[1,1] - x[1,2]^2"),
      P(r, "x[1,3]*x[1,2] - x[1,1]"), P(r, "x[1,3]^2 - x[1,2]")};
  EXPECT_EQ(basis, expected);
  EXPECT_TRUE(is_groebner_basis(basis));
  EXPECT_TRUE(is_reduced(basis));
}

TEST(Groebner, UnitAndZeroIdeal) {
  const Ring r(2, 2);
  EXPECT_TRUE(buchberger({r, {}}).empty());
  const auto unit = buchberger({r, {P(r, "x[1,1]"), P(r, "x[1,1] + 1")}});
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_EQ(unit[0], Polynomial::constant(r, 1));
}

TEST(Groebner, RandomIdealInvariants) {
  const Ring r(2, 2);
  std::mt19937 rng(3);
  for (int k = 0; k < 40; ++k) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(random_poly(r, rng, 3, 2));
    BuchbergerStats stats;
    const auto basis = buchberger({r, gens}, TermOrder::AntidiagonalLex, &stats);
    EXPECT_TRUE(is_groebner_basis(basis));
    EXPECT_TRUE(is_reduced(basis));
    for (std::size_t i = 1; i < basis.size(); ++i)
      EXPECT_LT(basis[i - 1].leading_monomial(), basis[i].leading_monomial());
    // Every generator and random combination reduces to zero.
    for (const auto& g : gens) EXPECT_TRUE(in_ideal(g, basis));
    Polynomial combo(r);
    for (const auto& g : gens) combo += g * random_poly(r, rng, 2, 1);
    EXPECT_TRUE(in_ideal(combo, basis));
    // The basis elements lie in the ideal of the generators: recompute from
    // generators plus basis and compare.
    auto both = gens;
    both.insert(both.end(), basis.begin(), basis.end());
    EXPECT_EQ(buchberger({r, both}), basis);
    EXPECT_GE(stats.pairs_considered, stats.pairs_reduced);
  }
}

TEST(Groebner, AuditCountsEveryBasis) {
  const Ring r(2, 2);
  reset_groebner_audit();
  set_groebner_audit(true);
  buchberger({r, {P(r, "x[1,1]*x[2,2] - x[1,2]*x[2,1]"), P(r, "x[1,1]^2")}});
  buchberger({r, {P(r, "x[1,2] - x[2,1]")}});
  set_groebner_audit(false);
  const auto audit = groebner_audit();
  EXPECT_EQ(audit.checked, 2u);
  EXPECT_EQ(audit.failed, 0u);
}

TEST(Groebner, SaturationByKnownFactor) {
  const Ring r(2, 2);
  const auto c = P(r, "x[1,1]");
  // <c f, c g> : c^inf = <f, g>.
  const auto f = P(r, "x[1,2]*x[2,1] - x[2,2]");
  const auto g = P(r, "x[2,2]^2 + x[1,2]");
  const auto sat = saturate({r, {c * f, c * c * g}}, c);
  EXPECT_TRUE(same_ideal(sat.generators, buchberger({r, {f, g}})));
  for (const auto& h : sat.generators) EXPECT_TRUE(h.is_aux_free());
  // <c> saturates to the unit ideal.
  const auto unit = saturate({r, {c}}, c);
  ASSERT_EQ(unit.generators.size(), 1u);
  EXPECT_TRUE(unit.generators[0].is_constant());
}

TEST(Groebner, SaturationIsIdempotentOnRandomIdeals) {
  const Ring r(2, 2);
  std::mt19937 rng(2024);
  for (int k = 0; k < 50; ++k) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 2; ++g) gens.push_back(random_poly(r, rng, 3, 2));
    const auto c = Polynomial::variable(r, 1 + k % 2, 1 + (k / 2) % 2);
    const auto once = saturate({r, gens}, c);
    const auto twice = saturate(once, c);
    EXPECT_EQ(once.generators, twice.generators) << k;
    // I ⊆ (I : c^inf).
    for (const auto& g : gens) EXPECT_TRUE(in_ideal(g, once.generators));
  }
}

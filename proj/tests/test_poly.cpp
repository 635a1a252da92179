#include <gtest/gtest.h>

#include <random>

#include "msv/poly.hpp"
#include "oracles.hpp"

using namespace msv;
using namespace msv::poly;

namespace {

Polynomial random_poly(const Ring& ring, std::mt19937& rng, int terms,
                       int max_deg) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> row(1, ring.rows());
  std::uniform_int_distribution<int> col(1, ring.cols());
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    const int d = deg(rng);
    for (int e = 0; e < d; ++e) m = m * Monomial::variable(ring.slot(row(rng), col(rng)));
    out.push_back({Rational(coef(rng), 1 + (k % 3)), m});
  }
  return Polynomial::from_terms(ring, out);
}

// Leibniz expansion straight from the definition.
Polynomial leibniz(const Ring& ring, const std::vector<int>& rows,
                   const std::vector<int>& cols) {
  std::vector<int> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial out(ring);
  do {
    Polynomial term = Polynomial::constant(ring, oracle::sign(perm));
    for (std::size_t i = 0; i < rows.size(); ++i)
      term = term * Polynomial::variable(ring, rows[i], cols[perm[i]]);
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Lex comparison with variables ranked x[1,n] > ... > x[1,1] > x[2,n] > ...
int antidiagonal_lex(const Ring& ring, const Monomial& a, const Monomial& b) {
  for (int i = 1; i <= ring.rows(); ++i)
    for (int j = ring.cols(); j >= 1; --j) {
      const int s = ring.slot(i, j);
      if (a.exponent(s) != b.exponent(s)) return a.exponent(s) > b.exponent(s) ? 1 : -1;
    }
  return 0;
}

}  // namespace

TEST(Poly, RingLayout) {
  const Ring ring(3, 3);
  EXPECT_EQ(ring.num_vars(), 10);
  EXPECT_EQ(ring.var_name(0), "t");
  EXPECT_EQ(ring.var_name(ring.slot(2, 3)), "x[2,3]");
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) EXPECT_EQ(ring.cell_of(ring.slot(i, j)), (Cell{i, j}));
  EXPECT_THROW(Ring(8, 8), DomainError);
  EXPECT_THROW(ring.slot(4, 1), DomainError);
}

TEST(Poly, RingAxiomsOnRandomPolynomials) {
  const Ring ring(3, 3);
  std::mt19937 rng(11);
  for (int k = 0; k < 100; ++k) {
    const auto a = random_poly(ring, rng, 5, 3);
    const auto b = random_poly(ring, rng, 5, 3);
    const auto c = random_poly(ring, rng, 4, 2);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * Polynomial::constant(ring, 1), a);
    EXPECT_TRUE((a * Polynomial(ring)).is_zero());
    // Terms strictly descending.
    const auto p = a * b;
    for (std::size_t i = 1; i < p.terms().size(); ++i)
      EXPECT_GT(p.terms()[i - 1].mono, p.terms()[i].mono);
  }
}

TEST(Poly, AliasedAddition) {
  const Ring ring(2, 2);
  auto f = Polynomial::parse(ring, "x[1,1] - 2*x[2,2]");
  f += f;
  EXPECT_EQ(f, Polynomial::parse(ring, "2*x[1,1] - 4*x[2,2]"));
  f -= f;
  EXPECT_TRUE(f.is_zero());
}

TEST(Poly, MonomialOrderIsAntidiagonalLex) {
  const Ring ring(3, 3);
  std::mt19937 rng(5);
  std::vector<Monomial> ms;
  for (int k = 0; k < 60; ++k) {
    const auto f = random_poly(ring, rng, 1, 4);
    if (!f.is_zero()) ms.push_back(f.leading_monomial());
  }
  for (const auto& a : ms) {
    for (const auto& b : ms) {
      const int expect = antidiagonal_lex(ring, a, b);
      const auto got = a <=> b;
      EXPECT_EQ(got < 0, expect < 0);
      EXPECT_EQ(got == 0, expect == 0);
      // Multiplicative compatibility.
      for (const auto& c : ms) {
        if (a < b) EXPECT_LT(a * c, b * c);
      }
    }
    EXPECT_GE(a, Monomial());
  }
}

TEST(Poly, EliminationOrderPutsAuxFirst) {
  const Ring ring(2, 2);
  const Monomial t = Monomial::variable(Ring::aux_slot());
  const Monomial big = Monomial::variable(ring.slot(1, 2), 5);
  EXPECT_EQ(compare(t, big, TermOrder::Elimination), std::strong_ordering::greater);
  EXPECT_EQ(compare(big, Monomial::variable(ring.slot(1, 1)), TermOrder::Elimination),
            std::strong_ordering::greater);
}

TEST(Poly, LeadingTermOfEveryMinorIsItsAntidiagonal) {
  const Ring ring(5, 5);
  for (int t = 1; t <= 5; ++t) {
    for (const auto& rows : subsets(5, t)) {
      for (const auto& cols : subsets(5, t)) {
        const Polynomial m = minor(ring, rows, cols);
        Monomial anti;
        for (int k = 0; k < t; ++k)
          anti = anti * Monomial::variable(ring.slot(rows[k], cols[t - 1 - k]));
        EXPECT_EQ(m.leading_monomial(), anti);
        EXPECT_EQ(antidiagonal(ring, rows, cols), anti);
        EXPECT_EQ(m.leading_coefficient(), t * (t - 1) / 2 % 2 == 0 ? 1 : -1);
        EXPECT_EQ(m.size(), static_cast<std::size_t>(std::tgamma(t + 1) + 0.5));
      }
    }
  }
}

TEST(Poly, MinorMatchesLeibniz) {
  const Ring ring(6, 6);
  for (int t = 1; t <= 6; ++t) {
    const auto rs = subsets(6, t);
    for (std::size_t k = 0; k < rs.size(); k += 3) {
      const auto& rows = rs[k];
      const auto& cols = rs[(k * 7 + 1) % rs.size()];
      EXPECT_EQ(minor(ring, rows, cols), leibniz(ring, rows, cols));
    }
  }
}

TEST(Poly, CanonicalRendering) {
  const Ring ring(2, 4);
  const std::vector<int> rows{1, 2}, cols{3, 4};
  const Polynomial m = minor(ring, rows, cols);
  EXPECT_EQ(m.to_string(), "-x[1,4]*x[2,3] + x[1,3]*x[2,4]");
  EXPECT_EQ(Polynomial::parse(ring, m.to_string()), m);
  const auto f = Polynomial::parse(ring, "1/2*x[1,1]^2*t - 3 + x[2,4]");
  EXPECT_EQ(Polynomial::parse(ring, f.to_string()), f);
  EXPECT_EQ(Polynomial(ring).to_string(), "0");
  EXPECT_THROW(Polynomial::parse(ring, "x[3,1]"), DomainError);
  EXPECT_THROW(Polynomial::parse(ring, "x[1,1] +"), DomainError);
}

TEST(Poly, SubstituteAndContent) {
  const Ring ring(2, 2);
  const auto f = Polynomial::parse(ring, "x[1,1]*x[2,2] - x[1,2]*x[2,1]");
  std::vector<std::optional<Polynomial>> images(ring.num_vars());
  images[ring.slot(1, 1)] = Polynomial::parse(ring, "x[1,1] + x[1,2]");
  EXPECT_EQ(f.substitute(images),
            Polynomial::parse(ring, "x[1,1]*x[2,2] + x[1,2]*x[2,2] - x[1,2]*x[2,1]"));
  const auto g = Polynomial::parse(ring, "x[1,1]^2*x[2,2] - 2*x[1,1]*x[1,2]");
  EXPECT_EQ(g.monomial_content(), Monomial::variable(ring.slot(1, 1)));
  EXPECT_EQ(g.divided_by(g.monomial_content()),
            Polynomial::parse(ring, "x[1,1]*x[2,2] - 2*x[1,2]"));
  EXPECT_EQ(g.monic().leading_coefficient(), 1);
  EXPECT_TRUE(f.is_homogeneous());
  EXPECT_FALSE(Polynomial::parse(ring, "x[1,1] + 1").is_homogeneous());
}

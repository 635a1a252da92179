#include "msv/ci.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <unordered_map>

#include "msv/detideal.hpp"
#include "msv/linalg.hpp"

namespace msv {

namespace {

using poly::Polynomial;

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int k = lo; k <= hi; ++k) v.push_back(k);
  return v;
}

Polynomial block_determinant(const poly::Ring& ring, Cell c, int r) {
  const auto rows = range(c.p - r, c.p);
  const auto cols = range(c.q - r, c.q);
  return poly::minor(ring, rows, cols);
}

std::shared_ptr<const CIReport> classify(const Permutation& w);

// Blocks recur with fresh labels; entries are value-equal so a per-thread
// cache is enough.
thread_local std::unordered_map<std::string, std::shared_ptr<const CIReport>>
    t_cache;

std::shared_ptr<const CIReport> classify_cached(const Permutation& w) {
  const std::string key = to_string(w);
  if (auto it = t_cache.find(key); it != t_cache.end()) return it->second;
  auto report = classify(w);
  t_cache.emplace(key, report);
  return report;
}

std::shared_ptr<const CIReport> classify(const Permutation& w) {
  auto report = std::make_shared<CIReport>();
  report->w = w;
  const Diagram d = diagram(w);
  report->codim = static_cast<int>(d.size());
  const Lemma51Result lemma = lemma51_check(w);

  bool ok = true;
  for (const Cell& c : d.rank_positive()) {
    CertificateNode node;
    node.cell = c;
    node.rank = d.rank(c);
    const Block b = submatrix_w(w, c);
    node.is_permutation = b.is_permutation;
    std::string reason;
    if (b.is_permutation) {
      node.child = classify_cached(b.as_permutation());
      if (!node.child->verdict) reason = "block-not-ci";
    } else {
      reason = "block-not-permutation";
    }
    if (!reason.empty() && ok) {
      ok = false;
      const bool lemma_hit = std::any_of(
          lemma.violations.begin(), lemma.violations.end(),
          [&](const Lemma51Violation& v) { return v.cell == c; });
      report->witness = CIWitness{c, reason, lemma_hit};
    }
    report->certificate.push_back(std::move(node));
  }
  report->verdict = ok;
  if (ok) {
    const poly::Ring ring(w.rows(), w.cols());
    std::vector<Polynomial> gens;
    for (const Cell& c : d.rank_zero()) {
      gens.push_back(Polynomial::variable(ring, c.p, c.q));
    }
    for (const Cell& c : d.rank_positive()) {
      gens.push_back(block_determinant(ring, c, d.rank(c)));
    }
    report->generators = std::move(gens);
  }
  return report;
}

// Monomials of total degree k in slots [first, last).
void monomials_of_degree(int first, int last, int k,
                         std::vector<poly::Monomial>& out) {
  poly::Monomial cur;
  auto rec = [&](auto&& self, int slot, int left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (slot >= last) return;
    for (int e = left; e >= 0; --e) {
      cur.set_exponent(slot, e);
      self(self, slot + 1, left - e);
    }
    cur.set_exponent(slot, 0);
  };
  rec(rec, first, k);
}

class ColumnIndex {
 public:
  linalg::IntRow row(const Polynomial& f) {
    linalg::IntRow r;
    r.reserve(f.size());
    for (const auto& t : f.terms()) {
      if (t.coef.get_den() != 1) {
        throw DomainError("generator with non-integer coefficient");
      }
      r.emplace_back(id(t.mono), t.coef.get_num());
    }
    std::sort(r.begin(), r.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
  }

 private:
  std::uint32_t id(const poly::Monomial& m) {
    auto [it, fresh] =
        ids_.emplace(m, static_cast<std::uint32_t>(ids_.size()));
    return it->second;
  }
  std::unordered_map<poly::Monomial, std::uint32_t, poly::MonomialHash> ids_;
};

template <class MakeEchelon>
std::vector<int> profile_with(const std::vector<Polynomial>& gens,
                              int num_vars, MakeEchelon make) {
  int top = 0;
  for (const auto& g : gens) top = std::max(top, g.degree());
  std::vector<int> mu(static_cast<std::size_t>(top) + 1, 0);
  std::map<int, std::vector<poly::Monomial>> multipliers;
  for (int d = 1; d <= top; ++d) {
    ColumnIndex cols;
    std::vector<linalg::IntRow> lower;  // spans (m I)_d
    for (const auto& g : gens) {
      const int k = d - g.degree();
      if (k < 1) continue;
      auto& us = multipliers[k];
      if (us.empty()) monomials_of_degree(1, num_vars, k, us);
      for (const auto& u : us) lower.push_back(cols.row(g.times(u)));
    }
    std::stable_sort(lower.begin(), lower.end(),
                     [](const auto& a, const auto& b) {
                       return a.size() < b.size();
                     });
    auto e = make();
    for (auto& r : lower) e.insert(std::move(r));
    for (const auto& g : gens) {
      if (g.degree() != d) continue;
      if (e.insert(cols.row(g))) ++mu[d];
    }
  }
  return mu;
}

}  // namespace

CIReport is_complete_intersection(const PartialPermutation& w) {
  const Permutation full =
      w.is_permutation() ? w : extend_to_permutation(w);
  return *classify_cached(full);
}

std::vector<poly::Polynomial> ci_generators(const Permutation& w) {
  const CIReport r = is_complete_intersection(w);
  if (!r.verdict) {
    throw DomainError(to_string(r.w) + " is not a complete intersection");
  }
  return *r.generators;
}

Lemma51Result lemma51_check(const Permutation& w) {
  Lemma51Result out;
  const Diagram d = diagram(w);
  for (const Cell& c : d.rank_positive()) {
    const int r = d.rank(c);
    for (int i = 1; i <= r; ++i) {
      const Cell north{c.p - i, c.q};
      const Cell west{c.p, c.q - i};
      if (d.contains(north)) out.violations.push_back({c, i, north});
      if (d.contains(west)) out.violations.push_back({c, i, west});
    }
  }
  const auto ess = essential_set(w);
  for (const Cell& c : d.rank_positive()) {
    const bool found = std::any_of(ess.begin(), ess.end(),
                                   [&](const RankedCell& e) { return e.cell == c; });
    if (!found) out.non_essential.push_back(c);
  }
  out.ok = out.violations.empty();
  out.essential_ok = out.non_essential.empty();
  return out;
}

std::vector<int> minimal_generator_profile(const Permutation& w,
                                           RankOptions opts) {
  if (!w.is_permutation()) throw DomainError("needs a full permutation");
  const SchubertIdeal ideal = fulton_generators(w);
  const auto gens = ideal.generators();
  const int num_vars = ideal.ring.num_vars();
  if (opts.field == CoefficientField::Prime) {
    const std::uint32_t p = opts.prime;
    return profile_with(
        gens, num_vars, [p] { return linalg::ModularEchelon(p); });
  }
  return profile_with(
      gens, num_vars, [] { return linalg::RationalEchelon(); });
}

int minimal_generator_count(const Permutation& w, RankOptions opts) {
  const auto mu = minimal_generator_profile(w, opts);
  int total = 0;
  for (int m : mu) total += m;
  return total;
}

std::uint32_t default_prime() {
  if (const char* env = std::getenv("MSVKIT_PRIME")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v < (1ul << 31) &&
        linalg::is_prime(static_cast<std::uint32_t>(v))) {
      return static_cast<std::uint32_t>(v);
    }
  }
  return 32003;
}

}  // namespace msv

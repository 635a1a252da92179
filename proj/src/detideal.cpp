#include "msv/detideal.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace msv {

// ------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> generators)
    : ring_(ring) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
      if (i != j && generators[j].divides(generators[i])) redundant = true;
    }
    if (!redundant) gens_.push_back(generators[i]);
  }
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains_all_terms(const Polynomial& f) const {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const poly::Term& t) { return contains(t.mono); });
}

MonomialIdeal MonomialIdeal::with(const Monomial& m) const {
  auto g = gens_;
  g.push_back(m);
  return MonomialIdeal(ring_, std::move(g));
}

MonomialIdeal MonomialIdeal::quotient(const Monomial& m) const {
  std::vector<Monomial> out;
  for (const auto& g : gens_) out.push_back(g.lcm(m) / m);
  return MonomialIdeal(ring_, std::move(out));
}

std::vector<std::string> MonomialIdeal::rendered() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.to_string(ring_));
  return out;
}

// ------------------------------------------------------- SchubertIdeal

std::vector<Polynomial> SchubertIdeal::generators() const {
  std::vector<Polynomial> out;
  out.reserve(minors.size());
  for (const auto& m : minors) out.push_back(m.poly);
  return out;
}

poly::IdealPresentation SchubertIdeal::presentation() const {
  return {ring, generators()};
}

std::vector<FultonMinor> SchubertIdeal::pruned_minors() const {
  std::vector<Monomial> linear;
  std::vector<FultonMinor> out;
  for (const auto& m : minors) {
    if (m.rows.size() != 1) continue;
    const Monomial v = m.poly.leading_monomial();
    if (std::find(linear.begin(), linear.end(), v) != linear.end()) continue;
    linear.push_back(v);
    out.push_back(m);
  }
  for (const auto& m : minors) {
    if (m.rows.size() == 1) continue;
    if (monomial_quotient_membership(m.poly, linear)) continue;
    const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& o) {
      return o.poly == m.poly;
    });
    if (!seen) out.push_back(m);
  }
  return out;
}

std::vector<Polynomial> SchubertIdeal::pruned_generators() const {
  std::vector<Polynomial> out;
  for (const auto& m : pruned_minors()) out.push_back(m.poly);
  return out;
}

Ring ring_for(const PartialPermutation& w) {
  return Ring(w.rows(), w.cols());
}

SchubertIdeal fulton_generators(const PartialPermutation& w,
                                GeneratorCells which) {
  SchubertIdeal out{w, ring_for(w), {}, {}};
  if (which == GeneratorCells::Essential) {
    out.cells = essential_set(w);
  } else {
    const Diagram d = diagram(w);
    for (const auto& c : d.cells) out.cells.push_back({c, d.rank(c)});
  }
  for (const auto& rc : out.cells) {
    const int size = rc.rank + 1;
    for (const auto& rows : poly::subsets(rc.cell.p, size)) {
      for (const auto& cols : poly::subsets(rc.cell.q, size)) {
        out.minors.push_back(
            {rc.cell, rows, cols, poly::minor(out.ring, rows, cols)});
      }
    }
  }
  return out;
}

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

long long fulton_generator_count(const PartialPermutation& w) {
  long long total = 0;
  for (const auto& rc : essential_set(w)) {
    total += binomial(rc.cell.p, rc.rank + 1) * binomial(rc.cell.q, rc.rank + 1);
  }
  return total;
}

MonomialIdeal antidiagonal_ideal(const PartialPermutation& w) {
  const Ring ring = ring_for(w);
  std::vector<Monomial> gens;
  for (const auto& rc : essential_set(w)) {
    const int size = rc.rank + 1;
    for (const auto& rows : poly::subsets(rc.cell.p, size)) {
      for (const auto& cols : poly::subsets(rc.cell.q, size)) {
        gens.push_back(poly::antidiagonal(ring, rows, cols));
      }
    }
  }
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal leading_ideal(const Ring& ring,
                            const std::vector<Polynomial>& basis) {
  std::vector<Monomial> lms;
  for (const auto& g : basis)
    if (!g.is_zero()) lms.push_back(g.leading_monomial());
  return MonomialIdeal(ring, std::move(lms));
}

GroebnerCheck verify_groebner(const PartialPermutation& w) {
  return verify_groebner(w, fulton_generators(w).generators());
}

GroebnerCheck verify_groebner(const PartialPermutation& w,
                              const std::vector<Polynomial>& generators) {
  const Ring ring = ring_for(w);
  auto basis = poly::buchberger({ring, generators});
  MonomialIdeal lead = leading_ideal(ring, basis);
  MonomialIdeal anti = antidiagonal_ideal(w);
  const bool match = lead == anti;
  return {match, std::move(lead), std::move(anti), std::move(basis)};
}

// ---------------------------------------------------------- codimension

namespace {

// Minimum hitting set over edges given as variable bitmasks.
class VertexCover {
 public:
  explicit VertexCover(std::vector<std::uint64_t> edges)
      : edges_(std::move(edges)) {}

  int solve() {
    best_ = greedy();
    search(0, 0);
    return best_;
  }

 private:
  int greedy() const {
    std::uint64_t chosen = 0;
    int count = 0;
    while (true) {
      int hits[64] = {};
      bool any = false;
      for (auto e : edges_) {
        if (e & chosen) continue;
        any = true;
        for (auto b = e; b; b &= b - 1) ++hits[std::countr_zero(b)];
      }
      if (!any) return count;
      const int v =
          static_cast<int>(std::max_element(hits, hits + 64) - hits);
      chosen |= std::uint64_t{1} << v;
      ++count;
    }
  }

  // Lower bound: greedily packed pairwise-disjoint uncovered edges.
  int packing_bound(std::uint64_t chosen) const {
    std::uint64_t used = 0;
    int count = 0;
    for (auto e : edges_) {
      if ((e & chosen) || (e & used)) continue;
      used |= e;
      ++count;
    }
    return count;
  }

  void search(std::uint64_t chosen, int size) {
    if (size >= best_) return;
    const std::uint64_t* pick = nullptr;
    for (const auto& e : edges_) {
      if (e & chosen) continue;
      if (!pick || std::popcount(e) < std::popcount(*pick)) pick = &e;
    }
    if (!pick) {
      best_ = size;
      return;
    }
    if (size + packing_bound(chosen) >= best_) return;
    for (auto b = *pick; b; b &= b - 1) {
      search(chosen | (b & -b), size + 1);
    }
  }

  std::vector<std::uint64_t> edges_;
  int best_ = 0;
};

}  // namespace

int monomial_codim(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) {
    throw DomainError("monomial_codim needs a squarefree monomial ideal");
  }
  std::vector<std::uint64_t> edges;
  for (const auto& g : ideal.generators()) {
    if (g.is_one()) throw DomainError("unit ideal has no finite height");
    edges.push_back(g.support());
  }
  std::sort(edges.begin(), edges.end(), [](auto a, auto b) {
    return std::popcount(a) < std::popcount(b);
  });
  return VertexCover(std::move(edges)).solve();
}

bool monomial_quotient_membership(const Polynomial& f,
                                  const std::vector<Monomial>& gens) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const poly::Term& t) {
                       return std::any_of(gens.begin(), gens.end(),
                                          [&](const Monomial& g) {
                                            return g.divides(t.mono);
                                          });
                     });
}

bool is_nonzerodivisor_on_monomial_quotient(int slot,
                                            const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) {
    throw DomainError("nonzerodivisor test needs a squarefree ideal");
  }
  const Monomial c = Monomial::variable(slot);
  for (const auto& g : ideal.generators()) {
    if (!c.divides(g)) continue;
    if (!ideal.contains(g / c)) return false;
  }
  return true;
}

}  // namespace msv

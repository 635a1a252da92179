#include "msv/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>

namespace msv::poly {

namespace {

std::atomic<bool> g_audit_enabled{false};
std::atomic<std::uint64_t> g_audit_checked{0};
std::atomic<std::uint64_t> g_audit_failed{0};

// Reducers ordered by increasing leading monomial, stable in input order.
class ReducerSet {
 public:
  explicit ReducerSet(std::span<const Polynomial> divisors) {
    for (const auto& g : divisors) {
      if (g.is_zero()) continue;
      items_.push_back(&g);
    }
    std::stable_sort(items_.begin(), items_.end(),
                     [](const Polynomial* a, const Polynomial* b) {
                       return a->leading_monomial() < b->leading_monomial();
                     });
  }

  ReducerSet() = default;

  void insert(const Polynomial* g) {
    auto pos = std::upper_bound(
        items_.begin(), items_.end(), g,
        [](const Polynomial* a, const Polynomial* b) {
          return a->leading_monomial() < b->leading_monomial();
        });
    items_.insert(pos, g);
  }

  void erase(const Polynomial* g) {
    items_.erase(std::remove(items_.begin(), items_.end(), g), items_.end());
  }

  const Polynomial* find(const Monomial& m) const {
    for (const Polynomial* g : items_) {
      const Monomial& lm = g->leading_monomial();
      if (m < lm) break;  // a divisor is never larger than m
      if (lm.divides(m)) return g;
    }
    return nullptr;
  }

 private:
  std::vector<const Polynomial*> items_;
};

Polynomial reduce(const Polynomial& f, const ReducerSet& reducers) {
  Polynomial p = f;
  std::vector<Term> rest;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    if (const Polynomial* g = reducers.find(lt.mono)) {
      const Rational q = lt.coef / g->leading_coefficient();
      const Monomial m = lt.mono / g->leading_monomial();
      p.subtract_multiple(q, m, *g);
    } else {
      rest.push_back(lt);
      p -= Polynomial::monomial(p.ring(), lt.mono, lt.coef);
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(rest));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

bool pair_before(const Pair& a, const Pair& b) {
  if (a.lcm != b.lcm) return a.lcm < b.lcm;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

// Gebauer-Moeller update: applies the coprime and chain criteria when a new
// element h (index `h`) joins the basis.
void update(const std::deque<Polynomial>& polys, std::vector<std::size_t>& basis,
            std::vector<Pair>& pairs, std::size_t h) {
  const Monomial& lh = polys[h].leading_monomial();
  std::vector<Pair> cand;
  for (std::size_t g : basis) {
    cand.push_back({g, h, lh.lcm(polys[g].leading_monomial())});
  }
  // Keep a candidate if coprime, or if no other candidate has an lcm that
  // properly divides its lcm (ties broken towards the earlier one).
  std::vector<Pair> kept;
  for (std::size_t a = 0; a < cand.size(); ++a) {
    const bool coprime = lh.coprime(polys[cand[a].i].leading_monomial());
    bool dominated = false;
    if (!coprime) {
      for (std::size_t b = 0; b < cand.size() && !dominated; ++b) {
        if (a == b) continue;
        if (!cand[b].lcm.divides(cand[a].lcm)) continue;
        if (cand[b].lcm != cand[a].lcm || b < a) dominated = true;
      }
    }
    if (!dominated) kept.push_back(cand[a]);
  }
  // Drop pairs with coprime leading monomials (first criterion); they were
  // kept above only to dominate others.
  std::vector<Pair> fresh;
  for (auto& p : kept) {
    if (!lh.coprime(polys[p.i].leading_monomial())) fresh.push_back(p);
  }
  // Chain criterion on old pairs.
  std::vector<Pair> old;
  for (auto& p : pairs) {
    const bool drop = lh.divides(p.lcm) &&
                      lh.lcm(polys[p.i].leading_monomial()) != p.lcm &&
                      lh.lcm(polys[p.j].leading_monomial()) != p.lcm;
    if (!drop) old.push_back(std::move(p));
  }
  pairs = std::move(old);
  for (auto& p : fresh) pairs.push_back(std::move(p));
  std::vector<std::size_t> next;
  for (std::size_t g : basis) {
    if (!lh.divides(polys[g].leading_monomial())) next.push_back(g);
  }
  next.push_back(h);
  basis = std::move(next);
}

void audit(std::span<const Polynomial> basis, TermOrder ord) {
  if (!g_audit_enabled.load(std::memory_order_relaxed)) return;
  const bool ok = is_groebner_basis(basis, ord) && is_reduced(basis);
  g_audit_checked.fetch_add(1, std::memory_order_relaxed);
  if (!ok) g_audit_failed.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

Polynomial normal_form(const Polynomial& f,
                       std::span<const Polynomial> divisors, TermOrder) {
  return reduce(f, ReducerSet(divisors));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial s = f.times(l / f.leading_monomial(),
                         1 / f.leading_coefficient());
  s.subtract_multiple(1 / g.leading_coefficient(), l / g.leading_monomial(),
                      g);
  return s;
}

std::vector<Polynomial> buchberger(const IdealPresentation& ideal,
                                   TermOrder ord) {
  return buchberger(ideal, ord, nullptr);
}

std::vector<Polynomial> buchberger(const IdealPresentation& ideal,
                                   TermOrder ord, BuchbergerStats* stats) {
  const Ring ring = ideal.ring;
  std::deque<Polynomial> polys;  // stable addresses for the reducer set
  std::vector<std::size_t> basis;
  std::vector<Pair> pairs;
  BuchbergerStats local;

  auto unit = [&] {
    std::vector<Polynomial> one{Polynomial::constant(ring, 1)};
    audit(one, ord);
    return one;
  };

  ReducerSet reducers;

  auto add = [&](Polynomial h) -> bool {
    h = h.monic();
    polys.push_back(std::move(h));
    const std::size_t idx = polys.size() - 1;
    if (polys[idx].is_constant()) return false;
    const Monomial& lh = polys[idx].leading_monomial();
    for (std::size_t g : basis) {
      if (lh.divides(polys[g].leading_monomial())) reducers.erase(&polys[g]);
    }
    update(polys, basis, pairs, idx);
    reducers.insert(&polys[idx]);
    return true;
  };

  for (const auto& g : ideal.generators) {
    if (!(g.ring() == ring)) throw DomainError("generator ring mismatch");
    Polynomial h = reduce(g, reducers);
    if (h.is_zero()) continue;
    if (!add(std::move(h))) return unit();
  }

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_before);
    const Pair p = *it;
    pairs.erase(it);
    ++local.pairs_considered;
    Polynomial s = s_polynomial(polys[p.i], polys[p.j]);
    Polynomial h = reduce(s, reducers);
    ++local.pairs_reduced;
    if (h.is_zero()) {
      ++local.zero_reductions;
      continue;
    }
    if (!add(std::move(h))) {
      if (stats) *stats = local;
      return unit();
    }
  }

  // Inter-reduce the minimal basis.
  std::vector<Polynomial> minimal;
  for (std::size_t g : basis) minimal.push_back(polys[g]);
  std::sort(minimal.begin(), minimal.end(),
            [](const Polynomial& a, const Polynomial& b) {
              return a.leading_monomial() < b.leading_monomial();
            });
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t m = 0; m < minimal.size(); ++m)
      if (m != k) others.push_back(minimal[m]);
    const Term lt = minimal[k].leading_term();
    Polynomial tail = minimal[k] - Polynomial::monomial(ring, lt.mono, lt.coef);
    Polynomial r = reduce(tail, ReducerSet(others));
    r += Polynomial::monomial(ring, lt.mono, lt.coef);
    out.push_back(r.monic());
  }
  if (stats) *stats = local;
  audit(out, ord);
  return out;
}

bool is_groebner_basis(std::span<const Polynomial> basis, TermOrder ord) {
  const ReducerSet rs(basis);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].is_zero() || basis[j].is_zero()) continue;
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis, ord)
               .is_zero()) {
        return false;
      }
    }
  }
  return true;
}

bool is_reduced(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero() || basis[i].leading_coefficient() != 1) {
      return false;
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& lj = basis[j].leading_monomial();
      for (const auto& t : basis[i].terms()) {
        if (lj.divides(t.mono)) return false;
      }
    }
  }
  return true;
}

bool in_ideal(const Polynomial& f, std::span<const Polynomial> basis) {
  return normal_form(f, basis).is_zero();
}

bool same_ideal(std::span<const Polynomial> basis_a,
                std::span<const Polynomial> basis_b) {
  for (const auto& f : basis_a)
    if (!in_ideal(f, basis_b)) return false;
  for (const auto& f : basis_b)
    if (!in_ideal(f, basis_a)) return false;
  return true;
}

IdealPresentation saturate(const IdealPresentation& ideal,
                           const Polynomial& c) {
  if (c.is_zero()) throw DomainError("cannot saturate by zero");
  const Ring ring = ideal.ring;
  IdealPresentation ext{ring, ideal.generators};
  ext.generators.push_back(Polynomial::constant(ring, 1) -
                           Polynomial::aux(ring) * c);
  const auto gb = buchberger(ext, TermOrder::Elimination);
  IdealPresentation out{ring, {}};
  for (const auto& g : gb)
    if (g.is_aux_free()) out.generators.push_back(g);
  return out;
}

void set_groebner_audit(bool enabled) {
  g_audit_enabled.store(enabled, std::memory_order_relaxed);
}

GroebnerAudit groebner_audit() {
  return {g_audit_checked.load(), g_audit_failed.load()};
}

void reset_groebner_audit() {
  g_audit_checked.store(0);
  g_audit_failed.store(0);
}

}  // namespace msv::poly

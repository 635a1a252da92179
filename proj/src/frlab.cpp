#include "msv/frlab.hpp"

#include <algorithm>

namespace msv::frlab {

namespace {

Cell require_c(const Permutation& w) {
  const auto c = find_c(w);
  if (!c) {
    throw DomainError(to_string(w) +
                      " is regular: E_{>0}(w) is empty and c is undefined");
  }
  return *c;
}

std::string join_indices(const std::vector<int>& idx) {
  const bool wide = std::any_of(idx.begin(), idx.end(),
                                [](int v) { return v > 9; });
  std::string out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (wide && k > 0) out += ',';
    out += std::to_string(idx[k]);
  }
  return out;
}

}  // namespace

std::string minor_label(const std::vector<int>& rows,
                        const std::vector<int>& cols) {
  return "[" + join_indices(rows) + "|" + join_indices(cols) + "]";
}

std::optional<Cell> find_c(const Permutation& w) {
  if (!w.is_permutation()) throw DomainError("needs a full permutation");
  std::vector<Cell> positive;
  for (const auto& rc : essential_set(w))
    if (rc.rank > 0) positive.push_back(rc.cell);
  for (int i = 1; i <= w.rows(); ++i) {
    const int wi = *w.at(i);
    for (const Cell& e : positive) {
      if (e.p > i && e.q > wi) return Cell{i, wi};
    }
  }
  return std::nullopt;
}

bool verify_D0_window(const Permutation& w, Cell c) {
  if (w.at(c.p) != c.q) return false;
  const Diagram d = diagram(w);
  for (int p = 1; p <= c.p; ++p) {
    for (int q = 1; q <= c.q; ++q) {
      if (Cell{p, q} == c) continue;
      if (w.entry(p, q)) return false;
      if (!d.contains({p, q})) return false;
    }
  }
  for (const Cell& x : d.cells) {
    if (x.p <= c.p && d.rank(x) != 0) return false;
  }
  return true;
}

Lemma1Result verify_lemma1(const Permutation& w) {
  const Cell c = require_c(w);
  const Ring ring = ring_for(w);
  const Monomial cm = Monomial::variable(ring.slot(c.p, c.q));
  std::vector<Monomial> gens = antidiagonal_ideal(w).generators();
  gens.push_back(cm);
  Lemma1Result out;
  const int n = w.rows();
  for (int t = 1; t <= n; ++t) {
    for (const auto& rows : poly::subsets(n, t)) {
      for (const auto& cols : poly::subsets(n, t)) {
        if (!cm.divides(poly::antidiagonal(ring, rows, cols))) continue;
        const Polynomial delta = poly::minor(ring, rows, cols);
        if (!cm.divides(delta.leading_monomial())) continue;
        ++out.minors_checked;
        if (!monomial_quotient_membership(delta, gens)) {
          out.ok = false;
          out.counterexamples.push_back(minor_label(rows, cols));
        }
      }
    }
  }
  return out;
}

Lemma2Result verify_lemma2(const Permutation& w) {
  const Cell c = require_c(w);
  const Ring ring = ring_for(w);
  auto gens = fulton_generators(w).generators();
  gens.push_back(Polynomial::variable(ring, c.p, c.q));
  const auto basis = poly::buchberger({ring, gens});
  Lemma2Result out{false, false, leading_ideal(ring, basis),
                   antidiagonal_ideal(w).with(
                       Monomial::variable(ring.slot(c.p, c.q)))};
  out.contains_expected = std::all_of(
      out.expected.generators().begin(), out.expected.generators().end(),
      [&](const Monomial& m) { return out.initial.contains(m); });
  out.ok = out.initial == out.expected;
  return out;
}

bool verify_lemma3_nzd(const Permutation& w) {
  const Cell c = require_c(w);
  const MonomialIdeal j = antidiagonal_ideal(w);
  const int slot = j.ring().slot(c.p, c.q);
  const bool by_divisibility = is_nonzerodivisor_on_monomial_quotient(slot, j);
  const bool by_quotient = j.quotient(Monomial::variable(slot)) == j;
  if (by_divisibility != by_quotient) {
    throw std::logic_error("nonzerodivisor criteria disagree for " +
                           to_string(w));
  }
  return by_divisibility && !j.contains(Monomial::variable(slot));
}

Polynomial primed_cleared(const Polynomial& f, Cell c) {
  if (!f.is_homogeneous()) {
    throw DomainError("primed_cleared needs a homogeneous polynomial");
  }
  const Ring& ring = f.ring();
  const Polynomial cv = Polynomial::variable(ring, c.p, c.q);
  std::vector<std::optional<Polynomial>> images(
      static_cast<std::size_t>(ring.num_vars()));
  for (int p = 1; p <= ring.rows(); ++p) {
    for (int q = 1; q <= ring.cols(); ++q) {
      if (p == c.p || q == c.q) {
        images[ring.slot(p, q)] = cv * Polynomial::variable(ring, p, q);
      } else {
        images[ring.slot(p, q)] =
            cv * Polynomial::variable(ring, p, q) -
            Polynomial::variable(ring, p, c.q) *
                Polynomial::variable(ring, c.p, q);
      }
    }
  }
  // Variables on Γ are scaled by c as well so every term picks up exactly
  // c^deg, which keeps the result equal to c^deg(f)·f'.
  return f.substitute(images);
}

std::vector<Polynomial> LocalizationSetup::iprime_generators() const {
  auto out = cleared_generators;
  out.insert(out.end(), gamma_generators.begin(), gamma_generators.end());
  return out;
}

LocalizationSetup build_localization(const Permutation& w) {
  const Cell c = require_c(w);
  const Ring ring = ring_for(w);
  LocalizationSetup out{w, c, delete_row_col(w, c.p, c.q), {}, {}, {}, {}};
  const int n = w.rows();
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q)
      if (p == c.p || q == c.q) out.gamma.push_back({p, q});

  const SchubertIdeal reduced = fulton_generators(out.deletion.reduced);
  for (const auto& m : reduced.pruned_minors()) {
    std::vector<int> rows, cols;
    for (int r : m.rows) rows.push_back(out.deletion.original_row.at(r - 1));
    for (int q : m.cols) cols.push_back(out.deletion.original_col.at(q - 1));
    if (rows.size() == 1) {
      out.primed_names.push_back("x'[" + std::to_string(rows[0]) + "," +
                                 std::to_string(cols[0]) + "]");
    } else {
      out.primed_names.push_back(minor_label(rows, cols) + "'");
    }
    const Polynomial original = poly::minor(ring, rows, cols);
    Polynomial cleared = primed_cleared(original, c);
    const int c_slot = ring.slot(c.p, c.q);
    const int k = cleared.monomial_content().exponent(c_slot);
    const Monomial cpow = Monomial::variable(c_slot, k);
    out.cleared_generators.push_back(cleared.divided_by(cpow));
  }
  for (const Cell& g : out.gamma) {
    if (g.p < c.p || g.q < c.q) {
      out.gamma_generators.push_back(Polynomial::variable(ring, g.p, g.q));
    }
  }
  return out;
}

LocalizationCheck verify_I_equals_Iprime(const Permutation& w) {
  const LocalizationSetup setup = build_localization(w);
  const Ring ring = ring_for(w);
  const Polynomial cv = Polynomial::variable(ring, setup.c.p, setup.c.q);
  const auto fulton = fulton_generators(w).generators();
  const auto iprime = setup.iprime_generators();

  LocalizationCheck out;
  out.saturation_basis = poly::saturate({ring, fulton}, cv).generators;
  out.saturation_basis_prime = poly::saturate({ring, iprime}, cv).generators;
  out.iprime_in_i = std::all_of(iprime.begin(), iprime.end(), [&](const auto& f) {
    return poly::in_ideal(f, out.saturation_basis);
  });
  out.i_in_iprime = std::all_of(fulton.begin(), fulton.end(), [&](const auto& f) {
    return poly::in_ideal(f, out.saturation_basis_prime);
  });
  out.saturation_proper =
      !poly::in_ideal(Polynomial::constant(ring, 1), out.saturation_basis);
  out.ok = out.iprime_in_i && out.i_in_iprime && out.saturation_proper;
  return out;
}

VerificationReport verify_all(const Permutation& w, VerifyOptions opts) {
  VerificationReport r;
  r.w = w;
  r.c = find_c(w);
  if (!r.c) return r;
  r.skipped = false;
  r.d0_window = verify_D0_window(w, *r.c);
  r.lemma1 = verify_lemma1(w).ok;
  r.lemma2 = verify_lemma2(w).ok;
  r.lemma3_nzd = verify_lemma3_nzd(w);
  r.i_eq_iprime = opts.localization ? verify_I_equals_Iprime(w).ok : true;
  return r;
}

std::vector<Permutation> localization_sample_s5() {
  std::vector<Permutation> out;
  const Permutation anchor = parse_permutation("35142");
  bool has_anchor = false;
  for (const auto& w : all_permutations(5)) {
    if (!find_c(w) || coxeter_length(w) > 6) continue;
    if (w == anchor) has_anchor = true;
    out.push_back(w);
  }
  if (!has_anchor) out.push_back(anchor);
  return out;
}

}  // namespace msv::frlab

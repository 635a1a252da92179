#include "msv/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_map>

namespace msv::poly {

// ---------------------------------------------------------------- Ring

Ring::Ring(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw DomainError("ring needs a nonempty grid");
  if (1 + rows * cols > kMaxVars) {
    throw DomainError("grid " + std::to_string(rows) + "x" +
                      std::to_string(cols) + " exceeds " +
                      std::to_string(kMaxVars - 1) + " variables");
  }
}

int Ring::slot(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw DomainError("variable x[" + std::to_string(i) + "," +
                      std::to_string(j) + "] outside the grid");
  }
  return 1 + (i - 1) * cols_ + (cols_ - j);
}

Cell Ring::cell_of(int slot) const {
  if (slot < 1 || slot >= num_vars()) throw DomainError("not a grid slot");
  const int k = slot - 1;
  return {k / cols_ + 1, cols_ - k % cols_};
}

std::string Ring::var_name(int slot) const {
  if (slot == aux_slot()) return "t";
  const Cell c = cell_of(slot);
  return "x[" + std::to_string(c.p) + "," + std::to_string(c.q) + "]";
}

// ------------------------------------------------------------ Monomial

Monomial Monomial::variable(int slot, int power) {
  Monomial m;
  m.set_exponent(slot, power);
  return m;
}

void Monomial::set_exponent(int slot, int e) {
  if (slot < 0 || slot >= kMaxVars) throw DomainError("slot out of range");
  if (e < 0 || e > 255) throw DomainError("exponent out of range");
  degree_ += e - exps_[slot];
  exps_[slot] = static_cast<std::uint8_t>(e);
  if (e) {
    support_ |= std::uint64_t{1} << slot;
  } else {
    support_ &= ~(std::uint64_t{1} << slot);
  }
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](std::uint8_t e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  if ((support_ & ~other.support_) != 0) return false;
  if (degree_ > other.degree_) return false;
  for (int s = 0; s < kMaxVars; ++s)
    if (exps_[s] > other.exps_[s]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (int s = 0; s < kMaxVars; ++s) {
    const int e = exps_[s] + other.exps_[s];
    if (e > 255) throw DomainError("exponent overflow");
    m.exps_[s] = static_cast<std::uint8_t>(e);
  }
  m.support_ = support_ | other.support_;
  m.degree_ = degree_ + other.degree_;
  return m;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial m;
  for (int s = 0; s < kMaxVars; ++s) {
    const int e = exps_[s] - divisor.exps_[s];
    if (e < 0) throw DomainError("monomial division is not exact");
    m.exps_[s] = static_cast<std::uint8_t>(e);
    if (e) m.support_ |= std::uint64_t{1} << s;
  }
  m.degree_ = degree_ - divisor.degree_;
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  int deg = 0;
  for (int s = 0; s < kMaxVars; ++s) {
    m.exps_[s] = std::max(exps_[s], other.exps_[s]);
    deg += m.exps_[s];
  }
  m.support_ = support_ | other.support_;
  m.degree_ = deg;
  return m;
}

std::vector<int> Monomial::variables() const {
  std::vector<int> out;
  for (int s = 0; s < kMaxVars; ++s)
    if (exps_[s]) out.push_back(s);
  return out;
}

std::string Monomial::to_string(const Ring& ring) const {
  if (is_one()) return "1";
  // Natural reading order: t first, then row-major x[i,j].
  std::vector<int> slots = variables();
  std::sort(slots.begin(), slots.end(), [&](int a, int b) {
    if (a == Ring::aux_slot() || b == Ring::aux_slot()) return a < b;
    return ring.cell_of(a) < ring.cell_of(b);
  });
  std::string out;
  for (int s : slots) {
    if (!out.empty()) out += '*';
    out += ring.var_name(s);
    if (exps_[s] > 1) out += "^" + std::to_string(exps_[s]);
  }
  return out;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint8_t e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering compare(const Monomial& a, const Monomial& b,
                             TermOrder) {
  return a <=> b;
}

// ---------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({c, Monomial{}});
  return p;
}

Polynomial Polynomial::variable(Ring ring, int i, int j) {
  return monomial(ring, Monomial::variable(ring.slot(i, j)));
}

Polynomial Polynomial::aux(Ring ring) {
  return monomial(ring, Monomial::variable(Ring::aux_slot()));
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m,
                                const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({c, m});
  return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  Polynomial p(ring);
  for (auto& t : terms) {
    t.coef.canonicalize();
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) {
    throw DomainError("leading term of the zero polynomial");
  }
  return terms_.front();
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.mono.degree() == terms_.front().mono.degree();
  });
}

bool Polynomial::is_aux_free() const {
  return std::none_of(terms_.begin(), terms_.end(), [](const Term& t) {
    return t.mono.exponent(Ring::aux_slot()) != 0;
  });
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

void Polynomial::add_scaled(const Polynomial& other, const Rational& c,
                            const Monomial& m) {
  if (!(ring_ == other.ring_)) throw DomainError("ring mismatch");
  if (c == 0 || other.terms_.empty()) return;
  if (&other == this) {
    const Polynomial copy = other;
    add_scaled(copy, c, m);
    return;
  }
  const bool shift = !m.is_one();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end()) {
      out.push_back(std::move(*a++));
      continue;
    }
    Monomial bm = shift ? b->mono * m : b->mono;
    if (a == terms_.end() || bm > a->mono) {
      out.push_back({c * b->coef, std::move(bm)});
      ++b;
    } else if (a->mono > bm) {
      out.push_back(std::move(*a++));
    } else {
      Rational s = a->coef + c * b->coef;
      if (s != 0) out.push_back({std::move(s), std::move(bm)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  add_scaled(other, 1, Monomial{});
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  add_scaled(other, -1, Monomial{});
  return *this;
}

void Polynomial::subtract_multiple(const Rational& c, const Monomial& m,
                                   const Polynomial& g) {
  add_scaled(g, -c, m);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring_ == b.ring_)) throw DomainError("ring mismatch");
  Polynomial out(a.ring_);
  if (a.terms_.size() < b.terms_.size()) return b * a;
  for (const auto& t : b.terms_) out.add_scaled(a, t.coef, t.mono);
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial p(ring_);
  if (c == 0) return p;
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.coef *= c;
  return p;
}

Polynomial Polynomial::times(const Monomial& m, const Rational& c) const {
  Polynomial p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.coef * c, t.mono * m});
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  const Rational inv = 1 / terms_.front().coef;
  return scaled(inv);
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial{};
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) {
    Monomial next;
    for (int s : g.variables()) {
      next.set_exponent(s, std::min(g.exponent(s), t.mono.exponent(s)));
    }
    g = next;
    if (g.is_one()) break;
  }
  return g;
}

Polynomial Polynomial::divided_by(const Monomial& m) const {
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.coef, t.mono / m});
  return p;
}

Polynomial Polynomial::substitute(
    const std::vector<std::optional<Polynomial>>& images) const {
  Polynomial out(ring_);
  std::map<std::pair<int, int>, Polynomial> powers;
  auto power = [&](int slot, int e) -> const Polynomial& {
    auto key = std::make_pair(slot, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Polynomial r = constant(ring_, 1);
    for (int k = 0; k < e; ++k) r = r * *images[slot];
    return powers.emplace(key, std::move(r)).first->second;
  };
  for (const auto& t : terms_) {
    Monomial kept;
    Polynomial prod = constant(ring_, t.coef);
    for (int s : t.mono.variables()) {
      const int e = t.mono.exponent(s);
      if (s < static_cast<int>(images.size()) && images[s]) {
        prod = prod * power(s, e);
      } else {
        kept.set_exponent(s, e);
      }
    }
    out.add_scaled(prod, 1, kept);
  }
  return out;
}

namespace {

std::string coef_string(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    const bool neg = t.coef < 0;
    if (k == 0) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    const Rational a = abs(t.coef);
    if (t.mono.is_one()) {
      out += coef_string(a);
    } else {
      if (a != 1) out += coef_string(a) + "*";
      out += t.mono.to_string(ring_);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (!(a.terms_[k].mono == b.terms_[k].mono) ||
        a.terms_[k].coef != b.terms_[k].coef) {
      return false;
    }
  }
  return true;
}

// -------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(Ring ring, std::string_view text) : ring_(ring), s_(text) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term t = term();
      t.coef *= sign;
      terms.push_back(std::move(t));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("polynomial parse error at position " +
                      std::to_string(pos_ + 1) + ": " + what);
  }
  int integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected digit");
    }
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1'000'000'000) fail("integer too large");
    }
    return static_cast<int>(v);
  }
  Rational number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("expected denominator");
      }
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    Rational q(std::string(s_.substr(start, pos_ - start)));
    if (q.get_den() == 0) fail("zero denominator");
    q.canonicalize();
    return q;
  }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
    skip();
  }
  Term term() {
    Term t{1, Monomial{}};
    bool any = false;
    while (true) {
      skip();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coef *= number();
      } else if (c == 'x') {
        ++pos_;
        expect('[');
        const int i = integer();
        expect(',');
        const int j = integer();
        expect(']');
        multiply(t, ring_.slot(i, j));
      } else if (c == 't') {
        ++pos_;
        multiply(t, Ring::aux_slot());
      } else {
        fail("expected a factor");
      }
      any = true;
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    if (!any) fail("empty term");
    return t;
  }
  void multiply(Term& t, int slot) {
    skip();
    int e = 1;
    if (peek() == '^') {
      ++pos_;
      skip();
      e = integer();
    }
    t.mono = t.mono * Monomial::variable(slot, e);
  }

  Ring ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(Ring ring, std::string_view text) {
  return Parser(ring, text).parse();
}

Term leading_term(const Polynomial& f, TermOrder) { return f.leading_term(); }

// --------------------------------------------------------------- minors

namespace {

void check_indices(std::span<const int> idx, int bound, const char* what) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 1 || idx[k] > bound) {
      throw DomainError(std::string(what) + " index out of range");
    }
    if (k > 0 && idx[k] <= idx[k - 1]) {
      throw DomainError(std::string(what) +
                        " indices must be strictly increasing");
    }
  }
}

Polynomial leibniz(const Ring& ring, std::span<const int> rows,
                   std::span<const int> cols) {
  const std::size_t t = rows.size();
  std::vector<int> perm(t);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Term> terms;
  do {
    int inv = 0;
    for (std::size_t a = 0; a < t; ++a)
      for (std::size_t b = a + 1; b < t; ++b)
        if (perm[a] > perm[b]) ++inv;
    Monomial m;
    for (std::size_t a = 0; a < t; ++a) {
      m = m * Monomial::variable(ring.slot(rows[a], cols[perm[a]]));
    }
    terms.push_back({inv % 2 ? -1 : 1, m});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Polynomial::from_terms(ring, std::move(terms));
}

// Laplace expansion along the first remaining row, memoized on the
// remaining column set.
Polynomial cofactor(const Ring& ring, std::span<const int> rows,
                    std::span<const int> cols, std::size_t depth,
                    std::uint32_t col_mask,
                    std::unordered_map<std::uint32_t, Polynomial>& memo) {
  if (rows.size() - depth <= 4) {
    std::vector<int> c;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (col_mask & (1u << k)) c.push_back(cols[k]);
    return leibniz(ring, rows.subspan(depth), c);
  }
  if (auto it = memo.find(col_mask); it != memo.end()) return it->second;
  Polynomial acc(ring);
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (!(col_mask & (1u << k))) continue;
    Polynomial sub =
        cofactor(ring, rows, cols, depth + 1, col_mask & ~(1u << k), memo);
    acc += sub.times(Monomial::variable(ring.slot(rows[depth], cols[k])),
                     sign);
    sign = -sign;
  }
  memo.emplace(col_mask, acc);
  return acc;
}

}  // namespace

Polynomial minor(const Ring& ring, std::span<const int> rows,
                 std::span<const int> cols) {
  if (rows.size() != cols.size() || rows.empty()) {
    throw DomainError("minor needs equal, nonempty index lists");
  }
  check_indices(rows, ring.rows(), "row");
  check_indices(cols, ring.cols(), "column");
  if (rows.size() <= 4) return leibniz(ring, rows, cols);
  if (cols.size() > 31) throw DomainError("minor too large");
  std::unordered_map<std::uint32_t, Polynomial> memo;
  const std::uint32_t all = (1u << cols.size()) - 1;
  return cofactor(ring, rows, cols, 0, all, memo);
}

Monomial antidiagonal(const Ring& ring, std::span<const int> rows,
                      std::span<const int> cols) {
  if (rows.size() != cols.size()) throw DomainError("ragged minor");
  Monomial m;
  const std::size_t t = rows.size();
  for (std::size_t a = 0; a < t; ++a) {
    m = m * Monomial::variable(ring.slot(rows[a], cols[t - 1 - a]));
  }
  return m;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace msv::poly

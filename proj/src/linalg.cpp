#include "msv/linalg.hpp"

#include <stdexcept>

namespace msv::linalg {

namespace {

void remove_content(IntRow& row) {
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(),
                                          g.get_mpz_t());
  }
}

// row := (b/g)*row - (a/g)*piv, where a, b are the leading entries.
IntRow combine(const IntRow& row, const IntRow& piv) {
  const mpz_class& a = row.front().second;
  const mpz_class& b = piv.front().second;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const mpz_class fr = b / g;
  const mpz_class fp = a / g;
  IntRow out;
  out.reserve(row.size() + piv.size());
  auto x = row.begin() + 1;
  auto y = piv.begin() + 1;
  while (x != row.end() || y != piv.end()) {
    if (y == piv.end() || (x != row.end() && x->first < y->first)) {
      out.emplace_back(x->first, fr * x->second);
      ++x;
    } else if (x == row.end() || y->first < x->first) {
      out.emplace_back(y->first, -fp * y->second);
      ++y;
    } else {
      mpz_class v = fr * x->second - fp * y->second;
      if (v != 0) out.emplace_back(x->first, std::move(v));
      ++x;
      ++y;
    }
  }
  return out;
}

std::uint32_t reduce_mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    const std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

bool RationalEchelon::insert(IntRow row) {
  while (!row.empty()) {
    auto it = pivot_.find(row.front().first);
    if (it == pivot_.end()) {
      remove_content(row);
      pivot_.emplace(row.front().first, rows_.size());
      rows_.push_back(std::move(row));
      return true;
    }
    row = combine(row, rows_[it->second]);
    if (!row.empty()) remove_content(row);
  }
  return false;
}

ModularEchelon::ModularEchelon(std::uint32_t prime) : p_(prime) {
  if (!is_prime(prime) || prime >= (1u << 31)) {
    throw std::invalid_argument("modulus must be a prime below 2^31");
  }
}

bool ModularEchelon::insert(const IntRow& input) {
  Row row;
  row.reserve(input.size());
  for (const auto& [c, v] : input) {
    const std::uint32_t r = reduce_mod(v, p_);
    if (r) row.emplace_back(c, r);
  }
  const std::uint64_t p = p_;
  while (!row.empty()) {
    auto it = pivot_.find(row.front().first);
    if (it == pivot_.end()) {
      const std::uint64_t inv = inverse_mod(row.front().second, p_);
      for (auto& [c, v] : row) v = static_cast<std::uint32_t>(v * inv % p);
      pivot_.emplace(row.front().first, rows_.size());
      rows_.push_back(std::move(row));
      return true;
    }
    const Row& piv = rows_[it->second];
    const std::uint64_t f = row.front().second;  // pivot lead is 1
    Row out;
    out.reserve(row.size() + piv.size());
    auto x = row.begin() + 1;
    auto y = piv.begin() + 1;
    while (x != row.end() || y != piv.end()) {
      if (y == piv.end() || (x != row.end() && x->first < y->first)) {
        out.push_back(*x++);
      } else if (x == row.end() || y->first < x->first) {
        out.emplace_back(y->first,
                         static_cast<std::uint32_t>((p - f * y->second % p) % p));
        ++y;
      } else {
        const std::uint64_t v = (x->second + p - f * y->second % p) % p;
        if (v) out.emplace_back(x->first, static_cast<std::uint32_t>(v));
        ++x;
        ++y;
      }
    }
    row = std::move(out);
  }
  return false;
}

std::size_t rank_rational(const std::vector<IntRow>& rows) {
  RationalEchelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

std::size_t rank_modular(const std::vector<IntRow>& rows, std::uint32_t p) {
  ModularEchelon e(p);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace msv::linalg

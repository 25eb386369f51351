// Copyright 2026 The infprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "infprob/eps_poly.hpp"

#include <algorithm>
#include <cstdint>

#include "infprob/errors.hpp"

namespace infprob {

EpsPoly::EpsPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

EpsPoly EpsPoly::constant(const Rational& c) { return EpsPoly(std::vector<Rational>{c}); }

EpsPoly EpsPoly::monomial(const Rational& c, std::size_t power) {
  if (c == 0) return {};
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return EpsPoly(std::move(coeffs));
}

void EpsPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational EpsPoly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

std::size_t EpsPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  throw std::logic_error("valuation of the zero polynomial");
}

EpsPoly EpsPoly::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> out(k + coeffs_.size());
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<std::ptrdiff_t>(k));
  EpsPoly p;
  p.coeffs_ = std::move(out);
  return p;
}

EpsPoly EpsPoly::shifted_down(std::size_t k) const {
  if (k == 0) return *this;
  if (k > coeffs_.size()) k = coeffs_.size();
  for (std::size_t i = 0; i < k; ++i)
    if (coeffs_[i] != 0) throw std::logic_error("shifted_down would drop a nonzero coefficient");
  EpsPoly p;
  p.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
  return p;
}

EpsPoly EpsPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  EpsPoly p = *this;
  for (auto& x : p.coeffs_) x *= c;
  return p;
}

EpsPoly EpsPoly::truncated(std::size_t n) const {
  if (n >= coeffs_.size()) return *this;
  return EpsPoly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Rational EpsPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

EpsPoly EpsPoly::operator-() const {
  EpsPoly p = *this;
  for (auto& x : p.coeffs_) x = -x;
  return p;
}

EpsPoly& EpsPoly::operator+=(const EpsPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

EpsPoly& EpsPoly::operator-=(const EpsPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

EpsPoly operator*(const EpsPoly& lhs, const EpsPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return EpsPoly(std::move(out));
}

std::pair<EpsPoly, EpsPoly> divmod(const EpsPoly& a, const EpsPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return {EpsPoly{}, a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() - db);
  const Rational& lead = bc.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rational q = rem[k] / lead;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  rem.resize(db);
  return {EpsPoly(std::move(quot)), EpsPoly(std::move(rem))};
}

EpsPoly exact_quotient(const EpsPoly& a, const EpsPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_quotient: division leaves a remainder");
  return q;
}

namespace {

// --- reduction modulo a prime: a cheap certificate that a gcd is trivial ---

constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base);
    base = mul_mod(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

using ModPoly = std::vector<std::uint64_t>;

bool reduce_mod(const EpsPoly& p, ModPoly& out) {
  out.clear();
  out.reserve(p.size());
  for (const auto& c : p.coefficients()) {
    const std::uint64_t d = mpz_fdiv_ui(c.get_den_mpz_t(), kPrime);
    if (d == 0) return false;
    const std::uint64_t n = mpz_fdiv_ui(c.get_num_mpz_t(), kPrime);
    out.push_back(mul_mod(n, inv_mod(d)));
  }
  // the degree must survive reduction
  return !out.empty() && out.back() != 0;
}

void trim_mod(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Degree of gcd(a, b) over Z/p.
int gcd_degree_mod(ModPoly a, ModPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const std::uint64_t inv_lead = inv_mod(b.back());
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
      const std::uint64_t q = mul_mod(a.back(), inv_lead);
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t j = 0; j <= db; ++j) {
        const std::uint64_t t = mul_mod(q, b[j]);
        std::uint64_t& slot = a[shift + j];
        slot = slot >= t ? slot - t : slot + kPrime - t;
      }
      trim_mod(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// --- integer primitive polynomial remainder sequence ---

using IntPoly = std::vector<Integer>;

void trim_int(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly to_primitive_integer(const EpsPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  out.reserve(p.size());
  for (const auto& c : p.coefficients()) out.push_back(c.get_num() * (l / c.get_den()));
  make_primitive(out);
  return out;
}

// Pseudo-remainder up to a constant factor, which make_primitive discards.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lead = b.back();
  while (a.size() > db) {
    const Integer top = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lead;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= top * b[j];
    trim_int(a);
  }
  return a;
}

EpsPoly normalized_lowest(const EpsPoly& p) { return p.scaled(1 / p.lowest_coefficient()); }

}  // namespace

EpsPoly gcd(const EpsPoly& a, const EpsPoly& b) {
  if (a.is_zero()) return b.is_zero() ? EpsPoly{} : normalized_lowest(b);
  if (b.is_zero()) return normalized_lowest(a);

  // Split off powers of e: neither cofactor below is divisible by e, so the
  // e-part of the gcd is exactly e^min(va, vb).
  const std::size_t va = a.valuation();
  const std::size_t vb = b.valuation();
  const std::size_t k = std::min(va, vb);
  const EpsPoly ra = a.shifted_down(va);
  const EpsPoly rb = b.shifted_down(vb);
  const EpsPoly trivial = EpsPoly::monomial(1, k);
  if (ra.is_constant() || rb.is_constant()) return trivial;

  // If both degrees survive reduction mod p, deg gcd_p >= deg gcd_Q.
  ModPoly ma, mb;
  if (reduce_mod(ra, ma) && reduce_mod(rb, mb) && gcd_degree_mod(std::move(ma), std::move(mb)) == 0)
    return trivial;

  IntPoly x = to_primitive_integer(ra);
  IntPoly y = to_primitive_integer(rb);
  if (x.size() < y.size()) std::swap(x, y);
  for (;;) {
    IntPoly r = pseudo_remainder(x, y);
    if (r.empty()) break;
    if (r.size() == 1) return trivial;
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(y.size());
  for (auto& c : y) coeffs.emplace_back(c);
  return normalized_lowest(EpsPoly(std::move(coeffs)).shifted_up(k));
}

}  // namespace infprob

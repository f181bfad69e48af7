// Copyright 2026 The gpbent Authors.
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

#include "gpb/cyclotomic.h"

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gpb {
namespace {

using Poly = std::vector<std::int64_t>;

// Exact quotient of num by a monic divisor; throws if the remainder is
// nonzero.
Poly divide_monic(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw DomainError("polynomial division");
  Poly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j) {
    if (num[j] != 0) throw DomainError("cyclotomic division left a remainder");
  }
  return q;
}

// Per-modulus data: Phi_N and the canonical form of x^k for 0 <= k < N.
struct Context {
  int modulus;
  int degree;
  CycPoly poly;
  std::vector<Poly> power_forms;
};

Context build_context(int modulus) {
  Context ctx;
  ctx.modulus = modulus;
  ctx.poly = cyclotomic_polynomial(modulus);
  ctx.degree = ctx.poly.degree();
  const Poly& phi = ctx.poly.coeffs;
  const auto d = static_cast<std::size_t>(ctx.degree);

  // x^k reduced mod Phi_N, built up by repeated multiplication by x.
  Poly cur(d, 0);
  if (d > 0) cur[0] = 1;
  ctx.power_forms.reserve(static_cast<std::size_t>(modulus));
  for (int k = 0; k < modulus; ++k) {
    ctx.power_forms.push_back(cur);
    if (d == 0) continue;
    std::int64_t top = cur[d - 1];
    for (std::size_t j = d - 1; j > 0; --j) cur[j] = cur[j - 1] - top * phi[j];
    cur[0] = -top * phi[0];
  }
  return ctx;
}

const Context& context(int modulus) {
  if (modulus < 1) throw DomainError("cyclotomic modulus must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const Context>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(modulus);
  if (it == cache.end()) {
    it = cache
             .emplace(modulus,
                      std::make_unique<const Context>(build_context(modulus)))
             .first;
  }
  return *it->second;
}

template <typename T>
std::vector<BigInt> fold_power_sums(const Context& ctx, std::span<const T> c) {
  std::vector<BigInt> out(static_cast<std::size_t>(ctx.degree));
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const Poly& form = ctx.power_forms[k % static_cast<std::size_t>(ctx.modulus)];
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (form[j] != 0) out[j] += c[k] * form[j];
    }
  }
  return out;
}

void check_same_modulus(const CycInt& a, const CycInt& b) {
  if (a.modulus() != b.modulus()) {
    throw DomainError("cyclotomic modulus mismatch: " +
                      std::to_string(a.modulus()) + " vs " +
                      std::to_string(b.modulus()));
  }
}

}  // namespace

int totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

CycPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw DomainError("cyclotomic_polynomial needs N >= 1");
  Poly num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) num = divide_monic(std::move(num), cyclotomic_polynomial(d).coeffs);
  }
  return CycPoly{std::move(num)};
}

// ---------------------------------------------------------------------------
// CycInt

CycInt::CycInt(int modulus)
    : modulus_(modulus),
      coeffs_(static_cast<std::size_t>(context(modulus).degree)) {}

CycInt CycInt::integer(int modulus, const BigInt& value) {
  CycInt r(modulus);
  r.coeffs_[0] = value;
  return r;
}

CycInt CycInt::from_poly(int modulus, std::span<const BigInt> coeffs) {
  return CycInt(modulus, fold_power_sums(context(modulus), coeffs));
}

CycInt CycInt::from_power_sums(int modulus,
                               std::span<const std::int64_t> counts) {
  return CycInt(modulus, fold_power_sums(context(modulus), counts));
}

CycInt CycInt::from_power_sums(int modulus, std::span<const BigInt> counts) {
  return CycInt(modulus, fold_power_sums(context(modulus), counts));
}

bool CycInt::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

CycInt CycInt::operator+(const CycInt& other) const {
  CycInt r = *this;
  r += other;
  return r;
}

CycInt& CycInt::operator+=(const CycInt& other) {
  check_same_modulus(*this, other);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

CycInt CycInt::operator-(const CycInt& other) const { return *this + (-other); }

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycInt CycInt::operator*(const CycInt& other) const {
  check_same_modulus(*this, other);
  const std::size_t d = coeffs_.size();
  std::vector<BigInt> prod(d == 0 ? 0 : 2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (other.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return from_poly(modulus_, prod);
}

CycInt CycInt::divide_exact(const BigInt& d) const {
  CycInt r = *this;
  for (auto& c : r.coeffs_) {
    if (c % d != 0) throw DomainError("inexact cyclotomic division");
    c /= d;
  }
  return r;
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const BigInt& c = coeffs_[j];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'u';
    if (j > 1) os << '^' << j;
  }
  if (first) os << '0';
  return os.str();
}

// ---------------------------------------------------------------------------
// Free functions

CycInt root_power(int modulus, std::int64_t k) {
  std::int64_t r = k % modulus;
  if (r < 0) r += modulus;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(modulus), 0);
  counts[static_cast<std::size_t>(r)] = 1;
  return CycInt::from_power_sums(modulus, counts);
}

CycInt add(const CycInt& a, const CycInt& b) { return a + b; }
CycInt mul(const CycInt& a, const CycInt& b) { return a * b; }

CycInt scale(const CycInt& a, const BigInt& k) {
  return a * CycInt::integer(a.modulus(), k);
}

CycInt conj(const CycInt& a) {
  const int modulus = a.modulus();
  // Coefficient of x^j moves to x^{N-j}; from_power_sums reduces.
  std::vector<BigInt> image(static_cast<std::size_t>(modulus));
  const auto& c = a.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    image[(static_cast<std::size_t>(modulus) - j) % static_cast<std::size_t>(modulus)] += c[j];
  }
  return CycInt::from_power_sums(modulus, image);
}

CycInt norm_sq(const CycInt& a) { return a * conj(a); }

std::complex<double> to_complex(const CycInt& a) {
  long double re = 0, im = 0;
  const auto& c = a.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    long double angle = 2.0L * std::numbers::pi_v<long double> *
                        static_cast<long double>(j) / a.modulus();
    long double cj = c[j].convert_to<long double>();
    re += cj * std::cos(angle);
    im += cj * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace gpb

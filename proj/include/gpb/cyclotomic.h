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

#ifndef GPB_CYCLOTOMIC_H_
#define GPB_CYCLOTOMIC_H_

// Exact arithmetic in Z[u], u = exp(2*pi*i/N).
//
// An element is stored as its unique representative in Z[x]/(Phi_N(x)), a
// vector of phi(N) arbitrary-precision coefficients. Two elements are equal
// iff their coefficient vectors are equal; in particular an element is zero
// iff every coefficient is zero. Floating point appears only in
// to_complex(), which is for display.

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gpb/zn_algebra.h"

namespace gpb {

// Phi_N(x), coefficients in ascending degree order. Monic.
struct CycPoly {
  std::vector<std::int64_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const CycPoly&, const CycPoly&) = default;
};

// Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d, by exact division.
CycPoly cyclotomic_polynomial(int n);

class CycInt {
 public:
  // Zero of Z[u_N].
  explicit CycInt(int modulus);

  static CycInt integer(int modulus, const BigInt& value);

  // Canonical form of sum_k coeffs[k] x^k, for any length.
  static CycInt from_poly(int modulus, std::span<const BigInt> coeffs);

  // Canonical form of sum_{k<N} counts[k] u^k (a group-ring element).
  static CycInt from_power_sums(int modulus,
                                std::span<const std::int64_t> counts);
  static CycInt from_power_sums(int modulus, std::span<const BigInt> counts);

  int modulus() const { return modulus_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  CycInt operator+(const CycInt& other) const;
  CycInt operator-(const CycInt& other) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& other) const;
  CycInt& operator+=(const CycInt& other);

  // Coefficient-wise exact division; DomainError if some coefficient is not
  // divisible by d.
  CycInt divide_exact(const BigInt& d) const;

  friend bool operator==(const CycInt&, const CycInt&) = default;

  // Polynomial in u, e.g. "8*u", "-16", "1 + u - 2*u^3".
  std::string to_string() const;

 private:
  CycInt(int modulus, std::vector<BigInt> coeffs)
      : modulus_(modulus), coeffs_(std::move(coeffs)) {}

  int modulus_;
  std::vector<BigInt> coeffs_;
};

// u^k for any integer k.
CycInt root_power(int modulus, std::int64_t k);

CycInt add(const CycInt& a, const CycInt& b);
CycInt mul(const CycInt& a, const CycInt& b);
CycInt scale(const CycInt& a, const BigInt& k);

// Complex conjugation: the automorphism u -> u^{N-1}.
CycInt conj(const CycInt& a);

// a * conj(a) = |a|^2; lies in the real subfield.
CycInt norm_sq(const CycInt& a);

inline bool is_zero(const CycInt& a) { return a.is_zero(); }

// Numeric value at u = exp(2*pi*i/N). Display only.
std::complex<double> to_complex(const CycInt& a);

// Euler totient; equals the number of stored coefficients.
int totient(int n);

}  // namespace gpb

#endif  // GPB_CYCLOTOMIC_H_

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

#ifndef GPB_ZN_ALGEBRA_H_
#define GPB_ZN_ALGEBRA_H_

// Arithmetic over the residue ring Z_N: vectors of Z_N^n, their canonical
// enumeration, inner products and square matrices acting on row vectors.
//
// Every table in the library is indexed by the same little-endian mixed-radix
// order: coordinate i of the vector at index k is (k / N^i) mod N.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gpb {

using BigInt = boost::multiprecision::cpp_int;

// Thrown for contract violations (dimension mismatch, out-of-range index,
// mixed moduli). Result variants such as "not invertible" are not errors and
// are reported through std::optional instead.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The modulus N >= 2 of Z_N.
class Ring {
 public:
  explicit Ring(int modulus);

  int modulus() const { return modulus_; }

  // Canonical residue of x in [0, N).
  int reduce(std::int64_t x) const {
    std::int64_t r = x % modulus_;
    return static_cast<int>(r < 0 ? r + modulus_ : r);
  }

  // N^n, or DomainError if it does not fit in 63 bits.
  std::uint64_t space_size(int n) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  int modulus_;
};

// An element of Z_N^n. Immutable; entries always lie in [0, N).
class ZVec {
 public:
  ZVec(Ring ring, std::vector<int> entries);

  static ZVec zero(Ring ring, int dim);
  // e_i, 0-based.
  static ZVec unit(Ring ring, int dim, int i);

  Ring ring() const { return ring_; }
  int dim() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  std::span<const int> entries() const { return entries_; }

  ZVec operator+(const ZVec& other) const;
  ZVec operator-(const ZVec& other) const;
  ZVec operator-() const;
  ZVec scaled(std::int64_t k) const;

  // Subvector [first, first + count).
  ZVec slice(int first, int count) const;

  bool is_zero() const;

  friend bool operator==(const ZVec&, const ZVec&) = default;
  // Lexicographic, first coordinate most significant.
  friend std::strong_ordering operator<=>(const ZVec& a, const ZVec& b) {
    return a.entries_ <=> b.entries_;
  }

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<int> entries_;
};

// Square n x n matrix over Z_N, row-major.
class ZMatrix {
 public:
  ZMatrix(Ring ring, int n, std::vector<int> entries);
  ZMatrix(Ring ring, const std::vector<std::vector<int>>& rows);

  static ZMatrix identity(Ring ring, int n);

  Ring ring() const { return ring_; }
  int size() const { return n_; }
  int operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i * n_ + j)];
  }
  ZVec row(int i) const;
  std::span<const int> entries() const { return entries_; }

  friend bool operator==(const ZMatrix&, const ZMatrix&) = default;

  std::string to_string() const;

 private:
  Ring ring_;
  int n_;
  std::vector<int> entries_;
};

ZVec idx_to_vec(std::uint64_t index, Ring ring, int n);
std::uint64_t vec_to_idx(const ZVec& v);

// Sum a_i x_i mod N.
int inner_product(const ZVec& a, const ZVec& x);

// Row vector times matrix: y_j = sum_i x_i A[i][j].
ZVec mat_apply(const ZVec& x, const ZMatrix& a);

ZMatrix mat_mul(const ZMatrix& a, const ZMatrix& b);
ZMatrix mat_transpose(const ZMatrix& a);

// Exact integer determinant of the entries read as integers in [0, N),
// by fraction-free (Bareiss) elimination.
BigInt determinant(const ZMatrix& a);

// Inverse over Z_N via det^{-1} * adj(A). Empty iff gcd(det A, N) != 1.
std::optional<ZMatrix> mat_inverse(const ZMatrix& a);

// Inverse of a mod n when gcd(a, n) == 1.
std::optional<int> mod_inverse(std::int64_t a, int n);

}  // namespace gpb

#endif  // GPB_ZN_ALGEBRA_H_

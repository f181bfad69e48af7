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

#include "gpb/zn_algebra.h"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace gpb {

Ring::Ring(int modulus) : modulus_(modulus) {
  if (modulus < 2) {
    throw DomainError("ring modulus must be >= 2, got " +
                      std::to_string(modulus));
  }
}

std::uint64_t Ring::space_size(int n) const {
  if (n < 0) throw DomainError("negative arity");
  constexpr std::uint64_t kLimit = std::numeric_limits<std::int64_t>::max();
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    if (size > kLimit / static_cast<std::uint64_t>(modulus_)) {
      throw DomainError("N^n overflows 63 bits");
    }
    size *= static_cast<std::uint64_t>(modulus_);
  }
  return size;
}

// ---------------------------------------------------------------------------
// ZVec

ZVec::ZVec(Ring ring, std::vector<int> entries)
    : ring_(ring), entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0 || e >= ring_.modulus()) {
      throw DomainError("vector entry " + std::to_string(e) +
                        " outside [0, N)");
    }
  }
}

ZVec ZVec::zero(Ring ring, int dim) {
  return ZVec(ring, std::vector<int>(static_cast<std::size_t>(dim), 0));
}

ZVec ZVec::unit(Ring ring, int dim, int i) {
  if (i < 0 || i >= dim) throw DomainError("unit vector index out of range");
  std::vector<int> e(static_cast<std::size_t>(dim), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return ZVec(ring, std::move(e));
}

static void check_same_shape(const ZVec& a, const ZVec& b) {
  if (a.ring() != b.ring()) throw DomainError("vectors over different rings");
  if (a.dim() != b.dim()) throw DomainError("vector dimension mismatch");
}

ZVec ZVec::operator+(const ZVec& other) const {
  check_same_shape(*this, other);
  std::vector<int> out(entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = ring_.reduce(entries_[i] + other.entries_[i]);
  }
  return ZVec(ring_, std::move(out));
}

ZVec ZVec::operator-(const ZVec& other) const {
  check_same_shape(*this, other);
  std::vector<int> out(entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = ring_.reduce(entries_[i] - other.entries_[i]);
  }
  return ZVec(ring_, std::move(out));
}

ZVec ZVec::operator-() const { return scaled(-1); }

ZVec ZVec::scaled(std::int64_t k) const {
  int kr = ring_.reduce(k);
  std::vector<int> out(entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = ring_.reduce(static_cast<std::int64_t>(kr) * entries_[i]);
  }
  return ZVec(ring_, std::move(out));
}

ZVec ZVec::slice(int first, int count) const {
  if (first < 0 || count < 0 || first + count > dim()) {
    throw DomainError("slice out of range");
  }
  return ZVec(ring_, std::vector<int>(entries_.begin() + first,
                                      entries_.begin() + first + count));
}

bool ZVec::is_zero() const {
  for (int e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

std::string ZVec::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// ZMatrix

ZMatrix::ZMatrix(Ring ring, int n, std::vector<int> entries)
    : ring_(ring), n_(n), entries_(std::move(entries)) {
  if (n < 0 || entries_.size() != static_cast<std::size_t>(n) * n) {
    throw DomainError("matrix must be square with n*n entries");
  }
  for (int e : entries_) {
    if (e < 0 || e >= ring_.modulus()) {
      throw DomainError("matrix entry outside [0, N)");
    }
  }
}

static std::vector<int> flatten(const std::vector<std::vector<int>>& rows) {
  std::vector<int> out;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw DomainError("matrix must be square");
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

ZMatrix::ZMatrix(Ring ring, const std::vector<std::vector<int>>& rows)
    : ZMatrix(ring, static_cast<int>(rows.size()), flatten(rows)) {}

ZMatrix ZMatrix::identity(Ring ring, int n) {
  std::vector<int> e(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i * n + i)] = 1;
  return ZMatrix(ring, n, std::move(e));
}

ZVec ZMatrix::row(int i) const {
  if (i < 0 || i >= n_) throw DomainError("row index out of range");
  return ZVec(ring_, std::vector<int>(entries_.begin() + i * n_,
                                      entries_.begin() + (i + 1) * n_));
}

std::string ZMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    if (i) os << ',';
    os << row(i).to_string();
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Free functions

ZVec idx_to_vec(std::uint64_t index, Ring ring, int n) {
  std::uint64_t size = ring.space_size(n);
  if (index >= size) {
    throw DomainError("index " + std::to_string(index) + " outside [0, N^n)");
  }
  std::vector<int> v(static_cast<std::size_t>(n));
  const auto modulus = static_cast<std::uint64_t>(ring.modulus());
  for (auto& digit : v) {
    digit = static_cast<int>(index % modulus);
    index /= modulus;
  }
  return ZVec(ring, std::move(v));
}

std::uint64_t vec_to_idx(const ZVec& v) {
  std::uint64_t index = 0;
  const auto modulus = static_cast<std::uint64_t>(v.ring().modulus());
  for (int i = v.dim() - 1; i >= 0; --i) {
    index = index * modulus + static_cast<std::uint64_t>(v[i]);
  }
  return index;
}

int inner_product(const ZVec& a, const ZVec& x) {
  check_same_shape(a, x);
  std::int64_t acc = 0;
  for (int i = 0; i < a.dim(); ++i) {
    acc = a.ring().reduce(acc + static_cast<std::int64_t>(a[i]) * x[i]);
  }
  return static_cast<int>(acc);
}

ZVec mat_apply(const ZVec& x, const ZMatrix& a) {
  if (x.ring() != a.ring()) throw DomainError("vector/matrix ring mismatch");
  if (x.dim() != a.size()) throw DomainError("vector/matrix dim mismatch");
  const int n = a.size();
  std::vector<int> y(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::int64_t acc = 0;
    for (int i = 0; i < n; ++i) {
      acc = a.ring().reduce(acc + static_cast<std::int64_t>(x[i]) * a(i, j));
    }
    y[static_cast<std::size_t>(j)] = static_cast<int>(acc);
  }
  return ZVec(x.ring(), std::move(y));
}

ZMatrix mat_mul(const ZMatrix& a, const ZMatrix& b) {
  if (a.ring() != b.ring()) throw DomainError("matrix ring mismatch");
  if (a.size() != b.size()) throw DomainError("matrix size mismatch");
  const int n = a.size();
  std::vector<int> c(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::int64_t acc = 0;
      for (int k = 0; k < n; ++k) {
        acc = a.ring().reduce(acc + static_cast<std::int64_t>(a(i, k)) * b(k, j));
      }
      c[static_cast<std::size_t>(i * n + j)] = static_cast<int>(acc);
    }
  }
  return ZMatrix(a.ring(), n, std::move(c));
}

ZMatrix mat_transpose(const ZMatrix& a) {
  const int n = a.size();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(j * n + i)] = a(i, j);
  }
  return ZMatrix(a.ring(), n, std::move(t));
}

namespace {

// Bareiss elimination on a dense integer matrix, in place.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<std::vector<BigInt>> to_integers(const ZMatrix& a, int skip_row,
                                             int skip_col) {
  std::vector<std::vector<BigInt>> m;
  for (int i = 0; i < a.size(); ++i) {
    if (i == skip_row) continue;
    std::vector<BigInt> row;
    for (int j = 0; j < a.size(); ++j) {
      if (j != skip_col) row.emplace_back(a(i, j));
    }
    m.push_back(std::move(row));
  }
  return m;
}

int reduce_big(const BigInt& x, int modulus) {
  BigInt r = x % modulus;
  if (r < 0) r += modulus;
  return r.convert_to<int>();
}

}  // namespace

BigInt determinant(const ZMatrix& a) {
  return bareiss_determinant(to_integers(a, -1, -1));
}

std::optional<int> mod_inverse(std::int64_t a, int n) {
  // Extended Euclid on (a mod n, n).
  std::int64_t r0 = n, r1 = ((a % n) + n) % n;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  if (r0 != 1) return std::nullopt;
  return static_cast<int>(((s0 % n) + n) % n);
}

std::optional<ZMatrix> mat_inverse(const ZMatrix& a) {
  const int n = a.size();
  const int modulus = a.ring().modulus();
  auto det_inv = mod_inverse(reduce_big(determinant(a), modulus), modulus);
  if (!det_inv) return std::nullopt;

  // inverse[i][j] = det^{-1} * (-1)^{i+j} * minor(j, i)
  std::vector<int> inv(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      BigInt cof = bareiss_determinant(to_integers(a, j, i));
      if ((i + j) % 2) cof = -cof;
      inv[static_cast<std::size_t>(i * n + j)] = a.ring().reduce(
          static_cast<std::int64_t>(reduce_big(cof, modulus)) * *det_inv);
    }
  }
  return ZMatrix(a.ring(), n, std::move(inv));
}

}  // namespace gpb

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

#include "gpb/transforms.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "space_index.h"

namespace gpb {

LogicFunction::LogicFunction(Ring ring, int arity, std::vector<int> table)
    : ring_(ring), arity_(arity), table_(std::move(table)) {
  if (arity < 0) throw DomainError("negative arity");
  if (table_.size() != ring.space_size(arity)) {
    throw DomainError("truth table has " + std::to_string(table_.size()) +
                      " entries, expected N^n = " +
                      std::to_string(ring.space_size(arity)));
  }
  for (int v : table_) {
    if (v < 0 || v >= ring.modulus()) {
      throw DomainError("truth table value " + std::to_string(v) +
                        " outside [0, N)");
    }
  }
}

int LogicFunction::operator()(const ZVec& x) const {
  if (x.ring() != ring_ || x.dim() != arity_) {
    throw DomainError("argument does not lie in Z_N^n");
  }
  return table_[vec_to_idx(x)];
}

namespace {

// Group-ring elements of Z[x]/(x^N - 1), N coefficients each, stored
// contiguously: element k occupies [k*N, (k+1)*N).
template <typename T>
using GroupRingArray = std::vector<T>;

// In place: out(w) = sum_x in(x) * u^{sign * w.x}, separably over the n
// coordinates. Multiplication by a root is a cyclic rotation.
template <typename T>
void group_ring_transform(GroupRingArray<T>& data, int modulus, int arity,
                          int sign) {
  const auto big_n = static_cast<std::size_t>(modulus);
  const std::size_t count = data.size() / big_n;
  std::vector<T> scratch(big_n * big_n);
  std::size_t stride = 1;
  for (int stage = 0; stage < arity; ++stage) {
    const std::size_t block = stride * big_n;
    for (std::size_t base = 0; base < count; base += block) {
      for (std::size_t offset = 0; offset < stride; ++offset) {
        const std::size_t first = base + offset;
        for (auto& s : scratch) s = 0;
        for (std::size_t w = 0; w < big_n; ++w) {
          T* out = &scratch[w * big_n];
          for (std::size_t d = 0; d < big_n; ++d) {
            const T* in = &data[(first + d * stride) * big_n];
            const std::size_t shift =
                sign > 0 ? (w * d) % big_n : (big_n - (w * d) % big_n) % big_n;
            for (std::size_t j = 0; j < big_n; ++j) {
              if (in[j] == 0) continue;
              std::size_t target = j + shift;
              if (target >= big_n) target -= big_n;
              out[target] += in[j];
            }
          }
        }
        for (std::size_t w = 0; w < big_n; ++w) {
          T* dst = &data[(first + w * stride) * big_n];
          for (std::size_t j = 0; j < big_n; ++j) dst[j] = scratch[w * big_n + j];
        }
      }
    }
    stride = block;
  }
}

GroupRingArray<std::int64_t> forward_group_ring(const LogicFunction& f) {
  const auto big_n = static_cast<std::size_t>(f.modulus());
  GroupRingArray<std::int64_t> data(f.size() * big_n, 0);
  for (std::size_t k = 0; k < f.size(); ++k) {
    data[k * big_n + static_cast<std::size_t>(f[k])] = 1;
  }
  group_ring_transform(data, f.modulus(), f.arity(), -1);
  return data;
}

template <typename T>
std::vector<CycInt> reduce_all(const GroupRingArray<T>& data, int modulus) {
  const auto big_n = static_cast<std::size_t>(modulus);
  std::vector<CycInt> out;
  out.reserve(data.size() / big_n);
  for (std::size_t k = 0; k < data.size(); k += big_n) {
    out.push_back(CycInt::from_power_sums(
        modulus, std::span<const T>(data.data() + k, big_n)));
  }
  return out;
}

// P_w = a_w * conj(a_w), then the inverse transform; returns N^n * C as a
// group-ring array.
template <typename T>
GroupRingArray<T> scaled_autocorr(const GroupRingArray<std::int64_t>& spec,
                                  int modulus, int arity) {
  const auto big_n = static_cast<std::size_t>(modulus);
  GroupRingArray<T> data(spec.size());
  for (std::size_t k = 0; k < spec.size(); k += big_n) {
    const std::int64_t* a = &spec[k];
    for (std::size_t r = 0; r < big_n; ++r) {
      T acc = 0;
      for (std::size_t j = 0; j < big_n; ++j) {
        const std::size_t m = (j + big_n - r) % big_n;
        if (a[j] != 0 && a[m] != 0) acc += T(a[j]) * T(a[m]);
      }
      data[k + r] = acc;
    }
  }
  group_ring_transform(data, modulus, arity, +1);
  return data;
}

}  // namespace

SpectrumTable chrestenson_spectrum(const LogicFunction& f) {
  const internal::SpaceIndex space(f.ring(), f.arity());
  const int modulus = f.modulus();
  std::vector<CycInt> entries;
  entries.reserve(space.size());
  std::vector<std::int64_t> counts(static_cast<std::size_t>(modulus));
  for (std::size_t w = 0; w < space.size(); ++w) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t x = 0; x < space.size(); ++x) {
      int e = f[x] - space.dot(w, x);
      if (e < 0) e += modulus;
      ++counts[static_cast<std::size_t>(e)];
    }
    entries.push_back(CycInt::from_power_sums(modulus, counts));
  }
  return SpectrumTable(f.ring(), f.arity(), std::move(entries));
}

SpectrumTable fast_chrestenson(const LogicFunction& f) {
  return SpectrumTable(f.ring(), f.arity(),
                       reduce_all(forward_group_ring(f), f.modulus()));
}

AutocorrTable autocorrelation(const LogicFunction& f) {
  const internal::SpaceIndex space(f.ring(), f.arity());
  const int modulus = f.modulus();
  std::vector<CycInt> entries;
  entries.reserve(space.size());
  std::vector<std::int64_t> counts(static_cast<std::size_t>(modulus));
  for (std::size_t s = 0; s < space.size(); ++s) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t x = 0; x < space.size(); ++x) {
      int e = f[space.add(x, s)] - f[x];
      if (e < 0) e += modulus;
      ++counts[static_cast<std::size_t>(e)];
    }
    entries.push_back(CycInt::from_power_sums(modulus, counts));
  }
  return AutocorrTable(f.ring(), f.arity(), std::move(entries));
}

AutocorrTable autocorr_via_spectrum(const LogicFunction& f) {
  const int modulus = f.modulus();
  const BigInt scale_factor = f.size();
  auto spec = forward_group_ring(f);

  // The inverse transform accumulates total mass N^{3n}; stay in int64 while
  // that bound fits.
  const bool fits_int64 =
      3.0 * f.arity() * std::log2(static_cast<double>(modulus)) < 62.0;
  std::vector<CycInt> scaled =
      fits_int64 ? reduce_all(scaled_autocorr<std::int64_t>(spec, modulus,
                                                            f.arity()),
                              modulus)
                 : reduce_all(scaled_autocorr<BigInt>(spec, modulus, f.arity()),
                              modulus);
  for (auto& c : scaled) c = c.divide_exact(scale_factor);
  return AutocorrTable(f.ring(), f.arity(), std::move(scaled));
}

LogicFunction linear_substitute(const LogicFunction& f, const ZMatrix& a) {
  if (a.ring() != f.ring() || a.size() != f.arity()) {
    throw DomainError("substitution matrix does not match function shape");
  }
  if (!mat_inverse(a)) {
    throw DomainError("substitution matrix is not invertible over Z_N");
  }
  std::vector<int> table(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    table[k] = f[vec_to_idx(mat_apply(idx_to_vec(k, f.ring(), f.arity()), a))];
  }
  return LogicFunction(f.ring(), f.arity(), std::move(table));
}

LogicFunction add_affine(const LogicFunction& f, const ZVec& t, int c) {
  if (t.ring() != f.ring() || t.dim() != f.arity()) {
    throw DomainError("affine coefficients do not match function shape");
  }
  const internal::SpaceIndex space(f.ring(), f.arity());
  const std::size_t t_index = vec_to_idx(t);
  std::vector<int> table(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    table[k] = f.ring().reduce(static_cast<std::int64_t>(f[k]) +
                               space.dot(t_index, k) + c);
  }
  return LogicFunction(f.ring(), f.arity(), std::move(table));
}

}  // namespace gpb

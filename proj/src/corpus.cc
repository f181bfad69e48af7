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

#include "gpb/corpus.h"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpb/analysis.h"

namespace gpb {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

LogicFunction make_example_2_1() {
  const Ring ring(4);
  auto indicator = [](int v) { return v % 2; };  // 1 on {1, 3}
  std::vector<int> table(16);
  for (std::uint64_t k = 0; k < 16; ++k) {
    const ZVec v = idx_to_vec(k, ring, 2);
    table[k] = ring.reduce(indicator(v[0]) + indicator(v[1]) + v[0] + v[1]);
  }
  return LogicFunction(ring, 2, std::move(table));
}

LogicFunction make_affine(Ring ring, int n, const ZVec& t, int c) {
  return add_affine(
      LogicFunction(ring, n, std::vector<int>(ring.space_size(n), 0)), t,
      ring.reduce(c));
}

LogicFunction make_quadratic(Ring ring, int n, const std::vector<int>& q,
                             const ZVec& t, int c) {
  if (q.size() != static_cast<std::size_t>(n) * n) {
    throw DomainError("quadratic form needs n*n coefficients");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (q[static_cast<std::size_t>(i * n + j)] != 0) {
        throw DomainError("quadratic form must be upper triangular");
      }
    }
  }
  std::vector<int> table(ring.space_size(n));
  for (std::uint64_t k = 0; k < table.size(); ++k) {
    const ZVec x = idx_to_vec(k, ring, n);
    std::int64_t acc = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        acc += static_cast<std::int64_t>(q[static_cast<std::size_t>(i * n + j)]) *
               x[i] * x[j];
      }
      acc %= ring.modulus();
    }
    table[k] = ring.reduce(acc);
  }
  return add_affine(LogicFunction(ring, n, std::move(table)), t,
                    ring.reduce(c));
}

LogicFunction make_product_bent(Ring ring, int n) {
  if (n % 2 != 0) throw DomainError("product_bent needs an even arity");
  std::vector<int> q(static_cast<std::size_t>(n) * n, 0);
  const int half = n / 2;
  for (int i = 0; i < half; ++i) q[static_cast<std::size_t>(i * n + i + half)] = 1;
  return make_quadratic(ring, n, q, ZVec::zero(ring, n), 0);
}

LogicFunction random_function(Ring ring, int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<int> table(ring.space_size(n));
  const auto modulus = static_cast<std::uint64_t>(ring.modulus());
  for (auto& v : table) v = static_cast<int>(rng.next() % modulus);
  return LogicFunction(ring, n, std::move(table));
}

ZMatrix random_invertible_matrix(Ring ring, int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const auto modulus = static_cast<std::uint64_t>(ring.modulus());
  for (;;) {
    std::vector<int> entries(static_cast<std::size_t>(n) * n);
    for (auto& e : entries) e = static_cast<int>(rng.next() % modulus);
    ZMatrix a(ring, n, std::move(entries));
    if (mat_inverse(a)) return a;
  }
}

LogicFunction append_affine_coordinates(const LogicFunction& core,
                                        const std::vector<int>& coeffs, int c) {
  const Ring ring = core.ring();
  const int m = static_cast<int>(coeffs.size());
  const int n = m + core.arity();
  const std::uint64_t head_size = ring.space_size(m);
  std::vector<int> table(ring.space_size(n));
  for (std::uint64_t k = 0; k < table.size(); ++k) {
    std::int64_t acc = core[k / head_size] + static_cast<std::int64_t>(c);
    std::uint64_t head = k % head_size;
    for (int j = 0; j < m; ++j) {
      acc += static_cast<std::int64_t>(coeffs[static_cast<std::size_t>(j)]) *
             static_cast<std::int64_t>(head % static_cast<std::uint64_t>(ring.modulus()));
      head /= static_cast<std::uint64_t>(ring.modulus());
    }
    table[k] = ring.reduce(acc);
  }
  return LogicFunction(ring, n, std::move(table));
}

bool is_affine(const LogicFunction& f) {
  const Ring ring = f.ring();
  const int n = f.arity();
  std::vector<int> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    t[static_cast<std::size_t>(i)] =
        ring.reduce(f(ZVec::unit(ring, n, i)) - f[0]);
  }
  return make_affine(ring, n, ZVec(ring, std::move(t)), f[0]) == f;
}

std::optional<std::uint64_t> function_count(Ring ring, int n,
                                            std::uint64_t cap) {
  std::uint64_t size;
  try {
    size = ring.space_size(n);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  const auto modulus = static_cast<std::uint64_t>(ring.modulus());
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < size; ++i) {
    if (count > cap / modulus) return std::nullopt;
    count *= modulus;
  }
  return count;
}

LogicFunction function_at(Ring ring, int n, std::uint64_t index) {
  std::vector<int> table(ring.space_size(n));
  const auto modulus = static_cast<std::uint64_t>(ring.modulus());
  for (std::size_t k = table.size(); k-- > 0;) {
    table[k] = static_cast<int>(index % modulus);
    index /= modulus;
  }
  if (index != 0) throw DomainError("function index out of range");
  return LogicFunction(ring, n, std::move(table));
}

FunctionRange::Iterator::Iterator(const FunctionRange* range,
                                  std::uint64_t position)
    : range_(range), position_(position) {
  if (position_ < range_->count_) {
    auto f = function_at(range_->ring_, range_->n_, position_);
    table_.assign(f.table().begin(), f.table().end());
  }
}

LogicFunction FunctionRange::Iterator::operator*() const {
  return LogicFunction(range_->ring_, range_->n_, table_);
}

FunctionRange::Iterator& FunctionRange::Iterator::operator++() {
  ++position_;
  const int modulus = range_->ring_.modulus();
  for (std::size_t k = table_.size(); k-- > 0;) {
    if (++table_[k] < modulus) break;
    table_[k] = 0;
  }
  return *this;
}

FunctionRange enumerate_all(Ring ring, int n, std::uint64_t cap) {
  auto count = function_count(ring, n, cap);
  if (!count) {
    throw CapExceeded("enumerating all functions for N=" +
                      std::to_string(ring.modulus()) + " n=" +
                      std::to_string(n) + " exceeds the cap of " +
                      std::to_string(cap) + " functions");
  }
  return FunctionRange(ring, n, *count);
}

CensusCounts census(Ring ring, int n, std::uint64_t cap) {
  CensusCounts counts;
  for (const LogicFunction& f : enumerate_all(ring, n, cap)) {
    const AnalysisReport report = analyze(f);
    ++counts.total;
    if (report.is_gbent) ++counts.gbent;
    if (report.is_gpb) {
      ++counts.gpb;
      if (report.is_pure) ++counts.pure_gpb;
    } else {
      ++counts.other;
    }
    if (is_affine(f)) ++counts.affine;
    if (!check_inequality(f.size(), report.autocorr_zeros,
                          report.spectrum_zeros)) {
      ++counts.inequality_violations;
    }
  }
  return counts;
}

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kFamilyNames{{
    {Family::kExample21, "example_2_1"},
    {Family::kAffine, "affine"},
    {Family::kQuadraticForm, "quadratic_form"},
    {Family::kProductBent, "product_bent"},
    {Family::kRandom, "random"},
    {Family::kExhaustive, "exhaustive"},
}};

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [family, text] : kFamilyNames) {
    if (text == name) return family;
  }
  return std::nullopt;
}

std::string_view family_name(Family family) {
  for (const auto& [f, text] : kFamilyNames) {
    if (f == family) return text;
  }
  return "unknown";
}

LogicFunction generate(const GeneratorSpec& spec) {
  const Ring ring = spec.ring;
  const int n = spec.arity;
  if (n < 0) throw DomainError("negative arity");
  auto shift = [&]() {
    if (spec.t.empty()) return ZVec::zero(ring, n);
    if (spec.t.size() != static_cast<std::size_t>(n)) {
      throw DomainError("t must have n entries");
    }
    std::vector<int> t;
    for (int v : spec.t) t.push_back(ring.reduce(v));
    return ZVec(ring, std::move(t));
  };
  switch (spec.family) {
    case Family::kExample21:
      if (ring.modulus() != 4 || n != 2) {
        throw DomainError("example_2_1 is defined for N=4 n=2");
      }
      return make_example_2_1();
    case Family::kAffine:
      return make_affine(ring, n, shift(), spec.c);
    case Family::kQuadraticForm: {
      std::vector<int> q = spec.q;
      if (q.empty()) q.assign(static_cast<std::size_t>(n) * n, 0);
      for (auto& v : q) v = ring.reduce(v);
      return make_quadratic(ring, n, q, shift(), spec.c);
    }
    case Family::kProductBent:
      return make_product_bent(ring, n);
    case Family::kRandom:
      return random_function(ring, n, spec.seed);
    case Family::kExhaustive:
      return function_at(ring, n, spec.index);
  }
  throw DomainError("unknown generator family");
}

}  // namespace gpb

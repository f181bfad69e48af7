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

#ifndef GPB_CORPUS_H_
#define GPB_CORPUS_H_

// Deterministic function generators and exhaustive enumeration.
//
// Random tables use SplitMix64 so corpora are reproducible from a seed in
// any language:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output z ^ (z >> 31)
//
// The state starts at the seed; entry k of the table (in enumeration order)
// is the (k+1)-th output mod N.

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gpb/transforms.h"
#include "gpb/zn_algebra.h"

namespace gpb {

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

// f(x, y) = I(x) + I(y) + x + y over Z_4, I the indicator of {1, 3}.
LogicFunction make_example_2_1();

// t.x + c.
LogicFunction make_affine(Ring ring, int n, const ZVec& t, int c);

// sum_{i<=j} Q[i][j] x_i x_j + t.x + c. q is n x n row-major; entries below
// the diagonal must be zero.
LogicFunction make_quadratic(Ring ring, int n, const std::vector<int>& q,
                             const ZVec& t, int c);

// sum_{i < n/2} x_i x_{i + n/2}; n must be even. Generalized bent for every
// N (verified by the tests, not assumed).
LogicFunction make_product_bent(Ring ring, int n);

LogicFunction random_function(Ring ring, int n, std::uint64_t seed);

// Rejection-sampled from the SplitMix64 stream until mat_inverse succeeds.
ZMatrix random_invertible_matrix(Ring ring, int n, std::uint64_t seed);

// h(x) = core(x_{m+1..n}) + sum_{j<m} coeffs[j] x_j + c, with
// m = coeffs.size() leading affine coordinates.
LogicFunction append_affine_coordinates(const LogicFunction& core,
                                        const std::vector<int>& coeffs, int c);

// f(x) = f(0) + sum_i x_i (f(e_i) - f(0)) everywhere.
bool is_affine(const LogicFunction& f);

// N^{N^n}, or empty when it exceeds `cap`.
std::optional<std::uint64_t> function_count(Ring ring, int n,
                                            std::uint64_t cap);

// The index-th function in truth-table lexicographic order (entry 0 most
// significant).
LogicFunction function_at(Ring ring, int n, std::uint64_t index);

// All N^{N^n} functions in truth-table lexicographic order.
class FunctionRange {
 public:
  class Iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = LogicFunction;
    using difference_type = std::ptrdiff_t;

    Iterator() = default;
    Iterator(const FunctionRange* range, std::uint64_t position);

    LogicFunction operator*() const;
    Iterator& operator++();
    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const Iterator& other) const {
      return position_ == other.position_;
    }

   private:
    const FunctionRange* range_ = nullptr;
    std::uint64_t position_ = 0;
    std::vector<int> table_;
  };

  Iterator begin() const { return Iterator(this, 0); }
  Iterator end() const { return Iterator(this, count_); }
  std::uint64_t size() const { return count_; }

 private:
  friend FunctionRange enumerate_all(Ring, int, std::uint64_t);
  FunctionRange(Ring ring, int n, std::uint64_t count)
      : ring_(ring), n_(n), count_(count) {}

  Ring ring_;
  int n_;
  std::uint64_t count_;
};

// Throws CapExceeded when N^{N^n} > cap.
FunctionRange enumerate_all(Ring ring, int n,
                            std::uint64_t cap = kDefaultEnumerationCap);

struct CensusCounts {
  std::uint64_t total = 0;
  std::uint64_t gbent = 0;
  std::uint64_t gpb = 0;
  std::uint64_t pure_gpb = 0;
  std::uint64_t affine = 0;
  std::uint64_t other = 0;  // not GPB
  std::uint64_t inequality_violations = 0;
};

CensusCounts census(Ring ring, int n,
                    std::uint64_t cap = kDefaultEnumerationCap);

enum class Family {
  kExample21,
  kAffine,
  kQuadraticForm,
  kProductBent,
  kRandom,
  kExhaustive,
};

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family family);

struct GeneratorSpec {
  Family family;
  Ring ring;
  int arity;
  std::vector<int> t;  // affine, quadratic_form
  int c = 0;           // affine, quadratic_form
  std::vector<int> q;  // quadratic_form, n x n row-major
  std::uint64_t seed = 0;
  std::uint64_t index = 0;  // exhaustive
};

// Validates the parameters for the family; throws DomainError.
LogicFunction generate(const GeneratorSpec& spec);

}  // namespace gpb

#endif  // GPB_CORPUS_H_

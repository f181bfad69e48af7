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

#ifndef GPB_SRC_SPACE_INDEX_H_
#define GPB_SRC_SPACE_INDEX_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gpb/zn_algebra.h"

namespace gpb::internal {

// Digit cache for Z_N^n so table loops can add vectors and take inner
// products on indices without materializing ZVec objects.
class SpaceIndex {
 public:
  SpaceIndex(Ring ring, int n)
      : modulus_(ring.modulus()), n_(n), size_(ring.space_size(n)) {
    digits_.resize(size_ * static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < size_; ++k) {
      std::size_t rest = k;
      for (int i = 0; i < n; ++i) {
        digits_[k * n + i] = static_cast<int>(rest % modulus_);
        rest /= modulus_;
      }
    }
    stride_.resize(static_cast<std::size_t>(n));
    std::size_t s = 1;
    for (int i = 0; i < n; ++i) {
      stride_[i] = s;
      s *= modulus_;
    }
  }

  std::size_t size() const { return size_; }
  int modulus() const { return modulus_; }
  int arity() const { return n_; }

  int digit(std::size_t k, int i) const { return digits_[k * n_ + i]; }

  std::size_t add(std::size_t a, std::size_t b) const {
    std::size_t out = 0;
    for (int i = 0; i < n_; ++i) {
      int d = digit(a, i) + digit(b, i);
      if (d >= modulus_) d -= modulus_;
      out += stride_[i] * static_cast<std::size_t>(d);
    }
    return out;
  }

  std::size_t neg(std::size_t a) const {
    std::size_t out = 0;
    for (int i = 0; i < n_; ++i) {
      int d = digit(a, i);
      out += stride_[i] * static_cast<std::size_t>(d == 0 ? 0 : modulus_ - d);
    }
    return out;
  }

  int dot(std::size_t a, std::size_t b) const {
    std::int64_t acc = 0;
    for (int i = 0; i < n_; ++i) {
      acc += static_cast<std::int64_t>(digit(a, i)) * digit(b, i);
    }
    return static_cast<int>(acc % modulus_);
  }

 private:
  int modulus_;
  int n_;
  std::size_t size_;
  std::vector<int> digits_;
  std::vector<std::size_t> stride_;
};

}  // namespace gpb::internal

#endif  // GPB_SRC_SPACE_INDEX_H_

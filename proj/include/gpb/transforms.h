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

#ifndef GPB_TRANSFORMS_H_
#define GPB_TRANSFORMS_H_

// Logic functions f: Z_N^n -> Z_N and their two exact tables:
//
//   spectrum        S(w) = sum_x u^{f(x) - w.x}          (N^n times the
//                                                          normalized value)
//   autocorrelation C(s) = sum_x u^{f(x+s) - f(x)}
//
// Both are indexed by the enumeration order of zn_algebra.h.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gpb/cyclotomic.h"
#include "gpb/zn_algebra.h"

namespace gpb {

class LogicFunction {
 public:
  // table.size() must equal N^n and every value must lie in [0, N).
  LogicFunction(Ring ring, int arity, std::vector<int> table);

  Ring ring() const { return ring_; }
  int modulus() const { return ring_.modulus(); }
  int arity() const { return arity_; }
  std::size_t size() const { return table_.size(); }
  std::span<const int> table() const { return table_; }

  int operator[](std::size_t index) const { return table_[index]; }
  int operator()(const ZVec& x) const;

  friend bool operator==(const LogicFunction&, const LogicFunction&) = default;

 private:
  Ring ring_;
  int arity_;
  std::vector<int> table_;
};

// A length-N^n table of cyclotomic integers. The tag keeps spectra and
// autocorrelations from being mixed up.
template <typename Tag>
class CycTable {
 public:
  CycTable(Ring ring, int arity, std::vector<CycInt> entries)
      : ring_(ring), arity_(arity), entries_(std::move(entries)) {
    if (entries_.size() != ring.space_size(arity)) {
      throw DomainError("table length must be N^n");
    }
  }

  Ring ring() const { return ring_; }
  int arity() const { return arity_; }
  std::size_t size() const { return entries_.size(); }
  const CycInt& operator[](std::size_t index) const { return entries_[index]; }
  const CycInt& at(const ZVec& v) const { return entries_[vec_to_idx(v)]; }
  std::span<const CycInt> entries() const { return entries_; }

  friend bool operator==(const CycTable&, const CycTable&) = default;

 private:
  Ring ring_;
  int arity_;
  std::vector<CycInt> entries_;
};

struct SpectrumTag {};
struct AutocorrTag {};
using SpectrumTable = CycTable<SpectrumTag>;
using AutocorrTable = CycTable<AutocorrTag>;

// Direct summation, O(N^{2n} n).
SpectrumTable chrestenson_spectrum(const LogicFunction& f);

// Radix-N butterfly over the group ring Z[x]/(x^N - 1), n stages, then one
// reduction per entry. Bit-identical to chrestenson_spectrum.
SpectrumTable fast_chrestenson(const LogicFunction& f);

// Direct double loop, O(N^{2n} n). The reference route.
AutocorrTable autocorrelation(const LogicFunction& f);

// Inverse transform of |S(w)|^2 divided by N^n. Equal to autocorrelation().
AutocorrTable autocorr_via_spectrum(const LogicFunction& f);

// g(x) = f(xA). Throws DomainError if A is not invertible over Z_N.
LogicFunction linear_substitute(const LogicFunction& f, const ZMatrix& a);

// f(x) + t.x + c.
LogicFunction add_affine(const LogicFunction& f, const ZVec& t, int c);

}  // namespace gpb

#endif  // GPB_TRANSFORMS_H_

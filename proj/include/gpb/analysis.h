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

#ifndef GPB_ANALYSIS_H_
#define GPB_ANALYSIS_H_

// Classification of logic functions over Z_N.
//
// With N_C and N_S the number of zero autocorrelation and zero spectrum
// entries, f is
//   generalized bent (gbent)          if |S(w)|^2 = N^n for every w, and
//   generalized partially bent (GPB)  if (N^n - N_C)(N^n - N_S) = N^n.
// For GPB f there is a shift t with C(s) in {0, u^{-s.t} N^n} for all s.
// The shifts attaining the second value form a subgroup E of Z_N^n, and
// f(x + y) = f(y) - t.x for x in E. The purity index m_i is the least
// positive i-th coordinate over E (0 if none); f is pure when no m_i is 1.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gpb/cyclotomic.h"
#include "gpb/transforms.h"
#include "gpb/zn_algebra.h"

namespace gpb {

// A candidate subgroup failed closure. Only happens on inconsistent input.
class SubgroupViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AnalysisReport {
  Ring ring;
  int arity;
  std::uint64_t autocorr_zeros;  // N_C
  std::uint64_t spectrum_zeros;  // N_S
  bool is_gbent = false;
  bool is_gpb = false;
  // The remaining fields are populated only when is_gpb.
  std::optional<ZVec> t;
  std::vector<ZVec> subgroup;  // E, sorted by enumeration index
  std::vector<int> m;          // (m_1, ..., m_n)
  bool is_pure = false;
  // Common |S(w)|^2 over the spectral support, when it is constant.
  std::optional<CycInt> spectral_level;
};

template <typename Tag>
std::uint64_t count_zeros(const CycTable<Tag>& table) {
  std::uint64_t zeros = 0;
  for (const auto& e : table.entries()) {
    if (e.is_zero()) ++zeros;
  }
  return zeros;
}

bool is_generalized_bent(const LogicFunction& f);
bool is_generalized_bent(const SpectrumTable& spectrum);

bool is_generalized_partially_bent(const LogicFunction& f);

// (N^n - N_C)(N^n - N_S) >= N^n. Exact, in 128-bit arithmetic.
bool check_inequality(const LogicFunction& f);
bool check_inequality(std::uint64_t space_size, std::uint64_t autocorr_zeros,
                      std::uint64_t spectrum_zeros);

// True iff C(s) in {0, u^{-s.t} N^n} for every s.
bool satisfies_shift_condition(const AutocorrTable& autocorr, const ZVec& t);

// The valid shifts of a GPB function are exactly the negated spectral
// support points. Returns the lexicographically least such -w that passes
// satisfies_shift_condition(), or empty when f is not GPB.
std::optional<ZVec> find_t(const LogicFunction& f);
std::optional<ZVec> find_t(const SpectrumTable& spectrum,
                           const AutocorrTable& autocorr);

// E = {s : C(s) = u^{-s.t} N^n}, checked to be a subgroup.
std::vector<ZVec> extract_E(const LogicFunction& f, const ZVec& t);
std::vector<ZVec> extract_E(const AutocorrTable& autocorr, const ZVec& t);

// {x : y.x = 0 for every y in E}, sorted by enumeration index.
std::vector<ZVec> annihilator(const std::vector<ZVec>& subgroup, Ring ring,
                              int n);

std::vector<int> compute_m(const std::vector<ZVec>& subgroup, Ring ring, int n);

// No m_i equals 1. Requires report.is_gpb.
bool is_pure(const AnalysisReport& report);

AnalysisReport analyze(const LogicFunction& f);

}  // namespace gpb

#endif  // GPB_ANALYSIS_H_

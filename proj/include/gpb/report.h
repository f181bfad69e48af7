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

#ifndef GPB_REPORT_H_
#define GPB_REPORT_H_

// Structured (JSON) and human-readable renderings of the library's results.
//
// A cyclotomic value is serialized as
//   {"coeffs": [c_0, ..., c_{phi(N)-1}], "text": "8*u",
//    "approx": [re, im]}
// where coeffs are the exact coordinates in the basis 1, u, ..., u^{phi-1}
// (JSON integers, or decimal strings beyond 64 bits) and "approx" is a
// floating-point courtesy value. Normalized spectral values carry the exact
// entry together with "scale" = N^n and an approximate quotient.

#include <optional>
#include <string>

#include "json.hpp"

#include "gpb/analysis.h"
#include "gpb/corpus.h"
#include "gpb/cyclotomic.h"
#include "gpb/decompose.h"
#include "gpb/transforms.h"

namespace gpb {

using Json = nlohmann::json;

Json to_json(const BigInt& value);
Json to_json(const CycInt& value);
Json to_json(const ZVec& v);
Json to_json(const ZMatrix& a);

Json spectrum_json(const SpectrumTable& spectrum);
Json autocorr_json(const AutocorrTable& autocorr);
Json analysis_json(const AnalysisReport& report);

struct DecompositionSummary {
  Decomposition decomposition;
  bool verified;
  std::optional<bool> residual_gbent;  // set when N is prime
};

Json decomposition_json(const DecompositionSummary& summary);
Json census_json(Ring ring, int n, const CensusCounts& counts);

// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump_report(const Json& report);

std::string spectrum_text(const SpectrumTable& spectrum);
std::string autocorr_text(const AutocorrTable& autocorr);
std::string analysis_text(const AnalysisReport& report);
std::string decomposition_text(const DecompositionSummary& summary);
std::string census_text(Ring ring, int n, const CensusCounts& counts);

}  // namespace gpb

#endif  // GPB_REPORT_H_

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

#include "gpb/report.h"

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>

namespace gpb {
namespace {

// Rounding residue from evaluating the power basis is snapped to zero, as is
// a negative zero.
std::complex<double> clean(std::complex<double> z) {
  const double tol = 1e-12 * (1.0 + std::abs(z.real()) + std::abs(z.imag()));
  double re = std::abs(z.real()) < tol ? 0.0 : z.real();
  double im = std::abs(z.imag()) < tol ? 0.0 : z.imag();
  return {re + 0.0, im + 0.0};
}

Json approx_pair(std::complex<double> z) {
  z = clean(z);
  return Json::array({z.real(), z.imag()});
}

std::string format_complex(std::complex<double> z) {
  z = clean(z);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

template <typename Tag>
Json table_entries(const CycTable<Tag>& table, const char* key) {
  Json entries = Json::array();
  for (std::size_t k = 0; k < table.size(); ++k) {
    entries.push_back(
        Json{{"index", k},
             {key, to_json(idx_to_vec(k, table.ring(), table.arity()))},
             {"value", to_json(table[k])}});
  }
  return entries;
}

std::string vec_text(const ZVec& v) { return v.to_string(); }

}  // namespace

Json to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

Json to_json(const CycInt& value) {
  Json coeffs = Json::array();
  for (const auto& c : value.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"coeffs", coeffs},
              {"text", value.to_string()},
              {"approx", approx_pair(to_complex(value))}};
}

Json to_json(const ZVec& v) {
  Json out = Json::array();
  for (int e : v.entries()) out.push_back(e);
  return out;
}

Json to_json(const ZMatrix& a) {
  Json rows = Json::array();
  for (int i = 0; i < a.size(); ++i) rows.push_back(to_json(a.row(i)));
  return rows;
}

Json spectrum_json(const SpectrumTable& spectrum) {
  Json entries = table_entries(spectrum, "w");
  const double scale = static_cast<double>(spectrum.size());
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    entries[k]["normalized_approx"] =
        approx_pair(to_complex(spectrum[k]) / scale);
  }
  return Json{{"N", spectrum.ring().modulus()},
              {"n", spectrum.arity()},
              {"scale", spectrum.size()},
              {"zeros", count_zeros(spectrum)},
              {"entries", entries}};
}

Json autocorr_json(const AutocorrTable& autocorr) {
  return Json{{"N", autocorr.ring().modulus()},
              {"n", autocorr.arity()},
              {"zeros", count_zeros(autocorr)},
              {"entries", table_entries(autocorr, "s")}};
}

Json analysis_json(const AnalysisReport& report) {
  const std::uint64_t size = report.ring.space_size(report.arity);
  Json out{{"N", report.ring.modulus()},
           {"n", report.arity},
           {"N_C", report.autocorr_zeros},
           {"N_S", report.spectrum_zeros},
           {"product", (size - report.autocorr_zeros) *
                           (size - report.spectrum_zeros)},
           {"is_gbent", report.is_gbent},
           {"is_gpb", report.is_gpb},
           {"t", nullptr},
           {"E", nullptr},
           {"m", nullptr},
           {"is_pure", nullptr},
           {"spectral_level", nullptr}};
  if (report.spectral_level) {
    out["spectral_level"] = to_json(*report.spectral_level);
  }
  if (report.is_gpb) {
    out["t"] = to_json(*report.t);
    Json e = Json::array();
    for (const auto& v : report.subgroup) e.push_back(to_json(v));
    out["E"] = e;
    out["E_size"] = report.subgroup.size();
    out["m"] = report.m;
    out["is_pure"] = report.is_pure;
  }
  return out;
}

Json decomposition_json(const DecompositionSummary& summary) {
  const Decomposition& d = summary.decomposition;
  Json out{{"A_total", to_json(d.a_total)},
           {"m", d.peeled},
           {"affine_coeffs", d.affine_coeffs},
           {"constant", d.constant},
           {"residual",
            Json{{"n", d.residual.arity()},
                 {"table", Json(std::vector<int>(d.residual.table().begin(),
                                                 d.residual.table().end()))}}},
           {"verified", summary.verified},
           {"residual_gbent", nullptr}};
  if (summary.residual_gbent) out["residual_gbent"] = *summary.residual_gbent;
  return out;
}

Json census_json(Ring ring, int n, const CensusCounts& c) {
  return Json{{"N", ring.modulus()},
              {"n", n},
              {"total", c.total},
              {"gbent", c.gbent},
              {"gpb", c.gpb},
              {"pure_gpb", c.pure_gpb},
              {"affine", c.affine},
              {"other", c.other},
              {"inequality_violations", c.inequality_violations}};
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Human-readable text

std::string spectrum_text(const SpectrumTable& spectrum) {
  std::ostringstream os;
  os << "Chrestenson spectrum, N=" << spectrum.ring().modulus()
     << " n=" << spectrum.arity() << " (exact values are N^n * S(w), N^n = "
     << spectrum.size() << ")\n";
  os << "index  w  exact  ~value  ~S(w)\n";
  const double scale = static_cast<double>(spectrum.size());
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    const auto z = to_complex(spectrum[k]);
    os << k << "  " << vec_text(idx_to_vec(k, spectrum.ring(), spectrum.arity()))
       << "  " << spectrum[k].to_string() << "  " << format_complex(z) << "  "
       << format_complex(z / scale) << '\n';
  }
  os << "zero entries (N_S): " << count_zeros(spectrum) << '\n';
  return os.str();
}

std::string autocorr_text(const AutocorrTable& autocorr) {
  std::ostringstream os;
  os << "Autocorrelation, N=" << autocorr.ring().modulus()
     << " n=" << autocorr.arity() << '\n';
  os << "index  s  exact  ~value\n";
  for (std::size_t k = 0; k < autocorr.size(); ++k) {
    os << k << "  " << vec_text(idx_to_vec(k, autocorr.ring(), autocorr.arity()))
       << "  " << autocorr[k].to_string() << "  "
       << format_complex(to_complex(autocorr[k])) << '\n';
  }
  os << "zero entries (N_C): " << count_zeros(autocorr) << '\n';
  return os.str();
}

std::string analysis_text(const AnalysisReport& r) {
  const std::uint64_t size = r.ring.space_size(r.arity);
  std::ostringstream os;
  os << "N=" << r.ring.modulus() << " n=" << r.arity << '\n';
  os << "N_C = " << r.autocorr_zeros << ", N_S = " << r.spectrum_zeros
     << ", (N^n - N_C)(N^n - N_S) = "
     << (size - r.autocorr_zeros) * (size - r.spectrum_zeros)
     << " vs N^n = " << size << '\n';
  os << "generalized bent: " << (r.is_gbent ? "yes" : "no") << '\n';
  os << "generalized partially bent: " << (r.is_gpb ? "yes" : "no") << '\n';
  if (r.spectral_level) {
    os << "|S(w)|^2 on support (times N^2n): " << r.spectral_level->to_string()
       << '\n';
  }
  if (!r.is_gpb) return os.str();
  os << "t = " << r.t->to_string() << '\n';
  os << "E (" << r.subgroup.size() << " elements) = {";
  for (std::size_t i = 0; i < r.subgroup.size(); ++i) {
    if (i) os << ", ";
    os << r.subgroup[i].to_string();
  }
  os << "}\n";
  os << "m = (";
  for (std::size_t i = 0; i < r.m.size(); ++i) {
    if (i) os << ',';
    os << r.m[i];
  }
  os << ")\npure: " << (r.is_pure ? "yes" : "no") << '\n';
  return os.str();
}

std::string decomposition_text(const DecompositionSummary& s) {
  const Decomposition& d = s.decomposition;
  std::ostringstream os;
  os << "A_total = " << d.a_total.to_string() << '\n';
  os << "peeled coordinates m = " << d.peeled << '\n';
  os << "affine coefficients = (";
  for (std::size_t i = 0; i < d.affine_coeffs.size(); ++i) {
    if (i) os << ',';
    os << d.affine_coeffs[i];
  }
  os << ")\nconstant = " << d.constant << '\n';
  os << "residual (n=" << d.residual.arity() << "):";
  for (int v : d.residual.table()) os << ' ' << v;
  os << "\nverified: " << (s.verified ? "yes" : "NO") << '\n';
  if (s.residual_gbent) {
    os << "residual generalized bent (prime N): "
       << (*s.residual_gbent ? "yes" : "NO") << '\n';
  }
  return os.str();
}

std::string census_text(Ring ring, int n, const CensusCounts& c) {
  std::ostringstream os;
  os << "census N=" << ring.modulus() << " n=" << n << '\n'
     << "total: " << c.total << '\n'
     << "generalized bent: " << c.gbent << '\n'
     << "generalized partially bent: " << c.gpb << '\n'
     << "pure GPB: " << c.pure_gpb << '\n'
     << "affine: " << c.affine << '\n'
     << "other (not GPB): " << c.other << '\n'
     << "inequality violations: " << c.inequality_violations << '\n';
  return os.str();
}

}  // namespace gpb

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

#include "gpb/analysis.h"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "space_index.h"

namespace gpb {
namespace {

// u^k * N^n for k in [0, N).
std::vector<CycInt> scaled_roots(Ring ring, std::uint64_t space_size) {
  std::vector<CycInt> out;
  const CycInt scale_factor = CycInt::integer(ring.modulus(), space_size);
  for (int k = 0; k < ring.modulus(); ++k) {
    out.push_back(root_power(ring.modulus(), k) * scale_factor);
  }
  return out;
}

// A generating set of <members>, built greedily in index order.
std::vector<std::size_t> greedy_generators(
    const internal::SpaceIndex& space, const std::vector<std::size_t>& members) {
  std::vector<char> in_span(space.size(), 0);
  std::vector<std::size_t> span{0};
  in_span[0] = 1;
  std::vector<std::size_t> gens;
  for (std::size_t e : members) {
    if (in_span[e]) continue;
    gens.push_back(e);
    // span <- span + <e>, one coset of the old span at a time.
    const std::vector<std::size_t> base = span;
    std::vector<std::size_t> coset = base;
    for (;;) {
      for (auto& c : coset) c = space.add(c, e);
      if (in_span[coset[0]]) break;
      for (std::size_t c : coset) {
        in_span[c] = 1;
        span.push_back(c);
      }
    }
  }
  return gens;
}

void require_subgroup(const internal::SpaceIndex& space,
                      const std::vector<std::size_t>& members) {
  std::vector<char> member(space.size(), 0);
  for (std::size_t m : members) member[m] = 1;
  if (!member[0]) throw SubgroupViolation("E does not contain 0");
  // Closure under each generator of <E> implies E + <E> is inside E.
  for (std::size_t g : greedy_generators(space, members)) {
    for (std::size_t a : members) {
      if (!member[space.add(a, g)]) {
        throw SubgroupViolation("E is not closed under addition");
      }
    }
  }
}

std::vector<ZVec> to_vectors(const std::vector<std::size_t>& indices,
                             Ring ring, int n) {
  std::vector<ZVec> out;
  out.reserve(indices.size());
  for (std::size_t k : indices) out.push_back(idx_to_vec(k, ring, n));
  return out;
}

std::vector<std::size_t> to_indices(const std::vector<ZVec>& vectors) {
  std::vector<std::size_t> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(vec_to_idx(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<CycInt> common_level(const SpectrumTable& spectrum) {
  std::optional<CycInt> level;
  for (const auto& s : spectrum.entries()) {
    if (s.is_zero()) continue;
    CycInt sq = norm_sq(s);
    if (!level) {
      level = std::move(sq);
    } else if (*level != sq) {
      return std::nullopt;
    }
  }
  return level;
}

}  // namespace

bool is_generalized_bent(const SpectrumTable& spectrum) {
  const CycInt target =
      CycInt::integer(spectrum.ring().modulus(), spectrum.size());
  for (const auto& s : spectrum.entries()) {
    if (norm_sq(s) != target) return false;
  }
  return true;
}

bool is_generalized_bent(const LogicFunction& f) {
  return is_generalized_bent(fast_chrestenson(f));
}

bool check_inequality(std::uint64_t space_size, std::uint64_t autocorr_zeros,
                      std::uint64_t spectrum_zeros) {
  const unsigned __int128 product =
      static_cast<unsigned __int128>(space_size - autocorr_zeros) *
      (space_size - spectrum_zeros);
  return product >= space_size;
}

bool check_inequality(const LogicFunction& f) {
  return check_inequality(f.size(), count_zeros(autocorr_via_spectrum(f)),
                          count_zeros(fast_chrestenson(f)));
}

bool is_generalized_partially_bent(const LogicFunction& f) {
  const std::uint64_t size = f.size();
  const std::uint64_t nc = count_zeros(autocorr_via_spectrum(f));
  const std::uint64_t ns = count_zeros(fast_chrestenson(f));
  return static_cast<unsigned __int128>(size - nc) * (size - ns) == size;
}

bool satisfies_shift_condition(const AutocorrTable& autocorr, const ZVec& t) {
  const Ring ring = autocorr.ring();
  if (t.ring() != ring || t.dim() != autocorr.arity()) {
    throw DomainError("shift vector does not match table shape");
  }
  const internal::SpaceIndex space(ring, autocorr.arity());
  const auto targets = scaled_roots(ring, space.size());
  const std::size_t t_index = vec_to_idx(t);
  for (std::size_t s = 0; s < space.size(); ++s) {
    const CycInt& c = autocorr[s];
    if (c.is_zero()) continue;
    const int k = ring.reduce(-space.dot(s, t_index));
    if (c != targets[static_cast<std::size_t>(k)]) return false;
  }
  return true;
}

std::optional<ZVec> find_t(const SpectrumTable& spectrum,
                           const AutocorrTable& autocorr) {
  std::optional<ZVec> best;
  for (std::size_t w = 0; w < spectrum.size(); ++w) {
    if (spectrum[w].is_zero()) continue;
    ZVec candidate = -idx_to_vec(w, spectrum.ring(), spectrum.arity());
    if (!best || candidate < *best) best = std::move(candidate);
  }
  if (!best || !satisfies_shift_condition(autocorr, *best)) return std::nullopt;
  return best;
}

std::optional<ZVec> find_t(const LogicFunction& f) {
  return find_t(fast_chrestenson(f), autocorr_via_spectrum(f));
}

std::vector<ZVec> extract_E(const AutocorrTable& autocorr, const ZVec& t) {
  const Ring ring = autocorr.ring();
  if (t.ring() != ring || t.dim() != autocorr.arity()) {
    throw DomainError("shift vector does not match table shape");
  }
  const internal::SpaceIndex space(ring, autocorr.arity());
  const auto targets = scaled_roots(ring, space.size());
  const std::size_t t_index = vec_to_idx(t);
  std::vector<std::size_t> members;
  for (std::size_t s = 0; s < space.size(); ++s) {
    const int k = ring.reduce(-space.dot(s, t_index));
    if (autocorr[s] == targets[static_cast<std::size_t>(k)]) members.push_back(s);
  }
  require_subgroup(space, members);
  return to_vectors(members, ring, autocorr.arity());
}

std::vector<ZVec> extract_E(const LogicFunction& f, const ZVec& t) {
  return extract_E(autocorr_via_spectrum(f), t);
}

std::vector<ZVec> annihilator(const std::vector<ZVec>& subgroup, Ring ring,
                              int n) {
  const internal::SpaceIndex space(ring, n);
  const auto members = to_indices(subgroup);
  const auto gens = greedy_generators(space, members);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < space.size(); ++x) {
    bool orthogonal = true;
    for (std::size_t g : gens) {
      if (space.dot(g, x) != 0) {
        orthogonal = false;
        break;
      }
    }
    if (orthogonal) out.push_back(x);
  }
  return to_vectors(out, ring, n);
}

std::vector<int> compute_m(const std::vector<ZVec>& subgroup, Ring ring,
                           int n) {
  std::vector<int> m(static_cast<std::size_t>(n), 0);
  for (const auto& a : subgroup) {
    if (a.ring() != ring || a.dim() != n) {
      throw DomainError("subgroup element does not lie in Z_N^n");
    }
    for (int i = 0; i < n; ++i) {
      auto& mi = m[static_cast<std::size_t>(i)];
      if (a[i] > 0 && (mi == 0 || a[i] < mi)) mi = a[i];
    }
  }
  return m;
}

bool is_pure(const AnalysisReport& report) {
  if (!report.is_gpb) throw DomainError("purity is defined for GPB functions");
  return std::none_of(report.m.begin(), report.m.end(),
                      [](int mi) { return mi == 1; });
}

AnalysisReport analyze(const LogicFunction& f) {
  const SpectrumTable spectrum = fast_chrestenson(f);
  const AutocorrTable autocorr = autocorr_via_spectrum(f);
  const std::uint64_t size = f.size();

  AnalysisReport report{.ring = f.ring(),
                        .arity = f.arity(),
                        .autocorr_zeros = count_zeros(autocorr),
                        .spectrum_zeros = count_zeros(spectrum)};
  report.is_gbent = is_generalized_bent(spectrum);
  report.is_gpb = static_cast<unsigned __int128>(size - report.autocorr_zeros) *
                      (size - report.spectrum_zeros) ==
                  size;
  report.spectral_level = common_level(spectrum);
  if (!report.is_gpb) return report;

  report.t = find_t(spectrum, autocorr);
  if (!report.t) {
    throw std::logic_error("product criterion holds but no valid shift t");
  }
  report.subgroup = extract_E(autocorr, *report.t);
  report.m = compute_m(report.subgroup, f.ring(), f.arity());
  report.is_pure = is_pure(report);
  return report;
}

}  // namespace gpb

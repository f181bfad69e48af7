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

#include "gpb/decompose.h"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gpb {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

PeelMatrices build_peel_matrices(const ZVec& alpha, int i) {
  const int n = alpha.dim();
  const Ring ring = alpha.ring();
  if (i < 0 || i >= n) throw DomainError("peel coordinate out of range");
  if (alpha[i] != 1) throw DomainError("peel witness must have alpha_i = 1");

  std::vector<int> a1(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> a2(static_cast<std::size_t>(n) * n, 0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      a1[static_cast<std::size_t>(r * n + c)] =
          r == i ? alpha[c] : static_cast<int>(r == c);
    }
  }
  // Row 0 is e_i, rows 1..i are e_0..e_{i-1}, rows below i are unchanged.
  for (int r = 0; r < n; ++r) {
    const int source = r == 0 ? i : (r <= i ? r - 1 : r);
    a2[static_cast<std::size_t>(r * n + source)] = 1;
  }
  return PeelMatrices{ZMatrix(ring, n, std::move(a1)),
                      ZMatrix(ring, n, std::move(a2))};
}

PeelStep decompose_step(const LogicFunction& f, const AnalysisReport& report) {
  if (report.ring != f.ring() || report.arity != f.arity()) {
    throw DomainError("report does not describe this function");
  }
  if (!report.is_gpb) throw NotGpbError("function is not GPB");

  int coordinate = -1;
  for (int i = 0; i < f.arity(); ++i) {
    if (report.m[static_cast<std::size_t>(i)] == 1) {
      coordinate = i;
      break;
    }
  }
  if (coordinate < 0) throw PureInputError("function is already pure GPB");

  std::optional<ZVec> alpha;
  for (const auto& e : report.subgroup) {
    if (e[coordinate] == 1 && (!alpha || e < *alpha)) alpha = e;
  }
  // m_i = 1 guarantees a witness.
  if (!alpha) throw std::logic_error("m_i = 1 but no witness in E");

  const PeelMatrices peel = build_peel_matrices(*alpha, coordinate);
  ZMatrix a = mat_mul(peel.a2, peel.a1);
  LogicFunction g = linear_substitute(f, a);
  ZVec t_prime = mat_apply(*report.t, mat_transpose(a));
  return PeelStep{std::move(a), std::move(g), std::move(t_prime), coordinate,
                  std::move(*alpha)};
}

LogicFunction restrict_to_tail(const LogicFunction& f, int keep) {
  if (keep < 0 || keep > f.arity()) throw DomainError("bad restriction");
  const std::uint64_t stride = f.ring().space_size(f.arity() - keep);
  const std::uint64_t size = f.ring().space_size(keep);
  std::vector<int> table(size);
  for (std::uint64_t j = 0; j < size; ++j) table[j] = f[j * stride];
  return LogicFunction(f.ring(), keep, std::move(table));
}

namespace {

// diag(I_{n-k}, a) for a k x k block a.
ZMatrix lift(const ZMatrix& a, int n) {
  const int k = a.size();
  const int offset = n - k;
  std::vector<int> out(static_cast<std::size_t>(n) * n, 0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      int v;
      if (r < offset || c < offset) {
        v = static_cast<int>(r == c);
      } else {
        v = a(r - offset, c - offset);
      }
      out[static_cast<std::size_t>(r * n + c)] = v;
    }
  }
  return ZMatrix(a.ring(), n, std::move(out));
}

}  // namespace

Decomposition decompose(const LogicFunction& f) {
  const Ring ring = f.ring();
  const int n = f.arity();
  AnalysisReport report = analyze(f);
  if (!report.is_gpb) throw NotGpbError("function is not GPB");

  LogicFunction current = f;
  ZMatrix total = ZMatrix::identity(ring, n);
  std::vector<int> coeffs;
  while (current.arity() > 0) {
    if (!coeffs.empty()) {
      report = analyze(current);
      if (!report.is_gpb) {
        throw std::logic_error("peeled remainder lost the GPB property");
      }
    }
    if (report.is_pure) break;
    PeelStep step = decompose_step(current, report);
    total = mat_mul(lift(step.a, n), total);
    coeffs.push_back(ring.reduce(-step.t_prime[0]));
    current = restrict_to_tail(step.g, current.arity() - 1);
  }

  const int constant = f[0];
  std::vector<int> table(current.table().begin(), current.table().end());
  for (auto& v : table) v = ring.reduce(v - constant);
  const int peeled = static_cast<int>(coeffs.size());
  return Decomposition{
      std::move(total), peeled, std::move(coeffs),
      LogicFunction(ring, n - peeled, std::move(table)), constant};
}

bool verify_decomposition(const LogicFunction& f, const Decomposition& d) {
  const Ring ring = f.ring();
  const int n = f.arity();
  if (d.a_total.ring() != ring || d.a_total.size() != n) return false;
  if (d.residual.ring() != ring) return false;
  if (d.peeled < 0 || d.peeled + d.residual.arity() != n) return false;
  if (d.affine_coeffs.size() != static_cast<std::size_t>(d.peeled)) return false;
  if (!mat_inverse(d.a_total)) return false;

  const std::uint64_t head_size = ring.space_size(d.peeled);
  for (std::uint64_t k = 0; k < f.size(); ++k) {
    const ZVec x = idx_to_vec(k, ring, n);
    std::int64_t rhs = d.residual[k / head_size] + d.constant;
    for (int j = 0; j < d.peeled; ++j) {
      rhs += static_cast<std::int64_t>(d.affine_coeffs[static_cast<std::size_t>(j)]) * x[j];
    }
    if (f(mat_apply(x, d.a_total)) != ring.reduce(rhs)) return false;
  }

  if (d.residual.arity() == 0) return true;
  const AnalysisReport report = analyze(d.residual);
  return report.is_gpb && report.is_pure;
}

bool prime_case_check(const Decomposition& d, int modulus) {
  if (!is_prime(modulus)) {
    throw DomainError("prime_case_check needs a prime modulus, got " +
                      std::to_string(modulus));
  }
  if (d.residual.modulus() != modulus) {
    throw DomainError("decomposition modulus mismatch");
  }
  return is_generalized_bent(d.residual);
}

}  // namespace gpb

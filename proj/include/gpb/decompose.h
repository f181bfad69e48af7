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

#ifndef GPB_DECOMPOSE_H_
#define GPB_DECOMPOSE_H_

// Splitting a non-pure GPB function into a pure GPB core plus an affine
// part.
//
// If some element alpha of E has alpha_i = 1, the substitution A = A2 * A1
// (A1 = identity with row i replaced by alpha, A2 = the permutation lifting
// row i to the top) sends e_1 to alpha. In the new coordinates
// g(y) = f(yA) satisfies g(y + k e_1) = g(y) - k t'_1 with t' = t A^T, so
// the first coordinate is affine and the rest of g is again GPB on one
// fewer variable. Repeating until the remainder is pure gives
//
//   f(x A_total) = residual(x_{m+1..n}) + sum_{j<=m} c_j x_j + constant.

#include <stdexcept>
#include <vector>

#include "gpb/analysis.h"
#include "gpb/transforms.h"
#include "gpb/zn_algebra.h"

namespace gpb {

class NotGpbError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PureInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PeelMatrices {
  ZMatrix a1;
  ZMatrix a2;
};

// Coordinate index i is 0-based. alpha[i] must be 1.
PeelMatrices build_peel_matrices(const ZVec& alpha, int i);

struct PeelStep {
  ZMatrix a;          // A2 * A1
  LogicFunction g;    // f(yA)
  ZVec t_prime;       // t A^T
  int coordinate;     // the i that was peeled
  ZVec alpha;         // the witness in E
};

// One peeling step. report must be analyze(f). Throws NotGpbError or
// PureInputError when the precondition fails. The witness is the smallest
// i with m_i = 1, then the lexicographically least alpha in E with
// alpha_i = 1.
PeelStep decompose_step(const LogicFunction& f, const AnalysisReport& report);

struct Decomposition {
  ZMatrix a_total;
  int peeled;                       // m
  std::vector<int> affine_coeffs;   // length m, residues mod N
  LogicFunction residual;           // arity n - m, residual(0) == 0
  int constant;
};

// Throws NotGpbError if f is not GPB.
Decomposition decompose(const LogicFunction& f);

// Exhaustive reconstruction check plus purity of the residual.
bool verify_decomposition(const LogicFunction& f, const Decomposition& d);

// For prime N the residual of a decomposition is generalized bent. Throws
// DomainError when N is not prime.
bool prime_case_check(const Decomposition& d, int modulus);

bool is_prime(int n);

// h(y) = f(0, ..., 0, y) on the last `keep` coordinates.
LogicFunction restrict_to_tail(const LogicFunction& f, int keep);

}  // namespace gpb

#endif  // GPB_DECOMPOSE_H_

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

#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "gpb/analysis.h"
#include "gpb/corpus.h"

namespace gpb {
namespace {

// x2 x3 + x1 over Z_2, first coordinate varying fastest.
LogicFunction x2x3_plus_x1() {
  const Ring r(2);
  std::vector<int> t(8);
  for (std::uint64_t k = 0; k < 8; ++k) {
    const ZVec x = idx_to_vec(k, r, 3);
    t[k] = (x[1] * x[2] + x[0]) % 2;
  }
  return LogicFunction(r, 3, t);
}

LogicFunction x1x2() { return LogicFunction(Ring(2), 2, {0, 0, 0, 1}); }

TEST(PeelMatrices, UnitWitnessGivesPureRotation) {
  const Ring r(5);
  for (int n = 1; n <= 4; ++n) {
    for (int i = 0; i < n; ++i) {
      const PeelMatrices p = build_peel_matrices(ZVec::unit(r, n, i), i);
      EXPECT_EQ(p.a1, ZMatrix::identity(r, n));
      EXPECT_EQ(mat_mul(p.a2, mat_transpose(p.a2)), ZMatrix::identity(r, n));
      // Row i of A2 A1 is what ends up first: e_0 A2 = e_i.
      EXPECT_EQ(mat_apply(ZVec::unit(r, n, 0), p.a2), ZVec::unit(r, n, i));
    }
  }
}

TEST(PeelMatrices, ReplacesRowWithWitness) {
  const Ring r(4);
  const PeelMatrices p = build_peel_matrices(ZVec(r, {3, 1}), 1);
  EXPECT_EQ(p.a1, ZMatrix(r, {{1, 0}, {3, 1}}));
  EXPECT_EQ(*mat_inverse(p.a1), ZMatrix(r, {{1, 0}, {1, 1}}));
  EXPECT_EQ(mat_mul(p.a1, ZMatrix(r, {{1, 0}, {1, 1}})), ZMatrix::identity(r, 2));
  // The composite sends e_0 to the witness.
  EXPECT_EQ(mat_apply(ZVec::unit(r, 2, 0), mat_mul(p.a2, p.a1)), ZVec(r, {3, 1}));
  EXPECT_THROW(build_peel_matrices(ZVec(r, {3, 2}), 1), DomainError);
  EXPECT_THROW(build_peel_matrices(ZVec(r, {3, 1}), 2), DomainError);
}

TEST(DecomposeStep, PeelsAffineCoordinate) {
  const LogicFunction f = x2x3_plus_x1();
  const AnalysisReport rep = analyze(f);
  ASSERT_TRUE(rep.is_gpb);
  ASSERT_FALSE(rep.is_pure);
  const PeelStep step = decompose_step(f, rep);
  EXPECT_EQ(step.g, linear_substitute(f, step.a));
  EXPECT_EQ(step.t_prime, mat_apply(*rep.t, mat_transpose(step.a)));
  // g is affine along the first axis with slope -t'_1.
  const Ring r(2);
  for (std::uint64_t k = 0; k < 8; ++k) {
    const ZVec y = idx_to_vec(k, r, 3);
    EXPECT_EQ(step.g(y + ZVec::unit(r, 3, 0)), r.reduce(step.g(y) - step.t_prime[0]));
  }
  const LogicFunction tail = restrict_to_tail(step.g, 2);
  EXPECT_EQ(tail, x1x2());
  EXPECT_TRUE(is_generalized_partially_bent(tail));
}

TEST(DecomposeStep, TailStaysPartiallyBent) {
  SplitMix64 rng(4);
  for (int q : {2, 3, 4, 6}) {
    const Ring r(q);
    for (int trial = 0; trial < 10; ++trial) {
      LogicFunction f = append_affine_coordinates(random_function(r, 1, rng.next()),
                                                  {static_cast<int>(rng.next() % q)}, 0);
      f = linear_substitute(f, random_invertible_matrix(r, 2, rng.next()));
      const AnalysisReport rep = analyze(f);
      if (!rep.is_gpb || rep.is_pure) continue;
      const PeelStep step = decompose_step(f, rep);
      EXPECT_TRUE(is_generalized_partially_bent(restrict_to_tail(step.g, 1)));
    }
  }
}

TEST(DecomposeStep, Preconditions) {
  EXPECT_THROW(decompose_step(make_example_2_1(), analyze(make_example_2_1())),
               PureInputError);
  std::uint64_t seed = 0;
  LogicFunction f = random_function(Ring(3), 2, seed);
  while (is_generalized_partially_bent(f)) f = random_function(Ring(3), 2, ++seed);
  EXPECT_THROW(decompose_step(f, analyze(f)), NotGpbError);
  EXPECT_THROW(decompose(f), NotGpbError);
}

TEST(Decompose, Examples) {
  const LogicFunction ex = make_example_2_1();
  const Decomposition d0 = decompose(ex);
  EXPECT_EQ(d0.peeled, 0);
  EXPECT_EQ(d0.a_total, ZMatrix::identity(Ring(4), 2));
  EXPECT_EQ(d0.residual, ex);
  EXPECT_TRUE(verify_decomposition(ex, d0));

  const LogicFunction f = x2x3_plus_x1();
  const Decomposition d1 = decompose(f);
  EXPECT_EQ(d1.peeled, 1);
  EXPECT_EQ(d1.residual, x1x2());
  EXPECT_EQ(d1.affine_coeffs, std::vector<int>{1});
  EXPECT_EQ(d1.constant, 0);
  EXPECT_TRUE(verify_decomposition(f, d1));
  EXPECT_TRUE(is_generalized_bent(d1.residual));

  const Ring r(3);
  const LogicFunction constant(r, 2, std::vector<int>(9, 2));
  const Decomposition d2 = decompose(constant);
  EXPECT_EQ(d2.peeled, 2);
  EXPECT_EQ(d2.residual.arity(), 0);
  EXPECT_EQ(d2.constant, 2);
  EXPECT_EQ(d2.affine_coeffs, (std::vector<int>{0, 0}));
  EXPECT_TRUE(verify_decomposition(constant, d2));

  const LogicFunction aff = make_affine(Ring(2), 2, ZVec(Ring(2), {1, 1}), 1);
  const Decomposition d3 = decompose(aff);
  EXPECT_EQ(d3.peeled, 2);
  EXPECT_TRUE(verify_decomposition(aff, d3));
}

TEST(Verify, HandBuiltAndMutations) {
  const LogicFunction f = x2x3_plus_x1();
  const Ring r(2);
  const Decomposition hand{ZMatrix::identity(r, 3), 1, {1}, x1x2(), 0};
  EXPECT_TRUE(verify_decomposition(f, hand));

  Decomposition bad = hand;
  bad.affine_coeffs[0] = 0;
  EXPECT_FALSE(verify_decomposition(f, bad));
  bad = hand;
  bad.constant = 1;
  EXPECT_FALSE(verify_decomposition(f, bad));
  bad = hand;
  bad.residual = LogicFunction(r, 2, {0, 0, 1, 1});
  EXPECT_FALSE(verify_decomposition(f, bad));
  bad = hand;
  bad.a_total = ZMatrix(r, {{1, 0, 0}, {0, 0, 1}, {0, 0, 1}});
  EXPECT_FALSE(verify_decomposition(f, bad));

  // A reconstruction that holds but leaves a non-pure residual.
  const LogicFunction g = make_affine(r, 2, ZVec(r, {1, 0}), 0);
  const Decomposition lazy{ZMatrix::identity(r, 2), 0, {}, g, 0};
  EXPECT_FALSE(verify_decomposition(g, lazy));
}

TEST(Verify, EveryDecompositionOfRandomSuiteMutatesToFalse) {
  SplitMix64 rng(21);
  for (int q : {2, 3, 4, 5, 6}) {
    const Ring r(q);
    for (int trial = 0; trial < 6; ++trial) {
      const int n = q <= 3 ? 4 : 3;
      const int head = 1 + static_cast<int>(rng.next() % (n - 1));
      std::vector<int> coeffs(static_cast<std::size_t>(head));
      for (auto& c : coeffs) c = static_cast<int>(rng.next() % q);
      LogicFunction f = append_affine_coordinates(
          random_function(r, n - head, rng.next()), coeffs,
          static_cast<int>(rng.next() % q));
      f = linear_substitute(f, random_invertible_matrix(r, n, rng.next()));
      if (!is_generalized_partially_bent(f)) continue;
      const Decomposition d = decompose(f);
      ASSERT_TRUE(verify_decomposition(f, d));
      if (d.peeled > 0) {
        Decomposition bad = d;
        bad.affine_coeffs[0] = (bad.affine_coeffs[0] + 1) % q;
        ASSERT_FALSE(verify_decomposition(f, bad));
      }
      Decomposition bad = d;
      bad.constant = (bad.constant + 1) % q;
      ASSERT_FALSE(verify_decomposition(f, bad));
    }
  }
}

TEST(PrimeCase, Examples) {
  EXPECT_TRUE(prime_case_check(decompose(x2x3_plus_x1()), 2));

  const Ring r(3);
  std::vector<int> t(9);
  for (std::uint64_t k = 0; k < 9; ++k) {
    const ZVec x = idx_to_vec(k, r, 2);
    t[k] = r.reduce(x[1] * x[1] + x[0]);
  }
  const Decomposition d = decompose(LogicFunction(r, 2, t));
  EXPECT_EQ(d.peeled, 1);
  EXPECT_EQ(d.residual, LogicFunction(r, 1, {0, 1, 1}));
  EXPECT_TRUE(prime_case_check(d, 3));
  const SpectrumTable spectrum = fast_chrestenson(d.residual);
  for (const CycInt& s : spectrum.entries()) {
    EXPECT_EQ(norm_sq(s), CycInt::integer(3, 3));
  }

  const Decomposition bent = decompose(x1x2());
  EXPECT_EQ(bent.peeled, 0);
  EXPECT_TRUE(prime_case_check(bent, 2));

  EXPECT_THROW(prime_case_check(decompose(make_example_2_1()), 4), DomainError);
}

TEST(PrimeCase, PartiallyBentEqualsBentPlusAffine) {
  // Every Boolean partially bent function on 3 variables decomposes into a
  // bent residual plus affine coordinates.
  std::uint64_t checked = 0;
  for (const LogicFunction& f : enumerate_all(Ring(2), 3)) {
    if (!is_generalized_partially_bent(f)) continue;
    const Decomposition d = decompose(f);
    ASSERT_TRUE(verify_decomposition(f, d));
    ASSERT_TRUE(prime_case_check(d, 2));
    ++checked;
  }
  EXPECT_GT(checked, 0u);
}

TEST(Decompose, PurityDependsOnBasisOverCompositeModulus) {
  // g = y1 + y2 y3 over Z_6 has E = Z_6 e_1. With B = A^{-1} having first
  // row (2,3,0), f(x) = g(xA) has E = Z_6 (2,3,0): no coordinate is ever 1,
  // so f is pure although g is not.
  const Ring r(6);
  std::vector<int> t(216);
  for (std::uint64_t k = 0; k < t.size(); ++k) {
    const ZVec y = idx_to_vec(k, r, 3);
    t[k] = r.reduce(y[0] + y[1] * y[2]);
  }
  const LogicFunction g(r, 3, t);
  const ZMatrix b(r, {{2, 3, 0}, {1, 1, 0}, {0, 0, 1}});
  const ZMatrix a = *mat_inverse(b);
  const LogicFunction f = linear_substitute(g, a);

  const AnalysisReport rg = analyze(g);
  EXPECT_FALSE(rg.is_pure);
  const AnalysisReport rf = analyze(f);
  ASSERT_TRUE(rf.is_gpb);
  EXPECT_EQ(rf.m, (std::vector<int>{2, 3, 0}));
  EXPECT_TRUE(rf.is_pure);
  EXPECT_EQ(decompose(f).peeled, 0);
  EXPECT_EQ(decompose(g).peeled, 1);
}

TEST(Primes, Small) {
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
}

}  // namespace
}  // namespace gpb

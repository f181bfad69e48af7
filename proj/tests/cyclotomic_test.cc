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

#include "gpb/cyclotomic.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "gpb/corpus.h"
#include "oracles.h"

namespace gpb {
namespace {

CycInt u(int q) { return root_power(q, 1); }
CycInt one(int q) { return CycInt::integer(q, 1); }

CycInt random_element(int q, SplitMix64& rng) {
  std::vector<BigInt> c(static_cast<std::size_t>(q));
  for (auto& v : c) v = static_cast<int>(rng.next() % 201) - 100;
  return CycInt::from_poly(q, c);
}

TEST(CyclotomicPolynomial, Examples) {
  EXPECT_EQ(cyclotomic_polynomial(1).coeffs, (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2).coeffs, (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4).coeffs, (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6).coeffs, (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12).coeffs,
            (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
}

TEST(CyclotomicPolynomial, DegreeIsTotientAndRootsAreRoots) {
  for (int q = 1; q <= 40; ++q) {
    const CycPoly p = cyclotomic_polynomial(q);
    ASSERT_EQ(p.degree(), totient(q)) << q;
    // Evaluate at exp(2 pi i / q) with an independent complex routine.
    oracle::Complex acc = 0;
    for (int k = 0; k <= p.degree(); ++k) {
      acc += static_cast<long double>(p.coeffs[k]) * oracle::root(q, k);
    }
    ASSERT_LT(std::abs(acc), 1e-9L) << q;
  }
  // Phi_105 is the first with a coefficient of absolute value 2.
  const CycPoly p = cyclotomic_polynomial(105);
  EXPECT_EQ(p.coeffs[7], -2);
}

TEST(RootPower, Examples) {
  EXPECT_EQ(root_power(5, 0), one(5));
  EXPECT_EQ(root_power(4, 2), CycInt::integer(4, -1));
  EXPECT_EQ(root_power(2, 1), CycInt::integer(2, -1));
  EXPECT_EQ(root_power(6, -1), root_power(6, 5));
  EXPECT_EQ(root_power(6, 6 * 1000 + 2), root_power(6, 2));
}

TEST(Arithmetic, Examples) {
  const CycInt a = u(4) + one(4);
  EXPECT_EQ(a + CycInt(4), a);
  EXPECT_EQ(u(4) * root_power(4, 3), one(4));
  EXPECT_EQ(scale(u(4), 3), u(4) + u(4) + u(4));
  EXPECT_EQ(scale(u(4), 3).to_string(), "3*u");
  EXPECT_EQ(add(a, -a), CycInt(4));
  EXPECT_EQ(mul(a, a), scale(u(4), 2));  // (1+i)^2 = 2i
}

TEST(Conj, Examples) {
  EXPECT_EQ(conj(one(7)), one(7));
  EXPECT_EQ(conj(u(4)), -u(4));
  SplitMix64 rng(1);
  for (int q : {2, 3, 4, 5, 6, 8, 9, 12, 15}) {
    for (int i = 0; i < 20; ++i) {
      const CycInt a = random_element(q, rng);
      ASSERT_EQ(conj(conj(a)), a);
    }
  }
}

TEST(NormSq, Examples) {
  EXPECT_TRUE(norm_sq(CycInt(4)).is_zero());
  for (int q : {2, 3, 4, 6, 7, 12}) {
    for (int k = 0; k < q; ++k) ASSERT_EQ(norm_sq(root_power(q, k)), one(q));
  }
  EXPECT_EQ(norm_sq(one(4) + u(4)), CycInt::integer(4, 2));
}

TEST(IsZero, Examples) {
  EXPECT_TRUE(is_zero(CycInt(4)));
  EXPECT_TRUE(is_zero(one(4) + root_power(4, 2)));
  EXPECT_FALSE(is_zero(one(4) + u(4)));
}

TEST(ToComplex, Examples) {
  const auto a = to_complex(one(9));
  EXPECT_DOUBLE_EQ(a.real(), 1.0);
  EXPECT_DOUBLE_EQ(a.imag(), 0.0);
  const auto b = to_complex(u(4));
  EXPECT_NEAR(b.real(), 0.0, 1e-12);
  EXPECT_NEAR(b.imag(), 1.0, 1e-12);
  const auto c = to_complex(scale(u(4), 8)) / 16.0;
  EXPECT_NEAR(c.real(), 0.0, 1e-12);
  EXPECT_NEAR(c.imag(), 0.5, 1e-12);
}

TEST(ToString, Formats) {
  EXPECT_EQ(CycInt(4).to_string(), "0");
  EXPECT_EQ(CycInt::integer(4, -16).to_string(), "-16");
  EXPECT_EQ(scale(u(4), 8).to_string(), "8*u");
  const std::vector<BigInt> c{1, 1, 0, -2};
  EXPECT_EQ(CycInt::from_poly(5, c).to_string(), "1 + u - 2*u^3");
}

TEST(DivideExact, DividesOrThrows) {
  const CycInt a = scale(one(6) + u(6), 12);
  EXPECT_EQ(a.divide_exact(4), scale(one(6) + u(6), 3));
  EXPECT_THROW(a.divide_exact(5), DomainError);
}

TEST(Properties, RootsMultiplyToOneAndSumToZero) {
  for (int q = 2; q <= 30; ++q) {
    CycInt sum(q);
    for (int k = 0; k < q; ++k) {
      ASSERT_EQ(mul(root_power(q, k), root_power(q, q - k)), one(q));
      sum += root_power(q, k);
    }
    ASSERT_TRUE(sum.is_zero()) << q;
  }
}

TEST(Properties, ZeroTestAgreesWithFloatView) {
  SplitMix64 rng(99);
  for (int q : {2, 3, 4, 5, 6, 8, 10, 12}) {
    for (int i = 0; i < 200; ++i) {
      CycInt a = random_element(q, rng);
      if (i % 4 == 0) a = a - a;  // force zeros into the sample
      if (i % 4 == 1) {
        // A disguised zero: a times the sum of all roots.
        CycInt sum(q);
        for (int k = 0; k < q; ++k) sum += root_power(q, k);
        a = a * sum;
      }
      const auto z = to_complex(a);
      ASSERT_EQ(a.is_zero(), std::abs(z) < 1e-9) << a.to_string();
    }
  }
}

TEST(Properties, NormSqIsRealAndMultiplicative) {
  SplitMix64 rng(5);
  for (int q : {3, 4, 5, 7, 8, 9, 12}) {
    for (int i = 0; i < 30; ++i) {
      const CycInt a = random_element(q, rng);
      const CycInt b = random_element(q, rng);
      const CycInt n = norm_sq(a);
      ASSERT_EQ(conj(n), n);
      ASSERT_EQ(norm_sq(a * b), norm_sq(a) * norm_sq(b));
      ASSERT_EQ(a * (b + n), a * b + a * n);
      ASSERT_NEAR(to_complex(n).real(), std::norm(to_complex(a)),
                  1e-6 * (1 + std::norm(to_complex(a))));
    }
  }
}

TEST(FromPowerSums, MatchesExplicitSum) {
  SplitMix64 rng(3);
  for (int q : {2, 4, 6, 9}) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(q));
    CycInt expected(q);
    for (int k = 0; k < q; ++k) {
      counts[k] = static_cast<std::int64_t>(rng.next() % 50) - 25;
      expected += scale(root_power(q, k), counts[k]);
    }
    EXPECT_EQ(CycInt::from_power_sums(q, counts), expected);
  }
}

TEST(Arithmetic, BigCoefficients) {
  // 2^200 does not fit any machine word.
  const BigInt big = BigInt(1) << 200;
  const CycInt a = scale(u(5), big);
  EXPECT_EQ((a * a).divide_exact(big * big), root_power(5, 2));
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Arithmetic, MismatchedModuliThrow) {
  EXPECT_THROW(one(4) + one(6), DomainError);
}

}  // namespace
}  // namespace gpb

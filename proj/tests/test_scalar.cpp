// Copyright 2026 The dualcx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "dualcx/error.hpp"
#include "dualcx/scalar.hpp"

namespace dualcx {
namespace {

TEST(DualComplex, AddAndMultiply) {
  const DualComplex a{1.0, 1.0};
  const DualComplex b{2.0, 3.0};
  EXPECT_EQ(a + b, DualComplex(3.0, 4.0));
  EXPECT_EQ(a * b, DualComplex(2.0, 5.0));
  EXPECT_EQ(a * b, b * a);
}

TEST(DualComplex, EpsilonSquaresToZero) {
  const DualComplex e = DualComplex::epsilon();
  EXPECT_EQ(e * e, DualComplex(0.0));
}

TEST(DualComplex, ComplexParts) {
  const DualComplex a{Complex(1, 2), Complex(-1, 0.5)};
  const DualComplex b{Complex(0, 1), Complex(3, -2)};
  const DualComplex p = a * b;
  EXPECT_EQ(p.std, Complex(1, 2) * Complex(0, 1));
  EXPECT_EQ(p.dual, Complex(1, 2) * Complex(3, -2) + Complex(-1, 0.5) * Complex(0, 1));
  EXPECT_EQ(conj(a), DualComplex(Complex(1, -2), Complex(-1, -0.5)));
}

TEST(DualComplex, Inverse) {
  const DualComplex a{Complex(2, 1), Complex(1, -3)};
  EXPECT_TRUE(approx_equal(a * inverse(a), DualComplex(1.0), 1e-15));
  EXPECT_TRUE(approx_equal(inverse(DualComplex{2.0, 1.0}), DualComplex{0.5, -0.25}, 0.0));
}

TEST(DualComplex, InverseOfInfinitesimalThrows) {
  try {
    inverse(DualComplex::epsilon());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAppreciable);
  }
}

TEST(DualComplex, Magnitude) {
  const DualNumber m = magnitude(DualComplex{Complex(3, 4), Complex(0, -2)});
  EXPECT_EQ(m, DualNumber(5.0, 2.0));
  EXPECT_GE(m, DualNumber(0.0));
}

TEST(DualNumber, LexicographicOrder) {
  EXPECT_LT(DualNumber(1, 100), DualNumber(2, -100));
  EXPECT_LT(DualNumber(0, -1), DualNumber(0, 0));
  EXPECT_GT(DualNumber(0, 1e-300), DualNumber(0, 0));
  EXPECT_EQ(compare(DualNumber(1, 2), DualNumber(1, 2)), std::strong_ordering::equal);
}

TEST(DualNumber, OrderIsTransitiveOnGrid) {
  const double vals[] = {-1.0, 0.0, 1.0};
  std::vector<DualNumber> xs;
  for (double s : vals)
    for (double d : vals) xs.emplace_back(s, d);
  for (const auto& a : xs)
    for (const auto& b : xs)
      for (const auto& c : xs)
        if (a < b && b < c) EXPECT_LT(a, c);
}

TEST(DualNumber, Sqrt) {
  const DualNumber r = sqrt(DualNumber(4.0, 2.0));
  EXPECT_DOUBLE_EQ(r.std, 2.0);
  EXPECT_DOUBLE_EQ(r.dual, 0.5);
  EXPECT_TRUE(approx_equal(r * r, DualNumber(4.0, 2.0), 1e-15));
  EXPECT_EQ(sqrt(DualNumber(0.0, 0.0)), DualNumber(0.0, 0.0));
  EXPECT_EQ(sqrt(DualNumber(1e-14, 1e-14)), DualNumber(0.0, 0.0));
}

TEST(DualNumber, SqrtErrors) {
  auto code_of = [](DualNumber a) {
    try {
      sqrt(a);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code_of({-1.0, 0.0}), ErrorCode::NegativeInput);
  EXPECT_EQ(code_of({0.0, -1.0}), ErrorCode::NegativeInput);
  EXPECT_EQ(code_of({0.0, 1.0}), ErrorCode::NotAppreciable);
}

TEST(ErrorCode, MessageCarriesCodeName) {
  const Error e(ErrorCode::ShapeMismatch, "2x2 vs 3x3");
  EXPECT_NE(std::string(e.what()).find("ShapeMismatch"), std::string::npos);
}

}  // namespace
}  // namespace dualcx

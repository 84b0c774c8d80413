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

#include "dualcx/scalar.hpp"

#include <cmath>

#include "dualcx/error.hpp"

namespace dualcx {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::NotAppreciable: return "NotAppreciable";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::SingularStandardPart: return "SingularStandardPart";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::IllConditionedStructure: return "IllConditionedStructure";
    case ErrorCode::NotAnEigenpair: return "NotAnEigenpair";
    case ErrorCode::BadBlockStructure: return "BadBlockStructure";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::StandardPartNotBlockScalar: return "StandardPartNotBlockScalar";
    case ErrorCode::EigenvaluesNotDistinct: return "EigenvaluesNotDistinct";
    case ErrorCode::StandardPartDefective: return "StandardPartDefective";
    case ErrorCode::StandardPartNotJordanBlock: return "StandardPartNotJordanBlock";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

DualComplex conj(const DualComplex& a) { return {std::conj(a.std), std::conj(a.dual)}; }

DualNumber magnitude(const DualComplex& a) { return {std::abs(a.std), std::abs(a.dual)}; }

bool is_appreciable(const DualComplex& a, double tol) { return std::abs(a.std) > tol; }

DualComplex inverse(const DualComplex& a, const Tolerances& tol) {
  if (!is_appreciable(a, tol.abs)) {
    throw Error(ErrorCode::NotAppreciable, "cannot invert a dual complex number with zero standard part");
  }
  const Complex inv_s = 1.0 / a.std;
  return {inv_s, -inv_s * a.dual * inv_s};
}

DualComplex divide(const DualComplex& a, const DualComplex& b, const Tolerances& tol) {
  return a * inverse(b, tol);
}

std::strong_ordering compare(const DualNumber& a, const DualNumber& b) {
  if (a.std < b.std) return std::strong_ordering::less;
  if (a.std > b.std) return std::strong_ordering::greater;
  if (a.dual < b.dual) return std::strong_ordering::less;
  if (a.dual > b.dual) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

DualNumber sqrt(const DualNumber& a, const Tolerances& tol) {
  const bool std_zero = std::abs(a.std) <= tol.abs;
  if (!std_zero && a.std < 0.0) {
    throw Error(ErrorCode::NegativeInput, "square root of a negative dual number");
  }
  if (std_zero) {
    if (std::abs(a.dual) <= tol.abs) return {0.0, 0.0};
    if (a.dual < 0.0) throw Error(ErrorCode::NegativeInput, "square root of a negative dual number");
    throw Error(ErrorCode::NotAppreciable, "square root of a nonzero infinitesimal dual number");
  }
  const double root = std::sqrt(a.std);
  return {root, a.dual / (2.0 * root)};
}

bool approx_equal(const DualComplex& a, const DualComplex& b, double tol) {
  return std::abs(a.std.real() - b.std.real()) <= tol && std::abs(a.std.imag() - b.std.imag()) <= tol &&
         std::abs(a.dual.real() - b.dual.real()) <= tol && std::abs(a.dual.imag() - b.dual.imag()) <= tol;
}

bool approx_equal(const DualNumber& a, const DualNumber& b, double tol) {
  return std::abs(a.std - b.std) <= tol && std::abs(a.dual - b.dual) <= tol;
}

bool is_finite(const DualComplex& a) {
  return std::isfinite(a.std.real()) && std::isfinite(a.std.imag()) && std::isfinite(a.dual.real()) &&
         std::isfinite(a.dual.imag());
}

}  // namespace dualcx

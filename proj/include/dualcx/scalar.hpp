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

#pragma once

#include <compare>
#include <complex>

#include "dualcx/tolerances.hpp"

namespace dualcx {

using Complex = std::complex<double>;

/// Real dual number a = std + dual*eps with the lexicographic total order.
struct DualNumber {
  double std = 0.0;
  double dual = 0.0;

  constexpr DualNumber() = default;
  constexpr DualNumber(double s, double d = 0.0) : std(s), dual(d) {}

  friend constexpr bool operator==(const DualNumber&, const DualNumber&) = default;
};

/// Dual complex number a = std + dual*eps, eps^2 = 0, commutative product.
struct DualComplex {
  Complex std{};
  Complex dual{};

  constexpr DualComplex() = default;
  constexpr DualComplex(Complex s, Complex d = {}) : std(s), dual(d) {}
  constexpr DualComplex(double s) : std(s), dual() {}
  constexpr DualComplex(DualNumber a) : std(a.std), dual(a.dual) {}

  /// eps itself.
  static constexpr DualComplex epsilon() { return {Complex{}, Complex{1.0, 0.0}}; }

  friend constexpr bool operator==(const DualComplex&, const DualComplex&) = default;
};

// Arithmetic.

constexpr DualComplex operator+(const DualComplex& a, const DualComplex& b) {
  return {a.std + b.std, a.dual + b.dual};
}
constexpr DualComplex operator-(const DualComplex& a, const DualComplex& b) {
  return {a.std - b.std, a.dual - b.dual};
}
constexpr DualComplex operator-(const DualComplex& a) { return {-a.std, -a.dual}; }
constexpr DualComplex operator*(const DualComplex& a, const DualComplex& b) {
  return {a.std * b.std, a.std * b.dual + a.dual * b.std};
}
inline DualComplex& operator+=(DualComplex& a, const DualComplex& b) { return a = a + b; }
inline DualComplex& operator-=(DualComplex& a, const DualComplex& b) { return a = a - b; }
inline DualComplex& operator*=(DualComplex& a, const DualComplex& b) { return a = a * b; }

constexpr DualNumber operator+(const DualNumber& a, const DualNumber& b) {
  return {a.std + b.std, a.dual + b.dual};
}
constexpr DualNumber operator-(const DualNumber& a) { return {-a.std, -a.dual}; }
constexpr DualNumber operator*(const DualNumber& a, const DualNumber& b) {
  return {a.std * b.std, a.std * b.dual + a.dual * b.std};
}

DualComplex conj(const DualComplex& a);

/// |a| = |a_s| + |a_d| eps. Nonnegative in the dual-number order.
DualNumber magnitude(const DualComplex& a);

/// Standard part nonzero (|a_s| > tol).
bool is_appreciable(const DualComplex& a, double tol = 0.0);

/// Multiplicative inverse. Throws NotAppreciable when |a_s| <= tol.abs.
DualComplex inverse(const DualComplex& a, const Tolerances& tol = {});

/// a / b for appreciable b.
DualComplex divide(const DualComplex& a, const DualComplex& b, const Tolerances& tol = {});

/// Lexicographic order on (std, dual): exact, hence a genuine total order.
std::strong_ordering compare(const DualNumber& a, const DualNumber& b);

inline bool operator<(const DualNumber& a, const DualNumber& b) { return compare(a, b) < 0; }
inline bool operator>(const DualNumber& a, const DualNumber& b) { return compare(a, b) > 0; }
inline bool operator<=(const DualNumber& a, const DualNumber& b) { return compare(a, b) <= 0; }
inline bool operator>=(const DualNumber& a, const DualNumber& b) { return compare(a, b) >= 0; }

/// Square root of a nonnegative dual number that is appreciable or zero.
///
/// Components with magnitude <= tol.abs are treated as zero. Throws
/// NegativeInput for a < 0 and NotAppreciable for a = 0 + a_d eps, a_d > 0.
DualNumber sqrt(const DualNumber& a, const Tolerances& tol = {});

/// Componentwise |a_i - b_i| <= tol on all four real components.
bool approx_equal(const DualComplex& a, const DualComplex& b, double tol);
bool approx_equal(const DualNumber& a, const DualNumber& b, double tol);

bool is_finite(const DualComplex& a);

}  // namespace dualcx

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

#include <span>
#include <string>

#include "dualcx/cxkernel.hpp"
#include "dualcx/scalar.hpp"

namespace dualcx {

using cx::CMatrix;
using cx::CVector;
using cx::Index;

/// Column vector x = x_s + x_d eps over the dual complex numbers.
class DCVector {
 public:
  DCVector() = default;
  explicit DCVector(Index dim) : std_(CVector::Zero(dim)), dual_(CVector::Zero(dim)) {}
  DCVector(CVector standard, CVector dual);
  explicit DCVector(CVector standard) : std_(std::move(standard)), dual_(CVector::Zero(std_.size())) {}

  /// e_i of the given dimension.
  static DCVector unit(Index dim, Index i);

  Index dim() const { return std_.size(); }
  const CVector& std() const { return std_; }
  const CVector& dual() const { return dual_; }
  CVector& std() { return std_; }
  CVector& dual() { return dual_; }

  DualComplex operator[](Index i) const { return {std_(i), dual_(i)}; }
  void set(Index i, const DualComplex& v);

  bool appreciable(double tol = 0.0) const;

 private:
  CVector std_;
  CVector dual_;
};

/// Matrix A = A_s + A_d eps; both parts share one shape.
class DCMatrix {
 public:
  DCMatrix() = default;
  DCMatrix(Index rows, Index cols) : std_(CMatrix::Zero(rows, cols)), dual_(CMatrix::Zero(rows, cols)) {}
  DCMatrix(CMatrix standard, CMatrix dual);
  explicit DCMatrix(CMatrix standard) : std_(std::move(standard)), dual_(CMatrix::Zero(std_.rows(), std_.cols())) {}

  static DCMatrix identity(Index n);
  /// diag(values).
  static DCMatrix diagonal(std::span<const DualComplex> values);
  /// Matrix whose columns are the given vectors.
  static DCMatrix from_columns(std::span<const DCVector> columns);

  Index rows() const { return std_.rows(); }
  Index cols() const { return std_.cols(); }
  bool square() const { return rows() == cols(); }
  const CMatrix& std() const { return std_; }
  const CMatrix& dual() const { return dual_; }
  CMatrix& std() { return std_; }
  CMatrix& dual() { return dual_; }

  DualComplex operator()(Index i, Index j) const { return {std_(i, j), dual_(i, j)}; }
  void set(Index i, Index j, const DualComplex& v);
  DCVector col(Index j) const { return {std_.col(j), dual_.col(j)}; }

 private:
  CMatrix std_;
  CMatrix dual_;
};

/// (AB)_s = A_s B_s, (AB)_d = A_s B_d + A_d B_s. Throws ShapeMismatch.
DCMatrix operator*(const DCMatrix& a, const DCMatrix& b);
DCVector operator*(const DCMatrix& a, const DCVector& x);
DCMatrix operator*(const DualComplex& s, const DCMatrix& a);
DCVector operator*(const DualComplex& s, const DCVector& x);
DCMatrix operator+(const DCMatrix& a, const DCMatrix& b);
DCMatrix operator-(const DCMatrix& a, const DCMatrix& b);
DCVector operator+(const DCVector& a, const DCVector& b);
DCVector operator-(const DCVector& a, const DCVector& b);

DCMatrix conj_transpose(const DCMatrix& a);

/// B_s = A_s^{-1}, B_d = -A_s^{-1} A_d A_s^{-1}. Throws SingularStandardPart
/// when rank(A_s) < n at `tol.rank`.
DCMatrix inverse(const DCMatrix& a, const Tolerances& tol = {});

/// A A^* = I within `tol.abs` on every entry of both parts.
bool is_unitary(const DCMatrix& a, const Tolerances& tol = {});

/// A^* = A within `tol.abs * (1 + max entry)`.
bool is_hermitian(const DCMatrix& a, const Tolerances& tol = {});

/// Dual-number 2-norm: sqrt(sum |x_i|^2) for appreciable x, |x_d|_2 eps otherwise.
DualNumber norm2(const DCVector& x, const Tolerances& tol = {});

/// x^* y = sum conj(x_j) y_j.
DualComplex inner(const DCVector& x, const DCVector& y);

/// Standard parts have full column rank at `tol.rank`.
bool appreciably_linearly_independent(std::span<const DCVector> xs, const Tolerances& tol = {});

/// Outcome of checking A x = lambda x through its standard and dual equations.
struct EigenpairCheck {
  bool appreciable = false;
  bool standard_ok = false;  ///< A_s x_s = lambda_s x_s
  bool dual_ok = false;      ///< (A_s - lambda_s I) x_d - lambda_d x_s = -A_d x_s
  double standard_residual = 0.0;
  double dual_residual = 0.0;

  bool passed() const { return appreciable && standard_ok && dual_ok; }
  explicit operator bool() const { return passed(); }
  std::string describe() const;
};

/// Residuals are compared against `tolerance` times the rounding scale of
/// each equation, (1 + |A_s| + |lambda_s|) |x_s| for the standard part and the
/// analogous mixed bound for the dual part (max-entry norms).
EigenpairCheck verify_eigenpair(const DCMatrix& a, const DualComplex& lambda, const DCVector& x, double tolerance = 1e-12);

/// P^{-1} B P.
DCMatrix similar_transform(const DCMatrix& p, const DCMatrix& b, const Tolerances& tol = {});

/// Largest entry magnitude over both parts.
double max_abs(const DCMatrix& a);
double max_abs(const DCVector& x);

/// x scaled by 1/|x|_2 (dual-number norm, exact unit norm) with its first
/// non-negligible standard entry rotated to the positive real axis.
DCVector normalized(const DCVector& x, const Tolerances& tol = {});

}  // namespace dualcx

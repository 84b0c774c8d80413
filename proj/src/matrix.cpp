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

#include "dualcx/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "dualcx/error.hpp"

namespace dualcx {
namespace {

std::string shape(Index r, Index c) { return std::to_string(r) + "x" + std::to_string(c); }

void require_same_shape(const DCMatrix& a, const DCMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch, std::string(op) + ": " + shape(a.rows(), a.cols()) + " vs " +
                                              shape(b.rows(), b.cols()));
  }
}

}  // namespace

DCVector::DCVector(CVector standard, CVector dual) : std_(std::move(standard)), dual_(std::move(dual)) {
  if (std_.size() != dual_.size()) {
    throw Error(ErrorCode::ShapeMismatch, "vector parts have dimensions " + std::to_string(std_.size()) + " and " +
                                              std::to_string(dual_.size()));
  }
}

DCVector DCVector::unit(Index dim, Index i) {
  DCVector out(dim);
  out.std_(i) = 1.0;
  return out;
}

void DCVector::set(Index i, const DualComplex& v) {
  std_(i) = v.std;
  dual_(i) = v.dual;
}

bool DCVector::appreciable(double tol) const { return dim() > 0 && std_.cwiseAbs().maxCoeff() > tol; }

DCMatrix::DCMatrix(CMatrix standard, CMatrix dual) : std_(std::move(standard)), dual_(std::move(dual)) {
  if (std_.rows() != dual_.rows() || std_.cols() != dual_.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "matrix parts have shapes " + shape(std_.rows(), std_.cols()) + " and " +
                                              shape(dual_.rows(), dual_.cols()));
  }
}

DCMatrix DCMatrix::identity(Index n) { return DCMatrix(CMatrix::Identity(n, n)); }

DCMatrix DCMatrix::diagonal(std::span<const DualComplex> values) {
  const auto n = static_cast<Index>(values.size());
  DCMatrix out(n, n);
  for (Index i = 0; i < n; ++i) out.set(i, i, values[static_cast<std::size_t>(i)]);
  return out;
}

DCMatrix DCMatrix::from_columns(std::span<const DCVector> columns) {
  const auto k = static_cast<Index>(columns.size());
  const Index n = k == 0 ? 0 : columns.front().dim();
  DCMatrix out(n, k);
  for (Index j = 0; j < k; ++j) {
    const DCVector& c = columns[static_cast<std::size_t>(j)];
    if (c.dim() != n) throw Error(ErrorCode::ShapeMismatch, "from_columns: columns differ in dimension");
    out.std_.col(j) = c.std();
    out.dual_.col(j) = c.dual();
  }
  return out;
}

void DCMatrix::set(Index i, Index j, const DualComplex& v) {
  std_(i, j) = v.std;
  dual_(i, j) = v.dual;
}

DCMatrix operator*(const DCMatrix& a, const DCMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "mat_mul: " + shape(a.rows(), a.cols()) + " times " + shape(b.rows(), b.cols()));
  }
  return {a.std() * b.std(), a.std() * b.dual() + a.dual() * b.std()};
}

DCVector operator*(const DCMatrix& a, const DCVector& x) {
  if (a.cols() != x.dim()) {
    throw Error(ErrorCode::ShapeMismatch, "mat_vec: " + shape(a.rows(), a.cols()) + " times vector of dimension " +
                                              std::to_string(x.dim()));
  }
  return {a.std() * x.std(), a.std() * x.dual() + a.dual() * x.std()};
}

DCMatrix operator*(const DualComplex& s, const DCMatrix& a) {
  return {s.std * a.std(), s.std * a.dual() + s.dual * a.std()};
}

DCVector operator*(const DualComplex& s, const DCVector& x) {
  return {s.std * x.std(), s.std * x.dual() + s.dual * x.std()};
}

DCMatrix operator+(const DCMatrix& a, const DCMatrix& b) {
  require_same_shape(a, b, "add");
  return {a.std() + b.std(), a.dual() + b.dual()};
}

DCMatrix operator-(const DCMatrix& a, const DCMatrix& b) {
  require_same_shape(a, b, "subtract");
  return {a.std() - b.std(), a.dual() - b.dual()};
}

DCVector operator+(const DCVector& a, const DCVector& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::ShapeMismatch, "vector add: dimensions differ");
  return {a.std() + b.std(), a.dual() + b.dual()};
}

DCVector operator-(const DCVector& a, const DCVector& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::ShapeMismatch, "vector subtract: dimensions differ");
  return {a.std() - b.std(), a.dual() - b.dual()};
}

DCMatrix conj_transpose(const DCMatrix& a) { return {a.std().adjoint(), a.dual().adjoint()}; }

DCMatrix inverse(const DCMatrix& a, const Tolerances& tol) {
  if (!a.square()) throw Error(ErrorCode::ShapeMismatch, "inverse of a " + shape(a.rows(), a.cols()) + " matrix");
  const Index n = a.rows();
  if (cx::rank(a.std(), tol) < n) {
    throw Error(ErrorCode::SingularStandardPart, "standard part has rank below " + std::to_string(n));
  }
  const CMatrix inv_s = a.std().partialPivLu().inverse();
  return {inv_s, -inv_s * a.dual() * inv_s};
}

bool is_unitary(const DCMatrix& a, const Tolerances& tol) {
  if (!a.square()) throw Error(ErrorCode::ShapeMismatch, "is_unitary: matrix is not square");
  return max_abs(a * conj_transpose(a) - DCMatrix::identity(a.rows())) <= tol.abs;
}

bool is_hermitian(const DCMatrix& a, const Tolerances& tol) {
  if (!a.square()) return false;
  return max_abs(a - conj_transpose(a)) <= tol.abs * (1.0 + max_abs(a));
}

DualComplex inner(const DCVector& x, const DCVector& y) {
  if (x.dim() != y.dim()) throw Error(ErrorCode::ShapeMismatch, "inner: dimensions differ");
  const Complex s = x.std().dot(y.std());
  const Complex d = x.std().dot(y.dual()) + x.dual().dot(y.std());
  return {s, d};
}

DualNumber norm2(const DCVector& x, const Tolerances& tol) {
  if (!x.appreciable()) return {0.0, x.dual().norm()};
  const DualComplex gram = inner(x, x);
  return sqrt(DualNumber{gram.std.real(), gram.dual.real()}, tol);
}

bool appreciably_linearly_independent(std::span<const DCVector> xs, const Tolerances& tol) {
  if (xs.empty()) return true;
  const Index n = xs.front().dim();
  const auto k = static_cast<Index>(xs.size());
  if (k > n) return false;
  CMatrix stacked(n, k);
  for (Index j = 0; j < k; ++j) {
    const DCVector& x = xs[static_cast<std::size_t>(j)];
    if (x.dim() != n) throw Error(ErrorCode::ShapeMismatch, "appreciably_linearly_independent: dimensions differ");
    stacked.col(j) = x.std();
  }
  return cx::rank(stacked, tol) == k;
}

std::string EigenpairCheck::describe() const {
  std::ostringstream os;
  if (!appreciable) {
    os << "eigenvector is not appreciable";
  } else if (!standard_ok) {
    os << "standard equation fails (residual " << standard_residual << ")";
  } else if (!dual_ok) {
    os << "dual equation fails (residual " << dual_residual << ")";
  } else {
    os << "eigenpair verified";
  }
  return os.str();
}

EigenpairCheck verify_eigenpair(const DCMatrix& a, const DualComplex& lambda, const DCVector& x, double tolerance) {
  if (!a.square() || a.rows() != x.dim()) {
    throw Error(ErrorCode::ShapeMismatch, "verify_eigenpair: " + shape(a.rows(), a.cols()) + " matrix with vector of dimension " +
                                              std::to_string(x.dim()));
  }
  EigenpairCheck out;
  out.appreciable = x.appreciable();
  const Index n = a.rows();
  const CMatrix shifted = a.std() - lambda.std * CMatrix::Identity(n, n);
  const double xs = cx::max_abs(CMatrix(x.std()));
  const double xd = cx::max_abs(CMatrix(x.dual()));
  const double std_scale = std::max(1.0, (1.0 + cx::max_abs(a.std()) + std::abs(lambda.std)) * xs);
  const double dual_scale = std::max(1.0, (1.0 + cx::max_abs(a.std()) + std::abs(lambda.std)) * xd +
                                              (1.0 + cx::max_abs(a.dual()) + std::abs(lambda.dual)) * xs);
  out.standard_residual = cx::max_abs(CMatrix(shifted * x.std()));
  out.dual_residual = cx::max_abs(CMatrix(shifted * x.dual() - lambda.dual * x.std() + a.dual() * x.std()));
  out.standard_ok = out.standard_residual <= tolerance * std_scale;
  out.dual_ok = out.dual_residual <= tolerance * dual_scale;
  return out;
}

DCMatrix similar_transform(const DCMatrix& p, const DCMatrix& b, const Tolerances& tol) {
  return inverse(p, tol) * b * p;
}

double max_abs(const DCMatrix& a) { return std::max(cx::max_abs(a.std()), cx::max_abs(a.dual())); }

double max_abs(const DCVector& x) { return std::max(cx::max_abs(CMatrix(x.std())), cx::max_abs(CMatrix(x.dual()))); }

DCVector normalized(const DCVector& x, const Tolerances& tol) {
  if (!x.appreciable()) return x;
  const DualNumber nrm = norm2(x, tol);
  DCVector out = inverse(DualComplex(nrm), tol) * x;
  const double peak = out.std().cwiseAbs().maxCoeff();
  for (Index i = 0; i < out.dim(); ++i) {
    const Complex v = out.std()(i);
    if (std::abs(v) > 1e-8 * peak) {
      const Complex phase = std::conj(v) / std::abs(v);
      out = DualComplex(phase) * out;
      out.std()(i) = Complex(out.std()(i).real(), 0.0);
      break;
    }
  }
  return out;
}

}  // namespace dualcx

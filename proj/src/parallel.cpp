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


#include "dualcx/parallel.hpp"

#include <omp.h>

#include <Eigen/SVD>

namespace dualcx::par {
namespace {

void require_product_shape(const DCMatrix& a, const DCMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "multiply: inner dimensions differ");
}

// Column j of the product, in the order the serial and parallel kernels share.
void product_column(const DCMatrix& a, const DCMatrix& b, Index j, CMatrix& s, CMatrix& d) {
  for (Index k = 0; k < a.cols(); ++k) {
    const Complex bs = b.std()(k, j);
    const Complex bd = b.dual()(k, j);
    for (Index i = 0; i < a.rows(); ++i) {
      s(i, j) += a.std()(i, k) * bs;
      d(i, j) += a.std()(i, k) * bd + a.dual()(i, k) * bs;
    }
  }
}

BatchItem run_one(const DCMatrix& m, const Tolerances& tol) {
  BatchItem item;
  try {
    item.report = eig_all(m, tol);
  } catch (const Error& e) {
    item.error = e.code();
    item.message = e.what();
  }
  return item;
}

double sigma_ratio(const StructuredPencil& pencil, Complex lambda) {
  const CMatrix m = pencil.at(lambda);
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& s = svd.singularValues();
  return s(0) == 0.0 ? 0.0 : s(s.size() - 1) / s(0);
}

Complex grid_point(Complex center, double radius, int points, int idx) {
  const int r = idx / points;
  const int c = idx % points;
  const double step = points > 1 ? 2.0 * radius / (points - 1) : 0.0;
  return center + Complex(-radius + c * step, -radius + r * step);
}

}  // namespace

DCMatrix multiply(const DCMatrix& a, const DCMatrix& b) {
  require_product_shape(a, b);
  CMatrix s = CMatrix::Zero(a.rows(), b.cols());
  CMatrix d = CMatrix::Zero(a.rows(), b.cols());
  const auto cols = static_cast<long>(b.cols());
#pragma omp parallel for schedule(static)
  for (long j = 0; j < cols; ++j) product_column(a, b, j, s, d);
  return {std::move(s), std::move(d)};
}

DCMatrix multiply_serial(const DCMatrix& a, const DCMatrix& b) {
  require_product_shape(a, b);
  CMatrix s = CMatrix::Zero(a.rows(), b.cols());
  CMatrix d = CMatrix::Zero(a.rows(), b.cols());
  for (Index j = 0; j < b.cols(); ++j) product_column(a, b, j, s, d);
  return {std::move(s), std::move(d)};
}

std::vector<BatchItem> eig_all_batch(std::span<const DCMatrix> inputs, const Tolerances& tol) {
  std::vector<BatchItem> out(inputs.size());
  const auto count = static_cast<long>(inputs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = run_one(inputs[static_cast<std::size_t>(i)], tol);
  return out;
}

std::vector<BatchItem> eig_all_batch_serial(std::span<const DCMatrix> inputs, const Tolerances& tol) {
  std::vector<BatchItem> out;
  out.reserve(inputs.size());
  for (const DCMatrix& m : inputs) out.push_back(run_one(m, tol));
  return out;
}

std::vector<double> pencil_singularity_scan(const StructuredPencil& pencil, Complex center, double radius, int points) {
  const int total = points * points;
  std::vector<double> out(static_cast<std::size_t>(std::max(total, 0)));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < total; ++i) out[static_cast<std::size_t>(i)] = sigma_ratio(pencil, grid_point(center, radius, points, i));
  return out;
}

std::vector<double> pencil_singularity_scan_serial(const StructuredPencil& pencil, Complex center, double radius,
                                                  int points) {
  const int total = points * points;
  std::vector<double> out;
  for (int i = 0; i < total; ++i) out.push_back(sigma_ratio(pencil, grid_point(center, radius, points, i)));
  return out;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace dualcx::par

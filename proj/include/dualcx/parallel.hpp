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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dualcx/eigsolve.hpp"
#include "dualcx/error.hpp"

/// OpenMP kernels, each paired with the serial reference it must reproduce.
namespace dualcx::par {

/// Dual matrix product, parallel over output columns.
DCMatrix multiply(const DCMatrix& a, const DCMatrix& b);
DCMatrix multiply_serial(const DCMatrix& a, const DCMatrix& b);

struct BatchItem {
  std::optional<EigenReport> report;
  std::optional<ErrorCode> error;
  std::string message;
};

/// eig_all over independent matrices; a failure is recorded per item.
std::vector<BatchItem> eig_all_batch(std::span<const DCMatrix> inputs, const Tolerances& tol = {});
std::vector<BatchItem> eig_all_batch_serial(std::span<const DCMatrix> inputs, const Tolerances& tol = {});

/// sigma_min / sigma_max of M(lambda) on a square grid of side 2*radius
/// around `center` with `points` samples per axis, row-major from the
/// lower-left corner.
std::vector<double> pencil_singularity_scan(const StructuredPencil& pencil, Complex center, double radius, int points);
std::vector<double> pencil_singularity_scan_serial(const StructuredPencil& pencil, Complex center, double radius,
                                                  int points);

/// Number of OpenMP threads the parallel kernels will use.
int max_threads();

}  // namespace dualcx::par

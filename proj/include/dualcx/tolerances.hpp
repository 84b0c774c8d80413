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

namespace dualcx {

/// Numerical thresholds shared by every routine of the library.
///
/// `abs` is the per-component scalar equality threshold. `rank` is relative to
/// the largest singular value of the matrix being tested (floored by the scale
/// of the problem the matrix came from). `cluster` is relative to the norm of
/// the matrix whose eigenvalues are grouped. `eig` bounds eigenpair residuals
/// of complex matrices and `jordan` bounds the reconstruction residual of a
/// computed Jordan decomposition, both relative to the matrix norm.
struct Tolerances {
  double abs = 1e-12;
  double rank = 1e-9;
  double cluster = 1e-6;
  double eig = 1e-9;
  double jordan = 1e-8;
};

}  // namespace dualcx

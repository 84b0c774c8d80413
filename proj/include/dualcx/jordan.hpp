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
#include <vector>

#include "dualcx/eigsolve.hpp"

namespace dualcx {

/// One block (lambda_s + lambda_d eps) I + eps N of a Jordan form whose
/// standard part is diagonalizable.
struct DualJordanBlock {
  Complex lambda_s;
  Complex lambda_d;
  Index size = 1;
  Index offset = 0;
};

enum class JordanKind { DiagonalizableStandard, JordanBlockStandard };

struct DualJordanForm {
  DCMatrix j;
  DCMatrix p;
  JordanKind kind = JordanKind::DiagonalizableStandard;
  std::vector<DualJordanBlock> blocks;  ///< DiagonalizableStandard
  Complex lambda_s;                     ///< JordanBlockStandard
  std::vector<Complex> last_row;        ///< JordanBlockStandard: f_{n1}, ..., f_{nn} of J_d
  double residual = 0.0;                ///< max entry of P^{-1} A P - J
};

/// A distinct standard eigenvalue and its multiplicity.
struct StandardEigenvalue {
  Complex value;
  Index multiplicity = 1;
};

/// Jordan form of A with A_s = diag(lambda_1 I_{n_1}, ..., lambda_t I_{n_t}).
/// P_s is block diagonal from the Jordan forms of the diagonal dual blocks and
/// P_ijd = A_ijd P_js / (lambda_j - lambda_i). Throws StandardPartNotBlockScalar
/// or EigenvaluesNotDistinct.
DualJordanForm jordan_diag_standard(const DCMatrix& a, std::span<const StandardEigenvalue> structure,
                                    const Tolerances& tol = {});

/// As above with the structure read off the diagonal of A_s; equal diagonal
/// entries must be contiguous.
DualJordanForm jordan_diag_standard(const DCMatrix& a, const Tolerances& tol = {});

struct FullJordan {
  DualJordanForm form;  ///< P maps the original matrix: P^{-1} B P = J
  CMatrix q;            ///< standard-part diagonalizer
  std::vector<Eigenpair> eigenpairs;  ///< one per block, from the first column of the block
};

/// Jordan form of B with diagonalizable B_s. Throws StandardPartDefective.
FullJordan jordan_form_full(const DCMatrix& b, const Tolerances& tol = {});

/// Jordan form of A with A_s = J_n(lambda_s): J_s = A_s and J_d vanishes off
/// its last row. Throws StandardPartNotJordanBlock.
DualJordanForm jordan_block_standard(const DCMatrix& a, const Tolerances& tol = {});

/// jordan_block_standard after a standard-part similarity: for B whose
/// standard part has a single Jordan block of full size.
DualJordanForm jordan_block_form_full(const DCMatrix& b, const Tolerances& tol = {});

struct JordanBlockEigen {
  Regime regime = Regime::None;  ///< None or Infinite
  Complex lambda_s;
};

/// A with A_s = J_n(lambda_s), n >= 2: no eigenvalue when a_{n1d} != 0,
/// otherwise lambda_s + lambda_d eps for every lambda_d.
JordanBlockEigen eig_jordan_block(const DCMatrix& a, const Tolerances& tol = {});

}  // namespace dualcx

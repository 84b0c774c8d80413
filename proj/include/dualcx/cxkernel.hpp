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

#include <Eigen/Dense>
#include <vector>

#include "dualcx/scalar.hpp"
#include "dualcx/tolerances.hpp"

/// Dense complex linear algebra underneath the dual complex solvers.
namespace dualcx::cx {

using Index = Eigen::Index;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Singular values below `tol.rank * max(sigma_max, ref_scale)` count as zero.
/// Pass the norm of the problem a matrix was derived from as `ref_scale` so
/// that a nearly-zero matrix is not promoted to full rank by the relative rule.
Index rank(const CMatrix& m, const Tolerances& tol = {}, double ref_scale = 0.0);

/// Orthonormal basis of ker(m), one vector per column.
CMatrix nullspace(const CMatrix& m, const Tolerances& tol = {}, double ref_scale = 0.0);

/// Orthonormal basis of the column space of m.
CMatrix range_basis(const CMatrix& m, const Tolerances& tol = {}, double ref_scale = 0.0);

struct SolveResult {
  enum class Kind { Unique, Affine, Inconsistent };
  Kind kind = Kind::Inconsistent;
  CVector solution;   ///< minimum-norm least-squares solution
  CMatrix null_basis; ///< empty unless kind == Affine
  double residual = 0.0;
};

/// Solves m x = b. Consistency is decided by the least-squares residual
/// against `tol.abs * (1 + |b|)`, widened by the rounding level of m.
SolveResult solve(const CMatrix& m, const CVector& b, const Tolerances& tol = {}, double ref_scale = 0.0);

/// True when v lies in the column span of m.
bool span_contains(const CMatrix& m, const CVector& v, const Tolerances& tol = {}, double ref_scale = 0.0);

struct EigenPairs {
  CVector values;  ///< repeated per algebraic multiplicity
  CMatrix vectors; ///< unit columns
};

/// Eigenvalues with (unit) eigenvectors of a square complex matrix.
EigenPairs eig(const CMatrix& m);

/// Jordan blocks of one eigenvalue: `scalar_count` 1x1 blocks followed by
/// chains of size >= 2 in nonincreasing order.
struct EigenBlocks {
  Complex value;
  Index scalar_count = 0;
  std::vector<Index> chains;
  Index offset = 0;  ///< first row/column of this eigenvalue in the canonical form

  Index multiplicity() const;
  bool semisimple() const { return chains.empty(); }
};

/// M = transform * canonical() * transform^{-1}.
struct JordanStructure {
  CMatrix transform;
  std::vector<EigenBlocks> eigenvalues;  ///< ordered lexicographically by (re, im)

  Index size() const { return transform.rows(); }
  bool diagonalizable() const;
  CMatrix canonical() const;
};

/// m x m upper bidiagonal Jordan block.
CMatrix jordan_block(Index size, Complex value);

/// diag(value I_{scalar_count}, J_{c1}(value), J_{c2}(value), ...).
CMatrix canonical_block(const EigenBlocks& blocks);

/// Jordan decomposition by eigenvalue clustering, kernel staircase and chain
/// construction. Throws ConvergenceFailure or IllConditionedStructure.
JordanStructure jordan(const CMatrix& m, const Tolerances& tol = {});

/// Coefficients of p(x) = det(x*lead + constant), ascending powers.
struct Polynomial {
  std::vector<Complex> coeffs;
  bool identically_zero = false;
  double radius = 1.0;  ///< interpolation radius; coefficient k carries error ~ eps*max|p| / radius^k

  int degree() const;
  Complex operator()(Complex x) const;
  /// Roots of the trimmed polynomial (empty for constants and for p == 0).
  std::vector<Complex> roots(double trim_tol = 1e-9) const;
};

/// det(x*lead + constant) by evaluation on m+1 points of a circle of radius
/// 1 + |constant| + |lead| followed by discrete Fourier interpolation.
Polynomial poly_det(const CMatrix& constant, const CMatrix& lead, const Tolerances& tol = {});

/// Largest entry magnitude.
double max_abs(const CMatrix& m);

}  // namespace dualcx::cx

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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dualcx/matrix.hpp"

namespace dualcx {

/// The three ways a standard eigenvalue can extend to dual eigenvalues.
enum class Regime { Finite, None, Infinite };

std::string_view to_string(Regime r);

struct Eigenpair {
  DualComplex value;
  DCVector vector;
};

// ---------------------------------------------------------------------------
// Single candidate (lambda_s, x_s).

class CandidateResult {
 public:
  Regime regime = Regime::None;
  Complex lambda_d;  ///< set when regime == Finite
  DCVector vector;   ///< eigenvector; for Infinite, the one at lambda_d = 0

  /// Infinite only: an eigenvector for an arbitrary dual part.
  DCVector eigenvector_at(Complex lambda_d) const;

 private:
  friend CandidateResult eig_at(const DCMatrix&, Complex, const CVector&, const Tolerances&);

  CMatrix shifted_;  // A_s - lambda_s I
  CVector rhs_;      // -A_d x_s
  CVector xs_;
  Tolerances tol_;
  double scale_ = 1.0;
};

/// Extends the eigenpair (lambda_s, x_s) of A_s. Solves
/// (A_s - lambda_s I | x_s) z = -A_d x_s with z = (x_d; -lambda_d).
/// Throws NotAnEigenpair when the candidate is not an eigenpair of A_s.
CandidateResult eig_at(const DCMatrix& a, Complex lambda_s, const CVector& x_s, const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Structured pencil for one standard eigenvalue.

/// Jordan structure of one standard eigenvalue: n0 scalar blocks followed by
/// chains of size >= 2.
struct BlockStructure {
  Index scalar_count = 0;
  std::vector<Index> chains;

  Index size() const;
};

/// M(lambda) = [[lambda I - C00, -C01], [-C10, -C11]] with C = W^T A_d Z.
struct StructuredPencil {
  Index n0 = 0;
  Index t = 0;
  CMatrix c00, c01, c10, c11;
  CMatrix z;  ///< n x (n0 + t) selector of eigenvector coordinates
  CMatrix w;  ///< n x (n0 + t) selector of the equations left after elimination

  Index order() const { return n0 + t; }
  CMatrix c() const;
  CMatrix at(Complex lambda) const;
  /// diag(I_{n0}, 0_t), the coefficient of lambda in M(lambda).
  CMatrix lead() const;
};

/// Throws BadBlockStructure when a chain is shorter than 2 or the sizes do not
/// add up to the dimension of a_d.
StructuredPencil build_structured_pencil(const CMatrix& a_d, const BlockStructure& blocks);

struct PencilRoot {
  Complex lambda_d;
  CMatrix kernel;  ///< orthonormal basis of ker M(lambda_d)
};

struct PencilSolution {
  Regime regime = Regime::None;
  std::vector<PencilRoot> roots;  ///< Finite only, ordered by (re, im)
  cx::Polynomial polynomial;      ///< det M(lambda)
  bool schur_route = false;       ///< roots taken from the Schur complement
  std::vector<std::string> diagnostics;
};

/// All lambda_d for which M(lambda_d) is singular.
PencilSolution structured_eigen_system(const StructuredPencil& pencil, const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// General classification.

struct FamilyContext;

/// lambda = lambda_s + lambda_d eps is an eigenvalue for every complex lambda_d.
class InfiniteFamily {
 public:
  InfiniteFamily() = default;
  explicit InfiniteFamily(std::shared_ptr<const FamilyContext> ctx);

  Complex lambda_s() const;
  /// Eigenvector for the given dual part, normalized.
  DCVector eigenvector_at(Complex lambda_d) const;
  /// The eigenvector at lambda_d = 0.
  DCVector representative() const { return eigenvector_at(Complex{}); }

 private:
  std::shared_ptr<const FamilyContext> ctx_;
};

struct EigenClass {
  Complex lambda_s;
  BlockStructure blocks;
  Regime regime = Regime::None;
  std::vector<Eigenpair> pairs;         ///< Finite: one per kernel basis vector of every root
  std::optional<InfiniteFamily> family; ///< Infinite
  std::string witness;                  ///< None: why no lambda_d exists
  std::vector<std::string> diagnostics;
};

struct EigenReport {
  Index n = 0;
  std::vector<EigenClass> classes;  ///< ordered by (re, im) of lambda_s

  std::size_t finite_count() const;
  bool any_infinite() const;
  bool any_none() const;
  /// No eigenvalue at all.
  bool empty() const;
  std::vector<Eigenpair> finite_pairs() const;
};

/// Classifies every standard eigenvalue of B. Every emitted pair passes
/// verify_eigenpair at 1e3 * tol.abs relative to its rounding scale.
EigenReport eig_all(const DCMatrix& b, const Tolerances& tol = {});

/// Tolerance that eig_all uses when it verifies its own output.
double eigenpair_tolerance(const Tolerances& tol);

// ---------------------------------------------------------------------------
// Diagonalizability and the Hermitian case.

struct Diagonalization {
  bool diagonalizable = false;
  DCMatrix p;  ///< eigenvector columns
  DCMatrix d;  ///< diagonal eigenvalues
  double residual = 0.0;  ///< max entry of A - P D P^{-1}
  bool corollary_agrees = true;  ///< the per-block Jordan test reached the same verdict
  std::string reason;
};

Diagonalization is_diagonalizable(const DCMatrix& a, const Tolerances& tol = {});

enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };

std::string_view to_string(Definiteness d);

struct HermitianEigen {
  std::vector<DualNumber> values;  ///< ascending in the dual-number order
  std::vector<DCVector> vectors;   ///< orthonormal under inner()
  Definiteness definiteness = Definiteness::Indefinite;
};

/// Throws NotHermitian.
HermitianEigen hermitian_eig(const DCMatrix& a, const Tolerances& tol = {});

}  // namespace dualcx

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


#include "dualcx/jordan.hpp"

#include <algorithm>

#include "dualcx/error.hpp"

namespace dualcx {
namespace {

void check_residual(DualJordanForm& form, const DCMatrix& a, const Tolerances& tol) {
  form.residual = max_abs(similar_transform(form.p, a, tol) - form.j);
  if (form.residual > tol.jordan * (1.0 + max_abs(a))) {
    throw Error(ErrorCode::IllConditionedStructure,
                "Jordan transform residual " + std::to_string(form.residual) + " exceeds tolerance");
  }
}

bool exact_lex_less(Complex a, Complex b) {
  return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
}

}  // namespace

DualJordanForm jordan_diag_standard(const DCMatrix& a, std::span<const StandardEigenvalue> structure,
                                    const Tolerances& tol) {
  if (!a.square()) throw Error(ErrorCode::ShapeMismatch, "jordan_diag_standard: matrix is not square");
  const Index n = a.rows();
  Index total = 0;
  std::vector<Index> offsets;
  for (const StandardEigenvalue& e : structure) {
    if (e.multiplicity < 1) throw Error(ErrorCode::StandardPartNotBlockScalar, "multiplicity below 1");
    offsets.push_back(total);
    total += e.multiplicity;
  }
  if (total != n) throw Error(ErrorCode::StandardPartNotBlockScalar, "multiplicities do not add up to the dimension");
  for (std::size_t i = 0; i < structure.size(); ++i)
    for (std::size_t k = i + 1; k < structure.size(); ++k)
      if (std::abs(structure[i].value - structure[k].value) <= tol.abs) {
        throw Error(ErrorCode::EigenvaluesNotDistinct, "standard eigenvalues repeat across blocks");
      }

  CMatrix expected = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < structure.size(); ++i)
    expected.diagonal().segment(offsets[i], structure[i].multiplicity).setConstant(structure[i].value);
  if (cx::max_abs(CMatrix(a.std() - expected)) > tol.abs) {
    throw Error(ErrorCode::StandardPartNotBlockScalar, "standard part is not diag(lambda_i I)");
  }

  DualJordanForm form;
  form.kind = JordanKind::DiagonalizableStandard;
  CMatrix ps = CMatrix::Zero(n, n);
  CMatrix jd = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < structure.size(); ++i) {
    const Index oi = offsets[i];
    const Index ni = structure[i].multiplicity;
    const cx::JordanStructure js = cx::jordan(a.dual().block(oi, oi, ni, ni), tol);
    ps.block(oi, oi, ni, ni) = js.transform;
    jd.block(oi, oi, ni, ni) = js.canonical();
    for (const cx::EigenBlocks& e : js.eigenvalues) {
      Index at = oi + e.offset;
      for (Index k = 0; k < e.scalar_count; ++k) form.blocks.push_back({structure[i].value, e.value, 1, at++});
      for (Index size : e.chains) {
        form.blocks.push_back({structure[i].value, e.value, size, at});
        at += size;
      }
    }
  }
  CMatrix pd = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < structure.size(); ++i)
    for (std::size_t k = 0; k < structure.size(); ++k) {
      if (i == k) continue;
      const Index ni = structure[i].multiplicity;
      const Index nk = structure[k].multiplicity;
      pd.block(offsets[i], offsets[k], ni, nk) = a.dual().block(offsets[i], offsets[k], ni, nk) *
                                                 ps.block(offsets[k], offsets[k], nk, nk) /
                                                 (structure[k].value - structure[i].value);
    }
  form.p = DCMatrix(ps, pd);
  form.j = DCMatrix(expected, jd);
  check_residual(form, a, tol);
  return form;
}

DualJordanForm jordan_diag_standard(const DCMatrix& a, const Tolerances& tol) {
  if (!a.square()) throw Error(ErrorCode::ShapeMismatch, "jordan_diag_standard: matrix is not square");
  const Index n = a.rows();
  CMatrix off = a.std();
  off.diagonal().setZero();
  if (cx::max_abs(off) > tol.abs) throw Error(ErrorCode::StandardPartNotBlockScalar, "standard part is not diagonal");
  std::vector<StandardEigenvalue> structure;
  for (Index i = 0; i < n; ++i) {
    const Complex v = a.std()(i, i);
    if (!structure.empty() && std::abs(structure.back().value - v) <= tol.abs) {
      ++structure.back().multiplicity;
    } else {
      structure.push_back({v, 1});
    }
  }
  return jordan_diag_standard(a, structure, tol);
}

FullJordan jordan_form_full(const DCMatrix& b, const Tolerances& tol) {
  if (!b.square()) throw Error(ErrorCode::ShapeMismatch, "jordan_form_full: matrix is not square");
  const cx::JordanStructure js = cx::jordan(b.std(), tol);
  if (!js.diagonalizable()) throw Error(ErrorCode::StandardPartDefective, "standard part is not diagonalizable");

  FullJordan out;
  out.q = js.transform;
  std::vector<StandardEigenvalue> structure;
  for (const cx::EigenBlocks& e : js.eigenvalues) structure.push_back({e.value, e.multiplicity()});
  const CMatrix ad = js.transform.partialPivLu().solve(b.dual() * js.transform);
  const DCMatrix a(js.canonical(), ad);

  out.form = jordan_diag_standard(a, structure, tol);
  out.form.p = DCMatrix(out.q) * out.form.p;
  check_residual(out.form, b, tol);

  const double check_tol = eigenpair_tolerance(tol);
  for (const DualJordanBlock& blk : out.form.blocks) {
    const DualComplex lambda{blk.lambda_s, blk.lambda_d};
    DCVector x = normalized(out.form.p.col(blk.offset), tol);
    const EigenpairCheck check = verify_eigenpair(b, lambda, x, check_tol);
    if (!check) throw Error(ErrorCode::IllConditionedStructure, "Jordan eigenvector: " + check.describe());
    out.eigenpairs.push_back({lambda, std::move(x)});
  }
  std::stable_sort(out.eigenpairs.begin(), out.eigenpairs.end(), [](const Eigenpair& x, const Eigenpair& y) {
    if (x.value.std != y.value.std) return exact_lex_less(x.value.std, y.value.std);
    return exact_lex_less(x.value.dual, y.value.dual);
  });
  return out;
}

DualJordanForm jordan_block_standard(const DCMatrix& a, const Tolerances& tol) {
  if (!a.square() || a.rows() < 2) {
    throw Error(ErrorCode::StandardPartNotJordanBlock, "Jordan-block standard part needs a square matrix of size >= 2");
  }
  const Index n = a.rows();
  const Complex lambda = a.std()(0, 0);
  if (cx::max_abs(CMatrix(a.std() - cx::jordan_block(n, lambda))) > tol.abs) {
    throw Error(ErrorCode::StandardPartNotJordanBlock, "standard part is not a single Jordan block");
  }

  // J_d = A_d + N P_d - P_d N, so f_ij = a_ij + p_{i+1,j} - p_{i,j-1}; the p on
  // diagonal l + 1 are chosen to clear f on diagonal l. Indices are 0-based.
  const CMatrix& ad = a.dual();
  CMatrix pd = CMatrix::Zero(n, n);
  for (Index l = 0; l <= n - 2; ++l) {
    // Subdiagonal l: clear every entry above row n.
    pd(l + 1, 0) = -ad(l, 0);
    for (Index j = 1; j + l + 1 < n; ++j) pd(j + l + 1, j) = pd(j + l, j - 1) - ad(j + l, j);
  }
  for (Index l = -1; l >= 1 - n; --l) {
    // Superdiagonal -l: clear it entirely, anchored at p_{1,-l} = 0.
    for (Index i = 0; i + 1 < n + l + 1; ++i) pd(i + 1, i - l) = pd(i, i - l - 1) - ad(i, i - l);
  }

  DualJordanForm form;
  form.kind = JordanKind::JordanBlockStandard;
  form.lambda_s = lambda;
  form.p = DCMatrix(CMatrix::Identity(n, n), pd);
  CMatrix jd = CMatrix::Zero(n, n);
  jd(n - 1, 0) = ad(n - 1, 0);
  for (Index j = 1; j < n; ++j) jd(n - 1, j) = ad(n - 1, j) - pd(n - 1, j - 1);
  for (Index j = 0; j < n; ++j) form.last_row.push_back(jd(n - 1, j));
  form.j = DCMatrix(a.std(), jd);
  check_residual(form, a, tol);
  return form;
}

DualJordanForm jordan_block_form_full(const DCMatrix& b, const Tolerances& tol) {
  if (!b.square()) throw Error(ErrorCode::ShapeMismatch, "jordan_block_form_full: matrix is not square");
  const cx::JordanStructure js = cx::jordan(b.std(), tol);
  if (js.eigenvalues.size() != 1 || js.eigenvalues.front().chains.size() != 1 ||
      js.eigenvalues.front().scalar_count != 0) {
    throw Error(ErrorCode::StandardPartNotJordanBlock, "standard part is not similar to a single Jordan block");
  }
  const CMatrix ad = js.transform.partialPivLu().solve(b.dual() * js.transform);
  DualJordanForm form = jordan_block_standard(DCMatrix(js.canonical(), ad), tol);
  form.p = DCMatrix(js.transform) * form.p;
  check_residual(form, b, tol);
  return form;
}

JordanBlockEigen eig_jordan_block(const DCMatrix& a, const Tolerances& tol) {
  if (!a.square() || a.rows() < 2) {
    throw Error(ErrorCode::StandardPartNotJordanBlock, "Jordan-block standard part needs a square matrix of size >= 2");
  }
  const Index n = a.rows();
  const Complex lambda = a.std()(0, 0);
  if (cx::max_abs(CMatrix(a.std() - cx::jordan_block(n, lambda))) > tol.abs) {
    throw Error(ErrorCode::StandardPartNotJordanBlock, "standard part is not a single Jordan block");
  }
  const bool none = std::abs(a.dual()(n - 1, 0)) > tol.abs;
  return {none ? Regime::None : Regime::Infinite, lambda};
}

}  // namespace dualcx

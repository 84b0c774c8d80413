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

#include "dualcx/cxkernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "dualcx/error.hpp"

namespace dualcx::cx {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

using Svd = Eigen::JacobiSVD<CMatrix>;

Svd full_svd(const CMatrix& m) { return Svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV); }

Index count_rank(const Eigen::VectorXd& sv, const Tolerances& tol, double ref_scale) {
  if (sv.size() == 0) return 0;
  const double threshold = tol.rank * std::max(sv(0), ref_scale);
  Index r = 0;
  while (r < sv.size() && sv(r) > threshold) ++r;
  return r;
}

// Rotate v so that its first non-negligible entry is real positive.
void fix_phase(CVector& v) {
  const double peak = v.cwiseAbs().maxCoeff();
  if (peak == 0.0) return;
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-8 * peak) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = Complex(v(i).real(), 0.0);
      return;
    }
  }
}

struct Cluster {
  Complex value;
  Index size = 0;
};

// Single linkage at `radius`, then agglomeration of groups whose spread stays
// within scale * base^(2/k) for k members: a k-fold defective eigenvalue
// splits like eps^(1/k) under rounding. False merges surface later in the
// kernel staircase.
std::vector<Cluster> cluster_eigenvalues(const CVector& vals, double base, double scale) {
  const Index n = vals.size();
  const double radius = base * scale;
  std::vector<Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (std::abs(vals(i) - vals(j)) <= radius) parent[find(i)] = find(j);

  std::vector<std::vector<Index>> groups;
  std::vector<Index> roots;
  for (Index i = 0; i < n; ++i) {
    const Index r = find(i);
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      roots.push_back(r);
      groups.push_back({i});
    } else {
      groups[static_cast<std::size_t>(it - roots.begin())].push_back(i);
    }
  }

  auto centroid = [&](const std::vector<Index>& g) {
    Complex sum{};
    for (Index i : g) sum += vals(i);
    return sum / static_cast<double>(g.size());
  };
  auto spread_ok = [&](const std::vector<Index>& g) {
    const Complex c = centroid(g);
    double spread = 0.0;
    for (Index i : g) spread = std::max(spread, std::abs(vals(i) - c));
    return spread <= scale * std::pow(base, 2.0 / static_cast<double>(g.size()));
  };
  // Grow a group by its m nearest neighbours; the smallest admissible m wins.
  bool merged_any = true;
  while (merged_any && groups.size() > 1) {
    merged_any = false;
    for (std::size_t a = 0; a < groups.size() && !merged_any; ++a) {
      const Complex ca = centroid(groups[a]);
      std::vector<std::size_t> order;
      for (std::size_t b = 0; b < groups.size(); ++b)
        if (b != a) order.push_back(b);
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return std::abs(centroid(groups[x]) - ca) < std::abs(centroid(groups[y]) - ca);
      });
      std::vector<Index> merged = groups[a];
      for (std::size_t m = 0; m < order.size(); ++m) {
        merged.insert(merged.end(), groups[order[m]].begin(), groups[order[m]].end());
        if (!spread_ok(merged)) continue;
        std::vector<std::size_t> gone(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m + 1));
        groups[a] = std::move(merged);
        std::sort(gone.rbegin(), gone.rend());
        for (std::size_t g : gone) groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(g));
        merged_any = true;
        break;
      }
    }
  }

  std::vector<Index> label(static_cast<std::size_t>(n));
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (Index i : groups[g]) label[static_cast<std::size_t>(i)] = static_cast<Index>(g);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const double d = std::abs(vals(i) - vals(j));
      if (label[i] != label[j] && d <= 10.0 * radius) {
        throw Error(ErrorCode::IllConditionedStructure,
                    "eigenvalues separated by " + std::to_string(d) + " sit inside the ambiguity band of the cluster radius");
      }
    }

  std::vector<Cluster> out;
  for (const std::vector<Index>& g : groups) {
    const Complex first = vals(g.front());
    const bool all_equal = std::all_of(g.begin(), g.end(), [&](Index i) { return vals(i) == first; });
    out.push_back({all_equal ? first : centroid(g), static_cast<Index>(g.size())});
  }
  std::sort(out.begin(), out.end(), [radius](const Cluster& a, const Cluster& b) {
    if (std::abs(a.value.real() - b.value.real()) > radius) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

// Stack the columns of a list of matrices.
CMatrix hstack(Index rows, const std::vector<CVector>& cols) {
  CMatrix out(rows, static_cast<Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) out.col(static_cast<Index>(c)) = cols[c];
  return out;
}

}  // namespace

Index rank(const CMatrix& m, const Tolerances& tol, double ref_scale) {
  if (m.size() == 0) return 0;
  Svd svd(m);
  return count_rank(svd.singularValues(), tol, ref_scale);
}

CMatrix nullspace(const CMatrix& m, const Tolerances& tol, double ref_scale) {
  if (m.cols() == 0) return CMatrix(0, 0);
  if (m.rows() == 0) return CMatrix::Identity(m.cols(), m.cols());
  const Svd svd = full_svd(m);
  const Index r = count_rank(svd.singularValues(), tol, ref_scale);
  return svd.matrixV().rightCols(m.cols() - r);
}

CMatrix range_basis(const CMatrix& m, const Tolerances& tol, double ref_scale) {
  if (m.size() == 0) return CMatrix(m.rows(), 0);
  const Svd svd = full_svd(m);
  const Index r = count_rank(svd.singularValues(), tol, ref_scale);
  return svd.matrixU().leftCols(r);
}

SolveResult solve(const CMatrix& m, const CVector& b, const Tolerances& tol, double ref_scale) {
  if (m.rows() != b.size()) {
    throw Error(ErrorCode::ShapeMismatch, "solve: matrix has " + std::to_string(m.rows()) + " rows, rhs has " +
                                              std::to_string(b.size()) + " entries");
  }
  SolveResult out;
  const Index cols = m.cols();
  if (m.rows() == 0 || cols == 0) {
    out.solution = CVector::Zero(cols);
    out.residual = b.norm();
    out.null_basis = CMatrix::Identity(cols, cols);
  } else {
    const Svd svd = full_svd(m);
    const Eigen::VectorXd& sv = svd.singularValues();
    const Index r = count_rank(sv, tol, ref_scale);
    CVector coeffs = svd.matrixU().leftCols(r).adjoint() * b;
    for (Index i = 0; i < r; ++i) coeffs(i) /= sv(i);
    out.solution = svd.matrixV().leftCols(r) * coeffs;
    out.residual = (m * out.solution - b).norm();
    out.null_basis = svd.matrixV().rightCols(cols - r);
  }
  const double sigma = m.size() == 0 ? 0.0 : m.norm();
  const double allowed = tol.abs * (1.0 + b.norm()) + 64.0 * kEps * (sigma * out.solution.norm() + b.norm());
  if (out.residual > allowed) {
    out.kind = SolveResult::Kind::Inconsistent;
  } else if (out.null_basis.cols() == 0) {
    out.kind = SolveResult::Kind::Unique;
  } else {
    out.kind = SolveResult::Kind::Affine;
  }
  if (out.kind != SolveResult::Kind::Affine) out.null_basis.resize(cols, 0);
  return out;
}

bool span_contains(const CMatrix& m, const CVector& v, const Tolerances& tol, double ref_scale) {
  return solve(m, v, tol, ref_scale).kind != SolveResult::Kind::Inconsistent;
}

EigenPairs eig(const CMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "eig: matrix is not square");
  Eigen::ComplexEigenSolver<CMatrix> solver(m, true);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::ConvergenceFailure, "complex eigensolver did not converge");
  const Index n = m.rows();
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  const CVector& vals = solver.eigenvalues();
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    if (vals(a).real() != vals(b).real()) return vals(a).real() < vals(b).real();
    return vals(a).imag() < vals(b).imag();
  });
  EigenPairs out{CVector(n), CMatrix(n, n)};
  for (Index i = 0; i < n; ++i) {
    out.values(i) = vals(order[i]);
    CVector v = solver.eigenvectors().col(order[i]);
    v.normalize();
    fix_phase(v);
    out.vectors.col(i) = v;
  }
  return out;
}

Index EigenBlocks::multiplicity() const {
  return scalar_count + std::accumulate(chains.begin(), chains.end(), Index{0});
}

bool JordanStructure::diagonalizable() const {
  return std::all_of(eigenvalues.begin(), eigenvalues.end(), [](const EigenBlocks& b) { return b.semisimple(); });
}

CMatrix jordan_block(Index size, Complex value) {
  CMatrix out = CMatrix::Zero(size, size);
  for (Index i = 0; i < size; ++i) {
    out(i, i) = value;
    if (i + 1 < size) out(i, i + 1) = 1.0;
  }
  return out;
}

CMatrix canonical_block(const EigenBlocks& blocks) {
  const Index m = blocks.multiplicity();
  CMatrix out = CMatrix::Zero(m, m);
  for (Index i = 0; i < blocks.scalar_count; ++i) out(i, i) = blocks.value;
  Index at = blocks.scalar_count;
  for (Index size : blocks.chains) {
    out.block(at, at, size, size) = jordan_block(size, blocks.value);
    at += size;
  }
  return out;
}

CMatrix JordanStructure::canonical() const {
  const Index n = size();
  CMatrix out = CMatrix::Zero(n, n);
  for (const EigenBlocks& b : eigenvalues) {
    const Index m = b.multiplicity();
    out.block(b.offset, b.offset, m, m) = canonical_block(b);
  }
  return out;
}

JordanStructure jordan(const CMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "jordan: matrix is not square");
  const Index n = m.rows();
  JordanStructure out;
  out.transform = CMatrix::Identity(n, n);
  if (n == 0) return out;

  Eigen::ComplexSchur<CMatrix> schur(m, false);
  if (schur.info() != Eigen::Success) throw Error(ErrorCode::ConvergenceFailure, "Schur iteration did not converge");
  const double scale = std::max(1.0, m.norm());
  const std::vector<Cluster> clusters = cluster_eigenvalues(schur.matrixT().diagonal(), tol.cluster, scale);

  std::vector<CVector> columns;
  columns.reserve(static_cast<std::size_t>(n));
  for (const Cluster& cl : clusters) {
    const CMatrix nil = m - cl.value * CMatrix::Identity(n, n);

    // Staircase K_{j+1} = { x : N x in K_j }.
    std::vector<CMatrix> kernels{CMatrix(n, 0)};
    while (true) {
      const CMatrix& prev = kernels.back();
      const CMatrix proj = CMatrix::Identity(n, n) - prev * prev.adjoint();
      CMatrix next = nullspace(proj * nil, tol, scale);
      if (next.cols() <= prev.cols()) break;
      kernels.push_back(std::move(next));
      if (kernels.back().cols() >= cl.size) break;
    }
    const Index levels = static_cast<Index>(kernels.size()) - 1;
    if (kernels.back().cols() != cl.size) {
      throw Error(ErrorCode::IllConditionedStructure,
                  "generalized eigenspace has dimension " + std::to_string(kernels.back().cols()) +
                      " but the eigenvalue cluster has " + std::to_string(cl.size) + " members");
    }

    // exact[j] = number of blocks of size exactly j.
    std::vector<Index> at_least(static_cast<std::size_t>(levels + 2), 0);
    for (Index j = 1; j <= levels; ++j) at_least[j] = kernels[j].cols() - kernels[j - 1].cols();
    std::vector<Index> exact(static_cast<std::size_t>(levels + 1), 0);
    for (Index j = 1; j <= levels; ++j) {
      exact[j] = at_least[j] - at_least[j + 1];
      if (exact[j] < 0) throw Error(ErrorCode::IllConditionedStructure, "kernel staircase is not monotone");
    }

    std::vector<std::vector<CVector>> heads(static_cast<std::size_t>(levels + 1));
    for (Index j = levels; j >= 1; --j) {
      std::vector<CVector> covered;
      for (Index c = 0; c < kernels[j - 1].cols(); ++c) covered.push_back(kernels[j - 1].col(c));
      for (Index l = j + 1; l <= levels; ++l) {
        for (const CVector& h : heads[l]) {
          CVector v = h;
          for (Index k = 0; k < l - j; ++k) v = nil * v;
          covered.push_back(v);
        }
      }
      const CMatrix basis = range_basis(hstack(n, covered), tol, 1.0);
      if (basis.cols() != static_cast<Index>(covered.size())) {
        throw Error(ErrorCode::IllConditionedStructure, "Jordan chains lost independence");
      }
      const CMatrix residual = kernels[j] - basis * (basis.adjoint() * kernels[j]);
      if (exact[j] == 0) continue;
      const Svd svd = full_svd(residual);
      if (svd.singularValues()(exact[j] - 1) <= tol.rank) {
        throw Error(ErrorCode::IllConditionedStructure, "could not complete a Jordan chain basis");
      }
      for (Index c = 0; c < exact[j]; ++c) {
        CVector h = svd.matrixU().col(c);
        fix_phase(h);
        heads[j].push_back(h);
      }
    }

    EigenBlocks blocks;
    blocks.value = cl.value;
    blocks.offset = static_cast<Index>(columns.size());
    blocks.scalar_count = exact[1];
    for (const CVector& h : heads[1]) columns.push_back(h);
    for (Index l = levels; l >= 2; --l) {
      for (const CVector& h : heads[l]) {
        std::vector<CVector> chain{h};
        for (Index k = 1; k < l; ++k) chain.push_back(nil * chain.back());
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) columns.push_back(*it);
        blocks.chains.push_back(l);
      }
    }
    out.eigenvalues.push_back(std::move(blocks));
  }

  out.transform = hstack(n, columns);
  Eigen::PartialPivLU<CMatrix> lu(out.transform);
  if (rank(out.transform, tol) < n) throw Error(ErrorCode::IllConditionedStructure, "Jordan transform is singular");
  const CMatrix rebuilt = out.transform * out.canonical() * lu.inverse();
  const double err = (rebuilt - m).norm();
  if (!(err <= tol.jordan * scale)) {
    throw Error(ErrorCode::IllConditionedStructure,
                "Jordan reconstruction residual " + std::to_string(err) + " exceeds tolerance");
  }
  return out;
}

int Polynomial::degree() const {
  if (identically_zero) return -1;
  double peak = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) peak = std::max(peak, std::abs(coeffs[k]) * std::pow(radius, k));
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    if (std::abs(coeffs[k]) * std::pow(radius, k) > 1e-9 * peak) return k;
  }
  return -1;
}

Complex Polynomial::operator()(Complex x) const {
  Complex acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Complex> Polynomial::roots(double trim_tol) const {
  if (identically_zero || coeffs.empty()) return {};
  // Work in x = radius * mu so every normalized coefficient carries the same absolute error.
  std::vector<Complex> scaled(coeffs.size());
  double peak = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    scaled[k] = coeffs[k] * std::pow(radius, static_cast<double>(k));
    peak = std::max(peak, std::abs(scaled[k]));
  }
  int d = static_cast<int>(scaled.size()) - 1;
  while (d > 0 && std::abs(scaled[d]) <= trim_tol * peak) --d;
  if (d <= 0) return {};
  CMatrix companion = CMatrix::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -scaled[i] / scaled[d];
  Eigen::ComplexEigenSolver<CMatrix> solver(companion, false);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::ConvergenceFailure, "polynomial root finder did not converge");
  std::vector<Complex> out;
  for (Index i = 0; i < d; ++i) out.push_back(solver.eigenvalues()(i) * radius);
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

Polynomial poly_det(const CMatrix& constant, const CMatrix& lead, const Tolerances& tol) {
  if (constant.rows() != constant.cols() || lead.rows() != lead.cols() || constant.rows() != lead.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "poly_det: pencil matrices must be square and of equal size");
  }
  const Index m = constant.rows();
  Polynomial out;
  if (m == 0) {
    out.coeffs = {Complex(1.0)};
    return out;
  }
  const Index nodes = m + 1;
  out.radius = 1.0 + constant.norm() + lead.norm();
  std::vector<Complex> values(static_cast<std::size_t>(nodes));
  double peak = 0.0;
  double hadamard = 0.0;
  for (Index j = 0; j < nodes; ++j) {
    const Complex node = std::polar(out.radius, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(nodes));
    const CMatrix at = node * lead + constant;
    values[j] = at.fullPivLu().determinant();
    peak = std::max(peak, std::abs(values[j]));
    double h = 1.0;
    for (Index c = 0; c < m; ++c) h *= at.col(c).norm();
    hadamard = std::max(hadamard, h);
  }
  out.identically_zero = peak <= tol.abs * hadamard;
  out.coeffs.assign(static_cast<std::size_t>(nodes), Complex{});
  if (out.identically_zero) return out;
  for (Index k = 0; k < nodes; ++k) {
    Complex acc{};
    for (Index j = 0; j < nodes; ++j) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>((j * k) % nodes) / static_cast<double>(nodes);
      acc += values[j] * std::polar(1.0, angle);
    }
    out.coeffs[k] = acc / (static_cast<double>(nodes) * std::pow(out.radius, static_cast<double>(k)));
  }
  return out;
}

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace dualcx::cx

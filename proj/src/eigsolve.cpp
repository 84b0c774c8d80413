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

#include "dualcx/eigsolve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "dualcx/error.hpp"

namespace dualcx {

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Finite: return "finite";
    case Regime::None: return "none";
    case Regime::Infinite: return "infinite";
  }
  return "unknown";
}

std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive definite";
    case Definiteness::PositiveSemidefinite: return "positive semidefinite";
    case Definiteness::Indefinite: return "not positive semidefinite";
  }
  return "unknown";
}

double eigenpair_tolerance(const Tolerances& tol) { return 1e3 * tol.abs; }

namespace {

bool lex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

std::string format_complex(Complex z) {
  std::ostringstream os;
  os.precision(6);
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

// Greedy agglomeration of numerically multiple roots: a group of k roots is
// accepted when its spread stays below scale * base^(2/k), the usual
// eps^(1/k) splitting of a k-fold root.
std::vector<Complex> group_roots(std::vector<Complex> roots, double base, double scale) {
  std::vector<std::vector<Complex>> groups;
  for (Complex r : roots) groups.push_back({r});
  auto centroid = [](const std::vector<Complex>& g) {
    return std::accumulate(g.begin(), g.end(), Complex{}) / static_cast<double>(g.size());
  };
  while (groups.size() > 1) {
    std::size_t best_a = 0, best_b = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < groups.size(); ++a)
      for (std::size_t b = a + 1; b < groups.size(); ++b) {
        const double d = std::abs(centroid(groups[a]) - centroid(groups[b]));
        if (d < best) {
          best = d;
          best_a = a;
          best_b = b;
        }
      }
    std::vector<Complex> merged = groups[best_a];
    merged.insert(merged.end(), groups[best_b].begin(), groups[best_b].end());
    const Complex c = centroid(merged);
    double spread = 0.0;
    for (Complex r : merged) spread = std::max(spread, std::abs(r - c));
    const double limit = scale * std::pow(base, 2.0 / static_cast<double>(merged.size()));
    if (spread > limit) break;
    groups[best_a] = std::move(merged);
    groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(best_b));
  }
  std::vector<Complex> out;
  for (const auto& g : groups) out.push_back(centroid(g));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// Largest deviation of a from its best match in b, or infinity when the
// sizes differ.
double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (Complex x : a) {
    auto it = std::min_element(b.begin(), b.end(), [x](Complex p, Complex q) { return std::abs(p - x) < std::abs(q - x); });
    worst = std::max(worst, std::abs(*it - x) / std::max(1.0, std::abs(x)));
    b.erase(it);
  }
  return worst;
}

CVector smallest_right_singular(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  return svd.matrixV().col(m.cols() - 1);
}

}  // namespace

// ---------------------------------------------------------------------------

DCVector CandidateResult::eigenvector_at(Complex lambda_d) const {
  if (regime != Regime::Infinite) {
    if (regime == Regime::Finite) return vector;
    throw Error(ErrorCode::NotAnEigenpair, "candidate admits no eigenvalue");
  }
  const CVector rhs = rhs_ + lambda_d * xs_;
  const cx::SolveResult sol = cx::solve(shifted_, rhs, tol_, scale_);
  return normalized(DCVector(xs_, sol.solution), tol_);
}

CandidateResult eig_at(const DCMatrix& a, Complex lambda_s, const CVector& x_s, const Tolerances& tol) {
  if (!a.square() || a.rows() != x_s.size()) throw Error(ErrorCode::ShapeMismatch, "eig_at: dimensions disagree");
  const Index n = a.rows();
  const CMatrix shifted = a.std() - lambda_s * CMatrix::Identity(n, n);
  const double xs_norm = x_s.norm();
  const double std_residual = (shifted * x_s).norm();
  if (xs_norm == 0.0 || std_residual > tol.eig * (1.0 + a.std().norm() + std::abs(lambda_s)) * xs_norm) {
    throw Error(ErrorCode::NotAnEigenpair, "(lambda_s, x_s) is not an eigenpair of the standard part");
  }
  const double scale = std::max(1.0, max_abs(a));

  CMatrix system(n, n + 1);
  system << shifted, x_s;
  const CVector rhs = -a.dual() * x_s;
  const cx::SolveResult sol = cx::solve(system, rhs, tol, scale);

  CandidateResult out;
  if (sol.kind == cx::SolveResult::Kind::Inconsistent) {
    out.regime = Regime::None;
    return out;
  }
  if (!cx::span_contains(shifted, x_s, tol, scale)) {
    out.regime = Regime::Finite;
    out.lambda_d = -sol.solution(n);
    out.vector = normalized(DCVector(x_s, sol.solution.head(n)), tol);
    return out;
  }
  out.regime = Regime::Infinite;
  out.shifted_ = shifted;
  out.rhs_ = rhs;
  out.xs_ = x_s;
  out.tol_ = tol;
  out.scale_ = scale;
  out.vector = out.eigenvector_at(Complex{});
  return out;
}

// ---------------------------------------------------------------------------

Index BlockStructure::size() const { return scalar_count + std::accumulate(chains.begin(), chains.end(), Index{0}); }

CMatrix StructuredPencil::c() const {
  CMatrix out(order(), order());
  out << c00, c01, c10, c11;
  return out;
}

CMatrix StructuredPencil::lead() const {
  CMatrix out = CMatrix::Zero(order(), order());
  out.topLeftCorner(n0, n0).setIdentity();
  return out;
}

CMatrix StructuredPencil::at(Complex lambda) const { return lambda * lead() - c(); }

StructuredPencil build_structured_pencil(const CMatrix& a_d, const BlockStructure& blocks) {
  const Index n = a_d.rows();
  if (a_d.cols() != n) throw Error(ErrorCode::BadBlockStructure, "dual block is not square");
  if (blocks.scalar_count < 0) throw Error(ErrorCode::BadBlockStructure, "negative scalar block count");
  for (Index size : blocks.chains) {
    if (size < 2) throw Error(ErrorCode::BadBlockStructure, "Jordan chain of size " + std::to_string(size) + " < 2");
  }
  if (blocks.size() != n) {
    throw Error(ErrorCode::BadBlockStructure, "block sizes add up to " + std::to_string(blocks.size()) +
                                                   ", expected " + std::to_string(n));
  }
  StructuredPencil p;
  p.n0 = blocks.scalar_count;
  p.t = static_cast<Index>(blocks.chains.size());
  const Index m = p.order();
  p.z = CMatrix::Zero(n, m);
  p.w = CMatrix::Zero(n, m);
  for (Index i = 0; i < p.n0; ++i) {
    p.z(i, i) = 1.0;
    p.w(i, i) = 1.0;
  }
  // Chain i occupies rows start .. start + size - 1 (0-based).
  Index start = p.n0;
  for (Index i = 0; i < p.t; ++i) {
    const Index size = blocks.chains[static_cast<std::size_t>(i)];
    p.z(start, p.n0 + i) = 1.0;
    p.w(start + size - 1, p.n0 + i) = 1.0;
    start += size;
  }
  const CMatrix c = p.w.transpose() * a_d * p.z;
  p.c00 = c.topLeftCorner(p.n0, p.n0);
  p.c01 = c.topRightCorner(p.n0, p.t);
  p.c10 = c.bottomLeftCorner(p.t, p.n0);
  p.c11 = c.bottomRightCorner(p.t, p.t);
  return p;
}

PencilSolution structured_eigen_system(const StructuredPencil& pencil, const Tolerances& tol) {
  PencilSolution out;
  const CMatrix c = pencil.c();
  const double scale = std::max(1.0, c.norm());
  out.polynomial = cx::poly_det(-c, pencil.lead(), tol);
  if (out.polynomial.identically_zero) {
    out.regime = Regime::Infinite;
    return out;
  }

  std::vector<Complex> candidates;
  const std::vector<Complex> poly_roots = out.polynomial.roots(tol.rank);
  const bool c11_invertible = pencil.t == 0 || cx::rank(pencil.c11, tol, scale) == pencil.t;
  if (c11_invertible) {
    out.schur_route = true;
    if (pencil.n0 > 0) {
      CMatrix schur = pencil.c00;
      if (pencil.t > 0) schur -= pencil.c01 * pencil.c11.partialPivLu().solve(pencil.c10);
      Eigen::ComplexEigenSolver<CMatrix> es(schur, false);
      if (es.info() != Eigen::Success) throw Error(ErrorCode::ConvergenceFailure, "Schur complement eigensolver failed");
      for (Index i = 0; i < pencil.n0; ++i) candidates.push_back(es.eigenvalues()(i));
    }
    const double gap = multiset_distance(candidates, poly_roots);
    if (gap > 1e-6) {
      std::ostringstream os;
      os << "Schur complement eigenvalues and determinant roots disagree (relative gap " << gap << ")";
      out.diagnostics.push_back(os.str());
    }
  } else {
    candidates = poly_roots;
  }

  for (Complex lambda : group_roots(candidates, tol.cluster, scale)) {
    CMatrix kernel = cx::nullspace(pencil.at(lambda), tol, scale);
    if (kernel.cols() == 0) {
      out.diagnostics.push_back("discarded candidate root " + format_complex(lambda) + " with trivial kernel");
      continue;
    }
    out.roots.push_back({lambda, std::move(kernel)});
  }
  out.regime = out.roots.empty() ? Regime::None : Regime::Finite;
  return out;
}

// ---------------------------------------------------------------------------

struct FamilyContext {
  DCMatrix b;
  CMatrix q;   // standard-part Jordan transform
  CMatrix ad;  // Q^{-1} B_d Q
  std::vector<cx::EigenBlocks> eigenvalues;
  std::size_t index = 0;
  StructuredPencil pencil;
  Tolerances tol;
  double scale = 1.0;
};

namespace {

BlockStructure structure_of(const cx::EigenBlocks& e) { return {e.scalar_count, e.chains}; }

// Eigenvector of B for lambda_s + lambda_d eps from a kernel vector y of the pencil.
DCVector reconstruct(const FamilyContext& ctx, Complex lambda_d, const CVector& y, std::vector<std::string>* notes) {
  const Index n = ctx.b.rows();
  const cx::EigenBlocks& own = ctx.eigenvalues[ctx.index];
  const Index ni = own.multiplicity();
  const Index oi = own.offset;
  const Complex lambda_s = own.value;

  cx::EigenBlocks nil_blocks = own;
  nil_blocks.value = Complex{};
  const CMatrix nilpotent = cx::canonical_block(nil_blocks);

  const CVector xis = ctx.pencil.z * y;
  const CMatrix aid = ctx.ad.block(oi, oi, ni, ni);
  const CVector xid = nilpotent.transpose() * (lambda_d * xis - aid * xis);

  CVector xs = CVector::Zero(n);
  CVector xd = CVector::Zero(n);
  xs.segment(oi, ni) = xis;
  xd.segment(oi, ni) = xid;
  for (std::size_t k = 0; k < ctx.eigenvalues.size(); ++k) {
    if (k == ctx.index) continue;
    const cx::EigenBlocks& other = ctx.eigenvalues[k];
    const Index nk = other.multiplicity();
    const CMatrix shifted = cx::canonical_block(other) - lambda_s * CMatrix::Identity(nk, nk);
    const CVector rhs = -ctx.ad.block(other.offset, oi, nk, ni) * xis;
    xd.segment(other.offset, nk) = shifted.triangularView<Eigen::Upper>().solve(rhs);
  }

  const DualComplex lambda{lambda_s, lambda_d};
  DCVector x = normalized(DCVector(ctx.q * xs, ctx.q * xd), ctx.tol);
  const double check_tol = eigenpair_tolerance(ctx.tol);
  if (verify_eigenpair(ctx.b, lambda, x, check_tol)) return x;

  // Recover the dual part directly from (B_s - lambda_s I) x_d = (lambda_d I - B_d) x_s.
  const CMatrix shifted = ctx.b.std() - lambda_s * CMatrix::Identity(n, n);
  const CVector rhs = lambda_d * x.std() - ctx.b.dual() * x.std();
  const cx::SolveResult sol = cx::solve(shifted, rhs, ctx.tol, ctx.scale);
  DCVector retry = normalized(DCVector(x.std(), sol.solution), ctx.tol);
  const EigenpairCheck check = verify_eigenpair(ctx.b, lambda, retry, check_tol);
  if (!check) {
    throw Error(ErrorCode::IllConditionedStructure,
                "reconstructed eigenvector for " + format_complex(lambda_s) + " fails: " + check.describe());
  }
  if (notes) notes->push_back("eigenvector dual part recomputed by least squares at " + format_complex(lambda_s));
  return retry;
}

}  // namespace

InfiniteFamily::InfiniteFamily(std::shared_ptr<const FamilyContext> ctx) : ctx_(std::move(ctx)) {}

Complex InfiniteFamily::lambda_s() const { return ctx_->eigenvalues[ctx_->index].value; }

DCVector InfiniteFamily::eigenvector_at(Complex lambda_d) const {
  const CMatrix m = ctx_->pencil.at(lambda_d);
  const CMatrix kernel = cx::nullspace(m, ctx_->tol, std::max(1.0, ctx_->pencil.c().norm()));
  const CVector y = kernel.cols() > 0 ? CVector(kernel.col(0)) : smallest_right_singular(m);
  return reconstruct(*ctx_, lambda_d, y, nullptr);
}

std::size_t EigenReport::finite_count() const {
  std::size_t count = 0;
  for (const EigenClass& c : classes) count += c.pairs.size();
  return count;
}

bool EigenReport::any_infinite() const {
  return std::any_of(classes.begin(), classes.end(), [](const EigenClass& c) { return c.regime == Regime::Infinite; });
}

bool EigenReport::any_none() const {
  return std::any_of(classes.begin(), classes.end(), [](const EigenClass& c) { return c.regime == Regime::None; });
}

bool EigenReport::empty() const {
  return std::all_of(classes.begin(), classes.end(), [](const EigenClass& c) { return c.regime == Regime::None; });
}

std::vector<Eigenpair> EigenReport::finite_pairs() const {
  std::vector<Eigenpair> out;
  for (const EigenClass& c : classes) out.insert(out.end(), c.pairs.begin(), c.pairs.end());
  return out;
}

EigenReport eig_all(const DCMatrix& b, const Tolerances& tol) {
  if (!b.square()) throw Error(ErrorCode::ShapeMismatch, "eig_all: matrix is not square");
  EigenReport report;
  report.n = b.rows();
  if (report.n == 0) return report;

  const cx::JordanStructure js = cx::jordan(b.std(), tol);
  const CMatrix qinv = js.transform.partialPivLu().inverse();
  const CMatrix ad = qinv * b.dual() * js.transform;

  for (std::size_t i = 0; i < js.eigenvalues.size(); ++i) {
    const cx::EigenBlocks& e = js.eigenvalues[i];
    auto ctx = std::make_shared<FamilyContext>();
    ctx->b = b;
    ctx->q = js.transform;
    ctx->ad = ad;
    ctx->eigenvalues = js.eigenvalues;
    ctx->index = i;
    ctx->tol = tol;
    ctx->scale = std::max(1.0, max_abs(b));
    const Index ni = e.multiplicity();
    ctx->pencil = build_structured_pencil(ad.block(e.offset, e.offset, ni, ni), structure_of(e));

    EigenClass cls;
    cls.lambda_s = e.value;
    cls.blocks = structure_of(e);
    PencilSolution sol = structured_eigen_system(ctx->pencil, tol);
    cls.regime = sol.regime;
    cls.diagnostics = std::move(sol.diagnostics);
    switch (sol.regime) {
      case Regime::Finite:
        for (const PencilRoot& root : sol.roots) {
          for (Index k = 0; k < root.kernel.cols(); ++k) {
            DCVector x = reconstruct(*ctx, root.lambda_d, root.kernel.col(k), &cls.diagnostics);
            cls.pairs.push_back({DualComplex{e.value, root.lambda_d}, std::move(x)});
          }
        }
        break;
      case Regime::Infinite:
        cls.family = InfiniteFamily(ctx);
        break;
      case Regime::None: {
        std::ostringstream os;
        if (ctx->pencil.n0 == 0) {
          os << "det(-C11) = " << format_complex(sol.polynomial.coeffs.empty() ? Complex{} : sol.polynomial.coeffs.front())
             << " is nonzero, so the reduced system is never singular";
        } else if (sol.polynomial.degree() <= 0) {
          os << "det M(lambda_d) is a nonzero constant";
        } else {
          os << "no root of det M(lambda_d) admits a nonzero kernel";
        }
        cls.witness = os.str();
        break;
      }
    }
    report.classes.push_back(std::move(cls));
  }
  return report;
}

// ---------------------------------------------------------------------------

Diagonalization is_diagonalizable(const DCMatrix& a, const Tolerances& tol) {
  if (!a.square()) throw Error(ErrorCode::ShapeMismatch, "is_diagonalizable: matrix is not square");
  const Index n = a.rows();
  Diagonalization out;
  const EigenReport report = eig_all(a, tol);
  const std::vector<Eigenpair> pairs = report.finite_pairs();

  if (report.any_infinite()) {
    out.reason = "infinitely many eigenvalues";
  } else if (report.any_none()) {
    out.reason = "some standard eigenvalue admits no dual eigenvalue";
  } else if (static_cast<Index>(pairs.size()) != n) {
    out.reason = "only " + std::to_string(pairs.size()) + " independent eigenvectors for dimension " + std::to_string(n);
  } else {
    std::vector<DCVector> vectors;
    std::vector<DualComplex> values;
    for (const Eigenpair& p : pairs) {
      vectors.push_back(p.vector);
      values.push_back(p.value);
    }
    if (!appreciably_linearly_independent(vectors, tol)) {
      out.reason = "eigenvectors are not appreciably linearly independent";
    } else {
      out.diagonalizable = true;
      out.p = DCMatrix::from_columns(vectors);
      out.d = DCMatrix::diagonal(values);
      out.residual = max_abs(a - out.p * out.d * inverse(out.p, tol));
      out.reason = "n appreciably independent eigenvectors";
    }
  }

  // Independent verdict: B_s diagonalizable and every diagonal block of
  // Q_s^{-1} B_d Q_s diagonalizable.
  bool corollary = false;
  try {
    const cx::JordanStructure js = cx::jordan(a.std(), tol);
    if (js.diagonalizable()) {
      const CMatrix ad = js.transform.partialPivLu().solve(a.dual() * js.transform);
      corollary = std::all_of(js.eigenvalues.begin(), js.eigenvalues.end(), [&](const cx::EigenBlocks& e) {
        const Index m = e.multiplicity();
        return cx::jordan(ad.block(e.offset, e.offset, m, m), tol).diagonalizable();
      });
    }
    out.corollary_agrees = corollary == out.diagonalizable;
  } catch (const Error&) {
    out.corollary_agrees = false;
  }
  if (!out.corollary_agrees) out.reason += " (block-diagonal Jordan test disagrees)";
  return out;
}

HermitianEigen hermitian_eig(const DCMatrix& a, const Tolerances& tol) {
  if (!is_hermitian(a, tol)) throw Error(ErrorCode::NotHermitian, "matrix differs from its conjugate transpose");
  const Index n = a.rows();
  const CMatrix as = 0.5 * (a.std() + a.std().adjoint());
  const CMatrix ad = 0.5 * (a.dual() + a.dual().adjoint());
  const double scale = std::max(1.0, max_abs(a));

  Eigen::SelfAdjointEigenSolver<CMatrix> outer(as);
  if (outer.info() != Eigen::Success) throw Error(ErrorCode::ConvergenceFailure, "Hermitian eigensolver failed");
  const Eigen::VectorXd& lam = outer.eigenvalues();
  const CMatrix& u = outer.eigenvectors();

  // Consecutive eigenvalues closer than the cluster radius share a group.
  std::vector<std::pair<Index, Index>> groups;  // [begin, end)
  for (Index i = 0; i < n; ++i) {
    if (!groups.empty() && lam(i) - lam(i - 1) <= tol.cluster * scale) {
      groups.back().second = i + 1;
    } else {
      groups.push_back({i, i + 1});
    }
  }
  std::vector<double> centers;
  for (auto [lo, hi] : groups) centers.push_back(lam.segment(lo, hi - lo).mean());

  auto snap = [&](double v) { return std::abs(v) <= tol.abs * scale ? 0.0 : v; };

  HermitianEigen out;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto [lo, hi] = groups[g];
    const CMatrix ug = u.middleCols(lo, hi - lo);
    CMatrix h = ug.adjoint() * ad * ug;
    h = 0.5 * (h + h.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<CMatrix> inner_solver(h);
    if (inner_solver.info() != Eigen::Success) throw Error(ErrorCode::ConvergenceFailure, "Hermitian eigensolver failed");
    for (Index j = 0; j < h.rows(); ++j) {
      const CVector xs = ug * inner_solver.eigenvectors().col(j);
      const CVector adxs = ad * xs;
      CVector xd = CVector::Zero(n);
      for (std::size_t k = 0; k < groups.size(); ++k) {
        if (k == g) continue;
        const CMatrix uk = u.middleCols(groups[k].first, groups[k].second - groups[k].first);
        xd += uk * (uk.adjoint() * adxs) / (centers[g] - centers[k]);
      }
      out.values.push_back({snap(centers[g]), snap(inner_solver.eigenvalues()(j))});
      out.vectors.emplace_back(xs, xd);
    }
  }

  const DualNumber zero{};
  const bool all_positive = std::all_of(out.values.begin(), out.values.end(), [&](const DualNumber& v) { return v > zero; });
  const bool all_nonneg = std::all_of(out.values.begin(), out.values.end(), [&](const DualNumber& v) { return v >= zero; });
  out.definiteness = all_positive ? Definiteness::PositiveDefinite
                     : all_nonneg ? Definiteness::PositiveSemidefinite
                                  : Definiteness::Indefinite;
  return out;
}

}  // namespace dualcx

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


// One PASS/FAIL line per acceptance criterion. Tolerances are fixed here.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "dualcx/error.hpp"
#include "dualcx/jordan.hpp"
#include "support.hpp"

namespace dualcx {
namespace {

using testing::Rng;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

DCMatrix make(std::initializer_list<double> s, std::initializer_list<double> d, Index n) {
  CMatrix as(n, n), ad(n, n);
  auto is = s.begin();
  auto id = d.begin();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      as(i, j) = *is++;
      ad(i, j) = *id++;
    }
  return {as, ad};
}

CMatrix real(std::initializer_list<double> v, Index n) {
  CMatrix m(n, n);
  auto it = v.begin();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = *it++;
  return m;
}

const DCMatrix kEx1 = make({1, 1, 0, 1}, {0, 0, 1, 0}, 2);
const DCMatrix kEx2 = make({1, 1, 0, 1}, {1, 0, 0, 0}, 2);
const DCMatrix kEx3 = make({1, 0, 0, 1}, {1, 1, 0, 1}, 2);
const DCMatrix kEx4 = make({1, 0, 0, 0, 1, 0, 0, 0, 2}, {1, 1, 1, 0, 1, 0, 1, 0, 1}, 3);
const DCMatrix kEx5 = make({1, 0, 0, 0, 1, 0, 0, 0, 2}, {1, 0, 0, 0, 1, 1, 1, 0, 1}, 3);

double fro(const DCMatrix& a) { return std::sqrt(a.std().squaredNorm() + a.dual().squaredNorm()); }

double dual_dist(const DualComplex& a, const DualComplex& b) {
  return std::max(std::abs(a.std - b.std), std::abs(a.dual - b.dual));
}

// Greedy multiset match: largest distance between paired entries, or
// infinity on a size mismatch.
double multiset_gap(std::vector<DualComplex> got, std::vector<DualComplex> want) {
  if (got.size() != want.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const DualComplex& w : want) {
    auto it = std::min_element(got.begin(), got.end(),
                               [&](const DualComplex& x, const DualComplex& y) { return dual_dist(x, w) < dual_dist(y, w); });
    worst = std::max(worst, dual_dist(*it, w));
    got.erase(it);
  }
  return worst;
}

// --- 1 ---------------------------------------------------------------------

Verdict c1() {
  const EigenReport r = eig_all(kEx1);
  std::vector<double> us;
  for (int i = 0; i < 201; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    const EigenReport again = eig_all(kEx1);
    const auto t1 = std::chrono::steady_clock::now();
    if (!again.empty()) return {false, "repeat run found an eigenvalue"};
    us.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
  }
  std::sort(us.begin(), us.end());
  const double median = us[us.size() / 2];
  const bool ok = r.empty() && r.classes.size() == 1 && r.classes[0].regime == Regime::None && median < 1000.0;
  return {ok, "no eigenvalue; median runtime " + fmt("%.1f us", median)};
}

// --- 2 ---------------------------------------------------------------------

Verdict c2() {
  const EigenReport r = eig_all(kEx2);
  if (r.classes.size() != 1 || r.classes[0].regime != Regime::Infinite || !r.classes[0].family) {
    return {false, "expected a single infinite family"};
  }
  if (std::abs(r.classes[0].lambda_s - 1.0) > 1e-12) return {false, "lambda_s != 1"};
  for (Complex ld : {Complex(0), Complex(1), Complex(1, 1)}) {
    const DCVector x = r.classes[0].family->eigenvector_at(ld);
    if (!verify_eigenpair(kEx2, {1.0, ld}, x, 1e-10)) return {false, "eigenpair fails verification"};
  }
  return {true, "infinite family at 1; lambda_d in {0, 1, 1+i} verified at 1e-10"};
}

// --- 3 ---------------------------------------------------------------------

Verdict c3() {
  const EigenReport r = eig_all(kEx3);
  const auto pairs = r.finite_pairs();
  const bool one = !r.any_none() && !r.any_infinite() && pairs.size() == 1 && dual_dist(pairs[0].value, {1.0, 1.0}) <= 1e-12;
  const bool diag = is_diagonalizable(kEx3).diagonalizable;
  return {one && !diag, std::string("single eigenvalue 1+eps: ") + (one ? "yes" : "no") + "; diagonalizable: " +
                            (diag ? "yes" : "no")};
}

// --- 4 ---------------------------------------------------------------------

Verdict c4() {
  std::vector<DualComplex> values;
  for (const Eigenpair& p : eig_all(kEx4).finite_pairs()) values.push_back(p.value);
  const double gap = multiset_gap(values, {{1.0, 1.0}, {2.0, 1.0}});
  const DualJordanForm f = jordan_diag_standard(kEx4);
  const double jd = cx::max_abs(CMatrix(f.j.dual() - real({1, 1, 0, 0, 1, 0, 0, 0, 1}, 3)));
  const double pd = cx::max_abs(CMatrix(f.p.dual() - real({0, 0, 1, 0, 0, 0, -1, 0, 0}, 3)));
  const double ps = cx::max_abs(CMatrix(f.p.std() - CMatrix::Identity(3, 3)));
  const bool diag = is_diagonalizable(kEx4).diagonalizable;
  const bool ok = gap <= 1e-10 && jd <= 1e-10 && pd <= 1e-10 && ps <= 1e-10 && !diag;
  return {ok, "eigenvalue gap " + fmt("%.1e", gap) + ", J_d err " + fmt("%.1e", jd) + ", P_d err " + fmt("%.1e", pd) +
                  ", diagonalizable " + (diag ? "yes" : "no")};
}

// --- 5 ---------------------------------------------------------------------

Verdict c5() {
  const DualJordanForm f = jordan_diag_standard(kEx5);
  const double jd = cx::max_abs(CMatrix(f.j.dual() - CMatrix::Identity(3, 3)));
  const Diagonalization d = is_diagonalizable(kEx5);
  const double residual = d.diagonalizable ? fro(kEx5 - d.p * d.d * inverse(d.p)) : 1.0;
  const bool ok = jd <= 1e-10 && d.diagonalizable && residual <= 1e-10;
  return {ok, "J_d err " + fmt("%.1e", jd) + ", |A - P D P^-1| " + fmt("%.1e", residual)};
}

// --- 6 ---------------------------------------------------------------------

Verdict c6() {
  Rng rng(6006);
  std::uniform_int_distribution<int> size(2, 6), lam(-3, 3), coin(0, 1);
  int agree = 0, none = 0;
  for (int k = 0; k < 200; ++k) {
    const Index n = size(rng);
    const Complex ls(lam(rng), coin(rng) ? lam(rng) : 0);
    CMatrix ad = testing::random_int_matrix(rng, n, n, -2, 2);
    if (coin(rng)) ad(n - 1, 0) = 0.0;
    const DCMatrix a(cx::jordan_block(n, ls), ad);
    const Regime expected = ad(n - 1, 0) != 0.0 ? Regime::None : Regime::Infinite;
    const Regime jb = eig_jordan_block(a).regime;
    const EigenReport r = eig_all(a);
    if (r.classes.size() != 1) return {false, "eig_all split a single Jordan block"};
    if (jb == expected && r.classes[0].regime == expected) ++agree;
    if (expected == Regime::None) ++none;
  }
  return {agree == 200, std::to_string(agree) + "/200 agree (" + std::to_string(none) + " none, " +
                            std::to_string(200 - none) + " infinite)"};
}

// --- 7 ---------------------------------------------------------------------

// Block-scalar standard part; some dual diagonal blocks are defective
// triangular so chains occur.
DCMatrix block_scalar_input(Rng& rng, std::vector<StandardEigenvalue>& structure) {
  std::uniform_int_distribution<int> count(1, 3), mult(1, 3), coin(0, 3), v(-4, 4);
  structure.clear();
  const int t = count(rng);
  while (static_cast<int>(structure.size()) < t) {
    const Complex value(v(rng), v(rng));
    bool fresh = true;
    for (const auto& s : structure) fresh = fresh && s.value != value;
    if (fresh) structure.push_back({value, mult(rng)});
  }
  Index n = 0;
  for (const auto& s : structure) n += s.multiplicity;
  CMatrix as = CMatrix::Zero(n, n);
  CMatrix ad = testing::random_cmatrix(rng, n, n);
  Index off = 0;
  for (const auto& s : structure) {
    as.diagonal().segment(off, s.multiplicity).setConstant(s.value);
    if (coin(rng) == 0 && s.multiplicity > 1) {
      CMatrix tri = testing::random_int_matrix(rng, s.multiplicity, s.multiplicity, -2, 2).triangularView<Eigen::StrictlyUpper>();
      tri.diagonal().setConstant(static_cast<double>(v(rng)));
      ad.block(off, off, s.multiplicity, s.multiplicity) = tri;
    }
    off += s.multiplicity;
  }
  return {as, ad};
}

Verdict c7() {
  Rng rng(7007);
  double worst5 = 0.0, worst6 = 0.0, worst_rows = 0.0;
  int ok5 = 0, ok6 = 0;
  for (int k = 0; k < 200; ++k) {
    std::vector<StandardEigenvalue> structure;
    const DCMatrix a = block_scalar_input(rng, structure);
    DCMatrix target = a;
    DualJordanForm f;
    if (k % 2 == 0) {
      f = jordan_diag_standard(a, structure);
    } else {
      const Index n = a.rows();
      const DCMatrix q(testing::random_invertible(rng, n, 30.0), testing::random_cmatrix(rng, n, n));
      target = q * a * inverse(q);
      f = jordan_form_full(target).form;
    }
    const double r = fro(inverse(f.p) * target * f.p - f.j) / (1.0 + fro(target));
    worst5 = std::max(worst5, r);
    if (r <= 1e-8) ++ok5;
  }
  std::uniform_int_distribution<int> size(2, 6);
  for (int k = 0; k < 200; ++k) {
    const Index n = size(rng);
    const DCMatrix a(cx::jordan_block(n, testing::random_complex(rng)), testing::random_cmatrix(rng, n, n));
    const DualJordanForm f = jordan_block_standard(a);
    const DCMatrix jj = inverse(f.p) * a * f.p;
    const double r = fro(jj - f.j) / (1.0 + fro(a));
    const double rows = cx::max_abs(CMatrix(jj.dual().topRows(n - 1)));
    worst6 = std::max(worst6, r);
    worst_rows = std::max(worst_rows, rows);
    if (r <= 1e-8 && rows <= 1e-10 && f.last_row.front() == a.dual()(n - 1, 0)) ++ok6;
  }
  return {ok5 == 200 && ok6 == 200,
          "block-scalar " + std::to_string(ok5) + "/200 (worst " + fmt("%.1e", worst5) + "), Jordan-block " +
              std::to_string(ok6) + "/200 (worst " + fmt("%.1e", worst6) + ", off-last-row " + fmt("%.1e", worst_rows) + ")"};
}

// --- 8 ---------------------------------------------------------------------

DCMatrix hermitian_input(Rng& rng, Index n, int kind) {
  switch (kind) {
    case 0:
      return {testing::random_hermitian(rng, n), testing::random_hermitian(rng, n)};
    case 1: {
      // Repeated standard eigenvalues.
      const CMatrix u = testing::random_unitary(rng, n);
      CMatrix d = CMatrix::Zero(n, n);
      for (Index i = 0; i < n; ++i) d(i, i) = static_cast<double>(i / 2);
      return {u * d * u.adjoint(), testing::random_hermitian(rng, n)};
    }
    default: {
      // G G^* is positive semidefinite; a rank-deficient G_s gives 0 + 0 eps.
      CMatrix gs = testing::random_cmatrix(rng, n, n);
      if (kind == 3) gs.col(0).setZero();
      const CMatrix gd = testing::random_cmatrix(rng, n, n);
      return {gs * gs.adjoint(), gs * gd.adjoint() + gd * gs.adjoint()};
    }
  }
}

Verdict c8() {
  Rng rng(8008);
  std::uniform_int_distribution<int> size(1, 8);
  int ok = 0;
  double worst_imag = 0.0, worst_gram = 0.0, worst_fd = 0.0;
  std::string first_failure;
  for (int k = 0; k < 100; ++k) {
    const int kind = k % 4;
    const Index n = size(rng);
    const DCMatrix a = hermitian_input(rng, n, kind);
    const HermitianEigen h = hermitian_eig(a);
    bool good = static_cast<Index>(h.values.size()) == n && static_cast<Index>(h.vectors.size()) == n;
    double imag = 0.0, gram = 0.0;
    for (Index i = 0; good && i < n; ++i) {
      const DCVector& x = h.vectors[static_cast<std::size_t>(i)];
      const DualComplex rq = inner(x, a * x);
      imag = std::max({imag, std::abs(rq.std.imag()), std::abs(rq.dual.imag())});
      for (Index j = 0; j < n; ++j) {
        const DualComplex g = inner(x, h.vectors[static_cast<std::size_t>(j)]);
        gram = std::max(gram, dual_dist(g, DualComplex(i == j ? 1.0 : 0.0)));
      }
    }
    // Finite-difference oracle: eig(A_s + h A_d) ~ lambda_s + h lambda_d.
    const double step = 1e-7;
    Eigen::SelfAdjointEigenSolver<CMatrix> base(a.std()), moved(a.std() + step * a.dual());
    double fd = 0.0;
    for (Index i = 0; good && i < n; ++i) {
      const DualNumber v = h.values[static_cast<std::size_t>(i)];
      const double slope = (moved.eigenvalues()(i) - base.eigenvalues()(i)) / step;
      fd = std::max({fd, std::abs(v.std - base.eigenvalues()(i)) * 1e7, std::abs(v.dual - slope) / (1.0 + std::abs(slope))});
    }
    const bool all_pos = std::all_of(h.values.begin(), h.values.end(), [](DualNumber v) { return v > DualNumber(0.0); });
    const bool all_nonneg = std::all_of(h.values.begin(), h.values.end(), [](DualNumber v) { return v >= DualNumber(0.0); });
    const Definiteness expected =
        all_pos ? Definiteness::PositiveDefinite : all_nonneg ? Definiteness::PositiveSemidefinite : Definiteness::Indefinite;
    good = good && imag <= 1e-10 && gram <= 1e-8 && fd <= 1e-3 && h.definiteness == expected;
    if (kind >= 2) good = good && h.definiteness != Definiteness::Indefinite;
    if (kind == 3) good = good && h.definiteness == Definiteness::PositiveSemidefinite;
    worst_imag = std::max(worst_imag, imag);
    worst_gram = std::max(worst_gram, gram);
    worst_fd = std::max(worst_fd, fd);
    if (good) {
      ++ok;
    } else if (first_failure.empty()) {
      first_failure = "; first failure at case " + std::to_string(k);
    }
  }
  return {ok == 100, std::to_string(ok) + "/100 (imag " + fmt("%.1e", worst_imag) + ", gram " + fmt("%.1e", worst_gram) +
                         ", fd " + fmt("%.1e", worst_fd) + ")" + first_failure};
}

// --- 9 ---------------------------------------------------------------------

Verdict c9() {
  Rng rng(9009);
  std::uniform_int_distribution<int> size(2, 6), coin(0, 4);
  int ok = 0;
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Index n = size(rng);
    std::vector<DualComplex> d;
    for (Index i = 0; i < n; ++i) d.push_back({testing::random_complex(rng), testing::random_complex(rng)});
    if (coin(rng) == 0) d[1].std = d[0].std;  // repeated standard part, distinct dual parts
    const DCMatrix p(testing::random_invertible(rng, n, 100.0), testing::random_cmatrix(rng, n, n));
    const DCMatrix b = p * DCMatrix::diagonal(d) * inverse(p);
    std::vector<DualComplex> got;
    for (const Eigenpair& e : eig_all(b).finite_pairs()) got.push_back(e.value);
    const double gap = multiset_gap(got, d);
    worst = std::max(worst, gap);
    if (gap <= 1e-7 && is_diagonalizable(b).diagonalizable) ++ok;
  }
  return {ok == 100, std::to_string(ok) + "/100 (worst eigenvalue gap " + fmt("%.1e", worst) + ")"};
}

// --- 10 --------------------------------------------------------------------
// Grid-scan oracle: local minima of sigma_min(M(lambda)) on a grid over a
// disk that bounds the roots, refined by compass search.

double sigma_min(const StructuredPencil& p, Complex lambda) {
  Eigen::JacobiSVD<CMatrix> svd(p.at(lambda));
  return svd.singularValues()(svd.singularValues().size() - 1);
}

struct Scan {
  Regime regime = Regime::None;
  std::vector<Complex> roots;
};

// Compass search for a minimum of sigma_min inside the disk |lambda| <= limit.
Complex compass(const StructuredPencil& p, Complex start, double step, double limit) {
  Complex best = start;
  double value = sigma_min(p, best);
  const Complex dirs[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {0.7071, 0.7071}, {-0.7071, 0.7071}, {0.7071, -0.7071}, {-0.7071, -0.7071}};
  for (int iter = 0; iter < 5000 && step > 1e-14 * std::max(1.0, std::abs(best)); ++iter) {
    bool moved = false;
    for (Complex d : dirs) {
      const Complex trial = best + step * d;
      if (std::abs(trial) > limit) continue;
      const double v = sigma_min(p, trial);
      if (v < value) {
        value = v;
        best = trial;
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  return best;
}

// Starting points for refinement: the lowest local minima of sigma_min on a
// points x points grid over the square centred at `center`.
std::vector<Complex> grid_minima(const StructuredPencil& p, Complex center, double half, int points) {
  const double h = 2.0 * half / (points - 1);
  auto at = [&](int r, int col) { return center + Complex(-half + col * h, -half + r * h); };
  std::vector<double> f(static_cast<std::size_t>(points * points));
  for (int r = 0; r < points; ++r)
    for (int col = 0; col < points; ++col) f[r * points + col] = sigma_min(p, at(r, col));
  std::vector<std::pair<double, Complex>> minima;
  for (int r = 0; r < points; ++r)
    for (int col = 0; col < points; ++col) {
      const double v = f[r * points + col];
      bool minimum = true;
      for (int dr = -1; dr <= 1 && minimum; ++dr)
        for (int dc = -1; dc <= 1; ++dc) {
          const int rr = r + dr, cc = col + dc;
          if ((dr || dc) && rr >= 0 && rr < points && cc >= 0 && cc < points && f[rr * points + cc] < v) {
            minimum = false;
            break;
          }
        }
      if (minimum) minima.emplace_back(v, at(r, col));
    }
  // Plateaus can produce many non-strict minima; the lowest few dozen cover every root.
  std::sort(minima.begin(), minima.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  if (minima.size() > 40) minima.resize(40);
  std::vector<Complex> out;
  for (const auto& m : minima) out.push_back(m.second);
  return out;
}

Scan grid_scan(const StructuredPencil& p, Rng& rng) {
  Scan out;
  const CMatrix c = p.c();
  const double cscale = 1.0 + c.norm();
  const double radius = [&] {
    if (p.t == 0) return 1.0 + 1.5 * c.norm();
    Eigen::JacobiSVD<CMatrix> svd(p.c11, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    if (s(s.size() - 1) < 1e-8 * std::max(1.0, s(0))) return 10.0 * cscale;
    if (p.n0 == 0) return 1.0;
    const CMatrix schur = p.c00 - p.c01 * p.c11.inverse() * p.c10;
    return 1.0 + 1.5 * schur.operatorNorm();
  }();

  bool all_singular = true;
  for (int i = 0; i < 7; ++i) {
    const Complex z = testing::random_complex(rng, radius / 2);
    all_singular = all_singular && sigma_min(p, z) <= 1e-12 * cscale * std::max(1.0, std::abs(z));
  }
  if (all_singular) {
    out.regime = Regime::Infinite;
    return out;
  }

  const double h = 2.0 * radius / 100;
  const double floor = 1e-9 * cscale;
  auto add_roots = [&](Complex center, double half, int points) {
    std::vector<Complex> fresh;
    for (Complex start : grid_minima(p, center, half, points)) {
      const Complex z = compass(p, start, 2.0 * half / (points - 1), 1.5 * radius);
      if (sigma_min(p, z) > floor * std::max(1.0, std::abs(z))) continue;
      const bool seen = std::any_of(out.roots.begin(), out.roots.end(),
                                    [&](Complex w) { return std::abs(w - z) <= 1e-6 * std::max(1.0, std::abs(z)); });
      if (!seen) {
        out.roots.push_back(z);
        fresh.push_back(z);
      }
    }
    return fresh;
  };
  // Roots closer than a few grid cells share one coarse basin, so every root
  // found gets a finer local scan of its neighbourhood.
  std::vector<Complex> pending = add_roots(Complex{}, radius, 101);
  while (!pending.empty()) {
    const Complex z = pending.back();
    pending.pop_back();
    for (Complex w : add_roots(z, 3.0 * h, 41)) pending.push_back(w);
  }
  out.regime = out.roots.empty() ? Regime::None : Regime::Finite;
  return out;
}

StructuredPencil random_pencil(Rng& rng, int kind) {
  std::uniform_int_distribution<int> n0d(0, 4), td(0, 3), oned(1, 3);
  Index n0 = n0d(rng), t = td(rng);
  if (kind == 1 || kind == 2) t = oned(rng);
  if (kind == 2) n0 = std::min<Index>(t, 4);
  if (kind == 3) {
    n0 = 2 + n0d(rng) % 3;
    t = 0;
  }
  if (n0 + t == 0) n0 = 1;
  std::vector<Index> chains(static_cast<std::size_t>(t), 2);
  const Index n = n0 + 2 * t;
  // Embed the wanted C = W^T A_d Z into an otherwise random dual block.
  const StructuredPencil blank = build_structured_pencil(CMatrix::Zero(n, n), {n0, chains});
  CMatrix c = testing::random_cmatrix(rng, n0 + t, n0 + t);
  if (kind == 1) {
    c.col(n0 + oned(rng) % t).setZero();  // a vanishing column: singular for every lambda
  } else if (kind == 2) {
    c.bottomRightCorner(t, t).setZero();  // det M is a nonzero constant
  } else if (kind == 3) {
    const CMatrix q = testing::random_invertible(rng, n0, 10.0);
    CMatrix d = CMatrix::Zero(n0, n0);
    d.diagonal() = testing::random_cmatrix(rng, n0, 1);
    d(1, 1) = d(0, 0);
    d(0, 1) = oned(rng) == 1 ? 1.0 : 0.0;  // a double root, defective or not
    c = q * d * q.inverse();
  }
  CMatrix ad = testing::random_cmatrix(rng, n, n);
  ad += blank.w * (c - blank.w.transpose() * ad * blank.z) * blank.z.transpose();
  return build_structured_pencil(ad, {n0, chains});
}

Verdict c10() {
  Rng rng(10010);
  int ok = 0;
  int counts[3] = {0, 0, 0};
  double worst = 0.0;
  std::string first_failure;
  for (int k = 0; k < 100; ++k) {
    const int kind = k < 55 ? 0 : k < 70 ? 1 : k < 85 ? 2 : 3;
    const StructuredPencil p = random_pencil(rng, kind);
    const PencilSolution sol = structured_eigen_system(p);
    const Scan scan = grid_scan(p, rng);
    bool good = sol.regime == scan.regime && sol.roots.size() == scan.roots.size();
    for (std::size_t i = 0; good && i < scan.roots.size(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (const PencilRoot& r : sol.roots) best = std::min(best, std::abs(r.lambda_d - scan.roots[i]));
      const double rel = best / std::max(1.0, std::abs(scan.roots[i]));
      worst = std::max(worst, rel);
      good = rel <= 1e-6;
    }
    ++counts[static_cast<int>(scan.regime)];
    if (good) {
      ++ok;
    } else if (first_failure.empty()) {
      first_failure = "; first failure at case " + std::to_string(k) + " (solver " + std::to_string(sol.roots.size()) +
                      " roots, scan " + std::to_string(scan.roots.size()) + ")";
    }
  }
  return {ok == 100, std::to_string(ok) + "/100 (finite " + std::to_string(counts[0]) + ", none " + std::to_string(counts[1]) +
                         ", infinite " + std::to_string(counts[2]) + "; worst root gap " + fmt("%.1e", worst) + ")" +
                         first_failure};
}

// --- 11 --------------------------------------------------------------------

Verdict c11() {
  Rng rng(11011);
  std::uniform_int_distribution<int> size(1, 10);
  int ok = 0;
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const Index n = size(rng);
    const DCMatrix a(testing::random_invertible(rng, n, 1e3), testing::random_cmatrix(rng, n, n));
    const DCMatrix inv = inverse(a);
    const DCMatrix eye = DCMatrix::identity(n);
    const double r = std::max(fro(a * inv - eye), fro(inv * a - eye));
    worst = std::max(worst, r);
    if (r <= 1e-10) ++ok;
  }
  return {ok == 200, std::to_string(ok) + "/200 (worst " + fmt("%.1e", worst) + ")"};
}

// --- 12 --------------------------------------------------------------------

Verdict c12() {
  struct Case {
    const char* example;
    const char* verb;
    int status;
  };
  const Case cases[] = {{"example1", "eig", 1},    {"example1", "diag", 1},   {"example1", "jordan", 0},
                        {"example2", "eig", 0},    {"example2", "diag", 1},   {"example2", "jordan", 0},
                        {"example3", "eig", 0},    {"example3", "diag", 1},   {"example3", "jordan", 0},
                        {"example4", "eig", 0},    {"example4", "diag", 1},   {"example4", "jordan", 0},
                        {"example5", "eig", 0},    {"example5", "diag", 0},   {"example5", "jordan", 0},
                        {"singular", "invert", 3}};
  int ok = 0;
  std::string failed;
  for (const Case& c : cases) {
    const std::string input = std::string(DUALCX_FIXTURE_DIR) + "/" + c.example + ".json";
    const std::string base = std::string(DUALCX_CLI_PATH) + " " + c.verb + " " + input;
    const testing::Captured json = testing::run_command(base + " --format json 2>/dev/null");
    const testing::Captured text = testing::run_command(base + " 2>/dev/null");
    const std::string golden = testing::slurp(std::string(DUALCX_GOLDEN_DIR) + "/" + c.example + "_" + c.verb + ".json");
    if (json.status == c.status && text.status == c.status && !golden.empty() && json.out == golden) {
      ++ok;
    } else {
      failed += std::string(" ") + c.example + "/" + c.verb;
    }
  }
  const int total = static_cast<int>(std::size(cases));
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " golden reports and exit codes" +
                           (failed.empty() ? "" : ";" + failed)};
}

}  // namespace
}  // namespace dualcx

int main() {
  using dualcx::Verdict;
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"fixture example1: no eigenvalue, under 1 ms", dualcx::c1},
      {"fixture example2: infinite family, lambda_d free", dualcx::c2},
      {"fixture example3: single eigenvalue, not diagonalizable", dualcx::c3},
      {"fixture example4: eigenvalues, J_d and P_d", dualcx::c4},
      {"fixture example5: J_d = I, diagonalizable", dualcx::c5},
      {"Jordan-block standard part: none vs infinite sweep", dualcx::c6},
      {"Jordan form residuals", dualcx::c7},
      {"Hermitian eigen suite", dualcx::c8},
      {"diagonalizable by construction", dualcx::c9},
      {"structured pencil vs grid scan", dualcx::c10},
      {"inverse round trip", dualcx::c11},
      {"CLI golden reports", dualcx::c12},
  };
  int failures = 0;
  int id = 0;
  for (const auto& [name, check] : criteria) {
    ++id;
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %2d  %s: %s [%.2fs]\n", v.pass ? "PASS" : "FAIL", id, name, v.detail.c_str(), secs);
    std::fflush(stdout);
    failures += v.pass ? 0 : 1;
  }
  std::printf("%d/%d criteria passed\n", id - failures, id);
  return failures == 0 ? 0 : 1;
}

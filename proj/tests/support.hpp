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
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "dualcx/matrix.hpp"

namespace dualcx::testing {

using Rng = std::mt19937_64;

inline Complex random_complex(Rng& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  return {g(rng), g(rng)};
}

inline CMatrix random_cmatrix(Rng& rng, Index rows, Index cols, double scale = 1.0) {
  CMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = random_complex(rng, scale);
  return m;
}

inline CMatrix random_int_matrix(Rng& rng, Index rows, Index cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  CMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = static_cast<double>(d(rng));
  return m;
}

inline double condition(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& s = svd.singularValues();
  return s(0) / s(s.size() - 1);
}

/// Gaussian matrix redrawn until its condition number is below `max_cond`.
inline CMatrix random_invertible(Rng& rng, Index n, double max_cond = 1e3) {
  for (;;) {
    CMatrix m = random_cmatrix(rng, n, n);
    if (condition(m) < max_cond) return m;
  }
}

inline CMatrix random_hermitian(Rng& rng, Index n) {
  const CMatrix g = random_cmatrix(rng, n, n);
  return 0.5 * (g + g.adjoint());
}

inline CMatrix random_unitary(Rng& rng, Index n) {
  Eigen::HouseholderQR<CMatrix> qr(random_cmatrix(rng, n, n));
  return qr.householderQ() * CMatrix::Identity(n, n);
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Captured {
  int status = -1;
  std::string out;
};

/// Runs a shell command and captures stdout.
inline Captured run_command(const std::string& command) {
  Captured c;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return c;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) c.out.append(buf, got);
  const int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

}  // namespace dualcx::testing

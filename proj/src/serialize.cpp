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


#include "dualcx/serialize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "dualcx/error.hpp"

namespace dualcx::io {
namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

double number(const Json& j, const char* what) {
  if (!j.is_number()) fail(std::string(what) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(std::string(what) + ": non-finite value");
  return v;
}

Index dimension(const Json& j, const char* key) {
  if (!j.contains(key)) fail(std::string("missing \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(std::string("\"") + key + "\" must be a nonnegative integer");
  return static_cast<Index>(v.get<long long>());
}

Json complex_array(const CMatrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index k = 0; k < m.cols(); ++k) out.push_back(to_json(m(i, k)));
  return out;
}

CMatrix read_part(const Json& j, const char* key, Index rows, Index cols) {
  if (!j.contains(key)) fail(std::string("missing \"") + key + "\"");
  const Json& arr = j.at(key);
  if (!arr.is_array() || static_cast<Index>(arr.size()) != rows * cols) {
    fail(std::string("\"") + key + "\" must hold " + std::to_string(rows * cols) + " [re, im] pairs");
  }
  CMatrix out(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index k = 0; k < cols; ++k) {
      const Json& e = arr.at(static_cast<std::size_t>(i * cols + k));
      if (!e.is_array() || e.size() != 2) fail(std::string("\"") + key + "\" entries must be [re, im]");
      out(i, k) = Complex(number(e[0], key), number(e[1], key));
    }
  return out;
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const DualComplex& a) { return Json::array({a.std.real(), a.std.imag(), a.dual.real(), a.dual.imag()}); }

Json to_json(const DualNumber& a) { return Json::array({a.std, a.dual}); }

Json to_json(const DCMatrix& a) {
  Json out;
  out["rows"] = a.rows();
  out["cols"] = a.cols();
  out["standard"] = complex_array(a.std());
  out["dual"] = complex_array(a.dual());
  return out;
}

Json to_json(const DCVector& x) {
  Json out;
  out["dim"] = x.dim();
  out["standard"] = complex_array(x.std());
  out["dual"] = complex_array(x.dual());
  return out;
}

Json to_json(const EigenReport& report) {
  Json entries = Json::array();
  for (const EigenClass& c : report.classes) {
    Json base;
    base["lambda_s"] = to_json(c.lambda_s);
    base["blocks"] = {{"scalar", c.blocks.scalar_count}, {"chains", c.blocks.chains}};
    if (!c.diagnostics.empty()) base["diagnostics"] = c.diagnostics;
    switch (c.regime) {
      case Regime::Finite:
        for (const Eigenpair& p : c.pairs) {
          Json e = base;
          e["classification"] = "finite";
          e["lambda"] = to_json(p.value);
          e["eigenvector"] = to_json(p.vector);
          entries.push_back(std::move(e));
        }
        break;
      case Regime::Infinite: {
        Json e = base;
        e["classification"] = "infinite";
        e["lambda"] = to_json(DualComplex{c.lambda_s, Complex{}});
        e["lambda_d"] = "free";
        e["representative"] = to_json(c.family->representative());
        entries.push_back(std::move(e));
        break;
      }
      case Regime::None: {
        Json e = base;
        e["classification"] = "none";
        e["lambda"] = nullptr;
        e["lambda_d"] = nullptr;
        e["witness"] = c.witness;
        entries.push_back(std::move(e));
        break;
      }
    }
  }
  Json out;
  out["n"] = report.n;
  out["entries"] = std::move(entries);
  std::string verdict = "finite";
  if (report.empty()) {
    verdict = "no eigenvalue";
  } else if (report.any_infinite()) {
    verdict = report.finite_count() > 0 || report.any_none() ? "mixed" : "infinitely many eigenvalues";
  } else if (report.any_none()) {
    verdict = "mixed";
  }
  out["summary"] = {{"finite_count", report.finite_count()},
                    {"any_infinite", report.any_infinite()},
                    {"any_none", report.any_none()},
                    {"verdict", verdict}};
  return out;
}

Json to_json(const DualJordanForm& form) {
  Json out;
  out["kind"] = form.kind == JordanKind::DiagonalizableStandard ? "diagonalizable-standard" : "jordan-block-standard";
  out["J"] = to_json(form.j);
  out["P"] = to_json(form.p);
  Json blocks = Json::array();
  if (form.kind == JordanKind::DiagonalizableStandard) {
    for (const DualJordanBlock& b : form.blocks) {
      blocks.push_back({{"lambda", to_json(DualComplex{b.lambda_s, b.lambda_d})}, {"size", b.size}, {"offset", b.offset}});
    }
  } else {
    Json row = Json::array();
    for (Complex f : form.last_row) row.push_back(to_json(f));
    blocks.push_back({{"lambda_s", to_json(form.lambda_s)}, {"size", form.j.rows()}, {"last_row", std::move(row)}});
  }
  out["blocks"] = std::move(blocks);
  out["residual"] = form.residual;
  return out;
}

Json to_json(const FullJordan& full) {
  Json out = to_json(full.form);
  Json pairs = Json::array();
  for (const Eigenpair& p : full.eigenpairs) pairs.push_back({{"lambda", to_json(p.value)}, {"eigenvector", to_json(p.vector)}});
  out["eigenpairs"] = std::move(pairs);
  return out;
}

Json to_json(const Diagonalization& d) {
  Json out;
  out["diagonalizable"] = d.diagonalizable;
  out["reason"] = d.reason;
  out["corollary_agrees"] = d.corollary_agrees;
  if (d.diagonalizable) {
    out["P"] = to_json(d.p);
    out["D"] = to_json(d.d);
    out["residual"] = d.residual;
  }
  return out;
}

Json to_json(const HermitianEigen& h) {
  Json values = Json::array();
  Json vectors = Json::array();
  for (const DualNumber& v : h.values) values.push_back(to_json(v));
  for (const DCVector& x : h.vectors) vectors.push_back(to_json(x));
  Json out;
  out["eigenvalues"] = std::move(values);
  out["eigenvectors"] = std::move(vectors);
  out["definiteness"] = to_string(h.definiteness);
  return out;
}

Json to_json(const EigenpairCheck& c) {
  Json out;
  out["passed"] = c.passed();
  out["appreciable"] = c.appreciable;
  out["standard_ok"] = c.standard_ok;
  out["dual_ok"] = c.dual_ok;
  out["standard_residual"] = c.standard_residual;
  out["dual_residual"] = c.dual_residual;
  return out;
}

DualComplex scalar_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) fail("dual complex scalar must be [re_s, im_s, re_d, im_d]");
  return {Complex(number(j[0], "scalar"), number(j[1], "scalar")), Complex(number(j[2], "scalar"), number(j[3], "scalar"))};
}

DCMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) fail("matrix must be a JSON object");
  const Index rows = dimension(j, "rows");
  const Index cols = dimension(j, "cols");
  return {read_part(j, "standard", rows, cols), read_part(j, "dual", rows, cols)};
}

DCVector vector_from_json(const Json& j) {
  if (!j.is_object()) fail("vector must be a JSON object");
  const Index dim = dimension(j, "dim");
  return {read_part(j, "standard", dim, 1), read_part(j, "dual", dim, 1)};
}

}  // namespace dualcx::io

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


#include "dualcx/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "dualcx/error.hpp"
#include "dualcx/parallel.hpp"
#include "dualcx/serialize.hpp"

namespace dualcx::cli {
namespace {

using io::Json;

std::string fmt_real(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt_complex(Complex z) {
  if (z.imag() == 0.0) return fmt_real(z.real());
  if (z.real() == 0.0) return fmt_real(z.imag()) + "i";
  return "(" + fmt_real(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt_real(std::abs(z.imag())) + "i)";
}

std::string fmt_dual(const DualComplex& a) {
  if (a.dual.imag() == 0.0 && a.dual.real() < 0.0) return fmt_complex(a.std) + " - " + fmt_complex(-a.dual) + "·eps";
  return fmt_complex(a.std) + " + " + fmt_complex(a.dual) + "·eps";
}

std::string fmt_dual(const DualNumber& a) {
  return fmt_real(a.std) + (a.dual < 0 ? " - " : " + ") + fmt_real(std::abs(a.dual)) + "·eps";
}

void print_matrix(std::ostream& os, const std::string& name, const DCMatrix& m) {
  os << name << " =\n";
  for (Index i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (Index k = 0; k < m.cols(); ++k) os << (k ? ", " : "") << fmt_dual(m(i, k));
    os << "]\n";
  }
}

void print_vector(std::ostream& os, const std::string& indent, const DCVector& x) {
  os << indent << "[";
  for (Index i = 0; i < x.dim(); ++i) os << (i ? ", " : "") << fmt_dual(x[i]);
  os << "]\n";
}

// Report text plus exit status for one verb.
struct Outcome {
  int status = Ok;
  Json json;
  std::string text;
};

DCMatrix square_matrix(const Json& j) {
  DCMatrix m = io::matrix_from_json(j);
  if (!m.square()) throw Error(ErrorCode::ShapeMismatch, "input matrix is not square");
  return m;
}

void describe_eig(std::ostream& os, const EigenReport& r) {
  os << "n = " << r.n << "\n";
  for (const EigenClass& c : r.classes) {
    os << "lambda_s = " << fmt_complex(c.lambda_s) << " (" << c.blocks.scalar_count << " scalar block(s)";
    for (Index s : c.blocks.chains) os << ", chain " << s;
    os << "): ";
    switch (c.regime) {
      case Regime::Finite:
        os << c.pairs.size() << " eigenpair(s)\n";
        for (const Eigenpair& p : c.pairs) {
          os << "  lambda = " << fmt_dual(p.value) << "\n";
          print_vector(os, "    x = ", p.vector);
        }
        break;
      case Regime::Infinite:
        os << "infinitely many eigenvalues " << fmt_complex(c.lambda_s) << " + lambda_d·eps, lambda_d free\n";
        print_vector(os, "  x(lambda_d = 0) = ", c.family->representative());
        break;
      case Regime::None:
        os << "no eigenvalue (" << c.witness << ")\n";
        break;
    }
    for (const std::string& d : c.diagnostics) os << "  note: " << d << "\n";
  }
  if (r.empty()) {
    os << "result: no eigenvalue\n";
  } else if (r.any_infinite()) {
    os << "result: infinitely many eigenvalues\n";
  } else {
    os << "result: " << r.finite_count() << " eigenvalue(s)\n";
  }
}

Outcome do_eig(const Json& input, const Tolerances& tol) {
  Outcome o;
  std::ostringstream os;
  if (input.is_array()) {
    std::vector<DCMatrix> mats;
    for (const Json& j : input) mats.push_back(square_matrix(j));
    const std::vector<par::BatchItem> items = par::eig_all_batch(mats, tol);
    Json batch = Json::array();
    for (std::size_t i = 0; i < items.size(); ++i) {
      os << "# matrix " << i << "\n";
      const par::BatchItem& it = items[i];
      if (it.report) {
        describe_eig(os, *it.report);
        batch.push_back(io::to_json(*it.report));
        if (it.report->empty()) o.status = std::max(o.status, int{Negative});
      } else {
        os << "error: " << it.message << "\n";
        batch.push_back({{"error", to_string(*it.error)}, {"message", it.message}});
        o.status = std::max(o.status, int{NumericalFailure});
      }
    }
    o.json = std::move(batch);
  } else {
    const EigenReport r = eig_all(square_matrix(input), tol);
    describe_eig(os, r);
    o.json = io::to_json(r);
    if (r.empty()) o.status = Negative;
  }
  o.text = os.str();
  return o;
}

void describe_form(std::ostream& os, const DualJordanForm& f) {
  print_matrix(os, "J", f.j);
  print_matrix(os, "P", f.p);
  if (f.kind == JordanKind::DiagonalizableStandard) {
    for (const DualJordanBlock& b : f.blocks) {
      os << "block at " << b.offset << ": size " << b.size << ", lambda = " << fmt_dual({b.lambda_s, b.lambda_d}) << "\n";
    }
  } else {
    os << "last row of J_d:";
    for (Complex v : f.last_row) os << " " << fmt_complex(v);
    os << "\n";
  }
  os << "residual = " << fmt_real(f.residual) << "\n";
}

Outcome do_jordan(const Json& input, const Tolerances& tol) {
  Outcome o;
  std::ostringstream os;
  const DCMatrix b = square_matrix(input);
  const cx::JordanStructure js = cx::jordan(b.std(), tol);
  if (js.diagonalizable()) {
    const FullJordan full = jordan_form_full(b, tol);
    os << "standard part diagonalizable\n";
    describe_form(os, full.form);
    for (const Eigenpair& p : full.eigenpairs) {
      os << "eigenvalue " << fmt_dual(p.value) << "\n";
      print_vector(os, "  x = ", p.vector);
    }
    o.json = io::to_json(full);
  } else if (js.eigenvalues.size() == 1 && js.eigenvalues.front().scalar_count == 0 &&
             js.eigenvalues.front().chains.size() == 1) {
    const DualJordanForm form = jordan_block_form_full(b, tol);
    os << "standard part is a single Jordan block\n";
    describe_form(os, form);
    o.json = io::to_json(form);
  } else {
    const std::string note = "no Jordan form construction applies to this standard part; eigenvalue classification only";
    const EigenReport r = eig_all(b, tol);
    os << "note: " << note << "\n";
    describe_eig(os, r);
    o.json = {{"note", note}, {"eig", io::to_json(r)}};
    if (r.empty()) o.status = Negative;
  }
  o.text = os.str();
  return o;
}

Outcome do_diag(const Json& input, const Tolerances& tol) {
  Outcome o;
  std::ostringstream os;
  const Diagonalization d = is_diagonalizable(square_matrix(input), tol);
  if (d.diagonalizable) {
    os << "diagonalizable\n";
    print_matrix(os, "P", d.p);
    print_matrix(os, "D", d.d);
    os << "residual = " << fmt_real(d.residual) << "\n";
  } else {
    os << "not diagonalizable: " << d.reason << "\n";
    o.status = Negative;
  }
  o.json = io::to_json(d);
  o.text = os.str();
  return o;
}

Outcome do_invert(const Json& input, const Tolerances& tol) {
  Outcome o;
  std::ostringstream os;
  const DCMatrix inv = inverse(square_matrix(input), tol);
  print_matrix(os, "inverse", inv);
  o.json = io::to_json(inv);
  o.text = os.str();
  return o;
}

Outcome do_verify(const Json& input, const Tolerances& tol) {
  Outcome o;
  if (!input.is_object() || !input.contains("matrix") || !input.contains("lambda") || !input.contains("vector")) {
    throw Error(ErrorCode::ParseError, "verify input needs \"matrix\", \"lambda\" and \"vector\"");
  }
  const DCMatrix a = square_matrix(input.at("matrix"));
  const DualComplex lambda = io::scalar_from_json(input.at("lambda"));
  const DCVector x = io::vector_from_json(input.at("vector"));
  if (x.dim() != a.rows()) throw Error(ErrorCode::ShapeMismatch, "vector dimension differs from the matrix");
  const EigenpairCheck c = verify_eigenpair(a, lambda, x, eigenpair_tolerance(tol));
  o.text = (c ? "eigenpair verified\n" : "not an eigenpair: " + c.describe() + "\n");
  o.json = io::to_json(c);
  o.status = c ? Ok : Negative;
  return o;
}

Outcome do_hermitian(const Json& input, const Tolerances& tol) {
  Outcome o;
  std::ostringstream os;
  const DCMatrix a = square_matrix(input);
  if (!is_hermitian(a, tol)) {
    o.text = "not Hermitian\n";
    o.json = {{"hermitian", false}};
    o.status = Negative;
    return o;
  }
  const HermitianEigen h = hermitian_eig(a, tol);
  for (std::size_t i = 0; i < h.values.size(); ++i) {
    os << "lambda = " << fmt_dual(h.values[i]) << "\n";
    print_vector(os, "  x = ", h.vectors[i]);
  }
  os << to_string(h.definiteness) << "\n";
  o.json = io::to_json(h);
  o.json["hermitian"] = true;
  o.text = os.str();
  return o;
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::BadBlockStructure:
      return InputError;
    default:
      return NumericalFailure;
  }
}

}  // namespace

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  const bool json = cmd.format == "json";
  if (!json && cmd.format != "text") {
    err << "error: unknown format '" << cmd.format << "'\n";
    return InputError;
  }
  Outcome o;
  try {
    const Json input = io::read_file(cmd.input);
    if (cmd.verb == "eig") {
      o = do_eig(input, cmd.tol);
    } else if (cmd.verb == "jordan") {
      o = do_jordan(input, cmd.tol);
    } else if (cmd.verb == "diag") {
      o = do_diag(input, cmd.tol);
    } else if (cmd.verb == "invert") {
      o = do_invert(input, cmd.tol);
    } else if (cmd.verb == "verify") {
      o = do_verify(input, cmd.tol);
    } else if (cmd.verb == "hermitian") {
      o = do_hermitian(input, cmd.tol);
    } else {
      err << "error: unknown verb '" << cmd.verb << "'\n";
      return InputError;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    o.status = status_for(e.code());
    o.json = {{"error", to_string(e.code())}, {"message", e.what()}};
    o.text.clear();
    if (!json) {
      return o.status;
    }
  }

  std::ofstream file;
  if (!cmd.out.empty()) {
    file.open(cmd.out);
    if (!file) {
      err << "error: cannot write " << cmd.out << "\n";
      return InputError;
    }
  }
  std::ostream& dest = cmd.out.empty() ? out : file;
  if (json) {
    Json doc;
    doc["verb"] = cmd.verb;
    doc["status"] = o.status;
    doc["result"] = std::move(o.json);
    dest << doc.dump(2) << "\n";
  } else {
    dest << o.text;
  }
  return o.status;
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Dual complex matrix eigenvalues, Jordan forms and inverses"};
  Command cmd;
  app.add_option("verb", cmd.verb, "eig | jordan | diag | invert | verify | hermitian")
      ->required()
      ->check(CLI::IsMember({"eig", "jordan", "diag", "invert", "verify", "hermitian"}));
  app.add_option("input", cmd.input, "input JSON file")->required();
  app.add_option("--format", cmd.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tol-abs", cmd.tol.abs, "absolute tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-rank", cmd.tol.rank, "relative rank tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-cluster", cmd.tol.cluster, "eigenvalue clustering tolerance")->check(CLI::PositiveNumber);
  app.add_option("--out", cmd.out, "write the report to FILE");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Ok : InputError;
  }
  return run(cmd, std::cout, std::cerr);
}

}  // namespace dualcx::cli

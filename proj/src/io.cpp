// Copyright 2026 The leibniz-bimod Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "leibniz/io.hpp"

#include <fstream>
#include <sstream>

namespace leibniz {

InputError::InputError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what
                              : what),
      line_(line),
      column_(column) {}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto pos = msg.find("parse error"); pos != std::string::npos) msg = msg.substr(pos);
    throw InputError(msg, line, col);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

namespace {

Scalar scalar_from_json(const Json& j, const FieldSpec& f) {
  if (j.is_string()) return f.parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  throw InputError("scalar must be a string like \"3/4\" or an integer, got " + j.dump());
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

FieldSpec field_from_json(const Json& j) {
  if (!j.contains("field")) return FieldSpec::rationals();
  if (!j.at("field").is_string()) throw InputError("\"field\" must be \"Q\" or \"Fp:<p>\"");
  return FieldSpec::parse(j.at("field").get<std::string>());
}

}  // namespace

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Json matrix_to_json(const MatrixX& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixX matrix_from_json(const Json& j, const FieldSpec& f, Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows)
    throw InputError("expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix, got " + j.dump());
  MatrixX m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw InputError("matrix row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (Index c = 0; c < cols; ++c) m(i, c) = scalar_from_json(row[static_cast<std::size_t>(c)], f);
  }
  return m;
}

Json subspace_to_json(const Subspace& s) { return matrix_to_json(s.basis()); }

Json algebra_to_json(const LeibnizAlgebra& a) {
  Json j;
  j["field"] = a.field().to_string();
  j["basis"] = a.basis_names();
  Json prods = Json::array();
  for (Index i = 0; i < a.dim(); ++i)
    for (Index k = 0; k < a.dim(); ++k) {
      Json coords = Json::object();
      for (Index c = 0; c < a.dim(); ++c)
        if (!a.c(i, k, c).is_zero()) coords[a.basis_names()[static_cast<std::size_t>(c)]] = scalar_to_json(a.c(i, k, c));
      if (!coords.empty())
        prods.push_back(Json::array({a.basis_names()[static_cast<std::size_t>(i)],
                                     a.basis_names()[static_cast<std::size_t>(k)], coords}));
    }
  j["products"] = std::move(prods);
  return j;
}

LeibnizAlgebra algebra_from_json(const Json& j) {
  const FieldSpec f = field_from_json(j);
  const Json& basis = require(j, "basis");
  if (!basis.is_array()) throw InputError("\"basis\" must be an array of names");
  std::vector<std::string> names;
  for (const auto& b : basis) {
    if (!b.is_string()) throw InputError("basis names must be strings");
    names.push_back(b.get<std::string>());
  }
  const Index n = static_cast<Index>(names.size());
  auto index = [&](const Json& name) {
    if (!name.is_string()) throw InputError("expected a basis name, got " + name.dump());
    for (Index i = 0; i < n; ++i)
      if (names[static_cast<std::size_t>(i)] == name.get<std::string>()) return i;
    throw InputError("unknown basis element " + name.dump());
  };
  std::vector<std::vector<VectorX>> table(static_cast<std::size_t>(n),
                                          std::vector<VectorX>(static_cast<std::size_t>(n), VectorX::Constant(n, f.zero())));
  if (j.contains("products")) {
    for (const auto& p : j.at("products")) {
      if (!p.is_array() || p.size() != 3 || !p[2].is_object())
        throw InputError("product entries look like [\"x\", \"y\", {\"z\": \"1\"}], got " + p.dump());
      VectorX& v = table[static_cast<std::size_t>(index(p[0]))][static_cast<std::size_t>(index(p[1]))];
      for (const auto& [name, c] : p[2].items()) v(index(Json(name))) += scalar_from_json(c, f);
    }
  }
  LeibnizAlgebra a(f, names, table);
  if (auto t = validate_left_leibniz(a)) {
    auto nm = [&](Index i) { return names[static_cast<std::size_t>(i)]; };
    throw InputError("not a left Leibniz algebra: x(yz) = (xy)z + y(xz) fails at (" + nm(t->i) + ", " + nm(t->j) +
                     ", " + nm(t->k) + ")");
  }
  return a;
}

Json bimodule_to_json(const Bimodule& m) {
  Json j;
  j["field"] = m.field().to_string();
  j["algebra"] = algebra_to_json(m.algebra());
  j["dim"] = m.dim();
  Json l = Json::object(), r = Json::object();
  const auto& names = m.algebra().basis_names();
  for (Index i = 0; i < m.algebra_dim(); ++i) {
    l[names[static_cast<std::size_t>(i)]] = matrix_to_json(m.lambda(i));
    r[names[static_cast<std::size_t>(i)]] = matrix_to_json(m.rho(i));
  }
  j["lambda"] = std::move(l);
  j["rho"] = std::move(r);
  return j;
}

Bimodule bimodule_from_json(const Json& j, AlgebraPtr algebra) {
  const FieldSpec f = field_from_json(j);
  if (j.contains("algebra")) {
    const Json& a = j.at("algebra");
    AlgebraPtr given;
    if (a.is_string()) {
      given = share(builtin_algebra(a.get<std::string>(), f));
    } else {
      Json aj = a;
      if (!aj.contains("field")) aj["field"] = f.to_string();
      given = share(algebra_from_json(aj));
    }
    if (algebra && !(*algebra == *given)) throw InputError("bimodule refers to a different algebra than the one supplied");
    if (!algebra) algebra = given;
  }
  if (!algebra) throw InputError("bimodule needs an \"algebra\" (object or builtin name)");
  if (!(algebra->field() == f) && j.contains("field"))
    throw InputError("bimodule field " + f.to_string() + " differs from algebra field " + algebra->field().to_string());
  const Json& dj = require(j, "dim");
  if (!dj.is_number_integer() || dj.get<long long>() < 0) throw InputError("\"dim\" must be a non-negative integer");
  const Index d = dj.get<Index>();
  const FieldSpec& af = algebra->field();
  std::vector<MatrixX> lambda(static_cast<std::size_t>(algebra->dim()), MatrixX::Constant(d, d, af.zero()));
  std::vector<MatrixX> rho = lambda;
  auto read = [&](const char* key, std::vector<MatrixX>& out) {
    if (!j.contains(key)) return;
    const Json& ops = j.at(key);
    if (ops.is_array()) {
      if (static_cast<Index>(ops.size()) != algebra->dim())
        throw InputError(std::string("\"") + key + "\" lists " + std::to_string(ops.size()) + " operators but the algebra has dim " +
                         std::to_string(algebra->dim()));
      for (std::size_t i = 0; i < ops.size(); ++i) out[i] = matrix_from_json(ops[i], af, d, d);
    } else if (ops.is_object()) {
      for (const auto& [name, mj] : ops.items()) {
        Index i = -1;
        try {
          i = algebra->index_of(name);
        } catch (const std::exception&) {
          throw InputError(std::string("\"") + key + "\": unknown basis element \"" + name + "\"");
        }
        out[static_cast<std::size_t>(i)] = matrix_from_json(mj, af, d, d);
      }
    } else {
      throw InputError(std::string("\"") + key + "\" must be an object or an array of matrices");
    }
  };
  read("lambda", lambda);
  read("rho", rho);
  return Bimodule(algebra, d, std::move(lambda), std::move(rho));
}

Json gr_to_json(const GrElement& g) {
  Json j = Json::object();
  for (const auto& [l, c] : g) j[l.to_string()] = c;
  return j;
}

GrElement gr_from_json(const FusionRule& r, const Json& j) {
  if (j.is_string()) return parse_gr_element(r, j.get<std::string>());
  if (!j.is_object()) throw InputError("Gr element must be an object {label: coefficient} or an expression string");
  GrElement g;
  for (const auto& [label, c] : j.items()) {
    if (!c.is_number_integer()) throw InputError("coefficient of " + label + " must be an integer");
    g = gr_add(g, parse_gr_element(r, label), c.get<long long>());
  }
  return g;
}

}  // namespace leibniz

#include "quadheis/io.hpp"

#include <cmath>
#include <cstdio>

namespace quadheis {

namespace {

Json coords_json(const Coords& k, const char* kind) {
  Json j;
  j["kind"] = kind;
  j["dim"] = k.dim();
  j["x"] = to_json(k.x);
  j["A"] = to_json(k.A);
  j["B"] = to_json(k.B);
  j["C"] = to_json(k.C);
  return j;
}

template <typename K>
K coords_from_json(const Json& j, const char* kind) {
  if (!j.is_object()) throw InputError("coordinates must be an object");
  if (j.contains("kind") && j["kind"] != kind)
    throw InputError(std::string("expected coordinates of kind '") + kind + "'");
  const CMatrix A = matrix_from_json(field(j, "A"));
  const CMatrix B = matrix_from_json(field(j, "B"));
  const CMatrix C = matrix_from_json(field(j, "C"));
  if (A.rows() != B.rows() || B.rows() != C.rows())
    throw InputError("coordinate matrices differ in dimension");
  if (j.contains("dim") && j["dim"] != B.rows()) throw InputError("dim does not match matrices");
  const cplx x = j.contains("x") ? complex_from_json(j["x"]) : cplx(0.0);
  return make_coords<K>(x, A, B, C);
}

double finite_number(const Json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(std::string(what) + " must be finite");
  return v;
}

void dump_into(const Json& j, int indent, int depth, std::string& out) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump_into(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Leaf arrays (numbers only) stay on one line.
      bool leaf = true;
      for (const auto& e : j) leaf = leaf && e.is_primitive();
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += indent >= 0 && leaf ? ", " : ",";
        first = false;
        if (!leaf) newline(depth + 1);
        dump_into(e, indent, depth + 1, out);
      }
      if (!leaf) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

Json to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CMatrix& M) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    Json rr = Json::array(), ri = Json::array();
    for (Eigen::Index k = 0; k < M.cols(); ++k) {
      rr.push_back(M(i, k).real());
      ri.push_back(M(i, k).imag());
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  Json j;
  j["dim"] = M.rows();
  j["re"] = re;
  j["im"] = im;
  return j;
}

Json to_json(const CVector& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(to_json(v(i)));
  return j;
}

Json to_json(const QuadElement& E) {
  Json j;
  j["dim"] = E.dim();
  j["c"] = to_json(E.c);
  j["A"] = to_json(E.A);
  j["B"] = to_json(E.B);
  j["C"] = to_json(E.C);
  return j;
}

Json to_json(const FirstKindCoords& w) { return coords_json(w, "first"); }
Json to_json(const SecondKindCoords& g) { return coords_json(g, "second"); }

Json to_json(const BoundReport& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["sector"] = r.sector;
  j["analytic_bound"] = r.analytic_bound;
  j["measured_norm"] = r.measured_norm;
  j["satisfied"] = r.satisfied;
  return j;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j[key];
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

double number_field(const Json& j, const char* key) { return finite_number(field(j, key), key); }

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {finite_number(j, "complex"), 0.0};
  if (!j.is_array() || j.size() != 2) throw InputError("complex numbers are [re, im] pairs");
  return {finite_number(j[0], "re"), finite_number(j[1], "im")};
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("matrix must be an object {dim, re, im}");
  const Json& re = field(j, "re");
  if (!re.is_array()) throw InputError("matrix 're' must be an array of rows");
  const auto n = static_cast<Eigen::Index>(re.size());
  if (j.contains("dim") && (!j["dim"].is_number_integer() || j["dim"].get<Eigen::Index>() != n))
    throw InputError("matrix 'dim' does not match rows");
  if (n == 0) throw InputError("matrix must have dim >= 1");
  const bool has_im = j.contains("im");
  const Json* im = has_im ? &j["im"] : nullptr;
  if (has_im && (!im->is_array() || static_cast<Eigen::Index>(im->size()) != n))
    throw InputError("matrix 'im' must match 're'");
  CMatrix M(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = re[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw InputError("matrix rows must have length dim");
    if (has_im && (!(*im)[i].is_array() || static_cast<Eigen::Index>((*im)[i].size()) != n))
      throw InputError("matrix 'im' rows must have length dim");
    for (Eigen::Index k = 0; k < n; ++k)
      M(i, k) = cplx(finite_number(row[k], "entry"),
                     has_im ? finite_number((*im)[i][k], "entry") : 0.0);
  }
  return M;
}

CVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("state must be an array of [re, im]");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

QuadElement element_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("element must be an object");
  const CMatrix A = matrix_from_json(field(j, "A"));
  const CMatrix B = matrix_from_json(field(j, "B"));
  const CMatrix C = matrix_from_json(field(j, "C"));
  if (A.rows() != B.rows() || B.rows() != C.rows()) throw InputError("element matrices differ in dimension");
  if (j.contains("dim") && j["dim"] != B.rows()) throw InputError("dim does not match matrices");
  const cplx c = j.contains("c") ? complex_from_json(j["c"]) : cplx(0.0);
  return make_element(c, A, B, C);
}

FirstKindCoords first_from_json(const Json& j) { return coords_from_json<FirstKindCoords>(j, "first"); }
SecondKindCoords second_from_json(const Json& j) { return coords_from_json<SecondKindCoords>(j, "second"); }

Observable observable_from_json(const Json& j) {
  const double lambda = j.contains("lambda") ? finite_number(j["lambda"], "lambda") : 0.0;
  const CMatrix A = matrix_from_json(field(j, "A"));
  const CMatrix B = matrix_from_json(field(j, "B"));
  if (A.rows() != B.rows()) throw InputError("observable matrices differ in dimension");
  return make_observable(lambda, A, B);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j, int indent) {
  std::string out;
  dump_into(j, indent, 0, out);
  return out;
}

}  // namespace quadheis

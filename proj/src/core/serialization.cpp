#include "core/serialization.hpp"

#include <cstdio>

namespace halfline {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  fail(ErrorCode::ParseError, what);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    parse_fail(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

double require_number(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number()) parse_fail(std::string("\"") + key + "\" must be a number");
  return v.get<double>();
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) parse_fail("invalid JSON");
  return j;
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    parse_fail("complex values must be [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json vector_to_json(const Vector& v) {
  Json arr = Json::array();
  for (int k = 0; k < v.size(); ++k) arr.push_back(complex_to_json(v[k]));
  return arr;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("vector must be an array of [re, im] pairs");
  Vector v(static_cast<int>(j.size()));
  for (int k = 0; k < v.size(); ++k) v[k] = complex_from_json(j[k]);
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json j;
  j["dim"] = static_cast<int>(m.rows());
  Json entries = Json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) entries.push_back(complex_to_json(m(r, c)));
  j["matrix"] = entries;
  return j;
}

Matrix matrix_from_json(const Json& j) {
  const Json& dim_j = require(j, "dim");
  if (!dim_j.is_number_integer() || dim_j.get<int>() < 1)
    parse_fail("\"dim\" must be a positive integer");
  const int dim = dim_j.get<int>();
  const Json& entries = require(j, "matrix");
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(dim) * dim)
    parse_fail("\"matrix\" must hold dim*dim [re, im] pairs");
  Matrix m(dim, dim);
  std::size_t idx = 0;
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = complex_from_json(entries[idx++]);
  return m;
}

HermitianOperator hermitian_from_json(const Json& j) {
  return HermitianOperator::make(matrix_from_json(j));
}

Json hermitian_to_json(const HermitianOperator& A) {
  Json j = matrix_to_json(A.matrix());
  Json ev = Json::array();
  for (int k = 0; k < A.dim(); ++k) ev.push_back(A.eigenvalues()[k]);
  j["eigenvalues"] = ev;
  Json vecs = Json::array();
  for (int r = 0; r < A.dim(); ++r)
    for (int c = 0; c < A.dim(); ++c)
      vecs.push_back(complex_to_json(A.eigenvectors()(r, c)));
  j["eigenvectors"] = vecs;
  return j;
}

UnitaryParameter unitary_from_json(const Json& j) {
  return UnitaryParameter::make(matrix_from_json(j));
}

Json unitary_to_json(const UnitaryParameter& W) { return matrix_to_json(W.matrix()); }

Json halfline_to_json(const HalfLineFunction& f) {
  Json j;
  j["side"] = side_name(f.side());
  j["anchor"] = f.anchor();
  j["dim"] = f.dim();
  Json atoms = Json::array();
  for (const auto& atom : f.atoms()) {
    Json a;
    a["rate"] = complex_to_json(atom.rate);
    a["coeff"] = vector_to_json(atom.coeff);
    atoms.push_back(std::move(a));
  }
  j["atoms"] = atoms;
  return j;
}

HalfLineFunction halfline_from_json(const Json& j) {
  const Json& side_j = require(j, "side");
  if (!side_j.is_string()) parse_fail("\"side\" must be a string");
  const std::string side_str = side_j.get<std::string>();
  Side side;
  if (side_str == "left")
    side = Side::Left;
  else if (side_str == "right")
    side = Side::Right;
  else
    parse_fail("\"side\" must be \"left\" or \"right\"");
  const double anchor = require_number(j, "anchor");
  const Json& dim_j = require(j, "dim");
  if (!dim_j.is_number_integer() || dim_j.get<int>() < 1)
    parse_fail("\"dim\" must be a positive integer");
  HalfLineFunction f(side, anchor, dim_j.get<int>());
  const Json& atoms = require(j, "atoms");
  if (!atoms.is_array()) parse_fail("\"atoms\" must be an array");
  for (const Json& a : atoms) {
    const Complex rate = complex_from_json(require(a, "rate"));
    Vector coeff = vector_from_json(require(a, "coeff"));
    try {
      f.add_atom(rate, std::move(coeff));
    } catch (const Error& e) {
      parse_fail(std::string("bad atom: ") + e.what());
    }
  }
  return f;
}

Json twocomponent_to_json(const TwoComponentFunction& u) {
  Json j;
  j["left"] = halfline_to_json(u.left);
  j["right"] = halfline_to_json(u.right);
  return j;
}

TwoComponentFunction twocomponent_from_json(const Json& j) {
  HalfLineFunction left = halfline_from_json(require(j, "left"));
  HalfLineFunction right = halfline_from_json(require(j, "right"));
  try {
    return TwoComponentFunction(std::move(left), std::move(right));
  } catch (const Error& e) {
    parse_fail(std::string("bad two-component function: ") + e.what());
  }
}

Json resolvent_to_json(const ResolventOutput& out) {
  Json j;
  j["lambda"] = complex_to_json(out.lambda.lambda);
  j["residual"] = out.residual;
  j["bc_defect"] = out.bc_defect;
  j["u"] = twocomponent_to_json(out.u);
  if (out.f_star) j["f_star"] = vector_to_json(*out.f_star);
  if (out.g_star) j["g_star"] = vector_to_json(*out.g_star);
  return j;
}

Json boundary_pair_to_json(const BoundaryPair& p) {
  Json j;
  j["gamma1"] = vector_to_json(p.gamma1);
  j["gamma2"] = vector_to_json(p.gamma2);
  return j;
}

Json deficiency_to_json(const DeficiencyReport& left, const DeficiencyReport& right) {
  Json j;
  j["left"] = {{"m", left.m}, {"n", left.n}};
  j["right"] = {{"m", right.m}, {"n", right.n}};
  return j;
}

Json green_report_to_json(const GreenCheckReport& report) {
  Json j;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["max_defect"] = report.max_defect;
  j["mean_defect"] = report.mean_defect;
  j["tolerance"] = report.tolerance;
  j["pass"] = report.pass;
  return j;
}

Json point_spectrum_to_json(const PointSpectrumReport& report, int samples) {
  Json j;
  j["lambda"] = complex_to_json(report.lambda);
  j["norm_variation"] = report.norm_variation;
  j["not_eigenvalue"] = report.not_eigenvalue;
  j["samples"] = samples;
  return j;
}

Json scan_to_json(const std::vector<NormBoundReport>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["x"] = r.lambda.lambda.real();
    j["epsilon"] = r.lambda.lambda_i;
    j["witness_ratio"] = r.witness_ratio;
    j["bound"] = r.bound;
    j["satisfied"] = r.satisfied;
    j["residual"] = r.residual;
    j["bc_defect"] = r.bc_defect;
    arr.push_back(std::move(j));
  }
  return Json{{"rows", arr}};
}

std::string scan_to_csv(const std::vector<NormBoundReport>& rows) {
  std::string csv = "x,epsilon,witness_ratio,bound,satisfied\n";
  for (const auto& r : rows) {
    csv += format_double(r.lambda.lambda.real());
    csv += ',';
    csv += format_double(r.lambda.lambda_i);
    csv += ',';
    csv += format_double(r.witness_ratio);
    csv += ',';
    csv += format_double(r.bound);
    csv += ',';
    csv += r.satisfied ? '1' : '0';
    csv += '\n';
  }
  return csv;
}

std::string field_to_csv(const std::vector<FieldSample>& rows) {
  std::string csv = "t,x,re_u,im_u\n";
  for (const auto& r : rows) {
    csv += format_double(r.t);
    csv += ',';
    csv += format_double(r.x);
    csv += ',';
    csv += format_double(r.value.real());
    csv += ',';
    csv += format_double(r.value.imag());
    csv += '\n';
  }
  return csv;
}

}  // namespace halfline

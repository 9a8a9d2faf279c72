// Implements the C surface on top of the core library. Exceptions stop
// here: every entry point catches, records the message in a thread-local
// slot and returns a status code.

#include "halfline/halfline.h"

#include <cstring>
#include <new>
#include <string>

#include "core/serialization.hpp"

using namespace halfline;

struct hl_operator {
  HermitianOperator value;
};
struct hl_unitary {
  UnitaryParameter value;
};
struct hl_extension {
  ExtensionLW value;
};
struct hl_function {
  TwoComponentFunction value;
};

namespace {

thread_local std::string g_last_error;

hl_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return HL_ERR_INVALID_ARGUMENT;
    case ErrorCode::NotSquare: return HL_ERR_NOT_SQUARE;
    case ErrorCode::NotHermitian: return HL_ERR_NOT_HERMITIAN;
    case ErrorCode::NotUnitary: return HL_ERR_NOT_UNITARY;
    case ErrorCode::DimensionMismatch: return HL_ERR_DIMENSION_MISMATCH;
    case ErrorCode::SideMismatch: return HL_ERR_SIDE_MISMATCH;
    case ErrorCode::OutOfDomain: return HL_ERR_OUT_OF_DOMAIN;
    case ErrorCode::NotInDomain: return HL_ERR_NOT_IN_DOMAIN;
    case ErrorCode::TooCloseToRealAxis: return HL_ERR_TOO_CLOSE_TO_REAL_AXIS;
    case ErrorCode::DegenerateKernel: return HL_ERR_DEGENERATE_KERNEL;
    case ErrorCode::ZeroVector: return HL_ERR_ZERO_VECTOR;
    case ErrorCode::WrongHalfPlane: return HL_ERR_WRONG_HALF_PLANE;
    case ErrorCode::ParseError: return HL_ERR_PARSE;
  }
  return HL_ERR_INTERNAL;
}

template <typename Fn>
hl_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return HL_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HL_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return HL_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit_json(const Json& j, char** out) { *out = copy_string(j.dump()); }

void require_out(const void* p) {
  if (p == nullptr) fail(ErrorCode::InvalidArgument, "output pointer is null");
}

template <typename T>
const T& deref(const T* p) {
  if (p == nullptr) fail(ErrorCode::InvalidArgument, "handle is null");
  return *p;
}

const char* require_text(const char* p) {
  if (p == nullptr) fail(ErrorCode::InvalidArgument, "input text is null");
  return p;
}

Vector parse_f0(const char* f0_json, int dim) {
  if (f0_json == nullptr) return Vector::Ones(dim);
  Vector f0 = vector_from_json(parse_json(f0_json));
  if (f0.size() != dim)
    fail(ErrorCode::DimensionMismatch, "f0 length does not match dimension");
  return f0;
}

}  // namespace

extern "C" {

const char* hl_version(void) { return "0.1.0"; }

const char* hl_status_name(hl_status status) {
  switch (status) {
    case HL_OK: return "ok";
    case HL_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case HL_ERR_NOT_SQUARE: return "not-square";
    case HL_ERR_NOT_HERMITIAN: return "not-hermitian";
    case HL_ERR_NOT_UNITARY: return "not-unitary";
    case HL_ERR_DIMENSION_MISMATCH: return "dimension-mismatch";
    case HL_ERR_SIDE_MISMATCH: return "side-mismatch";
    case HL_ERR_OUT_OF_DOMAIN: return "out-of-domain";
    case HL_ERR_NOT_IN_DOMAIN: return "not-in-domain";
    case HL_ERR_TOO_CLOSE_TO_REAL_AXIS: return "too-close-to-real-axis";
    case HL_ERR_DEGENERATE_KERNEL: return "degenerate-kernel";
    case HL_ERR_ZERO_VECTOR: return "zero-vector";
    case HL_ERR_WRONG_HALF_PLANE: return "wrong-half-plane";
    case HL_ERR_PARSE: return "parse-error";
    case HL_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* hl_last_error(void) { return g_last_error.c_str(); }

void hl_string_free(char* s) { delete[] s; }

hl_status hl_hermitian_from_json(const char* json, hl_operator** out) {
  return guarded([&] {
    require_out(out);
    *out = new hl_operator{hermitian_from_json(parse_json(require_text(json)))};
  });
}

hl_status hl_hermitian_to_json(const hl_operator* A, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    emit_json(hermitian_to_json(deref(A).value), out_json);
  });
}

int hl_operator_dim(const hl_operator* A) {
  return A == nullptr ? 0 : A->value.dim();
}

hl_status hl_operator_eigenvalues(const hl_operator* A, double* eigenvalues, int len) {
  return guarded([&] {
    require_out(eigenvalues);
    const HermitianOperator& op = deref(A).value;
    if (len != op.dim())
      fail(ErrorCode::DimensionMismatch, "buffer length does not match dim");
    for (int k = 0; k < len; ++k) eigenvalues[k] = op.eigenvalues()[k];
  });
}

void hl_operator_free(hl_operator* A) { delete A; }

hl_status hl_unitary_from_json(const char* json, hl_unitary** out) {
  return guarded([&] {
    require_out(out);
    *out = new hl_unitary{unitary_from_json(parse_json(require_text(json)))};
  });
}

hl_status hl_unitary_phase(int dim, double phi, hl_unitary** out) {
  return guarded([&] {
    require_out(out);
    *out = new hl_unitary{UnitaryParameter::phase(dim, phi)};
  });
}

void hl_unitary_free(hl_unitary* W) { delete W; }

hl_status hl_extension_create(const hl_operator* A, const hl_unitary* W, double a,
                              double b, hl_extension** out) {
  return guarded([&] {
    require_out(out);
    *out = new hl_extension{ExtensionLW(deref(A).value, deref(W).value, a, b)};
  });
}

hl_status hl_neumann_extension(int n_modes, double phi, hl_extension** out) {
  return guarded([&] {
    require_out(out);
    NeumannConfig cfg;
    cfg.n_modes = n_modes;
    cfg.phi = phi;
    *out = new hl_extension{build_example_extension(cfg)};
  });
}

void hl_extension_free(hl_extension* ext) { delete ext; }

hl_status hl_function_from_json(const char* json, hl_function** out) {
  return guarded([&] {
    require_out(out);
    *out = new hl_function{twocomponent_from_json(parse_json(require_text(json)))};
  });
}

hl_status hl_function_to_json(const hl_function* u, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    emit_json(twocomponent_to_json(deref(u).value), out_json);
  });
}

hl_status hl_function_zero(int dim, double a, double b, hl_function** out) {
  return guarded([&] {
    require_out(out);
    *out = new hl_function{TwoComponentFunction::zero(dim, a, b)};
  });
}

hl_status hl_function_witness(const hl_extension* ext, double lambda_re,
                              double lambda_im, const char* f0_json, hl_function** out) {
  return guarded([&] {
    require_out(out);
    const ExtensionLW& e = deref(ext).value;
    const Vector f0 = parse_f0(f0_json, e.dim());
    *out = new hl_function{witness_function(SpectralPoint(lambda_re, lambda_im),
                                            e.coefficient(), f0, e.a(), e.b())};
  });
}

hl_status hl_function_norm_sq(const hl_function* u, double* out) {
  return guarded([&] {
    require_out(out);
    *out = l2_norm_sq(deref(u).value);
  });
}

hl_status hl_function_evaluate(const hl_function* u, double t, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    const TwoComponentFunction& f = deref(u).value;
    const Vector v = t <= f.a()   ? evaluate(f.left, t)
                     : t >= f.b() ? evaluate(f.right, t)
                                  : throw Error(ErrorCode::OutOfDomain,
                                                "t lies in the gap between the rays");
    emit_json(vector_to_json(v), out_json);
  });
}

void hl_function_free(hl_function* u) { delete u; }

hl_status hl_resolve(const hl_extension* ext, double lambda_re, double lambda_im,
                     const hl_function* f, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    const ResolventOutput out =
        resolve(deref(ext).value, SpectralPoint(lambda_re, lambda_im), deref(f).value);
    emit_json(resolvent_to_json(out), out_json);
  });
}

hl_status hl_green_check(const hl_operator* A, double a, double b, int trials,
                         uint64_t seed, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    emit_json(green_report_to_json(green_check(deref(A).value, a, b, trials, seed)),
              out_json);
  });
}

hl_status hl_deficiency(const hl_operator* A, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    const HermitianOperator& op = deref(A).value;
    emit_json(deficiency_to_json(deficiency_indices(Side::Left, op),
                                 deficiency_indices(Side::Right, op)),
              out_json);
  });
}

hl_status hl_boundary_map(const hl_function* u, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    emit_json(boundary_pair_to_json(boundary_map(deref(u).value)), out_json);
  });
}

hl_status hl_point_spectrum(const hl_extension* ext, double lambda_re, double lambda_im,
                            const char* f0_json, int samples, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    const ExtensionLW& e = deref(ext).value;
    const Vector f0 = parse_f0(f0_json, e.dim());
    const PointSpectrumReport report =
        point_spectrum_test(e, SpectralPoint(lambda_re, lambda_im), f0, samples);
    emit_json(point_spectrum_to_json(report, samples), out_json);
  });
}

hl_status hl_spectrum_scan(const hl_extension* ext, const double* xs, int n_x,
                           const double* epsilons, int n_eps, const char* f0_json,
                           char** out_csv, char** out_json) {
  return guarded([&] {
    if (n_x < 0 || n_eps < 0) fail(ErrorCode::InvalidArgument, "negative grid size");
    if ((xs == nullptr && n_x > 0) || (epsilons == nullptr && n_eps > 0))
      fail(ErrorCode::InvalidArgument, "grid pointer is null");
    const ExtensionLW& e = deref(ext).value;
    const Vector f0 = parse_f0(f0_json, e.dim());
    const std::vector<double> grid_x(xs, xs + n_x);
    const std::vector<double> grid_e(epsilons, epsilons + n_eps);
    const auto rows = continuous_spectrum_scan(e, grid_x, grid_e, f0);
    if (out_csv != nullptr) *out_csv = copy_string(scan_to_csv(rows));
    if (out_json != nullptr) emit_json(scan_to_json(rows), out_json);
  });
}

hl_status hl_field_csv(const hl_function* u, const double* t_points, int n_t, int n_x,
                       char** out_csv) {
  return guarded([&] {
    require_out(out_csv);
    if (t_points == nullptr || n_t < 1)
      fail(ErrorCode::InvalidArgument, "need at least one t sample");
    const std::vector<double> ts(t_points, t_points + n_t);
    *out_csv = copy_string(field_to_csv(sample_field(deref(u).value, ts, n_x)));
  });
}

}  // extern "C"

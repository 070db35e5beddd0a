#include "gqs/document.hpp"

#include <cmath>
#include <limits>

namespace gqs::doc {
namespace {

std::string at(const std::string& field, std::size_t i) {
  return field + "/" + std::to_string(i);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) throw DocumentError("", "document must be a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw DocumentError(std::string("/") + key, "missing field");
  return *it;
}

std::optional<std::string> label_of(const Json& j) {
  const auto it = j.find("label");
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw DocumentError("/label", "label must be a string");
  return it->get<std::string>();
}

int modes_of(const Json& j) {
  const Json& n = require(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 1) {
    throw DocumentError("/n", "mode count must be a positive integer");
  }
  return static_cast<int>(n.get<long long>());
}

}  // namespace

Json to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

Json to_json(Complex z) { return Json::array({to_json(z.real()), to_json(z.imag())}); }

Json to_json(const RealVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const RealMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(to_json(RealVector(m.row(i))));
  return out;
}

Json to_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out.push_back(to_json(ComplexVector(m.row(i).transpose())));
  }
  return out;
}

Json to_json(const Tolerances& tol) {
  return {{"sym_tol", tol.sym_tol},
          {"psd_tol", tol.psd_tol},
          {"commutator_tol", tol.commutator_tol},
          {"residual_tol", tol.residual_tol},
          {"eig_floor", tol.eig_floor}};
}

double real_from_json(const Json& j, const std::string& field) {
  if (j.is_number()) {
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw DocumentError(field, "non-finite number");
    return x;
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw DocumentError(field, "expected a number");
}

Complex complex_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) {
    throw DocumentError(field, "expected a complex number [re, im]");
  }
  return {real_from_json(j[0], at(field, 0)), real_from_json(j[1], at(field, 1))};
}

RealVector real_vector_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw DocumentError(field, "expected a list of numbers");
  RealVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = real_from_json(j[i], at(field, i));
  return v;
}

ComplexVector complex_vector_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw DocumentError(field, "expected a list of [re, im] pairs");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = complex_from_json(j[i], at(field, i));
  return v;
}

RealMatrix real_matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw DocumentError(field, "expected a nested list");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  RealMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw DocumentError(at(field, r), "row has " +
                                            std::to_string(j[r].is_array() ? j[r].size() : 0) +
                                            " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = real_from_json(j[r][c], at(at(field, r), c));
    }
  }
  return m;
}

ComplexMatrix complex_matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw DocumentError(field, "expected a nested list");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw DocumentError(at(field, r), "row length mismatch");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = complex_from_json(j[r][c], at(at(field, r), c));
    }
  }
  return m;
}

Json state_to_json(const GaussianState& state, const std::optional<std::string>& label) {
  Json j = {{"n", state.modes()}, {"mean", to_json(state.mean())}, {"cov", to_json(state.cov())}};
  if (label) j["label"] = *label;
  return j;
}

StateDocument state_from_json(const Json& j, const Tolerances& tol) {
  const int n = modes_of(j);
  const ComplexVector mean = complex_vector_from_json(require(j, "mean"), "/mean");
  if (mean.size() != n) {
    throw DocumentError("/mean", "expected " + std::to_string(n) + " entries, got " +
                                     std::to_string(mean.size()));
  }
  const RealMatrix cov = real_matrix_from_json(require(j, "cov"), "/cov");
  if (cov.rows() != 2 * n || cov.cols() != 2 * n) {
    throw DocumentError("/cov", "expected a " + std::to_string(2 * n) + "x" +
                                    std::to_string(2 * n) + " matrix");
  }
  return {GaussianState(mean, cov, tol), label_of(j)};
}

Json params_to_json(const ALambdaParams& params, const std::optional<std::string>& label) {
  Json j = {{"n", params.modes()},
            {"mu", to_json(params.mu)},
            {"A", to_json(params.A)},
            {"Lambda", to_json(params.Lambda)}};
  if (label) j["label"] = *label;
  return j;
}

ParamsDocument params_from_json(const Json& j) {
  const int n = modes_of(j);
  ParamsDocument d;
  d.params.mu = complex_vector_from_json(require(j, "mu"), "/mu");
  d.params.A = complex_matrix_from_json(require(j, "A"), "/A");
  d.params.Lambda = complex_matrix_from_json(require(j, "Lambda"), "/Lambda");
  if (d.params.mu.size() != n) throw DocumentError("/mu", "expected one entry per mode");
  if (d.params.A.rows() != n || d.params.A.cols() != n) {
    throw DocumentError("/A", "expected an n x n matrix");
  }
  if (d.params.Lambda.rows() != n || d.params.Lambda.cols() != n) {
    throw DocumentError("/Lambda", "expected an n x n matrix");
  }
  d.label = label_of(j);
  return d;
}

bool looks_like_params(const Json& j) { return j.is_object() && j.contains("A"); }

Json report_to_json(const ClassificationReport& report) {
  Json flags = {{"gaussian", report.is_gaussian},
                {"classical", report.is_classical},
                {"pun", report.is_pun},
                {"csgs", report.is_csgs},
                {"gauge_invariant", report.is_gauge_invariant},
                {"nonzero_mean", report.nonzero_mean}};
  Json residuals = Json::object();
  for (const auto& [name, value] : report.residuals) residuals[name] = to_json(value);

  const Certificates& c = report.certificates;
  Json certs = Json::object();
  if (c.U) certs["U"] = to_json(*c.U);
  if (c.D) certs["D"] = to_json(*c.D);
  if (c.s) certs["s"] = to_json(*c.s);
  if (c.nbar) certs["nbar"] = to_json(*c.nbar);
  if (c.sigma_R) certs["sigma_R"] = to_json(*c.sigma_R);
  if (c.K) {
    certs["K"] = to_json(*c.K);
    certs["K_min_eig"] = to_json(c.K_min_eig.value_or(0.0));
    certs["K_degenerate"] = c.K_degenerate;
  }
  if (c.csgs_N) certs["csgs_N"] = to_json(*c.csgs_N);
  if (c.params) certs["alambda"] = params_to_json(*c.params);

  Json sympl = Json::array();
  for (double d : report.sympl_eigs) sympl.push_back(to_json(d));
  return {{"flags", flags},
          {"residuals", residuals},
          {"sympl_eigs", sympl},
          {"certificates", certs}};
}

Json williamson_to_json(const WilliamsonDecomposition& w, double symplectic_residual,
                        double normal_form_residual, const ThermalParameters& thermal) {
  return {{"L", to_json(w.L)},
          {"d", to_json(w.d)},
          {"thermal", {{"s", to_json(thermal.s)}, {"nbar", to_json(thermal.nbar)}}},
          {"residuals",
           {{"symplectic", to_json(symplectic_residual)},
            {"normal_form", to_json(normal_form_residual)}}}};
}

Json pfunction_to_json(const PFunctionForm& form, const ClassicalNoise& noise) {
  Json j = {{"class_tag", std::string(to_string(form.class_tag))},
            {"N", to_json(form.N)},
            {"photon_numbers", to_json(form.photon_numbers())},
            {"mu_R", to_json(noise.mu_R)},
            {"sigma_R", to_json(noise.sigma_R)}};
  if (form.U) j["U"] = to_json(*form.U);
  if (form.L) j["L"] = to_json(*form.L);
  return j;
}

Json error_to_json(const Error& e) {
  Json j = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (e.residual()) j["residual"] = to_json(*e.residual());
  return j;
}

}  // namespace gqs::doc

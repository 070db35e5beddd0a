#pragma once

// Text document formats used by the command line tool. One JSON object per
// line; complex numbers are [re, im] pairs, matrices are nested row lists.
//
//   state:  {"n": 1, "mean": [[re, im]], "cov": [[...], [...]], "label": "..."}
//   params: {"n": 1, "mu": [[re, im]], "A": [[[re, im]]], "Lambda": [[[re, im]]]}
//
// Doubles are written with the shortest representation that round-trips.

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gqs/alambda.hpp"
#include "gqs/classical_rep.hpp"
#include "gqs/classify.hpp"
#include "gqs/gaussian_state.hpp"
#include "gqs/williamson.hpp"

namespace gqs::doc {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "gqs 1.0.0";

// Schema violation; field is a JSON-pointer-like path to the offending value.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

Json to_json(double x);  // non-finite values become "inf" / "-inf" / "nan"
Json to_json(Complex z);
Json to_json(const RealVector& v);
Json to_json(const ComplexVector& v);
Json to_json(const RealMatrix& m);
Json to_json(const ComplexMatrix& m);
Json to_json(const Tolerances& tol);

double real_from_json(const Json& j, const std::string& field);
Complex complex_from_json(const Json& j, const std::string& field);
RealVector real_vector_from_json(const Json& j, const std::string& field);
ComplexVector complex_vector_from_json(const Json& j, const std::string& field);
RealMatrix real_matrix_from_json(const Json& j, const std::string& field);
ComplexMatrix complex_matrix_from_json(const Json& j, const std::string& field);

struct StateDocument {
  GaussianState state;
  std::optional<std::string> label;
};

struct ParamsDocument {
  ALambdaParams params;
  std::optional<std::string> label;
};

Json state_to_json(const GaussianState& state, const std::optional<std::string>& label = {});
StateDocument state_from_json(const Json& j, const Tolerances& tol = {});

Json params_to_json(const ALambdaParams& params,
                    const std::optional<std::string>& label = {});
ParamsDocument params_from_json(const Json& j);

bool looks_like_params(const Json& j);

Json report_to_json(const ClassificationReport& report);
Json williamson_to_json(const WilliamsonDecomposition& w, double symplectic_residual,
                        double normal_form_residual, const ThermalParameters& thermal);
Json pfunction_to_json(const PFunctionForm& form, const ClassicalNoise& noise);
Json error_to_json(const Error& e);

}  // namespace gqs::doc

#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "srdmod/complex.hpp"
#include "srdmod/scalar.hpp"

namespace srdmod {

/// Malformed input file or document.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// {"n":4,"labels":["x","y","z","w"],"facets":[[0,1],[0,2],[1,2],[3]]};
/// labels are optional, vertices 0-based.
SimplicialComplex complex_from_json(const nlohmann::json& doc);
SimplicialComplex load_complex(const std::string& path);
/// Round-trips through complex_from_json.
nlohmann::json complex_to_json(const SimplicialComplex& cx);

nlohmann::json to_json(const ExponentVector& e);
nlohmann::json to_json(const Scalar& s);

}  // namespace srdmod

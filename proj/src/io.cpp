#include "srdmod/io.hpp"

#include <fstream>

namespace srdmod {

using nlohmann::json;

SimplicialComplex complex_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw InputError("complex document must be a JSON object");
    if (!doc.contains("n") || !doc.contains("facets")) throw InputError("complex needs \"n\" and \"facets\"");
    const auto n = doc.at("n").get<long long>();
    if (n < 0) throw InputError("\"n\" must be non-negative");
    if (n > SimplicialComplex::kMaxVertices)
      throw InputError("at most " + std::to_string(SimplicialComplex::kMaxVertices) + " vertices are supported");
    std::vector<VertexSet> facets;
    for (const auto& f : doc.at("facets")) {
      if (!f.is_array()) throw InputError("each facet must be an array of vertex indices");
      VertexSet s;
      for (const auto& v : f) {
        const auto i = v.get<long long>();
        if (i < 0 || i >= n) throw InputError("vertex " + std::to_string(i) + " out of range");
        s = s.with(static_cast<unsigned>(i));
      }
      facets.push_back(s);
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
      throw InputError("expected " + std::to_string(n) + " labels");
    return SimplicialComplex::from_facets(facets, static_cast<unsigned>(n), labels);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed complex: ") + e.what());
  }
}

SimplicialComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return complex_from_json(doc);
}

json complex_to_json(const SimplicialComplex& cx) {
  json facets = json::array();
  for (VertexSet f : cx.facets()) facets.push_back(f.members());
  return {{"n", cx.num_vertices()}, {"labels", cx.labels()}, {"facets", facets}};
}

json to_json(const ExponentVector& e) { return e.values(); }

json to_json(const Scalar& s) { return s.to_string(); }

}  // namespace srdmod

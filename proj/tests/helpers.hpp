#pragma once

#include <memory>

#include "srdmod/complex.hpp"
#include "srdmod/generate.hpp"

namespace srdmod::test {

inline std::shared_ptr<const SimplicialComplex> shared(SimplicialComplex cx) {
  return std::make_shared<const SimplicialComplex>(std::move(cx));
}

inline VertexSet vs(std::initializer_list<unsigned> v) { return VertexSet::of(v); }

inline SimplicialComplex full_simplex(unsigned n) {
  return SimplicialComplex::from_facets({VertexSet::range(n)}, n);
}

}  // namespace srdmod::test

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srdmod/monomial.hpp"

namespace srdmod {

/// Finite simplicial complex on vertices 0..n-1, stored by its facets.
///
/// Construction canonicalizes the input: facets form an antichain sorted by
/// (cardinality, mask), and every vertex lies in some facet. Vertices that do
/// not (slack vertices) are dropped, the remaining vertices are renumbered in
/// order, and the original indices of the dropped vertices are recorded.
/// The empty set is always a face; the void complex has n = 0 and the single
/// facet {}.
class SimplicialComplex {
 public:
  static constexpr unsigned kMaxVertices = 64;

  /// The void complex.
  SimplicialComplex();

  /// Throws std::length_error when n > 64 and std::invalid_argument when a
  /// candidate uses a vertex >= n or the label count is not n.
  static SimplicialComplex from_facets(const std::vector<VertexSet>& candidates, unsigned n,
                                       std::vector<std::string> labels = {});

  unsigned num_vertices() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  const std::vector<VertexSet>& facets() const { return facets_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Indices, in the caller's numbering, of vertices removed as slack.
  const std::vector<unsigned>& slack_vertices() const { return slack_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  bool is_face(VertexSet f) const;
  /// All faces, in canonical (cardinality, mask) order, starting with {}.
  std::vector<VertexSet> faces() const;
  /// f[s] = number of faces with s vertices, so f[0] = 1 for the empty face.
  std::vector<std::uint64_t> f_vector() const;
  unsigned max_facet_size() const;
  /// True when the only facet is the whole vertex set (trivial face ideal).
  bool is_full_simplex() const;

  std::string describe() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }

 private:
  unsigned n_ = 0;
  std::vector<VertexSet> facets_;
  std::vector<std::string> labels_;
  std::vector<unsigned> slack_;
  std::vector<std::string> warnings_;
  std::vector<std::uint64_t> face_table_;  // bitset over all 2^n masks, n <= 20
};

/// lk(F) = {G : F u G a face, F n G = {}}, as a complex on the vertices
/// outside F (vertices that do not occur are dropped as slack).
/// Throws std::domain_error when F is not a face.
SimplicialComplex link(const SimplicialComplex& cx, VertexSet face);

/// True iff some facet contains f but does not contain g.
bool separates(const SimplicialComplex& cx, VertexSet f, VertexSet g);

enum class TSpaceVerdict { yes, no, not_applicable };

/// Vertex-separation test: every face F is separated from every vertex
/// outside F. The full simplex (trivial face ideal) yields not_applicable;
/// the void complex is a T-space.
TSpaceVerdict is_t_space(const SimplicialComplex& cx);

std::string to_string(TSpaceVerdict v);

}  // namespace srdmod

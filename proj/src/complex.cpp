#include "srdmod/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace srdmod {

namespace {

constexpr unsigned kFaceTableLimit = 20;

VertexSet compact(VertexSet s, VertexSet kept) {
  std::uint64_t out = 0;
  unsigned pos = 0;
  for (unsigned v : kept.members()) {
    if (s.contains(v)) out |= std::uint64_t{1} << pos;
    ++pos;
  }
  return VertexSet(out);
}

template <typename Fn>
void for_each_subset(VertexSet s, Fn&& fn) {
  const std::uint64_t m = s.bits();
  std::uint64_t sub = m;
  while (true) {
    fn(VertexSet(sub));
    if (sub == 0) break;
    sub = (sub - 1) & m;
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex() : facets_{VertexSet()}, face_table_{1} {}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<VertexSet>& candidates,
                                                 unsigned n, std::vector<std::string> labels) {
  if (n > kMaxVertices)
    throw std::length_error("complex has " + std::to_string(n) + " vertices; at most " +
                            std::to_string(kMaxVertices) + " are supported");
  if (labels.empty()) labels = default_labels(n);
  if (labels.size() != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " labels, got " +
                                std::to_string(labels.size()));
  const VertexSet all = VertexSet::range(n);
  for (VertexSet c : candidates)
    if (!c.is_subset_of(all))
      throw std::invalid_argument("facet " + c.to_string(labels) + " uses a vertex outside [" +
                                  std::to_string(n) + "]");

  // Antichain normalization: keep the maximal candidates only.
  std::set<VertexSet> unique(candidates.begin(), candidates.end());
  std::vector<VertexSet> maximal;
  for (VertexSet c : unique) {
    bool contained = false;
    for (VertexSet d : unique)
      if (c != d && c.is_subset_of(d)) {
        contained = true;
        break;
      }
    if (!contained) maximal.push_back(c);
  }

  VertexSet covered;
  for (VertexSet f : maximal) covered = covered | f;

  SimplicialComplex cx;
  cx.facets_.clear();
  if (candidates.empty() && n > 0)
    cx.warnings_.push_back("no facets given: all " + std::to_string(n) +
                           " vertices are slack, result is the void complex");
  for (unsigned v = 0; v < n; ++v)
    if (!covered.contains(v)) cx.slack_.push_back(v);
  cx.n_ = covered.size();
  for (unsigned v : covered.members()) cx.labels_.push_back(labels[v]);
  for (VertexSet f : maximal) cx.facets_.push_back(compact(f, covered));
  if (cx.facets_.empty()) cx.facets_.push_back(VertexSet());
  std::sort(cx.facets_.begin(), cx.facets_.end());

  cx.face_table_.clear();
  if (cx.n_ <= kFaceTableLimit) {
    cx.face_table_.assign(((std::uint64_t{1} << cx.n_) + 63) / 64, 0);
    for (VertexSet f : cx.facets_)
      for_each_subset(f, [&](VertexSet s) { cx.face_table_[s.bits() >> 6] |= std::uint64_t{1} << (s.bits() & 63); });
  }
  return cx;
}

bool SimplicialComplex::is_face(VertexSet f) const {
  if (!f.is_subset_of(vertices())) return false;
  if (!face_table_.empty()) return (face_table_[f.bits() >> 6] >> (f.bits() & 63)) & 1u;
  for (VertexSet h : facets_)
    if (f.is_subset_of(h)) return true;
  return false;
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::set<VertexSet> all;
  for (VertexSet h : facets_) for_each_subset(h, [&](VertexSet s) { all.insert(s); });
  return {all.begin(), all.end()};
}

std::vector<std::uint64_t> SimplicialComplex::f_vector() const {
  std::vector<std::uint64_t> f(max_facet_size() + 1, 0);
  for (VertexSet s : faces()) ++f[s.size()];
  return f;
}

unsigned SimplicialComplex::max_facet_size() const {
  unsigned m = 0;
  for (VertexSet h : facets_) m = std::max(m, h.size());
  return m;
}

bool SimplicialComplex::is_full_simplex() const {
  return facets_.size() == 1 && facets_.front() == vertices();
}

std::string SimplicialComplex::describe() const {
  std::string s = "n=" + std::to_string(n_) + " facets=[";
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (i) s += ",";
    s += facets_[i].to_string(labels_);
  }
  return s + "]";
}

SimplicialComplex link(const SimplicialComplex& cx, VertexSet face) {
  if (!cx.is_face(face))
    throw std::domain_error("link: " + face.to_string(cx.labels()) + " is not a face");
  std::vector<VertexSet> candidates;
  for (VertexSet h : cx.facets())
    if (face.is_subset_of(h)) candidates.push_back(h - face);
  return SimplicialComplex::from_facets(candidates, cx.num_vertices(), cx.labels());
}

bool separates(const SimplicialComplex& cx, VertexSet f, VertexSet g) {
  for (VertexSet h : cx.facets())
    if (f.is_subset_of(h) && !g.is_subset_of(h)) return true;
  return false;
}

TSpaceVerdict is_t_space(const SimplicialComplex& cx) {
  if (cx.num_vertices() == 0) return TSpaceVerdict::yes;
  if (cx.is_full_simplex()) return TSpaceVerdict::not_applicable;
  for (VertexSet f : cx.faces())
    for (unsigned v : (cx.vertices() - f).members())
      if (!separates(cx, f, VertexSet().with(v))) return TSpaceVerdict::no;
  return TSpaceVerdict::yes;
}

std::string to_string(TSpaceVerdict v) {
  switch (v) {
    case TSpaceVerdict::yes: return "true";
    case TSpaceVerdict::no: return "false";
    case TSpaceVerdict::not_applicable: return "not-applicable";
  }
  return "?";
}

}  // namespace srdmod

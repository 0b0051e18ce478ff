#include "srdmod/monomial.hpp"

#include <stdexcept>

namespace srdmod {

VertexSet VertexSet::of(std::initializer_list<unsigned> vertices) {
  return of(std::vector<unsigned>(vertices));
}

VertexSet VertexSet::of(const std::vector<unsigned>& vertices) {
  std::uint64_t bits = 0;
  for (unsigned v : vertices) {
    if (v >= 64) throw std::length_error("vertex index " + std::to_string(v) + " exceeds 63");
    bits |= std::uint64_t{1} << v;
  }
  return VertexSet(bits);
}

std::vector<unsigned> VertexSet::members() const {
  std::vector<unsigned> out;
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(static_cast<unsigned>(std::countr_zero(b)));
  return out;
}

std::string VertexSet::to_string(const std::vector<std::string>& labels) const {
  std::string s = "{";
  bool first = true;
  for (unsigned v : members()) {
    if (!first) s += ",";
    first = false;
    s += v < labels.size() ? labels[v] : std::to_string(v);
  }
  return s + "}";
}

ExponentVector ExponentVector::unit(std::size_t n, std::size_t i, std::uint32_t power) {
  ExponentVector e(n);
  e[i] = power;
  return e;
}

ExponentVector ExponentVector::indicator(std::size_t n, VertexSet s) {
  ExponentVector e(n);
  for (unsigned v : s.members()) e[v] = 1;
  return e;
}

std::uint64_t ExponentVector::degree() const {
  std::uint64_t d = 0;
  for (auto v : e_) d += v;
  return d;
}

VertexSet ExponentVector::support() const {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i]) bits |= std::uint64_t{1} << i;
  return VertexSet(bits);
}

bool ExponentVector::is_zero() const {
  for (auto v : e_)
    if (v) return false;
  return true;
}

bool ExponentVector::divides(const ExponentVector& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& o) {
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
  ExponentVector r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (o.e_[i] > e_[i]) throw std::domain_error("exponent subtraction underflow");
    r.e_[i] -= o.e_[i];
  }
  return r;
}

std::string ExponentVector::to_string(const std::vector<std::string>& labels) const {
  std::string s;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (!e_[i]) continue;
    if (!s.empty()) s += "*";
    s += i < labels.size() ? labels[i] : "x" + std::to_string(i + 1);
    if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
  }
  return s.empty() ? "1" : s;
}

bool deglex_greater(const ExponentVector& a, const ExponentVector& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a > b;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

}  // namespace srdmod

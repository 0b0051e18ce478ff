#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace srdmod {

/// A set of vertices of a complex on at most 64 vertices, stored as a mask.
/// Faces, facets, supports of exponent vectors and monomial primes are all
/// VertexSets.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<unsigned> vertices);
  static VertexSet of(const std::vector<unsigned>& vertices);
  /// {0, ..., n-1}.
  static constexpr VertexSet range(unsigned n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool contains(unsigned v) const { return (bits_ >> v) & 1u; }
  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr VertexSet with(unsigned v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(unsigned v) const {
    return VertexSet(bits_ & ~(std::uint64_t{1} << v));
  }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  /// Canonical order: by cardinality, then by the mask value.
  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  std::vector<unsigned> members() const;
  /// "{x,y}" using the given vertex names.
  std::string to_string(const std::vector<std::string>& labels) const;

 private:
  std::uint64_t bits_ = 0;
};

using Face = VertexSet;

/// Exponent vector a in N^n; also used for the derivative part t of an
/// operator monomial x^a d^[t].
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<std::uint32_t> e) : e_(e) {}
  explicit ExponentVector(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

  static ExponentVector unit(std::size_t n, std::size_t i, std::uint32_t power = 1);
  /// The squarefree vector with support s.
  static ExponentVector indicator(std::size_t n, VertexSet s);

  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<std::uint32_t>& values() const { return e_; }

  std::uint64_t degree() const;
  VertexSet support() const;
  bool is_zero() const;
  /// Componentwise <=.
  bool divides(const ExponentVector& o) const;

  ExponentVector& operator+=(const ExponentVector& o);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  /// Componentwise difference; requires o.divides(*this).
  ExponentVector operator-(const ExponentVector& o) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

  /// Monomial rendering such as "x^2*y"; "1" for the zero vector.
  std::string to_string(const std::vector<std::string>& labels) const;

 private:
  std::vector<std::uint32_t> e_;
};

/// Graded-lexicographic comparison used for canonical printing:
/// higher total degree first, then lexicographically larger first.
bool deglex_greater(const ExponentVector& a, const ExponentVector& b);

/// Calls fn(e) for every exponent vector in N^n of total degree <= max_degree,
/// in graded order (degree 0 first), lexicographically descending inside a degree.
template <typename Fn>
void for_each_exponent_up_to(std::size_t n, unsigned max_degree, Fn&& fn);

/// Default vertex names x1..xn.
std::vector<std::string> default_labels(std::size_t n);

namespace detail {
template <typename Fn>
void exponents_of_degree(ExponentVector& e, std::size_t pos, unsigned remaining, Fn& fn) {
  if (pos + 1 == e.size()) {
    e[pos] = remaining;
    fn(static_cast<const ExponentVector&>(e));
    e[pos] = 0;
    return;
  }
  for (unsigned k = remaining + 1; k-- > 0;) {
    e[pos] = k;
    exponents_of_degree(e, pos + 1, remaining - k, fn);
  }
  e[pos] = 0;
}
}  // namespace detail

template <typename Fn>
void for_each_exponent_up_to(std::size_t n, unsigned max_degree, Fn&& fn) {
  ExponentVector e(n);
  if (n == 0) {
    fn(static_cast<const ExponentVector&>(e));
    return;
  }
  for (unsigned d = 0; d <= max_degree; ++d) detail::exponents_of_degree(e, 0, d, fn);
}

}  // namespace srdmod

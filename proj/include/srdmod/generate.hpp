#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "srdmod/complex.hpp"
#include "srdmod/weyl.hpp"

namespace srdmod {

/// Seeded generator with a portable bounded draw (std distributions differ
/// between standard libraries, which would break reproducible reports).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  /// Uniform on [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  std::int64_t uniform_signed(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 eng_;
};

/// Every complex without slack vertices on k = 1..n vertices (each exactly
/// once); n = 0 yields the void complex. Throws std::length_error for n > 6.
std::vector<SimplicialComplex> exhaustive_complexes(unsigned n);

/// All simple graphs on exactly n vertices as complexes: the edges plus the
/// isolated vertices as facets.
std::vector<SimplicialComplex> all_graphs(unsigned n);

/// Up to n + 1 random nonempty candidate facets on n vertices, normalized.
SimplicialComplex random_complex(unsigned n, Rng& rng);
std::vector<SimplicialComplex> random_complexes(unsigned n, std::size_t count, std::uint64_t seed);

/// Exponent vector of total degree <= max_degree.
ExponentVector random_exponent(Rng& rng, std::size_t n, unsigned max_degree);
/// Up to max_terms terms with coefficients in [-3, 3].
Polynomial random_polynomial(Rng& rng, Field k, std::size_t n, unsigned max_degree, unsigned max_terms);
/// Up to max_terms terms x^a d^[t] with |a| + |t| <= max_degree.
DiffOp random_operator(Rng& rng, Field k, std::size_t n, unsigned max_degree, unsigned max_terms);

/// {x,y},{x,z},{y,z},{w}.
SimplicialComplex tripp_complex();
/// {x,y},{z,w}.
SimplicialComplex two_edges_complex();

}  // namespace srdmod

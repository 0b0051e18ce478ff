#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "srdmod/complex.hpp"
#include "srdmod/scalar.hpp"
#include "srdmod/verdict.hpp"

namespace srdmod {

inline constexpr const char* kToolVersion = "0.3.0";
inline constexpr const char* kVerifySchema = "srdmod.verify/1";

struct VerifyRecord {
  std::string check;     // e.g. "idealizer.xdelx"
  std::string claim;     // one-line statement being tested
  std::string instance;  // complex and parameters
  Verdict verdict = Verdict::pass;
  nlohmann::json witness = nlohmann::json::object();
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  Field field = Field::rationals();
  unsigned max_degree = 6;
  int box_lo = -4;
  int box_hi = 4;
};

struct VerifyReport {
  VerifyOptions options;
  std::string complex;
  std::vector<VerifyRecord> records;  // sorted by (check, fnv1a(instance))

  std::size_t count(Verdict v) const;
  /// 0 when nothing failed, 1 otherwise.
  int exit_code() const;
  nlohmann::json to_json() const;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& s);

/// Runs every applicable check on one complex. Deterministic in the seed.
VerifyReport run_verify(const SimplicialComplex& cx, const VerifyOptions& options);

}  // namespace srdmod

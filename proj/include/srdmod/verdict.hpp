#pragma once

#include <string>

namespace srdmod {

enum class Verdict { pass, fail, not_applicable };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::not_applicable: return "NA";
  }
  return "?";
}

}  // namespace srdmod

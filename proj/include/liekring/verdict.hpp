#pragma once

#include <string>
#include <utility>

#include "liekring/character.hpp"

namespace liekring {

/// Outcome of one machine-checked identity.
struct Verdict {
  std::string claim_id;
  bool holds = false;
  /// Short summary on success; on failure the offending difference.
  std::string witness;
  /// Full canonical text of the computed object.
  std::string detail;
};

/// Exact equality of two characters; a failure carries to_text(lhs - rhs).
inline Verdict compare_characters(std::string id, const FormalCharacter& lhs, const FormalCharacter& rhs) {
  Verdict v;
  v.claim_id = std::move(id);
  v.holds = lhs == rhs;
  if (v.holds) {
    v.witness = "dim " + lhs.dimension().str() + ", " + std::to_string(lhs.size()) + " weights";
  } else {
    v.witness = "lhs - rhs =\n" + to_text(lhs - rhs);
  }
  v.detail = to_text(lhs);
  return v;
}

}  // namespace liekring

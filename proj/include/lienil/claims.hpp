#pragma once

#include <string>
#include <vector>

#include "lienil/root_system.hpp"

namespace lienil {

struct ClaimResult {
  std::string id;
  std::string statement;
  bool passed = false;
  /// Computed witness values, human readable.
  std::string witness;
};

/// Every constructible type with rank <= max_rank from the classical families,
/// plus E6, E7, E8, F4, G2 (the exceptionals are always included).
std::vector<SimpleType> types_up_to(int max_rank);

/// Recomputes the structural facts the identification procedure relies on, for
/// all types up to `max_rank`. Used by `lienil verify-claims`.
std::vector<ClaimResult> verify_claims(int max_rank);

}  // namespace lienil

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lienil/nilpotent_algebra.hpp"
#include "lienil/root_system.hpp"

namespace lienil {

inline constexpr int kDefaultMaxRank = 12;

enum class BcBit { RightNondegenerate, RightDegenerate };

/// Graded invariants of an anonymous nilpotent algebra.
struct Fingerprint {
  std::size_t rank = 0;        // dim gr^1
  std::size_t nil_dim = 0;     // dim n
  std::size_t simple_dim = 0;  // 2 dim n + rank
  /// graded_dims[i-1] = dim gr^i.
  std::vector<std::size_t> graded_dims;
  std::size_t nilpotency_class = 0;
  std::optional<BcBit> bc_bit;

  /// dim gr^i with 1-based degrees; 0 outside the range.
  std::size_t graded_dim(std::size_t degree) const;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

struct Identification {
  SimpleType canonical;
  /// Other names for the same algebra: B2 ~ C2, A3 ~ D3, A1 ~ B1 ~ C1.
  /// Alias entries are labels and may fall below the constructible rank range.
  std::vector<SimpleType> aliases;
  Fingerprint fingerprint;
};

/// Lower central series + graded dimensions; propagates NotNilpotent.
Fingerprint fingerprint(const NilpotentAlgebra& a);

/// All types of the given rank (classical ranks up to max_rank, plus the five
/// exceptionals) whose simple algebra has dimension simple_dim. The A3/D3
/// coincidence is reported as A3 alone.
std::vector<SimpleType> dimension_table_lookup(std::size_t rank, std::size_t simple_dim, int max_rank = kDefaultMaxRank);

/// Decides B_n versus C_n (n >= 3) from the right kernel of gr^2 x gr^(2n-3) -> gr^(2n-1):
/// trivial kernel means B, nontrivial means C. Throws InputError if the graded
/// dimensions are not those of a B_n/C_n nilradical.
Family bc_discriminator(const NilpotentAlgebra& a, int n);
Family bc_discriminator(const NilpotentAlgebra& a, const GradedAlgebra& g, int n);

/// Names the simple Lie algebra whose Borel nilradical is isomorphic to `a`.
/// Throws Unrecognized if nothing in range matches, NotNilpotent if `a` is
/// not nilpotent.
Identification identify(const NilpotentAlgebra& a, int max_rank = kDefaultMaxRank);

std::string to_string(BcBit bit);

}  // namespace lienil

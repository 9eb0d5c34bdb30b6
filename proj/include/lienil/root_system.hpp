#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lienil {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
/// Accepts a single letter, either case; throws InputError otherwise.
Family parse_family(std::string_view text);

struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  /// A: rank >= 1; B, C: >= 2; D: >= 3; E: 6..8; F: 4; G: 2.
  bool valid() const;
  std::string name() const;  // e.g. "B4"

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

/// Throws InputError for an invalid family/rank combination.
SimpleType make_type(Family family, int rank);
/// Parses names such as "E6" or "b12".
SimpleType parse_type(std::string_view name);

/// Dimension of the simple Lie algebra of this type.
int simple_dimension(const SimpleType& t);

/// Root in simple-root coordinates.
using Root = std::vector<int>;

int degree(const Root& r);

// Positive roots of a simple type, ordered by (degree, lexicographic
// coefficients). Simple roots use Bourbaki numbering.
class RootSystem {
 public:
  const SimpleType& type() const { return type_; }
  int rank() const { return type_.rank; }
  std::size_t size() const { return roots_.size(); }

  /// cartan()[i][j] = 2 (a_i, a_j) / (a_i, a_i).
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// Gram matrix of the simple roots, scaled to be integral.
  const std::vector<std::vector<int>>& gram() const { return gram_; }

  const std::vector<Root>& positive_roots() const { return roots_; }
  const Root& root(std::size_t i) const { return roots_.at(i); }
  std::optional<std::size_t> index_of(const Root& r) const;
  bool is_positive_root(const Root& r) const { return index_.count(r) != 0; }
  /// Membership in the full root system (positive or negative).
  bool is_root(const Root& r) const;

  std::size_t simple_index(int i) const;  // position of simple root i in the ordering
  int inner_product(const Root& a, const Root& b) const;

  friend RootSystem build_root_system(const SimpleType& t);

 private:
  SimpleType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> gram_;
  std::vector<Root> roots_;
  std::map<Root, std::size_t> index_;
};

/// Enumerates the positive roots by root-string closure from the simple roots.
RootSystem build_root_system(const SimpleType& t);

/// histogram[i] = number of positive roots of degree i, for i = 1..max degree.
/// Index 0 is unused and always 0.
std::vector<std::size_t> degree_histogram(const RootSystem& rs);

/// The unique root of maximal degree.
const Root& highest_root(const RootSystem& rs);

/// Smallest i such that r - a_i is a positive root. Throws InputError for a
/// simple root.
int simple_predecessor(const RootSystem& rs, const Root& r);

std::string to_string(const Root& r);

}  // namespace lienil

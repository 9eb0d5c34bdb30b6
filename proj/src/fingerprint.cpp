#include "lienil/fingerprint.hpp"

#include <algorithm>

#include "lienil/errors.hpp"

namespace lienil {

std::size_t Fingerprint::graded_dim(std::size_t degree) const {
  if (degree == 0 || degree > graded_dims.size()) return 0;
  return graded_dims[degree - 1];
}

std::string to_string(BcBit bit) {
  return bit == BcBit::RightNondegenerate ? "right-nondegenerate" : "right-degenerate";
}

namespace {

Fingerprint fingerprint_of(const NilpotentAlgebra& a, const GradedAlgebra& g) {
  Fingerprint fp;
  fp.nil_dim = a.dim();
  fp.graded_dims = g.dims();
  fp.rank = g.dim(1);
  fp.simple_dim = 2 * fp.nil_dim + fp.rank;
  fp.nilpotency_class = g.nilpotency_class();
  return fp;
}

std::vector<SimpleType> aliases_of(const SimpleType& t) {
  if (t.family == Family::A && t.rank == 1) return {{Family::B, 1}, {Family::C, 1}};
  if (t.family == Family::B && t.rank == 2) return {{Family::C, 2}};
  if (t.family == Family::A && t.rank == 3) return {{Family::D, 3}};
  return {};
}

}  // namespace

Fingerprint fingerprint(const NilpotentAlgebra& a) {
  const Filtration f = lower_central_series(a);
  return fingerprint_of(a, graded(a, f));
}

std::vector<SimpleType> dimension_table_lookup(std::size_t rank, std::size_t simple_dim, int max_rank) {
  std::vector<SimpleType> out;
  if (rank == 0) return out;
  const int n = static_cast<int>(rank);
  std::vector<SimpleType> candidates;
  if (n <= max_rank) {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) candidates.push_back({f, n});
  }
  for (SimpleType t : {SimpleType{Family::E, 6}, SimpleType{Family::E, 7}, SimpleType{Family::E, 8},
                       SimpleType{Family::F, 4}, SimpleType{Family::G, 2}}) {
    if (t.rank == n) candidates.push_back(t);
  }
  for (const SimpleType& t : candidates) {
    if (!t.valid() || static_cast<std::size_t>(simple_dimension(t)) != simple_dim) continue;
    if (t.family == Family::D && t.rank == 3) continue;  // same algebra as A3
    out.push_back(t);
  }
  return out;
}

Family bc_discriminator(const NilpotentAlgebra& a, const GradedAlgebra& g, int n) {
  if (n < 3) throw InputError("bc_discriminator needs rank >= 3");
  const auto top = static_cast<std::size_t>(2 * n - 1);
  const auto mid = static_cast<std::size_t>(2 * n - 3);
  if (g.nilpotency_class() != top || g.dim(top) != 1 || g.dim(mid) != 2) {
    throw InputError("graded dimensions are not those of a B/C nilradical of rank " + std::to_string(n));
  }
  const BilinearPairing p = graded_pairing(g, a, 2, mid);
  return right_kernel(p).dim() == 0 ? Family::B : Family::C;
}

Family bc_discriminator(const NilpotentAlgebra& a, int n) {
  const Filtration f = lower_central_series(a);
  return bc_discriminator(a, graded(a, f), n);
}

Identification identify(const NilpotentAlgebra& a, int max_rank) {
  const Filtration f = lower_central_series(a);
  const GradedAlgebra g = graded(a, f);
  Fingerprint fp = fingerprint_of(a, g);

  std::vector<SimpleType> candidates = dimension_table_lookup(fp.rank, fp.simple_dim, max_rank);
  if (candidates.empty()) {
    throw Unrecognized("no simple type of rank " + std::to_string(fp.rank) + " has dimension " +
                       std::to_string(fp.simple_dim));
  }
  auto has = [&](Family fam) {
    return std::any_of(candidates.begin(), candidates.end(), [&](const SimpleType& t) { return t.family == fam; });
  };
  if (has(Family::E) && candidates.size() > 1) {
    // E6 against B6/C6: five roots of degree 4 against four.
    if (fp.graded_dim(4) == 5) {
      candidates = {{Family::E, 6}};
    } else {
      std::erase_if(candidates, [](const SimpleType& t) { return t.family == Family::E; });
    }
  }
  if (candidates.size() == 2 && has(Family::B) && has(Family::C)) {
    const int n = static_cast<int>(fp.rank);
    if (n == 2) {
      candidates = {{Family::B, 2}};
    } else {
      Family fam;
      try {
        fam = bc_discriminator(a, g, n);
      } catch (const InputError& e) {
        throw Unrecognized(e.what());
      }
      fp.bc_bit = fam == Family::B ? BcBit::RightNondegenerate : BcBit::RightDegenerate;
      candidates = {{fam, n}};
    }
  }
  if (candidates.size() != 1) throw InternalError("identification left " + std::to_string(candidates.size()) + " candidates");

  const SimpleType t = candidates.front();
  std::vector<std::size_t> expected = degree_histogram(build_root_system(t));
  expected.erase(expected.begin());
  if (expected != fp.graded_dims) {
    throw Unrecognized("graded dimensions do not match those of " + t.name());
  }
  return Identification{t, aliases_of(t), std::move(fp)};
}

}  // namespace lienil

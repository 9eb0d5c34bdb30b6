#include "lienil/claims.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "lienil/chevalley.hpp"
#include "lienil/errors.hpp"
#include "lienil/fingerprint.hpp"

namespace lienil {

std::vector<SimpleType> types_up_to(int max_rank) {
  std::vector<SimpleType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int n = 1; n <= max_rank; ++n) {
      SimpleType t{f, n};
      if (t.valid()) out.push_back(t);
    }
  }
  for (SimpleType t : {SimpleType{Family::E, 6}, SimpleType{Family::E, 7}, SimpleType{Family::E, 8},
                       SimpleType{Family::F, 4}, SimpleType{Family::G, 2}}) {
    out.push_back(t);
  }
  return out;
}

namespace {

struct Built {
  SimpleType type;
  RootSystem roots;
  NilpotentAlgebra algebra;
  GradedAlgebra graded;
};

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// Runs `check` per type; the claim fails on the first type for which it
// returns a non-empty failure message.
ClaimResult per_type(std::string id, std::string statement, const std::vector<Built>& all,
                     const std::function<std::string(const Built&)>& check) {
  ClaimResult r{std::move(id), std::move(statement), true, ""};
  std::size_t count = 0;
  for (const Built& b : all) {
    std::string failure;
    try {
      failure = check(b);
    } catch (const std::exception& e) {
      failure = e.what();
    }
    if (!failure.empty()) {
      r.passed = false;
      r.witness = b.type.name() + ": " + failure;
      return r;
    }
    ++count;
  }
  r.witness = std::to_string(count) + " types checked";
  return r;
}

Root two_e2_in_c(int n) {
  // 2 e_2 = 2 (a_2 + ... + a_{n-1}) + a_n.
  Root r(n, 2);
  r[0] = 0;
  r[n - 1] = 1;
  return r;
}

}  // namespace

std::vector<ClaimResult> verify_claims(int max_rank) {
  if (max_rank < 2) throw InputError("verify-claims needs max rank >= 2");
  std::vector<Built> all;
  for (const SimpleType& t : types_up_to(max_rank)) {
    RootSystem rs = build_root_system(t);
    NilpotentAlgebra a = nilradical(rs);
    GradedAlgebra g = graded(a, lower_central_series(a));
    all.push_back({t, std::move(rs), std::move(a), std::move(g)});
  }
  auto find = [&](const SimpleType& t) -> const Built* {
    for (const auto& b : all)
      if (b.type == t) return &b;
    return nullptr;
  };

  std::vector<ClaimResult> out;

  out.push_back(per_type("dimension-table", "2 dim n + rank equals the tabulated dimension", all, [](const Built& b) {
    const std::size_t got = 2 * b.algebra.dim() + static_cast<std::size_t>(b.type.rank);
    return got == static_cast<std::size_t>(simple_dimension(b.type))
               ? std::string()
               : "2 dim n + rank = " + std::to_string(got);
  }));

  out.push_back(per_type("rank-recovery", "dim gr^1 equals the rank", all, [](const Built& b) {
    return b.graded.dim(1) == static_cast<std::size_t>(b.type.rank) ? std::string()
                                                                     : "dim gr^1 = " + std::to_string(b.graded.dim(1));
  }));

  out.push_back(per_type("lcs-equals-degree-filtration", "n^i is spanned by the root vectors of degree >= i", all,
                         [](const Built& b) {
                           const auto& f = b.graded.filtration;
                           const std::size_t d = b.algebra.dim();
                           for (std::size_t i = 1; i <= f.nilpotency_class + 1; ++i) {
                             std::vector<Vector> span;
                             for (std::size_t k = 0; k < d; ++k) {
                               if (static_cast<std::size_t>(degree(b.roots.root(k))) >= i) span.push_back(unit_vector(d, k));
                             }
                             if (!(f.term(i) == Subspace::span(span, d))) return "term " + std::to_string(i) + " differs";
                           }
                           return std::string();
                         }));

  {
    ClaimResult r{"bc-histograms-equal", "B_n and C_n have the same number of roots of each degree", true, ""};
    for (int n = 2; n <= max_rank; ++n) {
      const auto hb = degree_histogram(build_root_system({Family::B, n}));
      const auto hc = degree_histogram(build_root_system({Family::C, n}));
      if (hb != hc) {
        r.passed = false;
        r.witness = "n=" + std::to_string(n) + ": " + join(hb) + " vs " + join(hc);
        break;
      }
    }
    if (r.passed) r.witness = "n=2.." + std::to_string(max_rank);
    out.push_back(r);
  }

  {
    const auto e6 = degree_histogram(build_root_system({Family::E, 6}));
    const auto b6 = degree_histogram(build_root_system({Family::B, 6}));
    const auto c6 = degree_histogram(build_root_system({Family::C, 6}));
    const bool ok = e6.at(4) == 5 && b6.at(4) == 4 && c6.at(4) == 4;
    out.push_back({"e6-degree-4-count", "E6 has 5 roots of degree 4, B6 and C6 have 4", ok,
                   "E6=" + std::to_string(e6.at(4)) + " B6=" + std::to_string(b6.at(4)) + " C6=" + std::to_string(c6.at(4))});
  }

  {
    ClaimResult r{"bc-right-kernel",
                  "gr^2 x gr^(2n-3) -> gr^(2n-1) is right-nondegenerate for B_n and has the 2e_2 coset in its right "
                  "kernel for C_n",
                  true, ""};
    std::ostringstream w;
    for (int n = 3; n <= max_rank && r.passed; ++n) {
      const Built* b = find({Family::B, n});
      const Built* c = find({Family::C, n});
      const auto mid = static_cast<std::size_t>(2 * n - 3);
      const std::size_t kb = right_kernel(graded_pairing(b->graded, b->algebra, 2, mid)).dim();
      const Subspace kc = right_kernel(graded_pairing(c->graded, c->algebra, 2, mid));
      // Position of the 2e_2 root vector inside the canonical gr^(2n-3) basis.
      const std::size_t idx = *c->roots.index_of(two_e2_in_c(n));
      const auto& piece = c->graded.piece(mid);
      bool contains = false;
      for (std::size_t p = 0; p < piece.size(); ++p) {
        if (!piece[p][idx].is_zero()) contains = member(kc, unit_vector(piece.size(), p));
      }
      w << "n=" << n << ":B" << kb << "/C" << kc.dim() << " ";
      r.passed = kb == 0 && kc.dim() >= 1 && contains;
    }
    r.witness = w.str();
    out.push_back(r);
  }

  out.push_back(per_type("identify-round-trip", "identify recovers the type after 5 random unimodular basis changes", all,
                         [&](const Built& b) {
                           for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                             const NilpotentAlgebra ob =
                                 change_basis(b.algebra, random_unimodular(b.algebra.dim(), seed));
                             const Identification id = identify(ob, max_rank);
                             SimpleType expect = b.type;
                             if (expect == SimpleType{Family::C, 2}) expect = {Family::B, 2};
                             if (expect == SimpleType{Family::D, 3}) expect = {Family::A, 3};
                             if (!(id.canonical == expect)) return "seed " + std::to_string(seed) + " gave " + id.canonical.name();
                           }
                           return std::string();
                         }));

  {
    ClaimResult r = per_type("jacobi", "every generated nilradical satisfies the Jacobi identity", all,
                             [](const Built& b) { return verify_jacobi(b.algebra).passed ? std::string() : "violation"; });
    if (r.passed) {
      NilpotentAlgebra mutated = nilradical(build_root_system({Family::B, 3}));
      const std::size_t top = mutated.dim() - 1;
      for (std::size_t i = 0; i < mutated.dim(); ++i) {
        for (std::size_t j = i + 1; j < mutated.dim(); ++j) {
          SparseVector v = mutated.upper(i, j);
          if (v.size() == 1 && v[0].first == top) {
            v[0].second = -v[0].second;
            mutated.set_bracket(i, j, v);
            i = j = mutated.dim();
          }
        }
      }
      const JacobiReport mr = verify_jacobi(mutated);
      r.passed = !mr.passed;
      r.witness += mr.passed ? "; sign mutation NOT detected" : "; sign mutation detected";
    }
    out.push_back(r);
  }

  out.push_back(per_type("graded-equals-nilradical", "gr(n) has the same structure constants as n in the root basis", all,
                         [](const Built& b) {
                           return graded_structure_constants(b.graded, b.algebra) == b.algebra ? std::string() : "differs";
                         }));

  {
    std::vector<Built> small;
    for (const auto& b : all)
      if (b.type.rank <= 5) small.push_back(b);
    out.push_back(per_type("pairing-well-defined", "pairings do not depend on coset representatives (20 perturbations)",
                           small, [](const Built& b) {
                             std::mt19937_64 rng(0x5eedULL + static_cast<std::uint64_t>(b.type.rank));
                             const std::size_t c = b.graded.nilpotency_class();
                             for (int trial = 0; trial < 20; ++trial) {
                               GradedAlgebra p = b.graded;
                               for (std::size_t i = 1; i <= c; ++i) {
                                 const Subspace next = p.filtration.term(i + 1);
                                 for (Vector& u : p.pieces[i - 1]) {
                                   for (std::size_t r = 0; r < next.dim(); ++r) {
                                     const Rational coef = static_cast<std::int64_t>(rng() % 7) - 3;
                                     for (std::size_t k = 0; k < u.size(); ++k) u[k].add_mul(coef, next.basis()(r, k));
                                   }
                                 }
                               }
                               for (std::size_t i = 1; i <= c; ++i)
                                 for (std::size_t j = 1; i + j <= c; ++j)
                                   if (!(graded_pairing(p, b.algebra, i, j) == graded_pairing(b.graded, b.algebra, i, j)))
                                     return "pairing (" + std::to_string(i) + "," + std::to_string(j) + ") changed";
                             }
                             return std::string();
                           }));
  }

  out.push_back(per_type("simple-predecessor", "every non-simple positive root minus some simple root is a root", all,
                         [](const Built& b) {
                           for (const Root& r : b.roots.positive_roots()) {
                             if (degree(r) >= 2) simple_predecessor(b.roots, r);
                           }
                           return std::string();
                         }));

  return out;
}

}  // namespace lienil

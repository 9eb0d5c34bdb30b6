// lienil: build Borel nilradicals of simple Lie algebras, scramble them, and
// identify the simple algebra back from anonymous structure constants.
//
// Exit codes: 0 success, 1 semantic rejection (not nilpotent, unrecognized,
// failed claim), 2 malformed input or usage error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lienil/algebra_io.hpp"
#include "lienil/chevalley.hpp"
#include "lienil/claims.hpp"
#include "lienil/errors.hpp"
#include "lienil/fingerprint.hpp"

using nlohmann::ordered_json;
using namespace lienil;

namespace {

constexpr int kExitRejected = 1;
constexpr int kExitMalformed = 2;

int rank_bound() {
  const char* env = std::getenv("LIENIL_MAX_RANK");
  if (env == nullptr || *env == '\0') return kDefaultMaxRank;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string("LIENIL_MAX_RANK must be a positive integer, got '") + env + "'");
  }
}

SimpleType checked_type(const std::string& family, int rank) {
  const SimpleType t = make_type(parse_family(family), rank);
  if (t.rank > rank_bound()) {
    throw InputError(t.name() + " exceeds the rank bound " + std::to_string(rank_bound()) + " (set LIENIL_MAX_RANK)");
  }
  return t;
}

std::string formula(Family f) {
  switch (f) {
    case Family::A: return "n(n+2)";
    case Family::B:
    case Family::C: return "n(2n+1)";
    case Family::D: return "n(2n-1)";
    default: return "";
  }
}

ordered_json fingerprint_json(const Fingerprint& fp) {
  ordered_json j;
  j["rank"] = fp.rank;
  j["nil_dim"] = fp.nil_dim;
  j["simple_dim"] = fp.simple_dim;
  j["graded_dims"] = fp.graded_dims;
  j["class"] = fp.nilpotency_class;
  j["bc_bit"] = fp.bc_bit ? ordered_json(to_string(*fp.bc_bit)) : ordered_json(nullptr);
  return j;
}

int cmd_table(int max_rank, const std::string& format) {
  if (max_rank < 1) throw InputError("--max-rank must be at least 1");
  std::vector<SimpleType> rows;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = 1; n <= max_rank; ++n)
      if (SimpleType{f, n}.valid()) rows.push_back({f, n});
  for (SimpleType t : {SimpleType{Family::E, 6}, SimpleType{Family::E, 7}, SimpleType{Family::E, 8},
                       SimpleType{Family::F, 4}, SimpleType{Family::G, 2}})
    rows.push_back(t);

  if (format == "json") {
    ordered_json out = ordered_json::array();
    for (const auto& t : rows) {
      out.push_back(ordered_json{{"type", t.name()},
                                 {"family", std::string(1, family_letter(t.family))},
                                 {"rank", t.rank},
                                 {"dimension", simple_dimension(t)},
                                 {"formula", formula(t.family)}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "type  rank  dimension  formula\n";
    for (const auto& t : rows) {
      std::cout << t.name() << std::string(6 - std::min<std::size_t>(5, t.name().size()), ' ') << t.rank
                << std::string(6 - std::to_string(t.rank).size(), ' ') << simple_dimension(t)
                << std::string(11 - std::to_string(simple_dimension(t)).size(), ' ') << formula(t.family) << "\n";
    }
  }
  return 0;
}

int cmd_roots(const SimpleType& t, const std::string& format) {
  const RootSystem rs = build_root_system(t);
  auto hist = degree_histogram(rs);
  hist.erase(hist.begin());
  if (format == "json") {
    ordered_json out;
    out["type"] = t.name();
    out["rank"] = t.rank;
    out["cartan"] = rs.cartan();
    ordered_json roots = ordered_json::array();
    for (std::size_t i = 0; i < rs.size(); ++i) {
      roots.push_back(ordered_json{{"index", i}, {"coeffs", rs.root(i)}, {"degree", degree(rs.root(i))}});
    }
    out["positive_roots"] = std::move(roots);
    out["degree_histogram"] = hist;
    out["highest_root"] = highest_root(rs);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << t.name() << ": " << rs.size() << " positive roots\n";
    for (std::size_t i = 0; i < rs.size(); ++i) {
      std::cout << i << "\tdeg " << degree(rs.root(i)) << "\t" << to_string(rs.root(i)) << "\n";
    }
    std::cout << "degree histogram (from degree 1):";
    for (auto h : hist) std::cout << " " << h;
    std::cout << "\nhighest root: " << to_string(highest_root(rs)) << "\n";
  }
  return 0;
}

int cmd_invariants(const SimpleType& t) {
  const RootSystem rs = build_root_system(t);
  const NilpotentAlgebra a = nilradical(rs);
  const Filtration f = lower_central_series(a);
  const GradedAlgebra g = graded(a, f);
  const Identification id = identify(a, rank_bound());

  ordered_json out;
  out["type"] = t.name();
  out["fingerprint"] = fingerprint_json(id.fingerprint);
  out["lcs_dims"] = f.dims();
  ordered_json pairings = ordered_json::array();
  const std::size_t c = g.nilpotency_class();
  for (std::size_t i = 1; i <= c; ++i) {
    for (std::size_t j = 1; i + j <= c; ++j) {
      const BilinearPairing p = graded_pairing(g, a, i, j);
      pairings.push_back(ordered_json{{"i", i},
                                      {"j", j},
                                      {"left_dim", p.left_dim},
                                      {"right_dim", p.right_dim},
                                      {"target_dim", p.target_dim},
                                      {"left_kernel_dim", left_kernel(p).dim()},
                                      {"right_kernel_dim", right_kernel(p).dim()}});
    }
  }
  out["pairings"] = std::move(pairings);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_emit(const SimpleType& t, const std::string& path) {
  AlgebraFile file{nilradical(build_root_system(t))};
  file.metadata["source"] = "nilradical";
  file.metadata["type"] = t.name();
  write_algebra_file(path, file);
  return 0;
}

int cmd_obfuscate(const std::string& in, std::int64_t seed, const std::string& out) {
  const AlgebraFile src = read_algebra_file(in);
  lower_central_series(src.algebra);  // NotNilpotent -> exit 1
  const std::size_t d = src.algebra.dim();
  const Matrix m = d == 0 ? Matrix(0, 0) : random_unimodular(d, static_cast<std::uint64_t>(seed));
  AlgebraFile file{change_basis(src.algebra, m)};
  file.metadata["obfuscation_seed"] = seed;
  write_algebra_file(out, file);
  return 0;
}

int cmd_identify(const std::string& in) {
  const AlgebraFile file = read_algebra_file(in);
  const Identification id = identify(file.algebra, rank_bound());
  ordered_json out;
  out["canonical"] = id.canonical.name();
  ordered_json aliases = ordered_json::array();
  for (const auto& t : id.aliases) aliases.push_back(t.name());
  out["aliases"] = std::move(aliases);
  out["fingerprint"] = fingerprint_json(id.fingerprint);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_verify_claims(int max_rank) {
  if (max_rank > rank_bound()) throw InputError("--max-rank exceeds the rank bound " + std::to_string(rank_bound()));
  bool all = true;
  for (const ClaimResult& r : verify_claims(max_rank)) {
    all = all && r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.statement << " [" << r.witness << "]\n";
  }
  return all ? 0 : kExitRejected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Borel nilradicals of simple Lie algebras: construction, invariants, identification"};
  app.require_subcommand(1);

  int table_max = -1;
  std::string table_format = "text";
  auto* table = app.add_subcommand("table", "Rank/dimension table of the simple Lie algebras");
  table->add_option("--max-rank", table_max, "Largest classical rank to list");
  table->add_option("--format", table_format)->check(CLI::IsMember({"text", "json"}));

  std::string family;
  int rank = 0;
  std::string roots_format = "text";
  auto* roots = app.add_subcommand("roots", "Positive roots of a simple type");
  roots->add_option("family", family)->required();
  roots->add_option("rank", rank)->required();
  roots->add_option("--format", roots_format)->check(CLI::IsMember({"text", "json"}));

  auto* invariants = app.add_subcommand("invariants", "Graded invariants of the nilradical of a simple type (JSON)");
  invariants->add_option("family", family)->required();
  invariants->add_option("rank", rank)->required();

  std::string out_path;
  auto* emit = app.add_subcommand("emit", "Write the nilradical of a simple type as an algebra file");
  emit->add_option("family", family)->required();
  emit->add_option("rank", rank)->required();
  emit->add_option("-o,--output", out_path)->required();

  std::string in_path;
  std::int64_t seed = 0;
  auto* obfuscate = app.add_subcommand("obfuscate", "Apply a seeded random unimodular change of basis");
  obfuscate->add_option("file", in_path)->required();
  obfuscate->add_option("--seed", seed)->required();
  obfuscate->add_option("-o,--output", out_path)->required();

  auto* ident = app.add_subcommand("identify", "Name the simple Lie algebra of an anonymous nilradical");
  ident->add_option("file", in_path)->required();

  int claims_max = 8;
  auto* claims = app.add_subcommand("verify-claims", "Recheck the structural facts behind identification");
  claims->add_option("--max-rank", claims_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    if (*table) return cmd_table(table_max < 0 ? rank_bound() : table_max, table_format);
    if (*roots) return cmd_roots(checked_type(family, rank), roots_format);
    if (*invariants) return cmd_invariants(checked_type(family, rank));
    if (*emit) return cmd_emit(checked_type(family, rank), out_path);
    if (*obfuscate) return cmd_obfuscate(in_path, seed, out_path);
    if (*ident) return cmd_identify(in_path);
    if (*claims) return cmd_verify_claims(claims_max);
  } catch (const NotNilpotent& e) {
    std::cerr << "error: not nilpotent: " << e.what() << "\n";
    return kExitRejected;
  } catch (const Unrecognized& e) {
    std::cerr << "error: unrecognized: " << e.what() << "\n";
    return kExitRejected;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}

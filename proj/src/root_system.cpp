#include "lienil/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

#include "lienil/errors.hpp"

namespace lienil {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Family parse_family(std::string_view text) {
  if (text.size() == 1) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
  }
  throw InputError("unknown Lie type family '" + std::string(text) + "' (expected one of A..G)");
}

bool SimpleType::valid() const {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B:
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 3;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

std::string SimpleType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

SimpleType make_type(Family family, int rank) {
  SimpleType t{family, rank};
  if (!t.valid()) throw InputError("invalid simple type " + t.name());
  return t;
}

SimpleType parse_type(std::string_view name) {
  if (name.size() < 2) throw InputError("malformed type name '" + std::string(name) + "'");
  const Family f = parse_family(name.substr(0, 1));
  int rank = 0;
  auto digits = name.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InputError("malformed type name '" + std::string(name) + "'");
  }
  return make_type(f, rank);
}

int simple_dimension(const SimpleType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

int degree(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

std::string to_string(const Root& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

namespace {

using IntMatrix = std::vector<std::vector<int>>;

// Gram matrix of the simple roots, Bourbaki numbering, scaled to integers.
IntMatrix gram_matrix(const SimpleType& t) {
  const int n = t.rank;
  IntMatrix g(n, std::vector<int>(n, 0));
  auto link = [&g](int i, int j, int v) { g[i][j] = g[j][i] = v; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 0; i < n; ++i) g[i][i] = 4;
      g[n - 1][n - 1] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case Family::C:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E: {
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
      for (auto [i, j] : edges) {
        if (i < n && j < n) link(i, j, -1);
      }
      break;
    }
    case Family::F:
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Family::G:
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

bool lex_less_by_degree(const Root& a, const Root& b) {
  const int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  return a < b;
}

}  // namespace

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const Root& r) const {
  if (is_positive_root(r)) return true;
  Root neg(r.size());
  std::transform(r.begin(), r.end(), neg.begin(), [](int c) { return -c; });
  return is_positive_root(neg);
}

std::size_t RootSystem::simple_index(int i) const {
  Root e(rank(), 0);
  e.at(i) = 1;
  return index_.at(e);
}

int RootSystem::inner_product(const Root& a, const Root& b) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += a[i] * gram_[i][j] * b[j];
  }
  return s;
}

RootSystem build_root_system(const SimpleType& t) {
  if (!t.valid()) throw InputError("invalid simple type " + t.name());
  RootSystem rs;
  rs.type_ = t;
  rs.gram_ = gram_matrix(t);
  const int n = t.rank;
  rs.cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((2 * rs.gram_[i][j]) % rs.gram_[i][i] != 0) throw InternalError("non-integral Cartan entry");
      rs.cartan_[i][j] = 2 * rs.gram_[i][j] / rs.gram_[i][i];
    }
  }

  std::set<Root> known;
  std::vector<Root> level;
  for (int i = 0; i < n; ++i) {
    Root e(n, 0);
    e[i] = 1;
    level.push_back(e);
  }
  while (!level.empty()) {
    known.insert(level.begin(), level.end());
    std::set<Root> next;
    for (const Root& g : level) {
      for (int i = 0; i < n; ++i) {
        // p: how far the a_i-string through g extends downwards.
        int p = 0;
        Root down = g;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int pairing = 0;  // <g, a_i^vee>
        for (int j = 0; j < n; ++j) pairing += g[j] * rs.cartan_[i][j];
        if (p - pairing > 0) {
          Root up = g;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
  }

  rs.roots_.assign(known.begin(), known.end());
  std::sort(rs.roots_.begin(), rs.roots_.end(), lex_less_by_degree);
  for (std::size_t k = 0; k < rs.roots_.size(); ++k) rs.index_[rs.roots_[k]] = k;

  if (2 * rs.roots_.size() + static_cast<std::size_t>(n) != static_cast<std::size_t>(simple_dimension(t))) {
    throw InternalError("root enumeration for " + t.name() + " produced " + std::to_string(rs.roots_.size()) +
                        " positive roots");
  }
  return rs;
}

std::vector<std::size_t> degree_histogram(const RootSystem& rs) {
  std::vector<std::size_t> h(1, 0);
  for (const Root& r : rs.positive_roots()) {
    const auto d = static_cast<std::size_t>(degree(r));
    if (h.size() <= d) h.resize(d + 1, 0);
    ++h[d];
  }
  return h;
}

const Root& highest_root(const RootSystem& rs) {
  const auto& roots = rs.positive_roots();
  const int top = degree(roots.back());
  if (roots.size() >= 2 && degree(roots[roots.size() - 2]) == top) {
    throw InternalError("highest root of " + rs.type().name() + " is not unique");
  }
  return roots.back();
}

int simple_predecessor(const RootSystem& rs, const Root& r) {
  if (!rs.is_positive_root(r)) throw InputError("simple_predecessor: " + to_string(r) + " is not a positive root");
  if (degree(r) < 2) throw InputError("simple_predecessor: simple roots have no predecessor");
  for (int i = 0; i < rs.rank(); ++i) {
    Root s = r;
    s[i] -= 1;
    if (rs.is_positive_root(s)) return i;
  }
  throw InternalError("positive root " + to_string(r) + " has no simple predecessor");
}

}  // namespace lienil

#include "lienil/algebra_io.hpp"

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "lienil/chevalley.hpp"
#include "lienil/errors.hpp"

namespace lienil {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json to_json(const AlgebraFile& file) {
  const NilpotentAlgebra& a = file.algebra;
  ordered_json doc;
  doc["format_version"] = kAlgebraFormatVersion;
  doc["dim"] = a.dim();
  ordered_json brackets = ordered_json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const SparseVector& v = a.upper(i, j);
      if (v.empty()) continue;
      ordered_json terms = ordered_json::array();
      for (const auto& [k, c] : v) {
        const auto small = c.small();
        if (!small) throw InputError("structure constant " + c.str() + " does not fit a 64-bit JSON integer");
        terms.push_back(ordered_json{{"k", k}, {"num", small->first}, {"den", small->second}});
      }
      brackets.push_back(ordered_json{{"i", i}, {"j", j}, {"terms", std::move(terms)}});
    }
  }
  doc["brackets"] = std::move(brackets);
  doc["metadata"] = file.metadata.is_null() ? ordered_json::object() : file.metadata;
  return doc;
}

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

std::int64_t require_int(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number_integer()) throw InputError(where + ": field '" + key + "' must be an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw InputError(where + ": field '" + key + "' is out of range");
  }
  return v.get<std::int64_t>();
}

std::size_t require_index(const json& obj, const char* key, std::size_t dim, const std::string& where) {
  const std::int64_t v = require_int(obj, key, where);
  if (v < 0 || static_cast<std::size_t>(v) >= dim) {
    throw InputError(where + ": index '" + key + "' = " + std::to_string(v) + " out of range");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

AlgebraFile from_json(const json& doc, bool check_jacobi) {
  if (!doc.is_object()) throw InputError("algebra file must be a JSON object");
  if (require_int(doc, "format_version", "algebra file") != kAlgebraFormatVersion) {
    throw InputError("unsupported format_version (expected 1)");
  }
  const std::int64_t dim = require_int(doc, "dim", "algebra file");
  if (dim < 0) throw InputError("dim must be non-negative");
  const auto d = static_cast<std::size_t>(dim);
  const json& brackets = require(doc, "brackets", "algebra file");
  if (!brackets.is_array()) throw InputError("'brackets' must be an array");

  AlgebraFile file{NilpotentAlgebra(d)};
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t n = 0; n < brackets.size(); ++n) {
    const std::string where = "brackets[" + std::to_string(n) + "]";
    const json& entry = brackets[n];
    if (!entry.is_object()) throw InputError(where + " must be an object");
    const std::size_t i = require_index(entry, "i", d, where);
    const std::size_t j = require_index(entry, "j", d, where);
    if (i >= j) throw InputError(where + ": pairs must satisfy i < j");
    if (!seen.emplace(i, j).second) throw InputError(where + ": duplicate pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    const json& terms = require(entry, "terms", where);
    if (!terms.is_array()) throw InputError(where + ": 'terms' must be an array");
    SparseVector value;
    std::set<std::size_t> ks;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tw = where + ".terms[" + std::to_string(t) + "]";
      if (!terms[t].is_object()) throw InputError(tw + " must be an object");
      const std::size_t k = require_index(terms[t], "k", d, tw);
      const std::int64_t num = require_int(terms[t], "num", tw);
      const std::int64_t den = require_int(terms[t], "den", tw);
      if (den <= 0) throw InputError(tw + ": den must be positive");
      if (num == INT64_MIN || std::gcd(num, den) != 1) throw InputError(tw + ": fraction is not in lowest terms");
      if (!ks.insert(k).second) throw InputError(tw + ": duplicate output index " + std::to_string(k));
      value.emplace_back(k, Rational(num, den));
    }
    file.algebra.set_bracket(i, j, std::move(value));
  }
  if (auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) throw InputError("'metadata' must be an object");
    file.metadata = ordered_json::parse(it->dump());
  }

  if (check_jacobi) {
    const JacobiReport r = verify_jacobi(file.algebra, 1);
    if (!r.passed) {
      const auto& v = r.violations.front();
      throw InputError("Jacobi identity violated on basis triple (" + std::to_string(v[0]) + ", " + std::to_string(v[1]) +
                       ", " + std::to_string(v[2]) + ")");
    }
  }
  return file;
}

std::string dump_algebra(const AlgebraFile& file) { return to_json(file).dump(2) + "\n"; }

void write_algebra_file(const std::filesystem::path& path, const AlgebraFile& file) {
  const std::string text = dump_algebra(file);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

AlgebraFile read_algebra_file(const std::filesystem::path& path, bool check_jacobi) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": invalid JSON: " + e.what());
  }
  return from_json(doc, check_jacobi);
}

}  // namespace lienil

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "lienil/nilpotent_algebra.hpp"

namespace lienil {

inline constexpr int kAlgebraFormatVersion = 1;

struct AlgebraFile {
  NilpotentAlgebra algebra;
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
};

// {"format_version": 1, "dim": d,
//  "brackets": [{"i": i, "j": j, "terms": [{"k": k, "num": p, "den": q}, ...]}, ...],
//  "metadata": {...}}
// Only pairs i < j with a nonzero bracket are written, in increasing (i, j).
nlohmann::ordered_json to_json(const AlgebraFile& file);

/// Validates the document and, when `check_jacobi` is set, the Jacobi
/// identity. Every problem is reported as InputError.
AlgebraFile from_json(const nlohmann::json& doc, bool check_jacobi = true);

std::string dump_algebra(const AlgebraFile& file);
void write_algebra_file(const std::filesystem::path& path, const AlgebraFile& file);
AlgebraFile read_algebra_file(const std::filesystem::path& path, bool check_jacobi = true);

}  // namespace lienil

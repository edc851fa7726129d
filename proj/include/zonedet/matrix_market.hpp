#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "zonedet/sparse_matrix.hpp"

namespace zonedet {

/// Reads a coordinate Matrix Market file with field real|complex and symmetry
/// general|symmetric|hermitian. Symmetric and Hermitian storage is expanded.
/// Throws ParseError (index = 1-based line) and UnsupportedFormat.
SparseMatrix read_matrix_market(std::istream& in);
SparseMatrix read_matrix_market(std::string_view text);
SparseMatrix read_matrix_market_file(const std::string& path);

/// Always writes `coordinate complex general` with round-trip exact values.
/// Each comment line is emitted prefixed by "% ".
void write_matrix_market(std::ostream& out, const SparseMatrix& m,
                         const std::vector<std::string>& comments = {});
std::string write_matrix_market(const SparseMatrix& m, const std::vector<std::string>& comments = {});

}  // namespace zonedet

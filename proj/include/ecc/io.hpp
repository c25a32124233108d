#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "ecc/graph.hpp"
#include "ecc/int_matrix.hpp"

namespace ecc::io {

// Edge lists: optional header "p <n>", then one "u v" pair per line
// (0-based). Lines starting with '#' are comments. Without a header,
// n = 1 + largest label. A third token on an edge line (a weight) is
// rejected.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const Graph& g, const std::string& comment = {});

// Matrices: "m <order>" then `order` rows of whitespace-separated integers.
IntSymMatrix parse_matrix(std::istream& in);
IntSymMatrix read_matrix(const std::filesystem::path& path);
void write_matrix(std::ostream& out, const IntSymMatrix& a, const std::string& comment = {});

/// Writes to a sibling temporary file and renames it into place.
/// Throws std::runtime_error on I/O failure.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace ecc::io

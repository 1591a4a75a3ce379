#pragma once

// Simplex text format
//
//   # comment lines start with '#'; "# label: <name>" names the next record
//   3            <- dimension d
//   0 0 0        <- d+1 vertex rows with d integers each
//   2 0 0
//   0 3 0
//   0 0 18
//                <- blank line(s) separate records

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "latticebound/lattice_geometry.hpp"

namespace latticebound {

struct SimplexRecord {
  LatticeSimplex simplex;
  std::optional<std::string> label;
  std::size_t line = 0;  ///< line of the dimension header
};

/// Throws ParseError (with the offending line) on malformed integers, wrong
/// vertex or coordinate counts and affinely dependent vertices.
std::vector<SimplexRecord> parse_simplices(std::istream& in);
std::vector<SimplexRecord> parse_simplices(const std::string& text);

std::string format_simplex(const LatticeSimplex& s, const std::optional<std::string>& label = std::nullopt);

/// Reads a census file and validates every record: exactly `expected_k`
/// interior lattice points and no two records unimodularly equivalent.
/// Throws DataIntegrityError naming the record otherwise.
std::vector<SimplexRecord> ingest_census(const std::string& path, std::size_t expected_k);
std::vector<SimplexRecord> ingest_census(std::istream& in, std::size_t expected_k);

}  // namespace latticebound

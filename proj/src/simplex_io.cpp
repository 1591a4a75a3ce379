#include "latticebound/simplex_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "latticebound/parallel.hpp"
#include "latticebound/unimodular.hpp"

namespace latticebound {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<Integer> parse_integers(const std::string& line, std::size_t line_no) {
  std::istringstream ss(line);
  std::vector<Integer> out;
  std::string tok;
  while (ss >> tok) {
    Integer v;
    const std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (start == tok.size() || tok.find_first_not_of("0123456789", start) != std::string::npos ||
        v.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0) {
      throw ParseError(line_no, "malformed integer '" + tok + "'");
    }
    out.push_back(std::move(v));
  }
  return out;
}

struct PendingRecord {
  std::size_t header_line = 0;
  std::size_t dim = 0;
  std::vector<LatticePoint> rows;
  std::optional<std::string> label;
};

SimplexRecord finish(PendingRecord& p) {
  if (p.rows.size() != p.dim + 1) {
    throw ParseError(p.header_line, "expected " + std::to_string(p.dim + 1) + " vertices, got " +
                                        std::to_string(p.rows.size()));
  }
  try {
    return SimplexRecord{LatticeSimplex(std::move(p.rows)), std::move(p.label), p.header_line};
  } catch (const DegeneracyError&) {
    throw ParseError(p.header_line, "vertices are affinely dependent");
  }
}

}  // namespace

std::vector<SimplexRecord> parse_simplices(std::istream& in) {
  std::vector<SimplexRecord> out;
  std::optional<PendingRecord> pending;
  std::optional<std::string> label;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (!line.empty() && line[0] == '#') {
      const std::string body = trim(line.substr(1));
      if (body.rfind("label:", 0) == 0) label = trim(body.substr(6));
      continue;
    }
    if (line.empty()) {
      if (pending) {
        out.push_back(finish(*pending));
        pending.reset();
      }
      continue;
    }
    auto values = parse_integers(line, line_no);
    if (!pending) {
      if (values.size() != 1 || values[0] < 1 || !values[0].fits_ulong_p())
        throw ParseError(line_no, "expected a positive dimension");
      pending = PendingRecord{line_no, values[0].get_ui(), {}, std::move(label)};
      label.reset();
      continue;
    }
    if (values.size() != pending->dim) {
      throw ParseError(line_no, "expected " + std::to_string(pending->dim) + " coordinates, got " +
                                    std::to_string(values.size()));
    }
    if (pending->rows.size() == pending->dim + 1) {
      throw ParseError(line_no, "expected " + std::to_string(pending->dim + 1) + " vertices, got more");
    }
    pending->rows.push_back(std::move(values));
  }
  if (pending) out.push_back(finish(*pending));
  return out;
}

std::vector<SimplexRecord> parse_simplices(const std::string& text) {
  std::istringstream in(text);
  return parse_simplices(in);
}

std::string format_simplex(const LatticeSimplex& s, const std::optional<std::string>& label) {
  std::string out;
  if (label) out += "# label: " + *label + "\n";
  out += std::to_string(s.dim()) + "\n";
  for (const auto& v : s.vertices()) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (c > 0) out += ' ';
      out += v[c].get_str();
    }
    out += '\n';
  }
  return out;
}

std::vector<SimplexRecord> ingest_census(std::istream& in, std::size_t expected_k) {
  auto records = parse_simplices(in);
  auto name = [&](std::size_t i) {
    return "record " + std::to_string(i + 1) + " (line " + std::to_string(records[i].line) + ")" +
           (records[i].label ? " '" + *records[i].label + "'" : "");
  };

  std::vector<std::size_t> counts(records.size());
  std::vector<std::optional<CanonicalForm>> forms(records.size());
  parallel_for(records.size(), [&](std::size_t i) {
    counts[i] = interior_points(records[i].simplex).size();
    forms[i] = canonical_form(records[i].simplex);
  });

  std::map<CanonicalForm, std::size_t> seen;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (counts[i] != expected_k) {
      throw DataIntegrityError(name(i) + " has " + std::to_string(counts[i]) + " interior lattice points, expected " +
                               std::to_string(expected_k));
    }
    auto [it, inserted] = seen.emplace(*forms[i], i);
    if (!inserted) throw DuplicateRecordError(name(i) + " duplicates " + name(it->second));
  }
  return records;
}

std::vector<SimplexRecord> ingest_census(const std::string& path, std::size_t expected_k) {
  std::ifstream in(path);
  if (!in) throw DataIntegrityError("cannot open census file '" + path + "'");
  return ingest_census(in, expected_k);
}

}  // namespace latticebound

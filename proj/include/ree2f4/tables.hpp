#ifndef REE2F4_TABLES_HPP
#define REE2F4_TABLES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ree2f4/sympoly.hpp"

namespace ree2f4 {

/// One parsed line-oriented table file:
///   # comment
///   table <id>
///   attr <key> <value...>
///   columns <name>...
///   row <cell>...
/// Cells are whitespace-separated; expressions therefore contain no spaces.
struct RawTable {
  struct Row {
    std::vector<std::string> cells;
    int line = 0;  // 1-based source line, for error reporting
  };
  std::string id;
  std::string file;
  std::map<std::string, std::string> attrs;
  std::vector<std::string> columns;
  std::vector<Row> rows;

  const std::string& attr(const std::string& key) const;
  [[noreturn]] void fail(int line, const std::string& msg) const;
};

RawTable read_table_file(const std::string& path);

/// FNV-1a 64-bit over the file bytes, lowercase hex.
std::string fnv1a64_hex(const std::string& path);

/// data-directory catalog: manifest.txt lines are "<table-id> <file> <fnv64>".
class Manifest {
 public:
  explicit Manifest(std::string data_dir);

  /// Loads a table by id, verifying file presence, checksum and id match.
  RawTable load(const std::string& id) const;
  std::vector<std::string> ids() const;
  const std::string& data_dir() const { return dir_; }

 private:
  struct Entry {
    std::string file;
    std::string checksum;
  };
  std::string dir_;
  std::map<std::string, Entry> entries_;
};

/// Parses a cell expression and replaces factor-name unknowns (phi1, phi8p,
/// ...) by their polynomials; remaining unknowns stay symbolic.
SymPoly parse_cell(const std::string& text);
/// parse_cell, then demand a plain polynomial.
QPoly parse_cell_qpoly(const std::string& text);

}  // namespace ree2f4

#endif  // REE2F4_TABLES_HPP

#include "ree2f4/tables.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ree2f4/expr.hpp"
#include "ree2f4/factors.hpp"

namespace ree2f4 {

namespace {

struct TableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

const std::string& RawTable::attr(const std::string& key) const {
  const auto it = attrs.find(key);
  if (it == attrs.end())
    throw TableError("table " + id + ": missing attribute '" + key + "'");
  return it->second;
}

void RawTable::fail(int line, const std::string& msg) const {
  throw TableError(file + ":" + std::to_string(line) + " (table " + id +
                   "): " + msg);
}

RawTable read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TableError("cannot open table file: " + path);
  RawTable t;
  t.file = path;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string kw = toks[0];
    toks.erase(toks.begin());
    if (kw == "table") {
      if (toks.size() != 1) throw TableError(path + ": malformed 'table' line");
      t.id = toks[0];
    } else if (kw == "attr") {
      if (toks.size() < 2) throw TableError(path + ": malformed 'attr' line");
      std::string value = toks[1];
      for (size_t i = 2; i < toks.size(); ++i) value += " " + toks[i];
      t.attrs[toks[0]] = value;
    } else if (kw == "columns") {
      t.columns = toks;
    } else if (kw == "row") {
      t.rows.push_back({toks, lineno});
    } else {
      throw TableError(path + ":" + std::to_string(lineno) +
                       ": unknown keyword '" + kw + "'");
    }
  }
  if (t.id.empty()) throw TableError(path + ": missing 'table' line");
  return t;
}

std::string fnv1a64_hex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TableError("cannot open file for checksum: " + path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

Manifest::Manifest(std::string data_dir) : dir_(std::move(data_dir)) {
  const std::string path = dir_ + "/manifest.txt";
  std::ifstream in(path);
  if (!in) throw TableError("cannot open manifest: " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != 3)
      throw TableError("manifest: malformed line '" + line + "'");
    entries_[toks[0]] = {toks[1], toks[2]};
  }
}

RawTable Manifest::load(const std::string& id) const {
  const auto it = entries_.find(id);
  if (it == entries_.end())
    throw TableError("manifest: unknown table id '" + id + "'");
  const std::string path = dir_ + "/" + it->second.file;
  const std::string sum = fnv1a64_hex(path);
  if (sum != it->second.checksum)
    throw TableError("checksum mismatch for " + path + ": manifest " +
                     it->second.checksum + ", file " + sum);
  RawTable t = read_table_file(path);
  if (t.id != id)
    throw TableError(path + ": table id '" + t.id + "' does not match manifest id '" +
                     id + "'");
  return t;
}

std::vector<std::string> Manifest::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, e] : entries_) out.push_back(id);
  return out;
}

SymPoly parse_cell(const std::string& text) {
  SymPoly p = parse_expr(text);
  for (const auto& f : factors::all()) {
    p = p.substituted(f.name, SymPoly(f.poly));
  }
  return p;
}

QPoly parse_cell_qpoly(const std::string& text) {
  const SymPoly p = parse_cell(text);
  if (!p.is_constant())
    throw TableError("cell is not a plain polynomial: " + text);
  return p.constant();
}

}  // namespace ree2f4

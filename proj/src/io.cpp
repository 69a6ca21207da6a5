#include "shelf/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace shelf::io {

namespace {

using json = nlohmann::json;

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw SchemaError(e.what());
  }
}

const json &field(const json &doc, const char *name) {
  if (!doc.is_object())
    throw SchemaError("document must be an object");
  const auto it = doc.find(name);
  if (it == doc.end())
    throw SchemaError(std::string("missing field '") + name + "'");
  return *it;
}

std::size_t natural(const json &v, const std::string &where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw SchemaError(where + ": expected a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<std::vector<Element>> square(const json &v, std::size_t n, const std::string &where) {
  if (!v.is_array())
    throw SchemaError(where + ": expected an array of rows");
  if (v.size() != n)
    throw SchemaError(where + ": expected " + std::to_string(n) + " rows, got " +
                      std::to_string(v.size()));
  std::vector<std::vector<Element>> rows(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string at = where + "[" + std::to_string(r) + "]";
    if (!v[r].is_array())
      throw SchemaError(at + ": expected an array");
    if (v[r].size() != n)
      throw SchemaError(at + ": expected " + std::to_string(n) + " entries, got " +
                        std::to_string(v[r].size()));
    for (std::size_t c = 0; c < n; ++c) {
      const std::string cell = at + "[" + std::to_string(c) + "]";
      const std::size_t x = natural(v[r][c], cell);
      if (x >= n)
        throw SchemaError(cell + ": entry " + std::to_string(x) + " is not below " +
                          std::to_string(n));
      rows[r].push_back(static_cast<Element>(x));
    }
  }
  return rows;
}

std::size_t carrier(const json &doc, const char *name) {
  const std::size_t n = natural(field(doc, name), name);
  if (n == 0)
    throw SchemaError(std::string(name) + ": must be at least 1");
  return n;
}

void write_rows(std::ostringstream &out, const std::vector<std::vector<Element>> &rows,
                const std::string &indent) {
  out << "[\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << indent << "  [";
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      out << (c ? ", " : "") << rows[r][c];
    out << "]" << (r + 1 < rows.size() ? "," : "") << "\n";
  }
  out << indent << "]";
}

} // namespace

std::string dump_table(const OpTable &op) {
  std::ostringstream out;
  out << "{\n  \"n\": " << op.size() << ",\n  \"table\": ";
  write_rows(out, op.rows(), "  ");
  out << "\n}\n";
  return out.str();
}

OpTable parse_table(std::string_view text) {
  const json doc = parse_document(text);
  const std::size_t n = carrier(doc, "n");
  return make_table(n, square(field(doc, "table"), n, "table"));
}

std::string dump_set(std::size_t n, const std::vector<OpTable> &ops) {
  std::ostringstream out;
  out << "{\n  \"n\": " << n << ",\n  \"ops\": [";
  for (std::size_t i = 0; i < ops.size(); ++i) {
    out << (i ? ",\n    " : "\n    ");
    write_rows(out, ops[i].rows(), "    ");
  }
  out << (ops.empty() ? "]" : "\n  ]") << "\n}\n";
  return out.str();
}

OpFamily parse_set(std::string_view text) {
  const json doc = parse_document(text);
  OpFamily family;
  family.n = carrier(doc, "n");
  const json &ops = field(doc, "ops");
  if (!ops.is_array())
    throw SchemaError("ops: expected an array of tables");
  for (std::size_t i = 0; i < ops.size(); ++i)
    family.ops.push_back(
        make_table(family.n, square(ops[i], family.n, "ops[" + std::to_string(i) + "]")));
  return family;
}

std::string dump_group(const FiniteGroup &g) {
  std::ostringstream out;
  out << "{\n  \"m\": " << g.order() << ",\n  \"mul\": ";
  write_rows(out, g.table(), "  ");
  out << ",\n  \"identity\": " << g.identity() << "\n}\n";
  return out.str();
}

FiniteGroup parse_group(std::string_view text) {
  const json doc = parse_document(text);
  const std::size_t m = carrier(doc, "m");
  auto mul = square(field(doc, "mul"), m, "mul");
  const std::size_t e = natural(field(doc, "identity"), "identity");
  if (e >= m)
    throw SchemaError("identity: " + std::to_string(e) + " is not below " + std::to_string(m));
  try {
    return group_from_table(m, mul, static_cast<Element>(e));
  } catch (const std::invalid_argument &err) {
    throw SchemaError(std::string("mul: ") + err.what());
  }
}

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path &path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  out << contents;
}

namespace {

template <typename Fn>
auto with_path(const std::filesystem::path &path, Fn &&parse) {
  try {
    return parse(read_file(path));
  } catch (const SchemaError &e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

} // namespace

OpTable load_table(const std::filesystem::path &path) {
  return with_path(path, [](const std::string &t) { return parse_table(t); });
}

void save_table(const std::filesystem::path &path, const OpTable &op) {
  write_file(path, dump_table(op));
}

OpFamily load_set(const std::filesystem::path &path) {
  return with_path(path, [](const std::string &t) { return parse_set(t); });
}

void save_set(const std::filesystem::path &path, std::size_t n, const std::vector<OpTable> &ops) {
  write_file(path, dump_set(n, ops));
}

FiniteGroup load_group(const std::filesystem::path &path) {
  return with_path(path, [](const std::string &t) { return parse_group(t); });
}

FiniteGroup resolve_group(const std::string &spec) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string family = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    std::size_t k = 0;
    try {
      std::size_t used = 0;
      k = std::stoul(arg, &used);
      if (used != arg.size())
        throw std::invalid_argument(arg);
    } catch (const std::exception &) {
      throw std::invalid_argument("bad group parameter in '" + spec + "'");
    }
    if (family == "cyclic")
      return cyclic(k);
    if (family == "dihedral")
      return dihedral(k);
    if (family == "symmetric")
      return symmetric(k);
    throw std::invalid_argument("unknown group family '" + family + "'");
  }
  return load_group(spec);
}

} // namespace shelf::io

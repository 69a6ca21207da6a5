#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shelf/group.hpp"
#include "shelf/op_table.hpp"

namespace shelf::io {

/// Malformed document. The message names the offending field, or the line
/// and column for syntax errors.
class SchemaError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An indexed family of tables as stored in a set file; not yet checked for
/// distributivity.
struct OpFamily {
  std::size_t n = 0;
  std::vector<OpTable> ops;
};

// Documents are rendered with a fixed field order and one table row per
// line, so equal values always produce identical bytes.

std::string dump_table(const OpTable &op);
OpTable parse_table(std::string_view text);

std::string dump_set(std::size_t n, const std::vector<OpTable> &ops);
OpFamily parse_set(std::string_view text);

std::string dump_group(const FiniteGroup &g);
FiniteGroup parse_group(std::string_view text);

std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, std::string_view contents);

OpTable load_table(const std::filesystem::path &path);
void save_table(const std::filesystem::path &path, const OpTable &op);
OpFamily load_set(const std::filesystem::path &path);
void save_set(const std::filesystem::path &path, std::size_t n, const std::vector<OpTable> &ops);
FiniteGroup load_group(const std::filesystem::path &path);

/// `cyclic:k`, `dihedral:k`, `symmetric:k`, or a path to a group file.
FiniteGroup resolve_group(const std::string &spec);

} // namespace shelf::io

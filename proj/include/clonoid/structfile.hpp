#pragma once

#include <map>
#include <string>

#include "clonoid/checker.hpp"

namespace clonoid {

/// One `[structure]` block: name, kind, constructor and parameters.
struct StructBlock {
  std::string name;
  std::map<std::string, std::string> fields;
  size_t line = 0;  // header line, for positioned errors
};

struct StructFile {
  std::vector<StructBlock> blocks;
  const StructBlock* find(const std::string& name) const;
};

/// Parse the key = value block format; ParseError with line positions.
StructFile parse_struct_file(const std::string& text);

/// Build the named structure (default: the first block), resolving `input`
/// references to sibling blocks.
Structure build_structure(const StructFile& file, const std::string& name = "");

/// Parse an element literal against a structure's carrier: integers,
/// `op arity=K table=[..]`, or `[a0,...,ak | const:X]` sequences.
Element parse_element(const Structure& s, const std::string& literal);

/// Serialize blocks back to the file format (used by `translate --out`).
std::string write_struct_file(const StructFile& file);

}  // namespace clonoid

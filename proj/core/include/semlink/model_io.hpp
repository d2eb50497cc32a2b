#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "semlink/model.hpp"
#include "semlink/vector_logic.hpp"

namespace semlink {

/// Contents of a model file: the extensional model plus any user-defined
/// truth-functional operators (tables in operator column order).
struct ModelDocument {
  Model model;
  std::map<std::string, TruthTable> operators;
};

/// Parses the JSON model format:
///
///   {
///     "entities":  ["e1", "e2"],
///     "constants": {"a": "e1"},
///     "functions": {"f": {"arity": 1, "table": [["e1", "e2"], ["e2", "e1"]]}},
///     "relations": {"P": {"arity": 1, "tuples": [["e1"]]}},
///     "operators": {"nand": {"arity": 2, "table": [0, 1, 1, 1]}}
///   }
///
/// Only "entities" is required. Function tables must list every argument
/// tuple exactly once. Throws ModelError naming the offending entry.
ModelDocument parse_model_document(std::string_view json_text);
ModelDocument load_model_document(const std::filesystem::path& path);

inline Model load_model(const std::filesystem::path& path) {
  return load_model_document(path).model;
}

/// Canonical JSON for a document (two-space indent). Function tables are
/// written in lexicographic argument order.
std::string to_json(const ModelDocument& doc);

}  // namespace semlink

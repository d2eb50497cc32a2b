#include "semlink/model_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "semlink/error.hpp"

namespace semlink {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ModelError(where + ": " + what);
}

std::size_t read_arity(const json& entry, const std::string& where) {
  if (!entry.is_object()) fail(where, "expected an object");
  if (!entry.contains("arity") || !entry["arity"].is_number_unsigned()) {
    fail(where, "missing or invalid 'arity'");
  }
  const auto arity = entry["arity"].get<std::size_t>();
  if (arity == 0) fail(where, "arity must be >= 1");
  return arity;
}

class Loader {
 public:
  explicit Loader(const json& doc) : doc_(doc) {
    if (!doc_.is_object()) fail("model", "top level must be an object");
  }

  ModelDocument load() {
    read_entities();
    std::map<std::string, EntityId> constants = read_constants();
    std::map<std::string, FunctionTable> functions = read_functions();
    std::map<std::string, Relation> relations = read_relations();
    std::map<std::string, TruthTable> operators = read_operators();
    return ModelDocument{
        Model(entities_, std::move(constants), std::move(functions), std::move(relations)),
        std::move(operators)};
  }

 private:
  const json* section(const char* key, bool array) const {
    if (!doc_.contains(key)) return nullptr;
    const json& s = doc_[key];
    if (array ? !s.is_array() : !s.is_object()) {
      fail(key, array ? "expected an array" : "expected an object");
    }
    return &s;
  }

  void read_entities() {
    const json* s = section("entities", true);
    if (!s) fail("entities", "missing");
    if (s->empty()) fail("entities", "domain must be non-empty");
    for (std::size_t i = 0; i < s->size(); ++i) {
      const json& e = (*s)[i];
      const std::string where = "entities[" + std::to_string(i) + "]";
      if (!e.is_string()) fail(where, "entity ids must be strings");
      const auto name = e.get<std::string>();
      if (ids_.contains(name)) fail(where, "duplicate entity '" + name + "'");
      ids_.emplace(name, EntityId{static_cast<std::uint32_t>(entities_.size())});
      entities_.push_back(name);
    }
  }

  EntityId entity(const json& e, const std::string& where) const {
    if (!e.is_string()) fail(where, "expected an entity id string");
    auto it = ids_.find(e.get<std::string>());
    if (it == ids_.end()) fail(where, "'" + e.get<std::string>() + "' is not in entities");
    return it->second;
  }

  std::map<std::string, EntityId> read_constants() const {
    std::map<std::string, EntityId> out;
    if (const json* s = section("constants", false)) {
      for (const auto& [name, value] : s->items()) {
        out.emplace(name, entity(value, "constants." + name));
      }
    }
    return out;
  }

  std::string tuple_text(const Tuple& t) const {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + entities_[t[i].index];
    return out + ")";
  }

  std::map<std::string, FunctionTable> read_functions() const {
    std::map<std::string, FunctionTable> out;
    const json* s = section("functions", false);
    if (!s) return out;
    const std::size_t n = entities_.size();
    for (const auto& [name, entry] : s->items()) {
      const std::string where = "functions." + name;
      const std::size_t arity = read_arity(entry, where);
      if (!entry.contains("table") || !entry["table"].is_array()) fail(where, "missing 'table'");
      std::size_t rows = 1;
      for (std::size_t k = 0; k < arity; ++k) rows *= n;
      std::vector<std::optional<EntityId>> values(rows);
      const json& table = entry["table"];
      for (std::size_t r = 0; r < table.size(); ++r) {
        const std::string row_where = where + ".table[" + std::to_string(r) + "]";
        const json& row = table[r];
        if (!row.is_array() || row.size() != arity + 1) {
          fail(row_where, "expected " + std::to_string(arity) + " arguments and a result");
        }
        Tuple args;
        for (std::size_t k = 0; k < arity; ++k) args.push_back(entity(row[k], row_where));
        const EntityId result = entity(row[arity], row_where);
        auto& slot = values[tuple_index(args, n)];
        if (slot) fail(row_where, "duplicate row for " + tuple_text(args));
        slot = result;
      }
      std::vector<EntityId> dense;
      dense.reserve(rows);
      for (std::size_t i = 0; i < rows; ++i) {
        if (!values[i]) {
          fail(where, "table is not total: no row for " + tuple_text(tuple_at(i, arity, n)));
        }
        dense.push_back(*values[i]);
      }
      out.emplace(name, FunctionTable(arity, n, std::move(dense)));
    }
    return out;
  }

  std::map<std::string, Relation> read_relations() const {
    std::map<std::string, Relation> out;
    const json* s = section("relations", false);
    if (!s) return out;
    for (const auto& [name, entry] : s->items()) {
      const std::string where = "relations." + name;
      const std::size_t arity = read_arity(entry, where);
      std::set<Tuple> tuples;
      if (entry.contains("tuples")) {
        const json& ts = entry["tuples"];
        if (!ts.is_array()) fail(where, "'tuples' must be an array");
        for (std::size_t r = 0; r < ts.size(); ++r) {
          const std::string row_where = where + ".tuples[" + std::to_string(r) + "]";
          if (!ts[r].is_array() || ts[r].size() != arity) {
            fail(row_where, "expected a tuple of " + std::to_string(arity) + " entities");
          }
          Tuple t;
          for (const auto& e : ts[r]) t.push_back(entity(e, row_where));
          tuples.insert(std::move(t));
        }
      }
      out.emplace(name, Relation(arity, entities_.size(), std::move(tuples)));
    }
    return out;
  }

  std::map<std::string, TruthTable> read_operators() const {
    std::map<std::string, TruthTable> out;
    const json* s = section("operators", false);
    if (!s) return out;
    for (const auto& [name, entry] : s->items()) {
      const std::string where = "operators." + name;
      const std::size_t arity = read_arity(entry, where);
      if (arity > 30) fail(where, "arity too large");
      if (!entry.contains("table") || !entry["table"].is_array()) fail(where, "missing 'table'");
      const json& table = entry["table"];
      if (table.size() != (std::size_t{1} << arity)) {
        fail(where, "table needs " + std::to_string(std::size_t{1} << arity) + " entries");
      }
      std::vector<Bit> bits;
      for (std::size_t j = 0; j < table.size(); ++j) {
        if (!table[j].is_number_unsigned() || table[j].get<unsigned>() > 1) {
          fail(where + ".table[" + std::to_string(j) + "]", "expected 0 or 1");
        }
        bits.push_back(static_cast<Bit>(table[j].get<unsigned>()));
      }
      out.emplace(name, TruthTable(arity, std::move(bits)));
    }
    return out;
  }

  const json& doc_;
  std::vector<std::string> entities_;
  std::map<std::string, EntityId> ids_;
};

}  // namespace

ModelDocument parse_model_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("model file is not valid JSON: ") + e.what());
  }
  return Loader(doc).load();
}

ModelDocument load_model_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_document(buf.str());
}

std::string to_json(const ModelDocument& doc) {
  const Model& m = doc.model;
  json out;
  out["entities"] = m.entities();
  json constants = json::object();
  for (const auto& [name, id] : m.constants()) constants[name] = m.entity_name(id);
  out["constants"] = constants;

  json functions = json::object();
  for (const auto& [name, f] : m.functions()) {
    json table = json::array();
    for (std::size_t i = 0; i < f.values().size(); ++i) {
      json row = json::array();
      for (EntityId id : tuple_at(i, f.arity(), m.entity_count())) row.push_back(m.entity_name(id));
      row.push_back(m.entity_name(f.values()[i]));
      table.push_back(std::move(row));
    }
    functions[name] = {{"arity", f.arity()}, {"table", std::move(table)}};
  }
  out["functions"] = functions;

  json relations = json::object();
  for (const auto& [name, r] : m.relations()) {
    json tuples = json::array();
    for (const auto& t : r.tuples()) {
      json row = json::array();
      for (EntityId id : t) row.push_back(m.entity_name(id));
      tuples.push_back(std::move(row));
    }
    relations[name] = {{"arity", r.arity()}, {"tuples", std::move(tuples)}};
  }
  out["relations"] = relations;

  if (!doc.operators.empty()) {
    json ops = json::object();
    for (const auto& [name, t] : doc.operators) {
      ops[name] = {{"arity", t.arity()}, {"table", t.outputs()}};
    }
    out["operators"] = ops;
  }
  return out.dump(2) + "\n";
}

}  // namespace semlink

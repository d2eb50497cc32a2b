#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "semlink/term.hpp"

namespace semlink {

/// Opaque entity handle; `index` is the declaration position in the model.
struct EntityId {
  std::uint32_t index = 0;

  friend auto operator<=>(const EntityId&, const EntityId&) = default;
};

using Tuple = std::vector<EntityId>;

/// Index of `args` in the lexicographic enumeration of D^n (first argument
/// most significant).
std::size_t tuple_index(std::span<const EntityId> args, std::size_t domain_size);
Tuple tuple_at(std::size_t index, std::size_t arity, std::size_t domain_size);

/// Total function D^n -> D stored as a dense table in `tuple_index` order.
class FunctionTable {
 public:
  FunctionTable(std::size_t arity, std::size_t domain_size, std::vector<EntityId> values);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t domain_size() const noexcept { return domain_size_; }
  const std::vector<EntityId>& values() const noexcept { return values_; }

  EntityId operator()(std::span<const EntityId> args) const;

 private:
  std::size_t arity_;
  std::size_t domain_size_;
  std::vector<EntityId> values_;
};

/// n-ary relation over D: a set of n-tuples. Empty and full relations are fine.
class Relation {
 public:
  Relation(std::size_t arity, std::size_t domain_size, std::set<Tuple> tuples);

  std::size_t arity() const noexcept { return arity_; }
  const std::set<Tuple>& tuples() const noexcept { return tuples_; }
  bool contains(std::span<const EntityId> args) const;

 private:
  std::size_t arity_;
  std::set<Tuple> tuples_;
};

/// Finite extensional model: entity domain D_e plus the interpretation of
/// every non-logical constant. D_t = {0,1} is implicit.
class Model {
 public:
  Model(std::vector<std::string> entities, std::map<std::string, EntityId> constants,
        std::map<std::string, FunctionTable> functions,
        std::map<std::string, Relation> relations);

  std::size_t entity_count() const noexcept { return entities_.size(); }
  const std::vector<std::string>& entities() const noexcept { return entities_; }
  const std::string& entity_name(EntityId id) const;
  std::optional<EntityId> find_entity(const std::string& name) const;
  /// Throws DomainError for unknown names.
  EntityId entity(const std::string& name) const;
  bool contains(EntityId id) const noexcept { return id.index < entities_.size(); }

  const std::map<std::string, EntityId>& constants() const noexcept { return constants_; }
  const std::map<std::string, FunctionTable>& functions() const noexcept { return functions_; }
  const std::map<std::string, Relation>& relations() const noexcept { return relations_; }

  EntityId constant(const std::string& name) const;
  const FunctionTable& function(const std::string& name) const;
  const Relation& relation(const std::string& name) const;

  /// Vocabulary interpreted by this model (no variables).
  Signature signature() const;
  /// Throws ModelError if a symbol interpreted here is missing from `sig` or
  /// has a different arity there.
  void check_against(const Signature& sig) const;

  std::string format_tuple(std::span<const EntityId> args) const;

 private:
  std::vector<std::string> entities_;
  std::map<std::string, EntityId> by_name_;
  std::map<std::string, EntityId> constants_;
  std::map<std::string, FunctionTable> functions_;
  std::map<std::string, Relation> relations_;
};

/// Variable assignment g : V -> D_e.
class Assignment {
 public:
  Assignment() = default;

  bool binds(const std::string& var) const { return bindings_.contains(var); }
  /// Throws UnboundVariableError.
  EntityId lookup(const std::string& var) const;
  const std::map<std::string, EntityId>& bindings() const noexcept { return bindings_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  friend Assignment variant_assignment(const Assignment&, const std::string&, EntityId,
                                       const Model&);
  std::map<std::string, EntityId> bindings_;
};

/// g[x -> k]: rebinds `var` to `value`, leaving every other binding of `g`.
/// Throws DomainError when `value` is not in the model's domain.
Assignment variant_assignment(const Assignment& g, const std::string& var, EntityId value,
                              const Model& model);

/// Element of D_e or D_t.
class Value {
 public:
  static Value entity(EntityId id) { return Value(false, id, false); }
  static Value truth(bool bit) { return Value(true, EntityId{}, bit); }

  bool is_truth() const noexcept { return is_truth_; }
  bool is_entity() const noexcept { return !is_truth_; }
  /// Throw TypeError on the wrong kind.
  EntityId as_entity() const;
  bool as_truth() const;

  std::string to_string(const Model& model) const;

  friend bool operator==(const Value&, const Value&) = default;

 private:
  Value(bool is_truth, EntityId id, bool bit) : is_truth_(is_truth), id_(id), bit_(bit) {}

  bool is_truth_;
  EntityId id_;
  bool bit_;
};

/// Classical two-valued semantics of the named connectives.
bool classical_connective(Connective op, std::span<const bool> args);

/// Optional instrumentation for `denote`.
struct EvalTrace {
  std::size_t max_depth = 0;  // deepest active recursion level, root = 1
  std::size_t calls = 0;
};

/// Recursive denotation [[term]]^{M,g}.
/// Throws UnboundVariableError, UnknownSymbolError, ArityError, TypeError.
Value denote(const Term& term, const Model& model, const Assignment& g,
             EvalTrace* trace = nullptr);

}  // namespace semlink

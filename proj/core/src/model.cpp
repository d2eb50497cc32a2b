#include "semlink/model.hpp"

#include "semlink/error.hpp"

namespace semlink {

std::size_t tuple_index(std::span<const EntityId> args, std::size_t domain_size) {
  std::size_t index = 0;
  for (EntityId id : args) {
    if (id.index >= domain_size) throw DomainError("entity index out of range");
    index = index * domain_size + id.index;
  }
  return index;
}

Tuple tuple_at(std::size_t index, std::size_t arity, std::size_t domain_size) {
  Tuple out(arity);
  for (std::size_t i = arity; i-- > 0;) {
    out[i] = EntityId{static_cast<std::uint32_t>(index % domain_size)};
    index /= domain_size;
  }
  return out;
}

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

// --- FunctionTable / Relation ---------------------------------------------

FunctionTable::FunctionTable(std::size_t arity, std::size_t domain_size,
                             std::vector<EntityId> values)
    : arity_(arity), domain_size_(domain_size), values_(std::move(values)) {
  if (arity_ == 0) throw ModelError("function table needs arity >= 1");
  if (domain_size_ == 0) throw ModelError("function table over an empty domain");
  if (values_.size() != power(domain_size_, arity_)) {
    throw ModelError("function table has " + std::to_string(values_.size()) +
                     " rows, expected " + std::to_string(power(domain_size_, arity_)));
  }
  for (EntityId v : values_) {
    if (v.index >= domain_size_) throw ModelError("function value outside the domain");
  }
}

EntityId FunctionTable::operator()(std::span<const EntityId> args) const {
  if (args.size() != arity_) {
    throw ArityError("function applied to " + std::to_string(args.size()) +
                     " arguments, expected " + std::to_string(arity_));
  }
  return values_[tuple_index(args, domain_size_)];
}

Relation::Relation(std::size_t arity, std::size_t domain_size, std::set<Tuple> tuples)
    : arity_(arity), tuples_(std::move(tuples)) {
  if (arity_ == 0) throw ModelError("relation needs arity >= 1");
  for (const auto& t : tuples_) {
    if (t.size() != arity_) throw ModelError("relation tuple has the wrong arity");
    for (EntityId id : t) {
      if (id.index >= domain_size) throw ModelError("relation tuple outside the domain");
    }
  }
}

bool Relation::contains(std::span<const EntityId> args) const {
  if (args.size() != arity_) {
    throw ArityError("relation applied to " + std::to_string(args.size()) +
                     " arguments, expected " + std::to_string(arity_));
  }
  return tuples_.contains(Tuple(args.begin(), args.end()));
}

// --- Model -----------------------------------------------------------------

Model::Model(std::vector<std::string> entities, std::map<std::string, EntityId> constants,
             std::map<std::string, FunctionTable> functions,
             std::map<std::string, Relation> relations)
    : entities_(std::move(entities)),
      constants_(std::move(constants)),
      functions_(std::move(functions)),
      relations_(std::move(relations)) {
  if (entities_.empty()) throw ModelError("entity domain must be non-empty");
  for (std::size_t i = 0; i < entities_.size(); ++i) {
    if (!by_name_.emplace(entities_[i], EntityId{static_cast<std::uint32_t>(i)}).second) {
      throw ModelError("duplicate entity '" + entities_[i] + "'");
    }
  }
  for (const auto& [name, id] : constants_) {
    if (!contains(id)) throw ModelError("constant '" + name + "' denotes no entity");
  }
  for (const auto& [name, f] : functions_) {
    if (f.domain_size() != entities_.size()) {
      throw ModelError("function '" + name + "' is not tabulated over D_e");
    }
  }
  // Building the signature enforces the shared namespace and reserved names.
  try {
    (void)signature();
  } catch (const SignatureError& e) {
    throw ModelError(e.what());
  }
}

const std::string& Model::entity_name(EntityId id) const {
  if (!contains(id)) throw DomainError("entity index " + std::to_string(id.index) + " out of range");
  return entities_[id.index];
}

std::optional<EntityId> Model::find_entity(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

EntityId Model::entity(const std::string& name) const {
  if (auto id = find_entity(name)) return *id;
  throw DomainError("unknown entity '" + name + "'");
}

EntityId Model::constant(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) throw UnknownSymbolError("uninterpreted constant '" + name + "'");
  return it->second;
}

const FunctionTable& Model::function(const std::string& name) const {
  auto it = functions_.find(name);
  if (it == functions_.end()) throw UnknownSymbolError("uninterpreted function '" + name + "'");
  return it->second;
}

const Relation& Model::relation(const std::string& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw UnknownSymbolError("uninterpreted predicate '" + name + "'");
  return it->second;
}

Signature Model::signature() const {
  Signature sig;
  for (const auto& [name, id] : constants_) sig.add_constant(name);
  for (const auto& [name, f] : functions_) sig.add_function(name, f.arity());
  for (const auto& [name, r] : relations_) sig.add_predicate(name, r.arity());
  return sig;
}

void Model::check_against(const Signature& sig) const {
  for (const auto& [name, id] : constants_) {
    auto it = sig.constants().find(name);
    if (it == sig.constants().end() || it->second != SemType::entity()) {
      throw ModelError("constant '" + name + "' is not declared as an entity constant");
    }
  }
  for (const auto& [name, f] : functions_) {
    auto it = sig.functions().find(name);
    if (it == sig.functions().end() || it->second != f.arity()) {
      throw ModelError("function '" + name + "' does not match the signature");
    }
  }
  for (const auto& [name, r] : relations_) {
    auto it = sig.predicates().find(name);
    if (it == sig.predicates().end() || it->second != r.arity()) {
      throw ModelError("predicate '" + name + "' does not match the signature");
    }
  }
}

std::string Model::format_tuple(std::span<const EntityId> args) const {
  std::string out = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ",";
    out += entity_name(args[i]);
  }
  return out + ")";
}

// --- Assignment / Value ----------------------------------------------------

EntityId Assignment::lookup(const std::string& var) const {
  auto it = bindings_.find(var);
  if (it == bindings_.end()) throw UnboundVariableError("unbound variable '" + var + "'");
  return it->second;
}

Assignment variant_assignment(const Assignment& g, const std::string& var, EntityId value,
                              const Model& model) {
  if (!model.contains(value)) {
    throw DomainError("cannot bind '" + var + "' to entity index " +
                      std::to_string(value.index) + " outside the domain");
  }
  Assignment out = g;
  out.bindings_[var] = value;
  return out;
}

EntityId Value::as_entity() const {
  if (is_truth_) throw TypeError("expected an entity value, got a truth value");
  return id_;
}

bool Value::as_truth() const {
  if (!is_truth_) throw TypeError("expected a truth value, got an entity");
  return bit_;
}

std::string Value::to_string(const Model& model) const {
  if (is_truth_) return bit_ ? "1" : "0";
  return model.entity_name(id_);
}

// --- Denotation ------------------------------------------------------------

bool classical_connective(Connective op, std::span<const bool> a) {
  if (a.size() != connective_arity(op)) {
    throw ArityError("connective '" + std::string(connective_name(op)) + "' arity mismatch");
  }
  switch (op) {
    case Connective::Not:
      return !a[0];
    case Connective::And:
      return a[0] && a[1];
    case Connective::Or:
      return a[0] || a[1];
    case Connective::Implies:
      return !a[0] || a[1];
    case Connective::Iff:
      return a[0] == a[1];
    case Connective::Xor:
      return a[0] != a[1];
    case Connective::Cond:
      return a[0] ? a[1] : a[2];
  }
  return false;
}

namespace {

struct DepthGuard {
  DepthGuard(EvalTrace* trace, std::size_t& depth) : depth_(depth) {
    ++depth_;
    if (trace) {
      ++trace->calls;
      if (depth_ > trace->max_depth) trace->max_depth = depth_;
    }
  }
  ~DepthGuard() { --depth_; }

  std::size_t& depth_;
};

class Denoter {
 public:
  Denoter(const Model& model, const Assignment& g, EvalTrace* trace)
      : model_(model), g_(g), trace_(trace) {}

  Value eval(const Term& term) {
    DepthGuard guard(trace_, depth_);
    switch (term.kind()) {
      case TermKind::Const:
        return Value::entity(model_.constant(term.name()));
      case TermKind::Var: {
        EntityId id = g_.lookup(term.name());
        if (!model_.contains(id)) {
          throw DomainError("variable '" + term.name() + "' is bound outside the domain");
        }
        return Value::entity(id);
      }
      case TermKind::FunApp:
        return Value::entity(model_.function(term.name())(entity_args(term)));
      case TermKind::PredApp:
        return Value::truth(model_.relation(term.name()).contains(entity_args(term)));
      case TermKind::Connective: {
        std::vector<char> bits;
        bits.reserve(term.args().size());
        for (const auto& a : term.args()) bits.push_back(eval(a).as_truth());
        bool buf[3] = {};
        for (std::size_t i = 0; i < bits.size(); ++i) buf[i] = bits[i];
        return Value::truth(
            classical_connective(term.op(), std::span<const bool>(buf, bits.size())));
      }
    }
    throw TypeError("unreachable term kind");
  }

 private:
  Tuple entity_args(const Term& term) {
    Tuple args;
    args.reserve(term.args().size());
    for (const auto& a : term.args()) args.push_back(eval(a).as_entity());
    return args;
  }

  const Model& model_;
  const Assignment& g_;
  EvalTrace* trace_;
  std::size_t depth_ = 0;
};

}  // namespace

Value denote(const Term& term, const Model& model, const Assignment& g, EvalTrace* trace) {
  return Denoter(model, g, trace).eval(term);
}

}  // namespace semlink

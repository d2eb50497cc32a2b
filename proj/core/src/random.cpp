#include "semlink/random.hpp"

#include <iterator>

#include "semlink/error.hpp"

namespace semlink {

FiniteFunction random_function(Rng& rng, std::size_t domain_size, std::size_t codomain_size) {
  FiniteFunction f;
  f.table.reserve(domain_size);
  for (std::size_t i = 0; i < domain_size; ++i) f.table.push_back(rng.below(codomain_size));
  return f;
}

ElementSet random_subset(Rng& rng, std::size_t domain_size) {
  ElementSet out;
  for (std::size_t i = 0; i < domain_size; ++i) {
    if (rng.coin()) out.insert(i);
  }
  return out;
}

std::set<IndexTuple> random_relation(Rng& rng, std::size_t domain_size, std::size_t arity) {
  std::size_t total = 1;
  for (std::size_t k = 0; k < arity; ++k) total *= domain_size;
  std::set<IndexTuple> out;
  for (std::size_t code = 0; code < total; ++code) {
    if (!rng.coin()) continue;
    IndexTuple t(arity);
    std::size_t rest = code;
    for (std::size_t k = arity; k-- > 0;) {
      t[k] = rest % domain_size;
      rest /= domain_size;
    }
    out.insert(std::move(t));
  }
  return out;
}

Model random_model(Rng& rng, const RandomModelShape& shape) {
  const std::size_t n = rng.between(shape.min_entities, shape.max_entities);
  std::vector<std::string> entities;
  for (std::size_t i = 0; i < n; ++i) entities.push_back("e" + std::to_string(i));

  std::map<std::string, EntityId> constants;
  for (std::size_t i = 0; i < shape.constants; ++i) {
    constants.emplace("c" + std::to_string(i), EntityId{static_cast<std::uint32_t>(rng.below(n))});
  }

  auto table = [&](std::size_t arity) {
    const FiniteFunction f = random_function(rng, arity == 1 ? n : n * n, n);
    std::vector<EntityId> values;
    for (std::size_t v : f.table) values.push_back(EntityId{static_cast<std::uint32_t>(v)});
    return FunctionTable(arity, n, std::move(values));
  };
  std::map<std::string, FunctionTable> functions;
  for (std::size_t i = 0; i < shape.unary_functions; ++i) {
    functions.emplace("f" + std::to_string(i), table(1));
  }
  for (std::size_t i = 0; i < shape.binary_functions; ++i) {
    functions.emplace("g" + std::to_string(i), table(2));
  }

  auto relation = [&](std::size_t arity) {
    std::set<Tuple> tuples;
    for (const auto& t : random_relation(rng, n, arity)) {
      Tuple tuple;
      for (std::size_t i : t) tuple.push_back(EntityId{static_cast<std::uint32_t>(i)});
      tuples.insert(std::move(tuple));
    }
    return Relation(arity, n, std::move(tuples));
  };
  std::map<std::string, Relation> relations;
  for (std::size_t i = 0; i < shape.unary_predicates; ++i) {
    relations.emplace("P" + std::to_string(i), relation(1));
  }
  for (std::size_t i = 0; i < shape.binary_predicates; ++i) {
    relations.emplace("R" + std::to_string(i), relation(2));
  }
  return Model(std::move(entities), std::move(constants), std::move(functions),
               std::move(relations));
}

Signature random_signature(const Model& model, std::size_t variables) {
  Signature sig = model.signature();
  for (std::size_t i = 0; i < variables; ++i) sig.add_variable("x" + std::to_string(i));
  return sig;
}

Assignment random_assignment(Rng& rng, const Signature& sig, const Model& model) {
  Assignment g;
  for (const auto& v : sig.variables()) {
    g = variant_assignment(
        g, v, EntityId{static_cast<std::uint32_t>(rng.below(model.entity_count()))}, model);
  }
  return g;
}

namespace {

template <typename Map>
auto pick(Rng& rng, const Map& m) {
  auto it = m.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(rng.below(m.size())));
  return it;
}

Term random_atom(Rng& rng, const Signature& sig) {
  std::vector<std::string> entity_constants;
  for (const auto& [name, type] : sig.constants()) {
    if (type == SemType::entity()) entity_constants.push_back(name);
  }
  const std::size_t total = entity_constants.size() + sig.variables().size();
  if (total == 0) throw SignatureError("signature has no entity constants or variables");
  const std::size_t k = rng.below(total);
  if (k < entity_constants.size()) return Term::constant(entity_constants[k]);
  return Term::variable(*pick(rng, sig.variables()));
}

}  // namespace

Term random_entity_term(Rng& rng, const Signature& sig, std::size_t max_depth) {
  if (max_depth == 0 || sig.functions().empty() || rng.below(3) == 0) {
    return random_atom(rng, sig);
  }
  const auto fn = pick(rng, sig.functions());
  std::vector<Term> args;
  for (std::size_t i = 0; i < fn->second; ++i) {
    args.push_back(random_entity_term(rng, sig, max_depth - 1));
  }
  return Term::fun_app(fn->first, std::move(args));
}

Term random_formula(Rng& rng, const Signature& sig, std::size_t max_depth) {
  if (max_depth == 0) throw ArityError("formulas have depth >= 1");
  if (sig.predicates().empty()) throw SignatureError("signature has no predicates");
  if (max_depth == 1 || rng.below(4) == 0) {
    const auto pred = pick(rng, sig.predicates());
    std::vector<Term> args;
    for (std::size_t i = 0; i < pred->second; ++i) {
      args.push_back(random_entity_term(rng, sig, max_depth - 1));
    }
    return Term::pred_app(pred->first, std::move(args));
  }
  const auto& ops = all_connectives();
  const Connective op = ops[rng.below(ops.size())];
  std::vector<Term> args;
  for (std::size_t i = 0; i < connective_arity(op); ++i) {
    args.push_back(random_formula(rng, sig, max_depth - 1));
  }
  return Term::connective(op, std::move(args));
}

}  // namespace semlink

#include "semlink/term.hpp"

#include <algorithm>
#include <array>

#include "semlink/error.hpp"

namespace semlink {

// --- SemType ---------------------------------------------------------------

SemType SemType::entity() { return SemType(TypeKind::Entity, {}); }
SemType SemType::truth() { return SemType(TypeKind::Truth, {}); }

SemType SemType::fun(SemType domain, SemType range) {
  return SemType(TypeKind::Fun, {std::move(domain), std::move(range)});
}

SemType SemType::prod(std::vector<SemType> components) {
  if (components.size() < 2) {
    throw TypeError("product type needs at least two components");
  }
  return SemType(TypeKind::Prod, std::move(components));
}

SemType SemType::set_of(SemType element) {
  return SemType(TypeKind::Set, {std::move(element)});
}

const SemType& SemType::domain() const {
  if (kind_ != TypeKind::Fun) throw TypeError("domain() on non-function type " + to_string());
  return children_[0];
}

const SemType& SemType::range() const {
  if (kind_ != TypeKind::Fun) throw TypeError("range() on non-function type " + to_string());
  return children_[1];
}

const SemType& SemType::element() const {
  if (kind_ != TypeKind::Set) throw TypeError("element() on non-set type " + to_string());
  return children_[0];
}

std::string SemType::to_string() const {
  switch (kind_) {
    case TypeKind::Entity:
      return "e";
    case TypeKind::Truth:
      return "t";
    case TypeKind::Fun:
      return "<" + children_[0].to_string() + "," + children_[1].to_string() + ">";
    case TypeKind::Prod: {
      std::string out = "(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) out += " x ";
        out += children_[i].to_string();
      }
      return out + ")";
    }
    case TypeKind::Set:
      return "{" + children_[0].to_string() + "}";
  }
  return "?";
}

// --- Connectives -----------------------------------------------------------

namespace {

struct ConnectiveInfo {
  Connective op;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<ConnectiveInfo, 7> kConnectives{{
    {Connective::Not, "not", 1},
    {Connective::And, "and", 2},
    {Connective::Or, "or", 2},
    {Connective::Implies, "implies", 2},
    {Connective::Iff, "iff", 2},
    {Connective::Xor, "xor", 2},
    {Connective::Cond, "cond", 3},
}};

const ConnectiveInfo& info(Connective op) {
  return kConnectives[static_cast<std::size_t>(op)];
}

}  // namespace

std::string_view connective_name(Connective op) noexcept { return info(op).name; }
std::size_t connective_arity(Connective op) noexcept { return info(op).arity; }

std::optional<Connective> connective_from_name(std::string_view name) noexcept {
  for (const auto& c : kConnectives) {
    if (c.name == name) return c.op;
  }
  return std::nullopt;
}

const std::vector<Connective>& all_connectives() {
  static const std::vector<Connective> ops = [] {
    std::vector<Connective> v;
    for (const auto& c : kConnectives) v.push_back(c.op);
    return v;
  }();
  return ops;
}

// --- Term ------------------------------------------------------------------

Term Term::constant(std::string name) {
  return Term(TermKind::Const, std::move(name), Connective::Not, {});
}

Term Term::variable(std::string name) {
  return Term(TermKind::Var, std::move(name), Connective::Not, {});
}

Term Term::fun_app(std::string name, std::vector<Term> args) {
  if (args.empty()) throw ArityError("function application '" + name + "' needs arguments");
  return Term(TermKind::FunApp, std::move(name), Connective::Not, std::move(args));
}

Term Term::pred_app(std::string name, std::vector<Term> args) {
  if (args.empty()) throw ArityError("predicate application '" + name + "' needs arguments");
  return Term(TermKind::PredApp, std::move(name), Connective::Not, std::move(args));
}

Term Term::connective(Connective op, std::vector<Term> args) {
  if (args.size() != connective_arity(op)) {
    throw ArityError("connective '" + std::string(connective_name(op)) + "' takes " +
                     std::to_string(connective_arity(op)) + " arguments, got " +
                     std::to_string(args.size()));
  }
  return Term(TermKind::Connective, std::string(connective_name(op)), op, std::move(args));
}

Connective Term::op() const {
  if (kind_ != TermKind::Connective) throw TypeError("op() on non-connective term " + name_);
  return op_;
}

std::string to_string(const Term& term) {
  if (term.is_atomic()) return term.name();
  std::string out = term.name();
  out += '(';
  for (std::size_t i = 0; i < term.args().size(); ++i) {
    if (i) out += ',';
    out += to_string(term.args()[i]);
  }
  out += ')';
  return out;
}

namespace {

void collect_paths(const Term& term, TermPath& prefix, std::vector<TermPath>& out) {
  out.push_back(prefix);
  for (std::size_t i = 0; i < term.args().size(); ++i) {
    prefix.push_back(i);
    collect_paths(term.args()[i], prefix, out);
    prefix.pop_back();
  }
}

Term rebuild(const Term& term, std::vector<Term> args) {
  switch (term.kind()) {
    case TermKind::FunApp:
      return Term::fun_app(term.name(), std::move(args));
    case TermKind::PredApp:
      return Term::pred_app(term.name(), std::move(args));
    case TermKind::Connective:
      return Term::connective(term.op(), std::move(args));
    default:
      return term;
  }
}

Term replace_rec(const Term& term, const TermPath& path, std::size_t at, Term& replacement) {
  if (at == path.size()) return std::move(replacement);
  if (path[at] >= term.args().size()) throw DomainError("term path out of range");
  std::vector<Term> args = term.args();
  args[path[at]] = replace_rec(term.args()[path[at]], path, at + 1, replacement);
  return rebuild(term, std::move(args));
}

void collect_free(const Term& term, std::set<std::string>& out) {
  if (term.kind() == TermKind::Var) out.insert(term.name());
  for (const auto& a : term.args()) collect_free(a, out);
}

}  // namespace

std::vector<TermPath> subterm_paths(const Term& term) {
  std::vector<TermPath> out;
  TermPath prefix;
  collect_paths(term, prefix, out);
  return out;
}

const Term& subterm_at(const Term& term, const TermPath& path) {
  const Term* cur = &term;
  for (std::size_t i : path) {
    if (i >= cur->args().size()) throw DomainError("term path out of range");
    cur = &cur->args()[i];
  }
  return *cur;
}

Term replace_at(const Term& term, const TermPath& path, Term replacement) {
  return replace_rec(term, path, 0, replacement);
}

std::set<std::string> free_variables(const Term& term) {
  std::set<std::string> out;
  collect_free(term, out);
  return out;
}

// --- Signature -------------------------------------------------------------

void Signature::claim(const std::string& name) {
  if (connective_from_name(name)) {
    throw SignatureError("'" + name + "' is a reserved connective name");
  }
  if (declares(name)) throw SignatureError("duplicate symbol '" + name + "'");
}

bool Signature::declares(const std::string& name) const {
  return has_constant(name) || has_variable(name) || has_function(name) ||
         has_predicate(name);
}

void Signature::add_constant(const std::string& name, SemType type) {
  claim(name);
  constants_.emplace(name, std::move(type));
}

void Signature::add_variable(const std::string& name) {
  claim(name);
  variables_.insert(name);
}

void Signature::add_function(const std::string& name, std::size_t arity) {
  if (arity == 0) throw SignatureError("function '" + name + "' needs arity >= 1");
  claim(name);
  functions_.emplace(name, arity);
}

void Signature::add_predicate(const std::string& name, std::size_t arity) {
  if (arity == 0) throw SignatureError("predicate '" + name + "' needs arity >= 1");
  claim(name);
  predicates_.emplace(name, arity);
}

namespace {

SemType argument_type(std::size_t arity) {
  if (arity == 1) return SemType::entity();
  return SemType::prod(std::vector<SemType>(arity, SemType::entity()));
}

}  // namespace

SemType Signature::function_type(const std::string& name) const {
  auto it = functions_.find(name);
  if (it == functions_.end()) throw UnknownSymbolError("unknown function '" + name + "'");
  return SemType::fun(argument_type(it->second), SemType::entity());
}

SemType Signature::predicate_type(const std::string& name) const {
  auto it = predicates_.find(name);
  if (it == predicates_.end()) throw UnknownSymbolError("unknown predicate '" + name + "'");
  return SemType::fun(argument_type(it->second), SemType::truth());
}

// --- Typing and metrics ----------------------------------------------------

namespace {

void expect_args(const Term& term, const Signature& sig, std::size_t arity,
                 const SemType& want) {
  if (term.args().size() != arity) {
    throw ArityError("'" + term.name() + "' takes " + std::to_string(arity) +
                     " arguments, got " + std::to_string(term.args().size()));
  }
  for (const auto& arg : term.args()) {
    SemType got = infer_type(arg, sig);
    if (got != want) {
      throw TypeError("argument '" + to_string(arg) + "' of '" + term.name() + "' has type " +
                      got.to_string() + ", expected " + want.to_string());
    }
  }
}

}  // namespace

SemType infer_type(const Term& term, const Signature& sig) {
  switch (term.kind()) {
    case TermKind::Const: {
      auto it = sig.constants().find(term.name());
      if (it == sig.constants().end()) {
        throw UnknownSymbolError("unknown constant '" + term.name() + "'");
      }
      return it->second;
    }
    case TermKind::Var:
      if (!sig.has_variable(term.name())) {
        throw UnknownSymbolError("unknown variable '" + term.name() + "'");
      }
      return SemType::entity();
    case TermKind::FunApp: {
      auto it = sig.functions().find(term.name());
      if (it == sig.functions().end()) {
        throw UnknownSymbolError("unknown function '" + term.name() + "'");
      }
      expect_args(term, sig, it->second, SemType::entity());
      return SemType::entity();
    }
    case TermKind::PredApp: {
      auto it = sig.predicates().find(term.name());
      if (it == sig.predicates().end()) {
        throw UnknownSymbolError("unknown predicate '" + term.name() + "'");
      }
      expect_args(term, sig, it->second, SemType::entity());
      return SemType::truth();
    }
    case TermKind::Connective:
      expect_args(term, sig, connective_arity(term.op()), SemType::truth());
      return SemType::truth();
  }
  throw TypeError("unreachable term kind");
}

std::size_t complexity_depth(const Term& term) {
  if (term.is_atomic()) return 0;
  std::size_t deepest = 0;
  for (const auto& a : term.args()) deepest = std::max(deepest, complexity_depth(a));
  return 1 + deepest;
}

std::size_t complexity_size(const Term& term) {
  std::size_t total = 1;
  for (const auto& a : term.args()) total += complexity_size(a);
  return total;
}

}  // namespace semlink

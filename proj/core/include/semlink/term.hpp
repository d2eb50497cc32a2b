#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace semlink {

// ---------------------------------------------------------------------------
// Semantic types
// ---------------------------------------------------------------------------

enum class TypeKind { Entity, Truth, Fun, Prod, Set };

/// Type label: the primitives e and t plus function, product and set types.
/// Values form a finite tree by construction (children are held by value).
class SemType {
 public:
  static SemType entity();
  static SemType truth();
  static SemType fun(SemType domain, SemType range);
  /// Throws TypeError for fewer than two components.
  static SemType prod(std::vector<SemType> components);
  static SemType set_of(SemType element);

  TypeKind kind() const noexcept { return kind_; }
  const std::vector<SemType>& children() const noexcept { return children_; }

  const SemType& domain() const;   // Fun only
  const SemType& range() const;    // Fun only
  const SemType& element() const;  // Set only

  std::string to_string() const;

  friend bool operator==(const SemType&, const SemType&) = default;

 private:
  SemType(TypeKind kind, std::vector<SemType> children)
      : kind_(kind), children_(std::move(children)) {}

  TypeKind kind_;
  std::vector<SemType> children_;
};

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

enum class Connective { Not, And, Or, Implies, Iff, Xor, Cond };

std::string_view connective_name(Connective op) noexcept;
std::size_t connective_arity(Connective op) noexcept;
std::optional<Connective> connective_from_name(std::string_view name) noexcept;
const std::vector<Connective>& all_connectives();

enum class TermKind { Const, Var, FunApp, PredApp, Connective };

/// Immutable AST node for terms and formulas.
class Term {
 public:
  static Term constant(std::string name);
  static Term variable(std::string name);
  static Term fun_app(std::string name, std::vector<Term> args);
  static Term pred_app(std::string name, std::vector<Term> args);
  /// Throws ArityError when args.size() != connective_arity(op).
  static Term connective(Connective op, std::vector<Term> args);

  TermKind kind() const noexcept { return kind_; }
  /// Symbol name; for connectives the reserved keyword.
  const std::string& name() const noexcept { return name_; }
  Connective op() const;
  const std::vector<Term>& args() const noexcept { return args_; }

  bool is_atomic() const noexcept {
    return kind_ == TermKind::Const || kind_ == TermKind::Var;
  }

  friend bool operator==(const Term&, const Term&) = default;

 private:
  Term(TermKind kind, std::string name, Connective op, std::vector<Term> args)
      : kind_(kind), name_(std::move(name)), op_(op), args_(std::move(args)) {}

  TermKind kind_;
  std::string name_;
  Connective op_;
  std::vector<Term> args_;
};

/// Canonical concrete syntax: prefix form, no whitespace, e.g. `and(P(a),Q(b))`.
std::string to_string(const Term& term);

/// Path of argument indices from the root to a subterm.
using TermPath = std::vector<std::size_t>;

/// All subterm positions in pre-order; the root is the empty path.
std::vector<TermPath> subterm_paths(const Term& term);
const Term& subterm_at(const Term& term, const TermPath& path);
/// Copy of `term` with the subterm at `path` replaced.
Term replace_at(const Term& term, const TermPath& path, Term replacement);

std::set<std::string> free_variables(const Term& term);

// ---------------------------------------------------------------------------
// Signature
// ---------------------------------------------------------------------------

/// Non-logical vocabulary. Functions and predicates range over entities;
/// variables are entity-typed. Names are unique across all namespaces and
/// may not be connective keywords.
class Signature {
 public:
  void add_constant(const std::string& name, SemType type = SemType::entity());
  void add_variable(const std::string& name);
  void add_function(const std::string& name, std::size_t arity);
  void add_predicate(const std::string& name, std::size_t arity);

  const std::map<std::string, SemType>& constants() const noexcept { return constants_; }
  const std::set<std::string>& variables() const noexcept { return variables_; }
  const std::map<std::string, std::size_t>& functions() const noexcept { return functions_; }
  const std::map<std::string, std::size_t>& predicates() const noexcept { return predicates_; }

  bool has_constant(const std::string& n) const { return constants_.contains(n); }
  bool has_variable(const std::string& n) const { return variables_.contains(n); }
  bool has_function(const std::string& n) const { return functions_.contains(n); }
  bool has_predicate(const std::string& n) const { return predicates_.contains(n); }
  bool declares(const std::string& name) const;

  /// Type of a function symbol, e.g. <e,e> for unary, <e x e,e> for binary.
  SemType function_type(const std::string& name) const;
  /// Characteristic-function type of a predicate, <e,t> / <e x e,t>.
  SemType predicate_type(const std::string& name) const;

 private:
  void claim(const std::string& name);

  std::map<std::string, SemType> constants_;
  std::set<std::string> variables_;
  std::map<std::string, std::size_t> functions_;
  std::map<std::string, std::size_t> predicates_;
};

/// Type of a well-formed term: Entity for Const/Var/FunApp, Truth for
/// PredApp/Connective. Throws TypeError, ArityError or UnknownSymbolError.
SemType infer_type(const Term& term, const Signature& sig);

/// 0 for atoms, 1 + max over arguments otherwise.
std::size_t complexity_depth(const Term& term);

/// Node count: atoms contribute 1, applications 1 + sum over arguments.
std::size_t complexity_size(const Term& term);

}  // namespace semlink

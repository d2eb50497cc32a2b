#pragma once

// Injective lifts h_tau from finite extensional domains into vector spaces,
// the induced lifts of functions, relations and subsets, and checkers that
// verify each commuting diagram exhaustively.
//
// Elements of a finite domain are addressed by their position in the
// domain's element list; h maps position i to the standard basis vector e_i.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semlink/model.hpp"
#include "semlink/semantic_space.hpp"
#include "semlink/vector_logic.hpp"

namespace semlink {

using ElementSet = std::set<std::size_t>;
using IndexTuple = std::vector<std::size_t>;

/// Injective map from a finite domain onto the standard basis of R^dim,
/// dim = |domain|. Left inverse is total on the image.
class DomainMap {
 public:
  /// Throws DomainError for an empty or non-injective (duplicate) element list.
  DomainMap(std::string tag, std::vector<std::string> elements);

  static DomainMap for_entities(const Model& model);
  /// {1, 0} in that order, so map_index agrees with embed_truth.
  static DomainMap for_truth();
  /// D^n with elements in lexicographic order; h(a_1..a_n) equals the
  /// Kronecker product h(a_1) (x) ... (x) h(a_n).
  static DomainMap power(const DomainMap& base, std::size_t n);

  const std::string& tag() const noexcept { return tag_; }
  std::size_t dim() const noexcept { return elements_.size(); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::string& label(std::size_t index) const;
  /// Throws DomainError for unknown elements.
  std::size_t index_of(const std::string& element) const;

  DenseVector map_index(std::size_t index) const;
  /// Throws OffImageError unless v is a one-hot basis vector of this space.
  std::size_t unmap_index(const DenseVector& v) const;
  std::optional<std::size_t> try_unmap(const DenseVector& v) const;

  friend bool operator==(const DomainMap& a, const DomainMap& b) {
    return a.tag_ == b.tag_ && a.elements_ == b.elements_;
  }

 private:
  std::string tag_;
  std::vector<std::string> elements_;
  std::map<std::string, std::size_t> index_;
};

DomainMap build_domain_map(std::vector<std::string> elements, std::string tag = "A");
DenseVector map_element(const DomainMap& m, const std::string& element);
std::string unmap_element(const DomainMap& m, const DenseVector& v);

/// Extensional function between finite domains as a table of codomain indices.
struct FiniteFunction {
  std::vector<std::size_t> table;

  std::size_t operator()(std::size_t a) const { return table.at(a); }
  friend bool operator==(const FiniteFunction&, const FiniteFunction&) = default;
};

/// f as a function on positions of D^n (tuple_index order).
FiniteFunction as_finite_function(const FunctionTable& f);
/// (g . f)
FiniteFunction compose(const FiniteFunction& g, const FiniteFunction& f);

/// h_f(v) = h_B(f(h_A^{-1}(v))), materialized as a basis-index table.
class LiftedFunction {
 public:
  /// Throws DomainError if the table is not total on `source` or leaves `target`.
  LiftedFunction(DomainMap source, DomainMap target, std::vector<std::size_t> index_table);

  const DomainMap& source() const noexcept { return source_; }
  const DomainMap& target() const noexcept { return target_; }
  const std::vector<std::size_t>& index_table() const noexcept { return table_; }

  /// Throws OffImageError for vectors outside h_A's image.
  DenseVector operator()(const DenseVector& v) const;

 private:
  DomainMap source_;
  DomainMap target_;
  std::vector<std::size_t> table_;
};

LiftedFunction lift_function(const FiniteFunction& f, const DomainMap& source,
                             const DomainMap& target);

/// R'(v_1..v_n) = R(h^{-1}(v_1)..h^{-1}(v_n)) on the image, false elsewhere.
class LiftedRelation {
 public:
  LiftedRelation(DomainMap map, std::size_t arity, std::set<IndexTuple> tuples);

  const DomainMap& map() const noexcept { return map_; }
  std::size_t arity() const noexcept { return arity_; }
  const std::set<IndexTuple>& tuples() const noexcept { return tuples_; }

  /// Throws ArityError for the wrong number of arguments.
  bool operator()(std::span<const DenseVector> args) const;

 private:
  DomainMap map_;
  std::size_t arity_;
  std::set<IndexTuple> tuples_;
};

LiftedRelation lift_relation(const std::set<IndexTuple>& relation, const DomainMap& m,
                             std::size_t arity);
std::set<IndexTuple> as_index_tuples(const Relation& r);

/// E' = { h(e) : e in E }.
std::set<DenseVector> lift_subset(const ElementSet& subset, const DomainMap& m);

/// (chi_E(a), chi_E'(h(a))).
std::pair<bool, bool> characteristic(const ElementSet& subset, const DomainMap& m,
                                     std::size_t element);

/// v_E = sum_{e in E} h(e).
DenseVector indicator_vector(const ElementSet& subset, const DomainMap& m);

/// Lift of g . f computed along the vector path h_g . h_f.
/// Throws DomainError when f's target map is not g's source map.
LiftedFunction compose_lifted(const LiftedFunction& g, const LiftedFunction& f);

// ---------------------------------------------------------------------------
// Diagram checks
// ---------------------------------------------------------------------------

struct Counterexample {
  std::string input;
  std::string left;   // path through the vector space
  std::string right;  // path through the extensional model, then h
};

struct LawReport {
  LawReport() = default;
  explicit LawReport(std::string name) : law(std::move(name)) {}

  std::string law;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<Counterexample> first_failure;

  bool passed() const noexcept { return failures == 0; }
};

/// One line: "<law>: PASS (<n> cases)" or "...: FAIL ..." plus the witness.
std::string format_report(const LawReport& report);

/// h_f(h_A(a)) == h_B(f(a)) for every a.
LawReport check_function_lift(const FiniteFunction& f, const DomainMap& source,
                              const DomainMap& target);
LawReport check_function_lift(const LiftedFunction& lift, const FiniteFunction& f);

/// R(a) <=> R'(h(a)) on every tuple of D^n, and R' false on off-image probes.
LawReport check_relation_lift(const std::set<IndexTuple>& relation, const DomainMap& m,
                              std::size_t arity);

/// Union, intersection and difference commute with h.
std::vector<LawReport> check_set_ops(const ElementSet& e1, const ElementSet& e2,
                                     const DomainMap& m);

LawReport check_characteristic(const ElementSet& subset, const DomainMap& m);
/// Component i of the indicator is chi_E(i) and equals the basis-vector sum.
LawReport check_indicator(const ElementSet& subset, const DomainMap& m);

/// (h_{f_n} . ... . h_{f_1})(h_{A_1}(a)) == h_{A_{n+1}}((f_n . ... . f_1)(a)).
/// `maps` has one more entry than `fs`. Throws DomainError for an
/// incompatible chain.
LawReport check_composition_chain(std::span<const FiniteFunction> fs,
                                  std::span<const DomainMap> maps);
/// Same law with externally supplied lifts (e.g. a deliberately broken one).
LawReport check_composition_chain(std::span<const LiftedFunction> lifts,
                                  std::span<const FiniteFunction> fs);

// ---------------------------------------------------------------------------
// Formula evaluation in the vector-space model
// ---------------------------------------------------------------------------

/// The family H instantiated for a model: h_e, h_t and the lifts of every
/// interpreted function and predicate.
class VectorModel {
 public:
  explicit VectorModel(const Model& model);

  const Model& model() const noexcept { return *model_; }
  const DomainMap& entities() const noexcept { return entities_; }
  const DomainMap& truth() const noexcept { return truth_; }
  const LiftedFunction& function(const std::string& name) const;
  const LiftedRelation& relation(const std::string& name) const;

 private:
  const Model* model_;
  DomainMap entities_;
  DomainMap truth_;
  std::map<std::string, LiftedFunction> functions_;
  std::map<std::string, LiftedRelation> relations_;
};

/// Evaluates an entity-typed term in the vector space: h_e(I(c)), h_e(g(x)),
/// h_f(h(t_1) (x) ... (x) h(t_n)).
DenseVector lift_entity_term(const Term& term, const VectorModel& vm, const Assignment& g);

/// Evaluates a truth-typed term in the vector space: predicates through their
/// lifted relations, connectives through their operator matrices. The result
/// equals embed_truth(denote(term)).
TruthVec lift_logical_connective(const Term& term, const VectorModel& vm, const Assignment& g);

}  // namespace semlink

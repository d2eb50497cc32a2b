#include "semlink/homomorphism.hpp"

#include <algorithm>
#include <iterator>

#include "semlink/error.hpp"

namespace semlink {

// --- DomainMap -------------------------------------------------------------

DomainMap::DomainMap(std::string tag, std::vector<std::string> elements)
    : tag_(std::move(tag)), elements_(std::move(elements)) {
  if (elements_.empty()) throw DomainError("domain '" + tag_ + "' is empty");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second) {
      throw DomainError("domain '" + tag_ + "' lists '" + elements_[i] + "' twice");
    }
  }
}

DomainMap DomainMap::for_entities(const Model& model) {
  return DomainMap("e", model.entities());
}

DomainMap DomainMap::for_truth() { return DomainMap("t", {"1", "0"}); }

DomainMap DomainMap::power(const DomainMap& base, std::size_t n) {
  if (n == 0) throw DomainError("domain power needs n >= 1");
  if (n == 1) return base;
  std::vector<std::string> labels{""};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::string> next;
    next.reserve(labels.size() * base.dim());
    for (const auto& prefix : labels) {
      for (const auto& e : base.elements()) next.push_back(prefix.empty() ? e : prefix + "," + e);
    }
    labels = std::move(next);
  }
  for (auto& l : labels) l = "(" + l + ")";
  return DomainMap(base.tag() + "^" + std::to_string(n), std::move(labels));
}

const std::string& DomainMap::label(std::size_t index) const {
  if (index >= elements_.size()) {
    throw DomainError("index " + std::to_string(index) + " outside domain '" + tag_ + "'");
  }
  return elements_[index];
}

std::size_t DomainMap::index_of(const std::string& element) const {
  auto it = index_.find(element);
  if (it == index_.end()) {
    throw DomainError("'" + element + "' is not an element of domain '" + tag_ + "'");
  }
  return it->second;
}

DenseVector DomainMap::map_index(std::size_t index) const {
  if (index >= elements_.size()) {
    throw DomainError("index " + std::to_string(index) + " outside domain '" + tag_ + "'");
  }
  return DenseVector::basis(elements_.size(), index);
}

std::optional<std::size_t> DomainMap::try_unmap(const DenseVector& v) const {
  if (v.dim() != elements_.size()) return std::nullopt;
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i] == 0.0) continue;
    if (v[i] != 1.0 || hit) return std::nullopt;
    hit = i;
  }
  return hit;
}

std::size_t DomainMap::unmap_index(const DenseVector& v) const {
  if (auto i = try_unmap(v)) return *i;
  throw OffImageError(v.to_string() + " is outside the image of h_" + tag_);
}

DomainMap build_domain_map(std::vector<std::string> elements, std::string tag) {
  return DomainMap(std::move(tag), std::move(elements));
}

DenseVector map_element(const DomainMap& m, const std::string& element) {
  return m.map_index(m.index_of(element));
}

std::string unmap_element(const DomainMap& m, const DenseVector& v) {
  return m.label(m.unmap_index(v));
}

// --- Functions -------------------------------------------------------------

FiniteFunction as_finite_function(const FunctionTable& f) {
  FiniteFunction out;
  out.table.reserve(f.values().size());
  for (EntityId v : f.values()) out.table.push_back(v.index);
  return out;
}

FiniteFunction compose(const FiniteFunction& g, const FiniteFunction& f) {
  FiniteFunction out;
  out.table.reserve(f.table.size());
  for (std::size_t b : f.table) {
    if (b >= g.table.size()) throw DomainError("composition: f leaves g's domain");
    out.table.push_back(g.table[b]);
  }
  return out;
}

LiftedFunction::LiftedFunction(DomainMap source, DomainMap target,
                               std::vector<std::size_t> index_table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(index_table)) {
  if (table_.size() != source_.dim()) {
    throw DomainError("function table has " + std::to_string(table_.size()) +
                      " entries but domain '" + source_.tag() + "' has " +
                      std::to_string(source_.dim()) + " elements");
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= target_.dim()) {
      throw DomainError("f(" + source_.label(i) + ") lies outside codomain '" + target_.tag() +
                        "'");
    }
  }
}

DenseVector LiftedFunction::operator()(const DenseVector& v) const {
  return target_.map_index(table_[source_.unmap_index(v)]);
}

LiftedFunction lift_function(const FiniteFunction& f, const DomainMap& source,
                             const DomainMap& target) {
  // h_f(h_A(a)) := h_B(f(h_A^{-1}(h_A(a)))); on basis indices this is f itself.
  std::vector<std::size_t> table(source.dim());
  if (f.table.size() != source.dim()) {
    throw DomainError("function is not total on domain '" + source.tag() + "'");
  }
  for (std::size_t i = 0; i < source.dim(); ++i) {
    table[i] = target.unmap_index(target.map_index(f.table[i]));
  }
  return LiftedFunction(source, target, std::move(table));
}

LiftedFunction compose_lifted(const LiftedFunction& g, const LiftedFunction& f) {
  if (!(f.target() == g.source())) {
    throw DomainError("cannot compose: target '" + f.target().tag() + "' of f is not source '" +
                      g.source().tag() + "' of g");
  }
  std::vector<std::size_t> table(f.source().dim());
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = g.target().unmap_index(g(f(f.source().map_index(i))));
  }
  return LiftedFunction(f.source(), g.target(), std::move(table));
}

// --- Relations and subsets -------------------------------------------------

LiftedRelation::LiftedRelation(DomainMap map, std::size_t arity, std::set<IndexTuple> tuples)
    : map_(std::move(map)), arity_(arity), tuples_(std::move(tuples)) {
  if (arity_ == 0) throw ArityError("relation needs arity >= 1");
  for (const auto& t : tuples_) {
    if (t.size() != arity_) throw ArityError("relation tuple has the wrong arity");
    for (std::size_t i : t) {
      if (i >= map_.dim()) throw DomainError("relation tuple outside domain '" + map_.tag() + "'");
    }
  }
}

bool LiftedRelation::operator()(std::span<const DenseVector> args) const {
  if (args.size() != arity_) {
    throw ArityError("lifted relation of arity " + std::to_string(arity_) + " given " +
                     std::to_string(args.size()) + " arguments");
  }
  IndexTuple pre;
  pre.reserve(arity_);
  for (const auto& v : args) {
    auto i = map_.try_unmap(v);
    if (!i) return false;
    pre.push_back(*i);
  }
  return tuples_.contains(pre);
}

LiftedRelation lift_relation(const std::set<IndexTuple>& relation, const DomainMap& m,
                             std::size_t arity) {
  return LiftedRelation(m, arity, relation);
}

std::set<IndexTuple> as_index_tuples(const Relation& r) {
  std::set<IndexTuple> out;
  for (const auto& t : r.tuples()) {
    IndexTuple it;
    for (EntityId id : t) it.push_back(id.index);
    out.insert(std::move(it));
  }
  return out;
}

std::set<DenseVector> lift_subset(const ElementSet& subset, const DomainMap& m) {
  std::set<DenseVector> out;
  for (std::size_t e : subset) out.insert(m.map_index(e));
  return out;
}

std::pair<bool, bool> characteristic(const ElementSet& subset, const DomainMap& m,
                                     std::size_t element) {
  const DenseVector v = m.map_index(element);
  return {subset.contains(element), lift_subset(subset, m).contains(v)};
}

DenseVector indicator_vector(const ElementSet& subset, const DomainMap& m) {
  DenseVector v(m.dim());
  for (std::size_t e : subset) v += m.map_index(e);
  return v;
}

// --- Reports ---------------------------------------------------------------

namespace {

void record(LawReport& r, bool ok, const std::string& input, const std::string& left,
            const std::string& right) {
  ++r.cases;
  if (ok) return;
  ++r.failures;
  if (!r.first_failure) r.first_failure = Counterexample{input, left, right};
}

std::string format_set(const ElementSet& s, const DomainMap& m) {
  std::string out = "{";
  bool first = true;
  for (std::size_t e : s) {
    if (!first) out += ",";
    first = false;
    out += m.label(e);
  }
  return out + "}";
}

std::string format_vectors(const std::set<DenseVector>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : s) {
    if (!first) out += ",";
    first = false;
    out += v.to_string();
  }
  return out + "}";
}

}  // namespace

std::string format_report(const LawReport& report) {
  std::string out = report.law + ": " + (report.passed() ? "PASS" : "FAIL") + " (" +
                    std::to_string(report.cases) + " cases";
  if (!report.passed()) out += ", " + std::to_string(report.failures) + " failures";
  out += ")";
  if (report.first_failure) {
    const auto& c = *report.first_failure;
    out += "\n  counterexample: " + c.input + "\n    vector path:      " + c.left +
           "\n    extensional path: " + c.right;
  }
  return out;
}

LawReport check_function_lift(const LiftedFunction& lift, const FiniteFunction& f) {
  LawReport r{"function-lift"};
  const DomainMap& a = lift.source();
  const DomainMap& b = lift.target();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const DenseVector left = lift(a.map_index(i));
    const DenseVector right = b.map_index(f(i));
    const bool on_image = b.try_unmap(left).has_value();
    record(r, on_image && left == right, a.label(i), left.to_string(), right.to_string());
  }
  return r;
}

LawReport check_function_lift(const FiniteFunction& f, const DomainMap& source,
                              const DomainMap& target) {
  return check_function_lift(lift_function(f, source, target), f);
}

LawReport check_relation_lift(const std::set<IndexTuple>& relation, const DomainMap& m,
                              std::size_t arity) {
  LawReport r{"relation-lift"};
  const LiftedRelation lifted = lift_relation(relation, m, arity);
  std::size_t total = 1;
  for (std::size_t k = 0; k < arity; ++k) total *= m.dim();

  for (std::size_t code = 0; code < total; ++code) {
    IndexTuple tuple(arity);
    std::size_t rest = code;
    for (std::size_t k = arity; k-- > 0;) {
      tuple[k] = rest % m.dim();
      rest /= m.dim();
    }
    std::vector<DenseVector> args;
    std::string label = "(";
    for (std::size_t k = 0; k < arity; ++k) {
      args.push_back(m.map_index(tuple[k]));
      label += (k ? "," : "") + m.label(tuple[k]);
    }
    label += ")";
    const bool ext = relation.contains(tuple);
    const bool vec = lifted(args);
    record(r, ext == vec, label, vec ? "1" : "0", ext ? "1" : "0");
  }

  // Off the image R' is false regardless of R.
  std::vector<DenseVector> probes{DenseVector(m.dim()), 2.0 * m.map_index(0),
                                  DenseVector(m.dim() + 1)};
  if (m.dim() >= 2) probes.push_back(m.map_index(0) + m.map_index(1));
  for (const auto& probe : probes) {
    std::vector<DenseVector> args(arity, m.map_index(0));
    args[0] = probe;
    const bool vec = lifted(args);
    record(r, !vec, "off-image " + probe.to_string(), vec ? "1" : "0", "0");
  }
  return r;
}

std::vector<LawReport> check_set_ops(const ElementSet& e1, const ElementSet& e2,
                                     const DomainMap& m) {
  const auto h1 = lift_subset(e1, m);
  const auto h2 = lift_subset(e2, m);
  const std::string input = format_set(e1, m) + " , " + format_set(e2, m);

  auto run = [&](const char* law, auto&& op) {
    ElementSet ext;
    op(e1.begin(), e1.end(), e2.begin(), e2.end(), std::inserter(ext, ext.end()));
    std::set<DenseVector> vec;
    op(h1.begin(), h1.end(), h2.begin(), h2.end(), std::inserter(vec, vec.end()));
    const auto mapped = lift_subset(ext, m);
    LawReport r{law};
    record(r, mapped == vec, input, format_vectors(vec), format_vectors(mapped));
    return r;
  };

  auto uni = [](auto... a) { std::set_union(a...); };
  auto inter = [](auto... a) { std::set_intersection(a...); };
  auto diff = [](auto... a) { std::set_difference(a...); };
  return {run("set-union", uni), run("set-intersection", inter), run("set-difference", diff)};
}

LawReport check_characteristic(const ElementSet& subset, const DomainMap& m) {
  LawReport r{"characteristic"};
  for (std::size_t i = 0; i < m.dim(); ++i) {
    auto [ext, vec] = characteristic(subset, m, i);
    record(r, ext == vec, m.label(i), vec ? "1" : "0", ext ? "1" : "0");
  }
  return r;
}

LawReport check_indicator(const ElementSet& subset, const DomainMap& m) {
  LawReport r{"indicator"};
  const DenseVector v = indicator_vector(subset, m);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const double want = subset.contains(i) ? 1.0 : 0.0;
    record(r, v[i] == want, m.label(i) + " in " + format_set(subset, m), std::to_string(v[i]),
           std::to_string(want));
  }
  return r;
}

LawReport check_composition_chain(std::span<const LiftedFunction> lifts,
                                  std::span<const FiniteFunction> fs) {
  if (lifts.empty() || lifts.size() != fs.size()) {
    throw DomainError("composition chain needs one lift per function");
  }
  for (std::size_t k = 1; k < lifts.size(); ++k) {
    if (!(lifts[k - 1].target() == lifts[k].source())) {
      throw DomainError("composition chain breaks between link " + std::to_string(k) + " and " +
                        std::to_string(k + 1));
    }
  }
  LawReport r{"composition-chain"};
  const DomainMap& first = lifts.front().source();
  const DomainMap& last = lifts.back().target();
  for (std::size_t a = 0; a < first.dim(); ++a) {
    DenseVector v = first.map_index(a);
    std::string left;
    bool on_image = true;
    for (const auto& lift : lifts) {
      if (!lift.source().try_unmap(v)) {
        on_image = false;
        break;
      }
      v = lift(v);
    }
    std::size_t x = a;
    for (const auto& f : fs) x = f(x);
    const DenseVector right = last.map_index(x);
    left = on_image ? v.to_string() : "off-image " + v.to_string();
    record(r, on_image && v == right, first.label(a), left, right.to_string());
  }
  return r;
}

LawReport check_composition_chain(std::span<const FiniteFunction> fs,
                                  std::span<const DomainMap> maps) {
  if (fs.empty() || maps.size() != fs.size() + 1) {
    throw DomainError("composition chain of " + std::to_string(fs.size()) + " functions needs " +
                      std::to_string(fs.size() + 1) + " domain maps");
  }
  std::vector<LiftedFunction> lifts;
  lifts.reserve(fs.size());
  for (std::size_t k = 0; k < fs.size(); ++k) {
    lifts.push_back(lift_function(fs[k], maps[k], maps[k + 1]));
  }
  return check_composition_chain(std::span<const LiftedFunction>(lifts), fs);
}

// --- VectorModel -----------------------------------------------------------

VectorModel::VectorModel(const Model& model)
    : model_(&model),
      entities_(DomainMap::for_entities(model)),
      truth_(DomainMap::for_truth()) {
  for (const auto& [name, f] : model.functions()) {
    functions_.emplace(name, lift_function(as_finite_function(f),
                                           DomainMap::power(entities_, f.arity()), entities_));
  }
  for (const auto& [name, r] : model.relations()) {
    relations_.emplace(name, lift_relation(as_index_tuples(r), entities_, r.arity()));
  }
}

const LiftedFunction& VectorModel::function(const std::string& name) const {
  auto it = functions_.find(name);
  if (it == functions_.end()) throw UnknownSymbolError("uninterpreted function '" + name + "'");
  return it->second;
}

const LiftedRelation& VectorModel::relation(const std::string& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw UnknownSymbolError("uninterpreted predicate '" + name + "'");
  return it->second;
}

namespace {

const OpMatrix& cached_operator(Connective op) {
  static const std::vector<OpMatrix> ops = [] {
    std::vector<OpMatrix> v;
    for (Connective c : all_connectives()) v.push_back(named_operator(c));
    return v;
  }();
  return ops[static_cast<std::size_t>(op)];
}

DenseVector kron_vectors(std::span<const DenseVector> vs) {
  std::vector<double> acc{1.0};
  for (const auto& v : vs) acc = kron<double>(std::span<const double>(acc), v.components());
  return DenseVector(std::move(acc));
}

}  // namespace

DenseVector lift_entity_term(const Term& term, const VectorModel& vm, const Assignment& g) {
  switch (term.kind()) {
    case TermKind::Const:
      return vm.entities().map_index(vm.model().constant(term.name()).index);
    case TermKind::Var: {
      const EntityId id = g.lookup(term.name());
      return vm.entities().map_index(id.index);
    }
    case TermKind::FunApp: {
      const LiftedFunction& f = vm.function(term.name());
      std::vector<DenseVector> args;
      args.reserve(term.args().size());
      for (const auto& a : term.args()) args.push_back(lift_entity_term(a, vm, g));
      return f(kron_vectors(args));
    }
    case TermKind::PredApp:
    case TermKind::Connective:
      break;
  }
  throw TypeError("'" + to_string(term) + "' is not an entity-typed term");
}

TruthVec lift_logical_connective(const Term& term, const VectorModel& vm, const Assignment& g) {
  switch (term.kind()) {
    case TermKind::PredApp: {
      const LiftedRelation& r = vm.relation(term.name());
      std::vector<DenseVector> args;
      args.reserve(term.args().size());
      for (const auto& a : term.args()) args.push_back(lift_entity_term(a, vm, g));
      return embed_truth(r(args));
    }
    case TermKind::Connective: {
      std::vector<TruthVec> args;
      args.reserve(term.args().size());
      for (const auto& a : term.args()) args.push_back(lift_logical_connective(a, vm, g));
      return apply_operator(cached_operator(term.op()), args);
    }
    default:
      break;
  }
  throw TypeError("'" + to_string(term) + "' is not a truth-typed term");
}

}  // namespace semlink

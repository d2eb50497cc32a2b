#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "semlink/error.hpp"
#include "semlink/homomorphism.hpp"
#include "semlink/model_io.hpp"
#include "semlink/parser.hpp"
#include "semlink/random.hpp"
#include "semlink/semantic_space.hpp"

namespace semlink::cli {
namespace {

constexpr std::size_t kFormulaDepth = 6;
constexpr std::size_t kFormulaVariables = 2;
constexpr std::size_t kMaxChainLength = 5;
constexpr std::size_t kMaxAuxDomain = 5;

// Folds per-trial reports into one report per law, keeping the first witness.
class ReportSet {
 public:
  void add(const LawReport& r) {
    auto [it, fresh] = reports_.try_emplace(r.law, r.law);
    if (fresh) order_.push_back(r.law);
    LawReport& acc = it->second;
    acc.cases += r.cases;
    acc.failures += r.failures;
    if (!acc.first_failure && r.first_failure) acc.first_failure = r.first_failure;
  }

  void add(const LawReport& r, const std::string& context) {
    LawReport copy = r;
    if (copy.first_failure) copy.first_failure->input = context + ": " + copy.first_failure->input;
    add(copy);
  }

  int print(std::ostream& out) const {
    std::size_t failed = 0;
    for (const auto& law : order_) {
      const LawReport& r = reports_.at(law);
      out << format_report(r) << '\n';
      if (!r.passed()) ++failed;
    }
    if (failed == 0) {
      out << "all " << order_.size() << " laws hold\n";
      return kExitOk;
    }
    out << failed << " of " << order_.size() << " laws violated\n";
    return kExitLawViolation;
  }

 private:
  std::vector<std::string> order_;
  std::map<std::string, LawReport> reports_;
};

Assignment parse_assignments(const std::vector<std::string>& items, const Model& model,
                             Signature& sig) {
  Assignment g;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw ParseError(0, "assignment '" + item + "' is not of the form var=entity");
    }
    const std::string var = item.substr(0, eq);
    if (!sig.has_variable(var)) sig.add_variable(var);
    g = variant_assignment(g, var, model.entity(item.substr(eq + 1)), model);
  }
  return g;
}

int run_eval(const RunConfig& c, std::ostream& out) {
  const ModelDocument doc = load_model_document(c.model_path);
  const Model& model = doc.model;
  Signature sig = model.signature();
  const Assignment g = parse_assignments(c.assignments, model, sig);
  const Term term = parse_term(c.expr, sig);
  const SemType type = infer_type(term, sig);
  const VectorModel vm(model);

  const Value ext = denote(term, model, g);
  out << "expr: " << to_string(term) << '\n';
  out << "type: " << type.to_string() << '\n';
  out << "extensional: " << ext.to_string(model) << '\n';

  bool agree = false;
  if (type == SemType::truth()) {
    const TruthVec vec = lift_logical_connective(term, vm, g);
    out << "vector: " << vec.to_string() << '\n';
    out << "projected: " << (project_truth(vec) ? 1 : 0) << '\n';
    agree = vec == embed_truth(ext.as_truth());
  } else {
    const DenseVector vec = lift_entity_term(term, vm, g);
    out << "vector: " << vec.to_string() << '\n';
    const auto back = vm.entities().try_unmap(vec);
    out << "projected: " << (back ? vm.entities().label(*back) : "off-image") << '\n';
    agree = back && *back == ext.as_entity().index;
  }
  out << (agree ? "routes agree" : "ROUTES DISAGREE") << '\n';
  return agree ? kExitOk : kExitLawViolation;
}

int run_synth(const RunConfig& c, std::ostream& out) {
  const int sources = !c.table.empty() + !c.named.empty() + (c.majority != 0) + !c.op.empty();
  if (sources != 1) {
    throw ParseError(0, "synth needs exactly one of --table, --named, --majority, --op");
  }
  if (!c.table.empty()) {
    const TruthTable t = TruthTable::from_bitstring(c.table, c.arity);
    out << synth_operator(t, c.arity_cap).to_string();
  } else if (!c.named.empty()) {
    const auto op = connective_from_name(c.named);
    if (!op) throw UnknownSymbolError("unknown connective '" + c.named + "'");
    out << named_operator(*op).to_string();
  } else if (c.majority != 0) {
    out << majority_matrix(c.majority, c.arity_cap).to_string();
  } else {
    if (c.model_path.empty()) throw ParseError(0, "--op needs --model");
    const ModelDocument doc = load_model_document(c.model_path);
    auto it = doc.operators.find(c.op);
    if (it == doc.operators.end()) throw UnknownSymbolError("model defines no operator '" + c.op + "'");
    out << synth_operator(it->second, c.arity_cap).to_string();
  }
  return kExitOk;
}

int run_lift(const RunConfig& c, std::ostream& out) {
  const ModelDocument doc = load_model_document(c.model_path);
  const Model& model = doc.model;
  const VectorModel vm(model);
  if (c.function.empty() == c.relation.empty()) {
    throw ParseError(0, "lift needs exactly one of --function, --relation");
  }
  if (!c.function.empty()) {
    const LiftedFunction& f = vm.function(c.function);
    out << "function " << c.function << ": " << f.source().tag() << " -> " << f.target().tag()
        << " (dim " << f.source().dim() << " -> " << f.target().dim() << ")\n";
    for (std::size_t i = 0; i < f.source().dim(); ++i) {
      const DenseVector in = f.source().map_index(i);
      const DenseVector image = f(in);
      out << f.source().label(i) << ' ' << in.to_string() << " -> " << image.to_string()
          << " = h(" << f.target().label(f.target().unmap_index(image)) << ")\n";
    }
    return kExitOk;
  }
  const LiftedRelation& r = vm.relation(c.relation);
  const DomainMap tuples = DomainMap::power(r.map(), r.arity());
  out << "relation " << c.relation << ": arity " << r.arity() << " over " << r.map().tag()
      << " (dim " << r.map().dim() << ")\n";
  for (std::size_t code = 0; code < tuples.dim(); ++code) {
    const Tuple t = tuple_at(code, r.arity(), r.map().dim());
    std::vector<DenseVector> args;
    std::string vectors;
    for (EntityId id : t) {
      args.push_back(r.map().map_index(id.index));
      vectors += (vectors.empty() ? "" : " ") + args.back().to_string();
    }
    out << tuples.label(code) << ' ' << vectors << " -> " << (r(args) ? 1 : 0) << '\n';
  }
  return kExitOk;
}

void check_functions(const Model& model, const RunConfig& c, Rng& rng, ReportSet& reports) {
  const DomainMap e = DomainMap::for_entities(model);
  for (const auto& [name, f] : model.functions()) {
    reports.add(check_function_lift(as_finite_function(f), DomainMap::power(e, f.arity()), e),
                name);
  }
  const DomainMap e2 = DomainMap::power(e, 2);
  for (std::size_t trial = 0; trial < c.trials; ++trial) {
    const bool binary = rng.coin();
    const DomainMap& src = binary ? e2 : e;
    const FiniteFunction f = random_function(rng, src.dim(), e.dim());
    reports.add(check_function_lift(f, src, e), "trial " + std::to_string(trial));
  }
}

void check_relations(const Model& model, const RunConfig& c, Rng& rng, ReportSet& reports) {
  const DomainMap e = DomainMap::for_entities(model);
  for (const auto& [name, r] : model.relations()) {
    reports.add(check_relation_lift(as_index_tuples(r), e, r.arity()), name);
  }
  for (std::size_t trial = 0; trial < c.trials; ++trial) {
    const std::size_t arity = rng.between(1, 3);
    reports.add(check_relation_lift(random_relation(rng, e.dim(), arity), e, arity),
                "trial " + std::to_string(trial));
  }
}

void check_sets(const Model& model, const RunConfig& c, Rng& rng, ReportSet& reports) {
  const DomainMap e = DomainMap::for_entities(model);
  for (std::size_t trial = 0; trial < c.trials; ++trial) {
    const ElementSet a = random_subset(rng, e.dim());
    const ElementSet b = random_subset(rng, e.dim());
    const std::string ctx = "trial " + std::to_string(trial);
    for (const auto& r : check_set_ops(a, b, e)) reports.add(r, ctx);
    reports.add(check_characteristic(a, e), ctx);
    reports.add(check_indicator(a, e), ctx);
  }
}

void check_chains(const Model& model, const RunConfig& c, Rng& rng, ReportSet& reports) {
  const DomainMap e = DomainMap::for_entities(model);
  for (std::size_t trial = 0; trial < c.trials; ++trial) {
    const std::size_t length = rng.between(1, kMaxChainLength);
    std::vector<DomainMap> maps{e};
    for (std::size_t k = 1; k <= length; ++k) {
      const std::size_t size = rng.between(1, kMaxAuxDomain);
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < size; ++i) labels.push_back("a" + std::to_string(i));
      maps.emplace_back("A" + std::to_string(k), std::move(labels));
    }
    std::vector<FiniteFunction> fs;
    for (std::size_t k = 0; k < length; ++k) {
      fs.push_back(random_function(rng, maps[k].dim(), maps[k + 1].dim()));
    }
    reports.add(check_composition_chain(fs, maps), "trial " + std::to_string(trial));
  }
}

void check_formulas(const Model& model, const RunConfig& c, Rng& rng, ReportSet& reports) {
  if (model.relations().empty()) throw ModelError("formula law needs at least one relation");
  Signature sig = model.signature();
  for (std::size_t i = 0; i < kFormulaVariables; ++i) {
    const std::string v = "x" + std::to_string(i);
    if (!sig.declares(v)) sig.add_variable(v);
  }
  const VectorModel vm(model);
  LawReport report("formula-dual-path");
  for (std::size_t trial = 0; trial < c.trials; ++trial) {
    const Term phi = random_formula(rng, sig, kFormulaDepth);
    const Assignment g = random_assignment(rng, sig, model);
    const bool ext = denote(phi, model, g).as_truth();
    const TruthVec vec = lift_logical_connective(phi, vm, g);
    ++report.cases;
    if (vec != embed_truth(ext)) {
      ++report.failures;
      if (!report.first_failure) {
        report.first_failure = Counterexample{"trial " + std::to_string(trial) + ": " +
                                                  to_string(phi),
                                              vec.to_string(), embed_truth(ext).to_string()};
      }
    }
  }
  reports.add(report);
}

int run_check(const RunConfig& c, std::ostream& out) {
  if (c.trials == 0) throw ParseError(0, "--trials must be >= 1");
  const ModelDocument doc = load_model_document(c.model_path);
  Rng rng(c.seed);
  ReportSet reports;
  switch (c.law) {
    case Law::Function:
      check_functions(doc.model, c, rng, reports);
      break;
    case Law::Relation:
      check_relations(doc.model, c, rng, reports);
      break;
    case Law::Sets:
      check_sets(doc.model, c, rng, reports);
      break;
    case Law::Chain:
      check_chains(doc.model, c, rng, reports);
      break;
    case Law::Formula:
      check_formulas(doc.model, c, rng, reports);
      break;
  }
  return reports.print(out);
}

int run_sim(const RunConfig& c, std::ostream& out) {
  const DenseVector u = parse_vector(c.u);
  const DenseVector v = parse_vector(c.v);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", cosine_similarity(u, v));
  out << buf << '\n';
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.subcommand) {
      case Subcommand::Eval:
        return run_eval(config, out);
      case Subcommand::Synth:
        return run_synth(config, out);
      case Subcommand::Lift:
        return run_lift(config, out);
      case Subcommand::Check:
        return run_check(config, out);
      case Subcommand::Sim:
        return run_sim(config, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Evaluate formulas in an extensional model and its vector-space image"};
  app.name("semlink");
  app.require_subcommand(1);

  std::optional<std::size_t> cap;
  app.add_option("--arity-cap", cap, "Largest operator arity to materialize (default 20)")
      ->check(CLI::PositiveNumber);

  auto* eval = app.add_subcommand("eval", "Evaluate an expression on both routes");
  eval->add_option("--model", config.model_path, "Model file (JSON)")->required();
  eval->add_option("--expr", config.expr, "Expression in prefix syntax")->required();
  eval->add_option("--assign", config.assignments, "Variable binding var=entity");

  auto* synth = app.add_subcommand("synth", "Print the operator matrix of a truth table");
  synth->add_option("--table", config.table, "Truth table bitstring in column order");
  synth->add_option("--arity", config.arity, "Arity of --table (inferred when omitted)");
  synth->add_option("--named", config.named, "Named connective: not, and, or, implies, iff, xor, cond");
  synth->add_option("--majority", config.majority, "Strict majority over N inputs");
  synth->add_option("--op", config.op, "Operator defined in the model file");
  synth->add_option("--model", config.model_path, "Model file for --op");

  auto* lift = app.add_subcommand("lift", "Tabulate a lifted function or relation");
  lift->add_option("--model", config.model_path, "Model file (JSON)")->required();
  lift->add_option("--function", config.function, "Function symbol");
  lift->add_option("--relation", config.relation, "Predicate symbol");

  auto* check = app.add_subcommand("check", "Verify homomorphism laws");
  const std::map<std::string, Law> laws{{"function", Law::Function},
                                        {"relation", Law::Relation},
                                        {"sets", Law::Sets},
                                        {"chain", Law::Chain},
                                        {"formula", Law::Formula}};
  check->add_option("--model", config.model_path, "Model file (JSON)")->required();
  check->add_option("--law", config.law, "function|relation|sets|chain|formula")
      ->required()
      ->transform(CLI::CheckedTransformer(laws, CLI::ignore_case));
  check->add_option("--trials", config.trials, "Randomized trials")->check(CLI::PositiveNumber);
  check->add_option("--seed", config.seed, "PRNG seed");

  auto* sim = app.add_subcommand("sim", "Cosine similarity of two vectors");
  sim->add_option("u", config.u, "Comma-separated components")->required();
  sim->add_option("v", config.v, "Comma-separated components")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (cap) {
    config.arity_cap = *cap;
  } else if (const char* env = std::getenv("SEMLINK_ARITY_CAP"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) {
      err << "error: SEMLINK_ARITY_CAP must be a positive integer\n";
      return kExitInputError;
    }
    config.arity_cap = static_cast<std::size_t>(v);
  }

  if (eval->parsed()) config.subcommand = Subcommand::Eval;
  if (synth->parsed()) config.subcommand = Subcommand::Synth;
  if (lift->parsed()) config.subcommand = Subcommand::Lift;
  if (check->parsed()) config.subcommand = Subcommand::Check;
  if (sim->parsed()) config.subcommand = Subcommand::Sim;
  return run(config, out, err);
}

}  // namespace semlink::cli

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails or runs over its time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "semlink/homomorphism.hpp"
#include "semlink/parser.hpp"
#include "semlink/random.hpp"
#include "semlink/semantic_space.hpp"
#include "semlink/vector_logic.hpp"

using namespace semlink;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;  // 0 = unbounded
  std::function<Outcome()> body;
};

TruthVec tv(bool b) { return embed_truth(b); }

std::vector<TruthVec> inputs_for(std::size_t column, std::size_t arity) {
  std::vector<TruthVec> in;
  for (Bit b : oracle::enumerate_tuple(column, arity)) in.push_back(tv(b));
  return in;
}

DomainMap domain(std::size_t n, const std::string& tag) {
  std::vector<std::string> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(tag + "_" + std::to_string(i));
  return DomainMap(tag, xs);
}

bool next_function(std::vector<std::size_t>& table, std::size_t m) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (++table[i] < m) return true;
    table[i] = 0;
  }
  return false;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

Outcome ac1() {
  const std::vector<std::pair<OpMatrix, IntMatrix>> cases{
      {synth_operator(TruthTable::from_bitstring("01")), IntMatrix{{0, 1}, {1, 0}}},
      {named_operator(Connective::Not), IntMatrix{{0, 1}, {1, 0}}},
      {synth_operator(TruthTable::from_bitstring("1000")), IntMatrix{{1, 0, 0, 0}, {0, 1, 1, 1}}},
      {named_operator(Connective::And), IntMatrix{{1, 0, 0, 0}, {0, 1, 1, 1}}},
      {named_operator(Connective::Cond),
       IntMatrix{{1, 1, 0, 0, 1, 0, 1, 0}, {0, 0, 1, 1, 0, 1, 0, 1}}},
      {synth_operator(TruthTable::from_bitstring("11001010")),
       IntMatrix{{1, 1, 0, 0, 1, 0, 1, 0}, {0, 0, 1, 1, 0, 1, 0, 1}}},
      {majority_matrix(3), IntMatrix{{1, 1, 1, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 1, 1, 1}}},
      {majority_matrix(4), IntMatrix{{1, 1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
                                     {0, 0, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1}}},
  };
  std::size_t bad = 0;
  for (const auto& [got, want] : cases) bad += !(got.matrix() == want);
  return {bad == 0, std::to_string(cases.size()) + " matrices, " + std::to_string(bad) + " mismatches"};
}

Outcome ac2() {
  const TruthVec s = tv(true);
  const TruthVec n = tv(false);
  const OpMatrix C = named_operator(Connective::And);
  const OpMatrix N = named_operator(Connective::Not);
  const OpMatrix M = named_operator(Connective::Cond);
  struct Case {
    const OpMatrix* op;
    std::vector<TruthVec> in;
    TruthVec want;
  };
  const std::vector<Case> cases{
      {&C, {s, s}, s}, {&C, {s, n}, n}, {&C, {n, s}, n}, {&C, {n, n}, n},
      {&N, {s}, n},    {&N, {n}, s},
      {&M, {s, s, s}, s}, {&M, {s, n, s}, n}, {&M, {n, s, s}, s},
  };
  std::size_t bad = 0;
  for (const auto& c : cases) bad += !(apply_operator(*c.op, c.in) == c.want);
  return {bad == 0, std::to_string(cases.size()) + " cases, " + std::to_string(bad) + " mismatches"};
}

bool faithful(const TruthTable& table) {
  const OpMatrix m = synth_operator(table);
  for (std::size_t j = 0; j < (std::size_t{1} << table.arity()); ++j) {
    if (project_truth(apply_operator(m, inputs_for(j, table.arity()))) !=
        table(oracle::enumerate_tuple(j, table.arity())))
      return false;
  }
  return true;
}

Outcome ac3() {
  std::size_t tables = 0;
  std::size_t bad = 0;
  for (std::size_t arity = 1; arity <= 3; ++arity) {
    const std::size_t rows = std::size_t{1} << arity;
    for (std::size_t code = 0; code < (std::size_t{1} << rows); ++code) {
      std::vector<Bit> out(rows);
      for (std::size_t j = 0; j < rows; ++j) out[j] = (code >> j) & 1u;
      ++tables;
      bad += !faithful(TruthTable(arity, out));
    }
  }
  std::mt19937_64 rng(2023);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t code = rng() & 0xFFFFu;
    std::vector<Bit> out(16);
    for (std::size_t j = 0; j < 16; ++j) out[j] = (code >> j) & 1u;
    ++tables;
    bad += !faithful(TruthTable(4, out));
  }
  return {bad == 0, std::to_string(tables) + " tables, " + std::to_string(bad) + " unfaithful"};
}

Outcome ac4() {
  std::size_t inputs = 0;
  std::size_t bad = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    const OpMatrix m = majority_matrix(n);
    for (std::size_t j = 0; j < (std::size_t{1} << n); ++j) {
      const auto bits = oracle::enumerate_tuple(j, n);
      const bool want = oracle::majority_by_count(bits);
      ++inputs;
      bad += project_truth(apply_operator(m, inputs_for(j, n))) != want ||
             majority_polynomial(n, bits) != want;
    }
  }
  return {bad == 0, std::to_string(inputs) + " inputs, " + std::to_string(bad) + " disagreements"};
}

Outcome ac5() {
  std::size_t checks = 0;
  std::size_t bad = 0;
  auto tally = [&](const LawReport& r) {
    ++checks;
    bad += !r.passed();
  };

  // Every function A -> B for |A|, |B| <= 5.
  for (std::size_t na = 1; na <= 5; ++na) {
    for (std::size_t nb = 1; nb <= 5; ++nb) {
      const DomainMap a = domain(na, "A");
      const DomainMap b = domain(nb, "B");
      std::vector<std::size_t> table(na, 0);
      do tally(check_function_lift(FiniteFunction{table}, a, b));
      while (next_function(table, nb));
    }
  }
  // Binary functions D x D -> D: exhaustive for |D| <= 3, sampled above.
  Rng rng(5);
  for (std::size_t n = 1; n <= 5; ++n) {
    const DomainMap d = domain(n, "D");
    const DomainMap d2 = DomainMap::power(d, 2);
    if (n <= 3) {
      std::vector<std::size_t> table(n * n, 0);
      do tally(check_function_lift(FiniteFunction{table}, d2, d));
      while (next_function(table, n));
    } else {
      for (int i = 0; i < 2000; ++i) tally(check_function_lift(random_function(rng, n * n, n), d2, d));
    }
  }
  // Relations: exhaustive while 2^(|D|^arity) stays small, sampled otherwise.
  for (std::size_t n = 1; n <= 4; ++n) {
    const DomainMap d = domain(n, "D");
    for (std::size_t arity = 1; arity <= 3; ++arity) {
      const std::size_t tuples = ipow(n, arity);
      if (tuples <= 12) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << tuples); ++mask) {
          std::set<IndexTuple> rel;
          for (std::size_t code = 0; code < tuples; ++code) {
            if (!((mask >> code) & 1u)) continue;
            IndexTuple t(arity);
            std::size_t rest = code;
            for (std::size_t k = arity; k-- > 0;) {
              t[k] = rest % n;
              rest /= n;
            }
            rel.insert(t);
          }
          tally(check_relation_lift(rel, d, arity));
        }
      } else {
        for (int i = 0; i < 500; ++i) tally(check_relation_lift(random_relation(rng, n, arity), d, arity));
      }
    }
  }
  // Set operations on |D| = 6.
  const DomainMap d6 = domain(6, "D");
  for (int i = 0; i < 1000; ++i) {
    const ElementSet e1 = random_subset(rng, 6);
    const ElementSet e2 = random_subset(rng, 6);
    for (const auto& r : check_set_ops(e1, e2, d6)) tally(r);
    tally(check_characteristic(e1, d6));
    tally(check_indicator(e1, d6));
  }
  // Composition chains up to length 5.
  for (int i = 0; i < 2000; ++i) {
    const std::size_t len = 1 + i % 5;
    std::vector<DomainMap> maps;
    for (std::size_t k = 0; k <= len; ++k) maps.push_back(domain(rng.between(1, 5), "A" + std::to_string(k)));
    std::vector<FiniteFunction> fs;
    for (std::size_t k = 0; k < len; ++k) fs.push_back(random_function(rng, maps[k].dim(), maps[k + 1].dim()));
    tally(check_composition_chain(std::span<const FiniteFunction>(fs), std::span<const DomainMap>(maps)));
  }
  return {bad == 0, std::to_string(checks) + " law checks, " + std::to_string(bad) + " failed"};
}

Outcome ac6() {
  Rng rng(6);
  std::size_t bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const Model m = random_model(rng);
    const Signature sig = random_signature(m, 2);
    const Term phi = random_formula(rng, sig, rng.between(1, 6));
    const Assignment g = random_assignment(rng, sig, m);
    const VectorModel vm(m);
    bad += project_truth(lift_logical_connective(phi, vm, g)) != denote(phi, m, g).as_truth();
  }
  return {bad == 0, "1000 formulas, " + std::to_string(bad) + " disagreements"};
}

Outcome ac7() {
  Rng rng(7);
  std::size_t bad = 0;
  std::size_t pairs = 0;
  std::size_t draws = 0;
  while (pairs < 1000 && draws < 20000) {
    ++draws;
    const Model m = random_model(rng);
    const Signature sig = random_signature(m, 2);
    const Term phi = random_formula(rng, sig, rng.between(1, 6));
    const Assignment g = random_assignment(rng, sig, m);

    EvalTrace trace;
    const Value v = denote(phi, m, g, &trace);
    bad += !(denote(phi, m, g) == v);
    bad += trace.max_depth > complexity_depth(phi) + 1;

    const auto paths = subterm_paths(phi);
    const TermPath& path = paths[rng.below(paths.size())];
    const auto replacement = oracle::equal_denotation_substitute(subterm_at(phi, path), m, g, sig, rng);
    if (!replacement) continue;
    ++pairs;
    bad += !(denote(replace_at(phi, path, *replacement), m, g) == v);
  }
  const bool ok = bad == 0 && pairs == 1000;
  return {ok, std::to_string(pairs) + " substitution pairs over " + std::to_string(draws) +
                  " formulas, " + std::to_string(bad) + " failures"};
}

Outcome ac8() {
  Signature sig;
  for (const char* c : {"a", "b", "c"}) sig.add_constant(c);
  sig.add_function("f", 2);
  sig.add_function("g", 1);
  sig.add_function("h", 2);
  Signature chain;
  chain.add_constant("a");
  for (const char* f : {"f", "g", "h"}) chain.add_function(f, 1);

  const std::vector<std::tuple<Term, std::size_t, std::size_t>> cases{
      {parse_term("f(a,b)", sig), 1, 3},
      {parse_term("f(g(a),h(b,c))", sig), 2, 6},
      {parse_term("f(g(h(a)))", chain), 3, 4},
  };
  std::size_t bad = 0;
  for (const auto& [t, depth, size] : cases) {
    bad += complexity_depth(t) != depth || complexity_size(t) != size;
  }
  return {bad == 0, "3 examples, " + std::to_string(bad) + " mismatches"};
}

Outcome ac9() {
  constexpr double tol = 1e-9;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> comp(-10.0, 10.0);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  std::size_t bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::size_t dim = 1 + i % 16;
    std::vector<double> a(dim), b(dim);
    for (auto& x : a) x = comp(rng);
    for (auto& x : b) x = comp(rng);
    const DenseVector u(a), v(b);
    const double c = cosine_similarity(u, v);
    bad += std::abs(cosine_similarity(u, u) - 1.0) > tol;
    bad += std::abs(cosine_similarity(scale(rng) * u, scale(rng) * v) - c) > tol;
    bad += std::abs(inner_product(u, v)) > norm(u) * norm(v) * (1 + tol);
    bad += c < -1.0 || c > 1.0;

    // Orthogonal pair: v minus its projection on u.
    const DenseVector w = v - (inner_product(u, v) / inner_product(u, u)) * u;
    if (norm(w) > 1e-6) bad += std::abs(cosine_similarity(u, w)) > tol;
  }
  for (std::size_t dim = 2; dim <= 16; ++dim) {
    bad += cosine_similarity(DenseVector::basis(dim, 0), DenseVector::basis(dim, dim - 1)) != 0.0;
  }
  return {bad == 0, "10000 vector pairs, " + std::to_string(bad) + " violations"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "operator matrices reproduced exactly", 1.0, ac1},
      {"AC2", "worked conjunction, negation and conditional cases", 0.0, ac2},
      {"AC3", "synthesized operators are faithful up to arity 4", 30.0, ac3},
      {"AC4", "majority: matrix, polynomial and count agree for n <= 7", 10.0, ac4},
      {"AC5", "homomorphism laws hold exhaustively", 60.0, ac5},
      {"AC6", "formulas agree on the extensional and vector routes", 30.0, ac6},
      {"AC7", "denotation is deterministic, bounded and compositional", 0.0, ac7},
      {"AC8", "complexity metrics on the worked examples", 0.0, ac8},
      {"AC9", "similarity properties at 1e-9", 0.0, ac9},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = o.ok;
    std::string timing = std::to_string(secs).substr(0, 6) + " s";
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      ok = false;
      timing += " over budget";
    }
    if (c.budget_seconds > 0) timing += " / " + std::to_string(int(c.budget_seconds)) + " s";
    std::printf("%s %s  %s: %s [%s]\n", c.id, ok ? "PASS" : "FAIL", c.title, o.detail.c_str(),
                timing.c_str());
    failed += !ok;
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

#include <doctest.h>

#include <algorithm>
#include <iterator>

#include "oracles.hpp"
#include "semlink/error.hpp"
#include "semlink/homomorphism.hpp"
#include "semlink/parser.hpp"
#include "semlink/random.hpp"

using namespace semlink;

namespace {

DomainMap domain(std::size_t n, const std::string& tag = "A") {
  std::vector<std::string> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(tag + std::to_string(i));
  return DomainMap(tag, xs);
}

ElementSet set_from_mask(std::uint64_t mask, std::size_t n) {
  ElementSet s;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1u) s.insert(i);
  return s;
}

}  // namespace

TEST_CASE("domain maps send elements to basis vectors") {
  const DomainMap m = build_domain_map({"e1", "e2", "e3"}, "e");
  CHECK(m.dim() == 3);
  CHECK(map_element(m, "e1") == DenseVector{1, 0, 0});
  CHECK(map_element(m, "e3") == DenseVector{0, 0, 1});
  CHECK(unmap_element(m, DenseVector{0, 1, 0}) == "e2");
  CHECK_THROWS_AS(map_element(m, "e4"), DomainError);
  CHECK_THROWS_AS(build_domain_map({}), DomainError);
  CHECK_THROWS_AS(build_domain_map({"x", "x"}), DomainError);

  CHECK_THROWS_AS(m.unmap_index(DenseVector{0, 0, 0}), OffImageError);
  CHECK_THROWS_AS(m.unmap_index(DenseVector{0.5, 0.5, 0}), OffImageError);
  CHECK_THROWS_AS(m.unmap_index(DenseVector{1, 1, 0}), OffImageError);
  CHECK_THROWS_AS(m.unmap_index(DenseVector{1, 0}), OffImageError);
  CHECK_THROWS_AS(m.unmap_index(DenseVector{2, 0, 0}), OffImageError);
}

TEST_CASE("truth domain agrees with the truth embedding") {
  const DomainMap t = DomainMap::for_truth();
  const TruthVec s = embed_truth(true);
  const TruthVec n = embed_truth(false);
  CHECK(t.map_index(t.index_of("1")) == DenseVector{double(s[0]), double(s[1])});
  CHECK(t.map_index(t.index_of("0")) == DenseVector{double(n[0]), double(n[1])});
}

TEST_CASE("power domains use Kronecker products") {
  const DomainMap base = domain(3);
  const DomainMap sq = DomainMap::power(base, 2);
  CHECK(sq.dim() == 9);
  CHECK(sq.label(5) == "(A1,A2)");
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const auto k = kron<double>(base.map_index(i).components(), base.map_index(j).components());
      CHECK(DenseVector(k) == sq.map_index(sq.index_of("(A" + std::to_string(i) + ",A" +
                                                      std::to_string(j) + ")")));
    }
  }
  CHECK(DomainMap::power(base, 1) == base);
}

TEST_CASE("function lifts on fixed examples") {
  const DomainMap a = domain(3, "A");
  const DomainMap b = domain(2, "B");

  SUBCASE("identity") {
    const LiftedFunction id = lift_function(FiniteFunction{{0, 1, 2}}, a, a);
    for (std::size_t i = 0; i < 3; ++i) CHECK(id(a.map_index(i)) == a.map_index(i));
  }
  SUBCASE("constant") {
    const LiftedFunction k = lift_function(FiniteFunction{{1, 1, 1}}, a, b);
    for (std::size_t i = 0; i < 3; ++i) CHECK(k(a.map_index(i)) == DenseVector{0, 1});
    CHECK(check_function_lift(FiniteFunction{{1, 1, 1}}, a, b).passed());
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(lift_function(FiniteFunction{{0, 1}}, a, b), DomainError);
    CHECK_THROWS_AS(lift_function(FiniteFunction{{0, 1, 2}}, a, b), DomainError);
    const LiftedFunction f = lift_function(FiniteFunction{{0, 1, 0}}, a, b);
    CHECK_THROWS_AS(f(DenseVector{1, 1, 0}), OffImageError);
    CHECK_THROWS_AS(f(DenseVector{1, 0}), OffImageError);
  }
}

TEST_CASE("property: lifted functions equal their 0/1 matrices") {
  std::mt19937_64 seed(4);
  Rng rng(seed());
  const DomainMap a = domain(5, "A");
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t codomain = rng.between(1, 6);
    const DomainMap b = domain(codomain, "B");
    const FiniteFunction f{random_function(rng, 5, codomain)};
    const LiftedFunction lift = lift_function(f, a, b);
    const auto matrix = oracle::function_matrix(f, codomain);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(oracle::as_ints(lift(a.map_index(i))) == oracle::column(matrix, i));
    }
    CHECK(check_function_lift(f, a, b).passed());
  }
}

TEST_CASE("a corrupted lift is caught with a counterexample") {
  const DomainMap a = domain(3, "A");
  const FiniteFunction f{{0, 1, 2}};
  const LiftedFunction wrong(a, a, {0, 2, 2});
  const LawReport r = check_function_lift(wrong, f);
  CHECK_FALSE(r.passed());
  CHECK(r.failures == 1);
  REQUIRE(r.first_failure);
  CHECK(r.first_failure->input == "A1");
  CHECK(r.first_failure->left == "[0,0,1]");
  CHECK(r.first_failure->right == "[0,1,0]");
  CHECK(format_report(r).find("FAIL") != std::string::npos);
}

TEST_CASE("relation lifts") {
  const DomainMap m = domain(3, "e");

  SUBCASE("unary") {
    const LiftedRelation p = lift_relation({{0}, {2}}, m, 1);
    CHECK(p(std::vector{m.map_index(0)}));
    CHECK_FALSE(p(std::vector{m.map_index(1)}));
    CHECK(p(std::vector{m.map_index(2)}));
  }
  SUBCASE("binary") {
    const LiftedRelation r = lift_relation({{0, 1}}, m, 2);
    CHECK(r(std::vector{m.map_index(0), m.map_index(1)}));
    CHECK_FALSE(r(std::vector{m.map_index(1), m.map_index(0)}));
    CHECK_THROWS_AS(r(std::vector{m.map_index(0)}), ArityError);
  }
  SUBCASE("false off the image even for the full relation") {
    const LiftedRelation full = lift_relation({{0}, {1}, {2}}, m, 1);
    CHECK_FALSE(full(std::vector{DenseVector{0, 0, 0}}));
    CHECK_FALSE(full(std::vector{DenseVector{1, 1, 0}}));
    CHECK_FALSE(full(std::vector{DenseVector{0.5, 0, 0}}));
    CHECK_FALSE(full(std::vector{DenseVector{1, 0}}));
  }
  CHECK(check_relation_lift({{0, 1}, {2, 2}}, m, 2).passed());
  CHECK(check_relation_lift({}, m, 3).passed());
  CHECK_THROWS_AS(lift_relation({{0, 5}}, m, 2), DomainError);
}

TEST_CASE("subset lifts, characteristic functions and indicators") {
  const DomainMap m = domain(4, "e");
  const ElementSet e{0, 2};
  const auto lifted = lift_subset(e, m);
  CHECK(lifted == std::set<DenseVector>{m.map_index(0), m.map_index(2)});
  CHECK(lift_subset({}, m).empty());
  CHECK(indicator_vector(e, m) == DenseVector{1, 0, 1, 0});
  CHECK(characteristic(e, m, 2) == std::pair{true, true});
  CHECK(characteristic(e, m, 1) == std::pair{false, false});
  CHECK(check_characteristic(e, m).passed());
  CHECK(check_indicator(e, m).passed());
}

TEST_CASE("property: set operations against bitmasks") {
  Rng rng(21);
  const std::size_t n = 6;
  const DomainMap m = domain(n, "e");
  for (int trial = 0; trial < 500; ++trial) {
    const ElementSet e1 = random_subset(rng, n);
    const ElementSet e2 = random_subset(rng, n);
    const std::uint64_t a = oracle::mask_of(e1);
    const std::uint64_t b = oracle::mask_of(e2);
    const auto h1 = lift_subset(e1, m);
    const auto h2 = lift_subset(e2, m);
    CHECK(oracle::mask_of(h1) == a);

    for (const LawReport& r : check_set_ops(e1, e2, m)) CHECK(r.passed());

    std::set<DenseVector> uni, inter, diff;
    std::set_union(h1.begin(), h1.end(), h2.begin(), h2.end(), std::inserter(uni, uni.end()));
    std::set_intersection(h1.begin(), h1.end(), h2.begin(), h2.end(),
                          std::inserter(inter, inter.end()));
    std::set_difference(h1.begin(), h1.end(), h2.begin(), h2.end(),
                        std::inserter(diff, diff.end()));
    CHECK(oracle::mask_of(uni) == (a | b));
    CHECK(oracle::mask_of(inter) == (a & b));
    CHECK(oracle::mask_of(diff) == (a & ~b));

    // v_{E1 u E2} = v_E1 + v_E2 - v_{E1 n E2}
    const DenseVector lhs = indicator_vector(set_from_mask(a | b, n), m);
    const DenseVector rhs = indicator_vector(e1, m) + indicator_vector(e2, m) -
                            indicator_vector(set_from_mask(a & b, n), m);
    CHECK(lhs == rhs);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(indicator_vector(e1, m)[i] == double((a >> i) & 1u));
    }
  }
}

TEST_CASE("composition of lifts") {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t na = rng.between(1, 5);
    const std::size_t nb = rng.between(1, 5);
    const std::size_t nc = rng.between(1, 5);
    const DomainMap a = domain(na, "A");
    const DomainMap b = domain(nb, "B");
    const DomainMap c = domain(nc, "C");
    const FiniteFunction f{random_function(rng, na, nb)};
    const FiniteFunction g{random_function(rng, nb, nc)};
    const LiftedFunction via_vectors = compose_lifted(lift_function(g, b, c), lift_function(f, a, b));
    const LiftedFunction direct = lift_function(compose(g, f), a, c);
    CHECK(via_vectors.index_table() == direct.index_table());

    const auto product = oracle::matmul(oracle::function_matrix(g, nc), oracle::function_matrix(f, nb));
    for (std::size_t i = 0; i < na; ++i) {
      CHECK(oracle::as_ints(via_vectors(a.map_index(i))) == oracle::column(product, i));
    }
  }
  CHECK_THROWS_AS(compose_lifted(lift_function(FiniteFunction{{0}}, domain(1, "X"), domain(1, "X")),
                                 lift_function(FiniteFunction{{0}}, domain(1, "A"), domain(1, "B"))),
                  DomainError);
}

TEST_CASE("composition chains") {
  const DomainMap a1 = domain(3, "A1");
  const DomainMap a2 = domain(2, "A2");
  const DomainMap a3 = domain(4, "A3");
  const DomainMap a4 = domain(3, "A4");

  SUBCASE("single link") {
    const std::vector<FiniteFunction> fs{{{1, 0, 1}}};
    const std::vector<DomainMap> maps{a1, a2};
    const LawReport r = check_composition_chain(std::span<const FiniteFunction>(fs),
                                                std::span<const DomainMap>(maps));
    CHECK(r.passed());
    CHECK(r.cases == 3);
  }
  SUBCASE("three links") {
    const std::vector<FiniteFunction> fs{{{1, 0, 1}}, {{3, 0}}, {{2, 2, 0, 1}}};
    const std::vector<DomainMap> maps{a1, a2, a3, a4};
    CHECK(check_composition_chain(std::span<const FiniteFunction>(fs),
                                  std::span<const DomainMap>(maps))
              .passed());
  }
  SUBCASE("corrupted middle link") {
    const std::vector<FiniteFunction> fs{{{1, 0, 1}}, {{3, 0}}, {{2, 1, 0, 1}}};
    const std::vector<LiftedFunction> lifts{lift_function(fs[0], a1, a2),
                                            LiftedFunction(a2, a3, {3, 1}),
                                            lift_function(fs[2], a3, a4)};
    const LawReport r = check_composition_chain(std::span<const LiftedFunction>(lifts),
                                                std::span<const FiniteFunction>(fs));
    CHECK_FALSE(r.passed());
    REQUIRE(r.first_failure);
    // A10 -> A21, which the broken link sends to A31 instead of A30.
    CHECK(r.failures == 2);
    CHECK(r.first_failure->input == "A10");
    CHECK(r.first_failure->left == "[0,1,0]");
    CHECK(r.first_failure->right == "[0,0,1]");
  }
  SUBCASE("mismatched maps") {
    const std::vector<FiniteFunction> fs{{{1, 0, 1}}};
    const std::vector<DomainMap> maps{a1};
    CHECK_THROWS_AS(check_composition_chain(std::span<const FiniteFunction>(fs),
                                            std::span<const DomainMap>(maps)),
                    DomainError);
  }
}

TEST_CASE("vector-space evaluation of terms and formulas") {
  std::map<std::string, FunctionTable> functions;
  functions.emplace("succ", FunctionTable(1, 3, {EntityId{1}, EntityId{2}, EntityId{0}}));
  functions.emplace("pick", FunctionTable(2, 3,
                                          {EntityId{0}, EntityId{1}, EntityId{2}, EntityId{1},
                                           EntityId{1}, EntityId{1}, EntityId{2}, EntityId{0},
                                           EntityId{2}}));
  std::map<std::string, Relation> relations;
  relations.emplace("P", Relation(1, 3, {{EntityId{0}}}));
  relations.emplace("L", Relation(2, 3, {{EntityId{0}, EntityId{1}}}));
  const Model model({"e1", "e2", "e3"}, {{"a", EntityId{0}}, {"b", EntityId{1}}},
                    std::move(functions), std::move(relations));
  Signature sig = model.signature();
  sig.add_variable("x");
  const Assignment g = variant_assignment({}, "x", EntityId{2}, model);
  const VectorModel vm(model);

  CHECK(lift_entity_term(parse_term("a", sig), vm, g) == DenseVector{1, 0, 0});
  CHECK(lift_entity_term(parse_term("x", sig), vm, g) == DenseVector{0, 0, 1});
  CHECK(lift_entity_term(parse_term("succ(a)", sig), vm, g) == DenseVector{0, 1, 0});
  // pick(e2, e3) is table row 1*3+2 = 5 -> e2.
  CHECK(lift_entity_term(parse_term("pick(b,x)", sig), vm, g) == DenseVector{0, 1, 0});

  const TruthVec s = embed_truth(true);
  const TruthVec n = embed_truth(false);
  CHECK(lift_logical_connective(parse_term("P(a)", sig), vm, g) == s);
  CHECK(lift_logical_connective(parse_term("P(succ(x))", sig), vm, g) == s);
  CHECK(lift_logical_connective(parse_term("not(P(a))", sig), vm, g) == n);
  CHECK(lift_logical_connective(parse_term("and(P(a),L(a,b))", sig), vm, g) == s);
  CHECK(lift_logical_connective(parse_term("implies(P(a),L(b,a))", sig), vm, g) == n);
  CHECK(lift_logical_connective(parse_term("cond(P(b),L(a,b),P(a))", sig), vm, g) == s);

  CHECK_THROWS_AS(lift_entity_term(parse_term("P(a)", sig), vm, g), TypeError);
  CHECK_THROWS_AS(lift_logical_connective(parse_term("a", sig), vm, g), TypeError);
  CHECK_THROWS_AS(vm.function("nope"), UnknownSymbolError);
}

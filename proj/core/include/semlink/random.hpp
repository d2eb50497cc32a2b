#pragma once

// Seeded generators for randomized law sweeps. The engine is std::mt19937_64
// seeded directly with the 64-bit seed; bounded draws use `next() % n` so
// other implementations can reproduce every report bit for bit.

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "semlink/homomorphism.hpp"
#include "semlink/model.hpp"
#include "semlink/term.hpp"

namespace semlink {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish draw from [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  /// Draw from [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (next() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

FiniteFunction random_function(Rng& rng, std::size_t domain_size, std::size_t codomain_size);
ElementSet random_subset(Rng& rng, std::size_t domain_size);
std::set<IndexTuple> random_relation(Rng& rng, std::size_t domain_size, std::size_t arity);

struct RandomModelShape {
  std::size_t min_entities = 1;
  std::size_t max_entities = 5;
  std::size_t constants = 3;
  std::size_t unary_functions = 1;
  std::size_t binary_functions = 1;
  std::size_t unary_predicates = 2;
  std::size_t binary_predicates = 1;
  std::size_t variables = 2;
};

/// Entities e0.., constants c0.., functions f0.. (unary) and g0.. (binary),
/// predicates P0.. (unary) and R0.. (binary). Every relation is drawn
/// tuple-by-tuple with probability 1/2.
Model random_model(Rng& rng, const RandomModelShape& shape = {});

/// Signature of a model produced by random_model, plus variables x0...
Signature random_signature(const Model& model, std::size_t variables);

/// Binds every variable of `sig` to a random entity.
Assignment random_assignment(Rng& rng, const Signature& sig, const Model& model);

/// Entity-typed term of depth <= max_depth.
Term random_entity_term(Rng& rng, const Signature& sig, std::size_t max_depth);

/// Well-typed formula (type t) of depth <= max_depth (max_depth >= 1). The
/// signature must declare at least one predicate and one constant or variable.
Term random_formula(Rng& rng, const Signature& sig, std::size_t max_depth);

}  // namespace semlink

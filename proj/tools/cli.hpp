#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "semlink/vector_logic.hpp"

namespace semlink::cli {

enum class Subcommand { Eval, Synth, Lift, Check, Sim };
enum class Law { Function, Relation, Sets, Chain, Formula };

inline constexpr int kExitOk = 0;
inline constexpr int kExitLawViolation = 1;
inline constexpr int kExitInputError = 2;

struct RunConfig {
  Subcommand subcommand = Subcommand::Eval;

  std::string model_path;
  std::string expr;
  std::vector<std::string> assignments;  // "x=e1"

  // synth
  std::string table;
  std::size_t arity = 0;
  std::string named;
  std::size_t majority = 0;
  std::string op;

  // lift
  std::string function;
  std::string relation;

  // check
  Law law = Law::Function;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;

  // sim
  std::string u;
  std::string v;

  std::size_t arity_cap = kDefaultArityCap;
};

/// Executes one subcommand. Returns 0 on success, 1 on a law violation or a
/// disagreement between evaluation routes, 2 on input errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig (applying SEMLINK_ARITY_CAP when set) and
/// runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semlink::cli

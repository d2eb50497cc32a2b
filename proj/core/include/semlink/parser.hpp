#pragma once

#include <string_view>

#include "semlink/term.hpp"

namespace semlink {

/// Parses the prefix concrete syntax
///
///   term  := IDENT | IDENT "(" term ("," term)* ")"
///   IDENT := [A-Za-z_][A-Za-z0-9_]*
///
/// against `sig`. Bare identifiers resolve to declared constants or
/// variables; applied identifiers to connectives (not, and, or, implies,
/// iff, xor, cond), functions or predicates. Whitespace between tokens is
/// ignored.
///
/// Throws ParseError (with byte offset), UnknownSymbolError or ArityError.
Term parse_term(std::string_view text, const Signature& sig);

}  // namespace semlink

#include "semlink/parser.hpp"

#include <cctype>
#include <string>

#include "semlink/error.hpp"

namespace semlink {
namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Term parse() {
    Term t = parse_term();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::string identifier() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected identifier, found end of input");
    if (!is_ident_start(text_[pos_])) {
      fail(std::string("expected identifier, found '") + text_[pos_] + "'");
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string at(std::size_t offset) const { return " at offset " + std::to_string(offset); }

  Term parse_term() {
    skip_space();
    const std::size_t start = pos_;
    std::string name = identifier();

    if (!peek('(')) return atom(name, start);

    ++pos_;  // '('
    std::vector<Term> args;
    args.push_back(parse_term());
    while (true) {
      if (peek(',')) {
        ++pos_;
        args.push_back(parse_term());
      } else if (peek(')')) {
        ++pos_;
        break;
      } else {
        skip_space();
        fail(pos_ < text_.size() ? std::string("expected ',' or ')', found '") + text_[pos_] + "'"
                                 : "expected ',' or ')', found end of input");
      }
    }
    return application(name, std::move(args), start);
  }

  Term atom(const std::string& name, std::size_t start) const {
    if (sig_.has_constant(name)) return Term::constant(name);
    if (sig_.has_variable(name)) return Term::variable(name);
    if (auto op = connective_from_name(name)) {
      throw ArityError("connective '" + name + "' used without arguments" + at(start));
    }
    if (sig_.has_function(name) || sig_.has_predicate(name)) {
      throw ArityError("'" + name + "' used without arguments" + at(start));
    }
    throw UnknownSymbolError("unknown identifier '" + name + "'" + at(start));
  }

  Term application(const std::string& name, std::vector<Term> args, std::size_t start) const {
    auto check = [&](std::size_t arity) {
      if (args.size() != arity) {
        throw ArityError("'" + name + "' takes " + std::to_string(arity) + " arguments, got " +
                         std::to_string(args.size()) + at(start));
      }
    };
    if (auto op = connective_from_name(name)) {
      check(connective_arity(*op));
      return Term::connective(*op, std::move(args));
    }
    if (auto it = sig_.functions().find(name); it != sig_.functions().end()) {
      check(it->second);
      return Term::fun_app(name, std::move(args));
    }
    if (auto it = sig_.predicates().find(name); it != sig_.predicates().end()) {
      check(it->second);
      return Term::pred_app(name, std::move(args));
    }
    if (sig_.has_constant(name) || sig_.has_variable(name)) {
      throw ArityError("'" + name + "' is not applicable" + at(start));
    }
    throw UnknownSymbolError("unknown identifier '" + name + "'" + at(start));
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text, const Signature& sig) { return Parser(text, sig).parse(); }

}  // namespace semlink

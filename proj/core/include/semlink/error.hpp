#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semlink {

// Base of every error raised by the library. Callers that only need to
// distinguish "bad input" from "bug" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed concrete syntax. `offset` is the byte position in the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownSymbolError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class TypeError : public Error {
 public:
  using Error::Error;
};

class SignatureError : public Error {
 public:
  using Error::Error;
};

// A model, model file or function table violates totality or membership.
class ModelError : public Error {
 public:
  using Error::Error;
};

class UnboundVariableError : public Error {
 public:
  using Error::Error;
};

// An element that does not belong to the domain it is used with.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A vector outside the image of an injective domain map (or not one-hot).
class OffImageError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Cosine similarity with a zero vector.
class UndefinedSimilarityError : public Error {
 public:
  using Error::Error;
};

}  // namespace semlink

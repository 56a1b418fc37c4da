#ifndef CONEMOD_POLY_PARSE_HPP
#define CONEMOD_POLY_PARSE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "conemod/poly/poly.hpp"

namespace conemod {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownIdentifier : public ParseError {
 public:
  UnknownIdentifier(const std::string& name, std::size_t position)
      : ParseError("unknown identifier '" + name + "'", position), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Grammar:
///   expr     := term (("+"|"-") term)*
///   term     := factor ("*" factor)*
///   factor   := rational | ident | ident "^" nat | "(" expr ")"
///   rational := int ("/" posint)?
/// `int` may carry a leading minus sign where a term starts.
Poly parse_poly(std::string_view text, const RingPtr& ring);

/// Prints in the same grammar, terms in descending order.
std::string to_string(const Poly& p);
std::string to_string(const Monomial& m, const VarTable& vars);

}  // namespace conemod

#endif

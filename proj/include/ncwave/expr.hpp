#pragma once

// Text form of algebra elements and 1-forms.
//
// Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' int)?
//   base   := rational | sym | '(' expr ')'
//   sym    := x1|x2|x3|r|t|lam|gam|dx1|dx2|dx3|dt|th
// Negative exponents are permitted only on r; exponents on basis forms must
// be 1; products of two 1-forms are rejected (wedge not supported).
// format() produces text that parses back to the identical value.

#include "ncwave/forms.hpp"

#include <string>
#include <variant>

namespace ncalg {

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t p)
        : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

using Parsed = std::variant<AlgebraElement, FormSum>;

/// Parse an expression.  The model supplies beta for the dt t reordering.
Parsed parse(const std::string& text, const ModelConfig& model);

/// Parse, requiring a degree-0 result.
AlgebraElement parse_element(const std::string& text, const ModelConfig& model);

std::string format(const AlgebraElement& e);
std::string format(const FormSum& f);
std::string format(const Parsed& p);

}  // namespace ncalg

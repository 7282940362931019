#pragma once

// Expression parser and canonical renderer for forms.
//
// Grammar:  expr   := ['+'|'-'] term (('+'|'-') term)*
//           term   := factor ('*' factor)*
//           factor := base ('^' nat)?
//           base   := nat | ident | '(' expr ')'
// Implicit multiplication is rejected ("2x" is a syntax error).

#include <string>
#include <vector>

#include "decform/form.hpp"

namespace decform {

struct FormSource {
    std::string text;
    // empty = infer: {x,y} / {x,y,z} / x1..xn depending on identifiers used
    std::vector<std::string> variables;
};

struct parse_error : argument_error {
    size_t position;
    parse_error(const std::string& msg, size_t pos)
        : argument_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};
struct homogeneity_error : argument_error {
    using argument_error::argument_error;
};

Form parse_form(const FormSource& src);
Form parse_form(const std::string& text);

// canonical graded-lex rendering; parse(render(F)) == F
std::string render_form(const Form& f);
// default variable names for an n-variable form: x,y / x,y,z / x1..xn
std::vector<std::string> default_variables(int n);

// dense ascending coefficients of a univariate integer polynomial in `var`
std::vector<Int> parse_univariate(const std::string& text, const std::string& var);
std::string render_univariate(const std::vector<Int>& coeffs, const std::string& var);

}  // namespace decform

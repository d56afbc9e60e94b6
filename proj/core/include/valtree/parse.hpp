// parse.hpp
// Germ expression grammar (whitespace-insensitive):
//   expr  := term (('+'|'-') term)*
//   term  := coeff ('*'? monom)? | monom
//   monom := var ('^' nat)? ('*'? var ('^' nat)?)?
//   var   := 'x' | 'y'        (parametrizations use 't')
//   coeff := nat ('/' nat)?
// The parser accepts a slight superset (leading sign, longer factor chains);
// the printer emits graded-lex ordered terms with explicit '*' and reduced
// fractions, and round-trips through the parser.
#ifndef VALTREE_PARSE_HPP
#define VALTREE_PARSE_HPP

#include "valtree/poly.hpp"

#include <stdexcept>
#include <string>

namespace valtree {

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& what, std::size_t p)
        : std::runtime_error(what + " at position " + std::to_string(p)), pos(p) {}
};

Germ parse_germ(const std::string& text);
// Polynomial in t, used for branch parametrizations.
UniPoly parse_tpoly(const std::string& text);

std::string print_germ(const Germ& g);
std::string print_tpoly(const UniPoly& p);

}  // namespace valtree

#endif

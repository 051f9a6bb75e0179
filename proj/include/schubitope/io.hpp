#ifndef SCHUBITOPE_IO_HPP
#define SCHUBITOPE_IO_HPP

#include <string>

#include "schubitope/diagram.hpp"
#include "schubitope/permutation.hpp"

namespace schub {

// "365142" (digits, n <= 9) or "[3,6,5,1,4,2]".
Permutation parse_permutation(const std::string& text);
std::string format_permutation(const Permutation& w);

// "4,1,3,0,2"
Composition parse_composition(const std::string& text);
std::string format_composition(const Composition& alpha);

// Semicolon-separated columns of comma-separated row indices; an empty
// string between semicolons is an empty column. Ambient n is explicit.
Diagram parse_diagram(const std::string& text, int n);
std::string format_diagram(const Diagram& d);

}  // namespace schub

#endif

#ifndef FINMOD_INSTANCE_HPP
#define FINMOD_INSTANCE_HPP

#include <optional>
#include <string>

#include "finmod/module.hpp"

namespace finmod {

// Parsed instance description: a ring or a module, plus the canonical
// serialized form (single spaces, parenthesized nesting), which re-parses to
// an identical structure.
struct ParsedInstance {
  RingPtr ring;      // set when the spec describes a ring
  ModulePtr module;  // set when the spec describes a module
  std::string canonical;
};

// Grammar (tokens separated by whitespace, sub-expressions in parentheses):
//   ring zmod N | ring gf4 | ring product <ring> <ring>
//   ring matrix K <ring> | ring triangular (upper|lower) K <ring>
//   ring opposite <ring>
//   module regular <ring> | module zabelian d1 d2 ...
//   module sum <module> <module>
//   module quotient <module> gens e1 e2 ... | module sub <module> gens e1 ...
// Throws ParseError with line/column, or ValidationError/SizeLimitError from
// construction.
ParsedInstance parse_spec(const std::string& text,
                          int order_bound = kDefaultModuleOrderBound);

}  // namespace finmod

#endif

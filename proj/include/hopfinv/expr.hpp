#pragma once

// Text syntax for algebra elements and presentations.
//
// Full expression form (claimed generators, relation files):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ['^' uint]
//   base   := '(' expr ')' | scalar | generator
// Scalars are rationals, 'i', 'w', or 'z'/'z^k'; generators are the
// single-letter names declared by the presentation.
//
// Compact form (CLI keys): terms of juxtaposed letters with optional digit
// exponents and an optional scalar prefix separated by '.', e.g.
// "uv-i.vu", "u2-i.v2", "XY+YX".
//
// Presentation files: '#' comments, a "generators <g1> <g2> ..." line with
// names in descending precedence, then one relation expression per line.

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hopfinv/word.hpp"

namespace hopfinv {

// How products are formed while evaluating an expression.  The default is
// free-word concatenation; algebra callers pass normal-form multiplication,
// the twist machinery passes the twisted product.
using Multiplier = std::function<Poly(const Poly&, const Poly&)>;

struct EvalContext {
    std::map<std::string, Poly, std::less<>> letters;
    Multiplier mul;  // empty -> concatenation
};

Poly eval_expr(std::string_view text, const EvalContext& ctx);

// Free-algebra element over the named generators (index = position in
// `names`, so later names have higher precedence only if the caller orders
// them that way).
Poly parse_poly(std::string_view text, const std::vector<std::string>& names);

// Compact key form over the same names.
Poly parse_compact_poly(std::string_view text, const std::vector<std::string>& names);

struct Presentation {
    std::vector<std::string> gen_names;  // index order = ascending precedence
    std::vector<Poly> relations;
};

Presentation parse_presentation(std::string_view text);

} // namespace hopfinv

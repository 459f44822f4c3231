#pragma once

// Class expressions such as "O(2H-L) - 3 O_x + I_x[1]" evaluated to Chern
// characters on a fixed model.
//
//   expr  := ['+'|'-'] term { ('+'|'-') term }
//   term  := integer | [integer ['*']] atom ['[' integer ']']
//   atom  := O | O(div) | O_X | O_S | O_Y | O_W (each optionally twisted)
//          | O_x | O_H | O_L | I_x | U | Uv | U^v
//          | mu(a,b) | kappa(p,q) | lambda(p,q)
//   div   := ['+'|'-'] [integer] (H|L) { ('+'|'-') [integer] (H|L) } | 0
//
// A shift [n] multiplies the class by (-1)^n.

#include <string_view>

#include "kul/chow.hpp"

namespace kul {

/// Throws InputError on a syntax error or a generator the model lacks.
GradedClass parse_class(const VarietyModel& model, std::string_view text);

}  // namespace kul

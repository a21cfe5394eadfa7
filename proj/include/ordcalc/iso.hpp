#pragma once

#include "ordcalc/term.hpp"

namespace ord {

// Argument translation for a level-m collapse: maps a stepwise argument
// (below the second-next uncountable) onto a simultaneous one and back.
// Both are strictly increasing and mutually inverse on their domains.
TermPtr it_level(int m, TermPtr a);
TermPtr rt_level(int m, TermPtr a);

// Whole-term translations between the systems: to_bar carries stepwise terms
// to simultaneous ones collapse by collapse, to_step is its inverse.
TermPtr to_bar(TermPtr a);
TermPtr to_step(TermPtr a);

}  // namespace ord
